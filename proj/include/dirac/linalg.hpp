#ifndef DIRAC_LINALG_HPP
#define DIRAC_LINALG_HPP

// Exact dense linear algebra over an exact field T (default: Q(i)).
// Everything here is templated on the scalar; the field only needs exact
// +, -, *, / and ==.  Vectors are columns; a map V -> W is a dim W x dim V
// matrix.  Subspaces store a reduced-row-echelon basis as matrix rows, so
// structural equality is subspace equality.

#include "dirac/scalar.hpp"

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dirac {

template <typename T>
using MatrixT = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using VectorT = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Matrix = MatrixT<Scalar>;
using Vector = VectorT<Scalar>;

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline void require_dims(bool ok, const std::string& what) {
  if (!ok) throw DimensionError("dimension mismatch: " + what);
}

template <typename T>
bool is_zero(const T& x) {
  return x == T(0);
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!is_zero<T>(m(r, c))) return false;
  return true;
}

template <typename T>
MatrixT<T> identity(Eigen::Index n) {
  MatrixT<T> m = MatrixT<T>::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, k) = T(1);
  return m;
}

template <typename T>
MatrixT<T> zeros(Eigen::Index rows, Eigen::Index cols) {
  return MatrixT<T>::Zero(rows, cols);
}

/// Reduced row echelon form of m in place; returns pivot columns.
template <typename T>
std::vector<Eigen::Index> rref_in_place(MatrixT<T>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (!is_zero<T>(m(r, col))) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const T inv = T(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c)
      if (!is_zero<T>(m(row, c))) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero<T>(m(r, col))) continue;
      const T factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c)
        if (!is_zero<T>(m(row, c))) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Reduced row echelon form with zero rows removed.
template <typename Derived>
MatrixT<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  MatrixT<typename Derived::Scalar> work = m;
  auto pivots = rref_in_place(work);
  return work.topRows(static_cast<Eigen::Index>(pivots.size()));
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  MatrixT<typename Derived::Scalar> work = m;
  return static_cast<Eigen::Index>(rref_in_place(work).size());
}

/// Basis of the null space {v : m v = 0}, one vector per column.
template <typename Derived>
MatrixT<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  MatrixT<T> work = m;
  auto pivots = rref_in_place(work);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatrixT<T> basis = MatrixT<T>::Zero(n, n - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out) = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], out) = -work(static_cast<Eigen::Index>(r), free);
    ++out;
  }
  return basis;
}

/// Some x with a x = b, or nullopt when the system is inconsistent.
template <typename T>
std::optional<VectorT<T>> solve(const MatrixT<T>& a, const VectorT<T>& b) {
  require_dims(a.rows() == b.rows(), "solve: rhs length");
  MatrixT<T> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto pivots = rref_in_place(aug);
  VectorT<T> x = VectorT<T>::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return std::nullopt;
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

/// Exact inverse; nullopt when singular.
template <typename T>
std::optional<MatrixT<T>> inverse(const MatrixT<T>& a) {
  require_dims(a.rows() == a.cols(), "inverse of non-square matrix");
  const Eigen::Index n = a.rows();
  MatrixT<T> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = identity<T>(n);
  auto pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots.back() >= n)) return std::nullopt;
  return MatrixT<T>(aug.rightCols(n));
}

template <typename Derived>
MatrixT<typename Derived::Scalar> conj_matrix(const Eigen::MatrixBase<Derived>& m) {
  MatrixT<typename Derived::Scalar> out = m;
  for (Eigen::Index r = 0; r < out.rows(); ++r)
    for (Eigen::Index c = 0; c < out.cols(); ++c) out(r, c) = conj(out(r, c));
  return out;
}

template <typename Derived>
bool is_antisymmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = r; c < m.cols(); ++c)
      if (m(r, c) != -m(c, r)) return false;
  return true;
}

template <typename Derived>
bool is_real_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_real()) return false;
  return true;
}

/// Subspace of T^n with a canonical basis: rows of an RREF matrix.
template <typename T>
class BasicSubspace {
public:
  BasicSubspace() = default;

  /// Row span of `rows` inside T^ambient.
  static BasicSubspace span(const MatrixT<T>& rows) {
    BasicSubspace s;
    s.ambient_ = rows.cols();
    s.basis_ = rows;
    s.pivots_ = rref_in_place(s.basis_);
    s.basis_.conservativeResize(static_cast<Eigen::Index>(s.pivots_.size()), s.ambient_);
    return s;
  }
  /// Column span of `cols`.
  static BasicSubspace column_span(const MatrixT<T>& cols) { return span(cols.transpose()); }
  static BasicSubspace zero(Eigen::Index ambient) { return span(MatrixT<T>::Zero(0, ambient)); }
  static BasicSubspace full(Eigen::Index ambient) { return span(identity<T>(ambient)); }

  Eigen::Index ambient_dim() const { return ambient_; }
  Eigen::Index dim() const { return basis_.rows(); }
  const MatrixT<T>& basis() const { return basis_; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }
  VectorT<T> vector(Eigen::Index k) const { return basis_.row(k).transpose(); }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Coordinates of v in the canonical basis, or nullopt if v is not in the
  /// subspace.  For an RREF basis the coordinates are v's pivot entries.
  std::optional<VectorT<T>> coordinates(const VectorT<T>& v) const {
    require_dims(v.size() == ambient_, "coordinates: vector length");
    VectorT<T> c(dim());
    for (Eigen::Index k = 0; k < dim(); ++k) c(k) = v(pivots_[static_cast<std::size_t>(k)]);
    VectorT<T> rebuilt = basis_.transpose() * c;
    if (rebuilt != v) return std::nullopt;
    return c;
  }

  bool contains(const VectorT<T>& v) const { return coordinates(v).has_value(); }

  bool contains(const BasicSubspace& other) const {
    require_dims(other.ambient_ == ambient_, "subspace containment");
    for (Eigen::Index k = 0; k < other.dim(); ++k)
      if (!contains(other.vector(k))) return false;
    return true;
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }
  friend bool operator!=(const BasicSubspace& a, const BasicSubspace& b) { return !(a == b); }

private:
  Eigen::Index ambient_ = 0;
  MatrixT<T> basis_;
  std::vector<Eigen::Index> pivots_;
};

using Subspace = BasicSubspace<Scalar>;

template <typename T>
BasicSubspace<T> sum(const BasicSubspace<T>& a, const BasicSubspace<T>& b) {
  require_dims(a.ambient_dim() == b.ambient_dim(), "sum of subspaces");
  MatrixT<T> stacked(a.dim() + b.dim(), a.ambient_dim());
  stacked.topRows(a.dim()) = a.basis();
  stacked.bottomRows(b.dim()) = b.basis();
  return BasicSubspace<T>::span(stacked);
}

/// Kernel of f : T^cols -> T^rows.
template <typename T>
BasicSubspace<T> kernel(const MatrixT<T>& f) {
  return BasicSubspace<T>::column_span(null_space(f));
}

/// Annihilator in dual coordinates: {xi : xi(v) = 0 for all v in s}.
template <typename T>
BasicSubspace<T> annihilator(const BasicSubspace<T>& s) {
  return BasicSubspace<T>::column_span(null_space(s.basis()));
}

template <typename T>
BasicSubspace<T> intersect(const BasicSubspace<T>& a, const BasicSubspace<T>& b) {
  require_dims(a.ambient_dim() == b.ambient_dim(), "intersection of subspaces");
  const auto ann_a = annihilator(a);
  const auto ann_b = annihilator(b);
  MatrixT<T> constraints(ann_a.dim() + ann_b.dim(), a.ambient_dim());
  constraints.topRows(ann_a.dim()) = ann_a.basis();
  constraints.bottomRows(ann_b.dim()) = ann_b.basis();
  return kernel(constraints);
}

/// f(s) for f : T^n -> T^m and s inside T^n.
template <typename T>
BasicSubspace<T> image(const MatrixT<T>& f, const BasicSubspace<T>& s) {
  require_dims(f.cols() == s.ambient_dim(), "image: map domain vs subspace ambient");
  return BasicSubspace<T>::column_span(MatrixT<T>(f * s.basis().transpose()));
}

/// Full image of f.
template <typename T>
BasicSubspace<T> image(const MatrixT<T>& f) {
  return BasicSubspace<T>::column_span(f);
}

/// f^{-1}(s) for f : T^n -> T^m and s inside T^m.
template <typename T>
BasicSubspace<T> preimage(const MatrixT<T>& f, const BasicSubspace<T>& s) {
  require_dims(f.rows() == s.ambient_dim(), "preimage: map codomain vs subspace ambient");
  const auto ann = annihilator(s);
  return kernel(MatrixT<T>(ann.basis() * f));
}

/// Entrywise complex conjugation of a subspace.
template <typename T>
BasicSubspace<T> conj(const BasicSubspace<T>& s) {
  return BasicSubspace<T>::span(conj_matrix(s.basis()));
}

}  // namespace dirac

#endif  // DIRAC_LINALG_HPP
