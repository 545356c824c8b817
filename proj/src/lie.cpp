#include "dirac/lie.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dirac {

// ---------------------------------------------------------------- LieAlgebra

std::optional<std::array<int, 3>> LieAlgebra::jacobi_violation(int n, const std::vector<Scalar>& c) {
  auto at = [&](int i, int j, int k) -> const Scalar& { return c[static_cast<std::size_t>((i * n + j) * n + k)]; };
  // [e_i, [e_j, e_k]] + [e_j, [e_k, e_i]] + [e_k, [e_i, e_j]]
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int out = 0; out < n; ++out) {
          Scalar total = 0;
          for (int m = 0; m < n; ++m) {
            total += at(j, k, m) * at(i, m, out);
            total += at(k, i, m) * at(j, m, out);
            total += at(i, j, m) * at(k, m, out);
          }
          if (!total.is_zero()) return std::array<int, 3>{i, j, k};
        }
  return std::nullopt;
}

LieAlgebra::LieAlgebra(int dim, std::vector<Scalar> constants) : dim_(dim), c_(std::move(constants)) {
  if (dim < 0) throw LieAlgebraError("negative Lie algebra dimension");
  if (c_.size() != static_cast<std::size_t>(dim) * dim * dim)
    throw LieAlgebraError("structure constant table has the wrong size");
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (constant(i, j, k) != -constant(j, i, k))
          throw LieAlgebraError("structure constants are not antisymmetric at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
  if (auto bad = jacobi_violation(dim, c_)) {
    throw LieAlgebraError("Jacobi identity fails on basis triple (" + std::to_string((*bad)[0]) + ", " +
                          std::to_string((*bad)[1]) + ", " + std::to_string((*bad)[2]) + ")");
  }
}

LieAlgebra LieAlgebra::from_brackets(int dim, const std::vector<Bracket>& brackets) {
  std::vector<Scalar> c(static_cast<std::size_t>(dim) * dim * dim);
  auto at = [&](int i, int j, int k) -> Scalar& { return c[static_cast<std::size_t>((i * dim + j) * dim + k)]; };
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || b.i >= dim || b.j >= dim) throw LieAlgebraError("bracket index out of range");
    if (b.result.size() != dim) throw LieAlgebraError("bracket result has the wrong length");
    if (b.i == b.j && !is_zero_matrix(b.result)) throw LieAlgebraError("[e_i, e_i] must vanish");
    for (int k = 0; k < dim; ++k) {
      at(b.i, b.j, k) = b.result(k);
      at(b.j, b.i, k) = -b.result(k);
    }
  }
  return {dim, std::move(c)};
}

namespace {

Vector unit(int n, int k, const Scalar& v = 1) {
  Vector e = Vector::Zero(n);
  e(k) = v;
  return e;
}

}  // namespace

LieAlgebra LieAlgebra::builtin(const std::string& name) {
  if (name.rfind("abelian:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(8));
    } catch (const std::exception&) {
      throw LieAlgebraError("bad abelian dimension in '" + name + "'");
    }
    if (n < 0) throw LieAlgebraError("bad abelian dimension in '" + name + "'");
    return from_brackets(n, {});
  }
  if (name == "heisenberg3") return from_brackets(3, {{0, 1, unit(3, 2)}});
  if (name == "axb") return from_brackets(2, {{0, 1, unit(2, 1)}});
  if (name == "sl2") {
    // basis (h, e, f)
    return from_brackets(3, {{0, 1, unit(3, 1, 2)}, {0, 2, unit(3, 2, -2)}, {1, 2, unit(3, 0)}});
  }
  if (name == "sl2xsl2") {
    return from_brackets(6, {{0, 1, unit(6, 1, 2)},
                             {0, 2, unit(6, 2, -2)},
                             {1, 2, unit(6, 0)},
                             {3, 4, unit(6, 4, 2)},
                             {3, 5, unit(6, 5, -2)},
                             {4, 5, unit(6, 3)}});
  }
  throw LieAlgebraError("unknown built-in Lie algebra '" + name + "'");
}

std::vector<std::string> LieAlgebra::builtin_names() {
  return {"abelian:2", "abelian:3", "abelian:4", "heisenberg3", "axb", "sl2", "sl2xsl2"};
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  require_dims(x.size() == dim_ && y.size() == dim_, "bracket operands vs Lie algebra dimension");
  Vector out = Vector::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y(j).is_zero()) continue;
      const Scalar w = x(i) * y(j);
      for (int k = 0; k < dim_; ++k)
        if (!constant(i, j, k).is_zero()) out(k) += w * constant(i, j, k);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  require_dims(x.size() == dim_, "ad operand vs Lie algebra dimension");
  Matrix m = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (!constant(i, j, k).is_zero()) m(k, j) += x(i) * constant(i, j, k);
  }
  return m;
}

Vector LieAlgebra::basis_vector(int i) const { return unit(dim_, i); }

// ----------------------------------------------------------- AlternatingForm

namespace {

std::size_t power(int base, int exp) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) r *= static_cast<std::size_t>(base);
  return r;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

bool has_repeats(const std::vector<int>& idx) {
  std::vector<int> s = idx;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

// Mode-m product of a dense tensor with a matrix (rows = new index).
std::vector<Scalar> mode_product(const std::vector<Scalar>& t, std::vector<int>& shape, int mode, const Matrix& m) {
  std::size_t outer = 1;
  std::size_t inner = 1;
  for (int l = 0; l < mode; ++l) outer *= static_cast<std::size_t>(shape[static_cast<std::size_t>(l)]);
  for (std::size_t l = static_cast<std::size_t>(mode) + 1; l < shape.size(); ++l)
    inner *= static_cast<std::size_t>(shape[l]);
  const auto old_n = static_cast<std::size_t>(shape[static_cast<std::size_t>(mode)]);
  const auto new_n = static_cast<std::size_t>(m.rows());
  std::vector<Scalar> out(outer * new_n * inner);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t i = 0; i < old_n; ++i)
      for (std::size_t in = 0; in < inner; ++in) {
        const Scalar& v = t[(o * old_n + i) * inner + in];
        if (v.is_zero()) continue;
        for (std::size_t a = 0; a < new_n; ++a) {
          const Scalar& w = m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(i));
          if (!w.is_zero()) out[(o * new_n + a) * inner + in] += w * v;
        }
      }
  shape[static_cast<std::size_t>(mode)] = static_cast<int>(new_n);
  return out;
}

// Calls fn(idx) for every index tuple in {0..n-1}^p.
template <typename Fn>
void for_each_index(int n, int p, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(p), 0);
  const std::size_t total = power(n, p);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (int m = p - 1; m >= 0; --m) {
      idx[static_cast<std::size_t>(m)] = static_cast<int>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    fn(idx);
  }
}

// Calls fn(idx) for every strictly increasing tuple.
template <typename Fn>
void for_each_increasing(int n, int p, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(p));
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == p) {
      fn(idx);
      return;
    }
    for (int v = start; v < n; ++v) {
      idx[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

AlternatingForm::AlternatingForm(int dim, int degree)
    : dim_(dim), degree_(degree), values_(power(dim, degree)) {
  if (dim < 0 || degree < 0) throw std::invalid_argument("negative form dimension or degree");
}

std::size_t AlternatingForm::offset(const std::vector<int>& idx) const {
  require_dims(static_cast<int>(idx.size()) == degree_, "form index arity");
  std::size_t off = 0;
  for (int v : idx) {
    if (v < 0 || v >= dim_) throw std::out_of_range("form index out of range");
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v);
  }
  return off;
}

void AlternatingForm::set_component(const std::vector<int>& idx, const Scalar& v) {
  if (has_repeats(idx)) {
    if (!v.is_zero()) throw std::invalid_argument("alternating form component with repeated index must be zero");
    return;
  }
  std::vector<int> order(idx.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<int> permuted(idx.size());
    for (std::size_t m = 0; m < idx.size(); ++m) permuted[m] = idx[static_cast<std::size_t>(order[m])];
    at(permuted) = permutation_sign(order) > 0 ? v : -v;
  } while (std::next_permutation(order.begin(), order.end()));
}

void AlternatingForm::add_wedge(const std::vector<int>& idx, const Scalar& v) {
  if (has_repeats(idx) || v.is_zero()) return;
  std::vector<int> order(idx.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<int> permuted(idx.size());
    for (std::size_t m = 0; m < idx.size(); ++m) permuted[m] = idx[static_cast<std::size_t>(order[m])];
    if (permutation_sign(order) > 0)
      at(permuted) += v;
    else
      at(permuted) -= v;
  } while (std::next_permutation(order.begin(), order.end()));
}

bool AlternatingForm::is_alternating() const {
  bool ok = true;
  for_each_index(dim_, degree_, [&](const std::vector<int>& idx) {
    if (!ok) return;
    for (int m = 0; m + 1 < degree_; ++m) {
      std::vector<int> swapped = idx;
      std::swap(swapped[static_cast<std::size_t>(m)], swapped[static_cast<std::size_t>(m) + 1]);
      if (at(idx) != -at(swapped)) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool AlternatingForm::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar AlternatingForm::evaluate(const std::vector<Vector>& args) const {
  require_dims(static_cast<int>(args.size()) == degree_, "form evaluation arity");
  std::vector<int> shape(static_cast<std::size_t>(degree_), dim_);
  std::vector<Scalar> t = values_;
  for (int m = 0; m < degree_; ++m) {
    require_dims(args[static_cast<std::size_t>(m)].size() == dim_, "form argument length");
    t = mode_product(t, shape, m, args[static_cast<std::size_t>(m)].transpose());
  }
  return t.empty() ? Scalar(0) : t.front();
}

AlternatingForm AlternatingForm::restrict_to(const Matrix& basis) const {
  require_dims(basis.cols() == dim_, "restriction basis vs form dimension");
  AlternatingForm out(static_cast<int>(basis.rows()), degree_);
  std::vector<int> shape(static_cast<std::size_t>(degree_), dim_);
  std::vector<Scalar> t = values_;
  for (int m = 0; m < degree_; ++m) t = mode_product(t, shape, m, basis);
  out.values_ = std::move(t);
  return out;
}

std::optional<std::vector<int>> AlternatingForm::first_nonzero() const {
  std::optional<std::vector<int>> found;
  for_each_index(dim_, degree_, [&](const std::vector<int>& idx) {
    if (!found && !at(idx).is_zero()) found = idx;
  });
  return found;
}

AlternatingForm& AlternatingForm::operator+=(const AlternatingForm& o) {
  require_dims(o.dim_ == dim_ && o.degree_ == degree_, "adding forms of different shape");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  return *this;
}

AlternatingForm operator-(AlternatingForm a, const AlternatingForm& b) {
  require_dims(a.dim_ == b.dim_ && a.degree_ == b.degree_, "subtracting forms of different shape");
  for (std::size_t k = 0; k < a.values_.size(); ++k) a.values_[k] -= b.values_[k];
  return a;
}

AlternatingForm operator*(const Scalar& s, AlternatingForm a) {
  for (auto& v : a.values_) v *= s;
  return a;
}

AlternatingForm two_form(const Matrix& omega) {
  require_dims(omega.rows() == omega.cols(), "2-form must be square");
  if (!is_antisymmetric(omega)) throw std::invalid_argument("2-form must be antisymmetric");
  AlternatingForm w(static_cast<int>(omega.rows()), 2);
  for (int a = 0; a < omega.rows(); ++a)
    for (int b = 0; b < omega.cols(); ++b) w.at({a, b}) = omega(a, b);
  return w;
}

// ------------------------------------------------------- CE differentials

AlternatingForm ce_differential(const LieAlgebra& g, const AlternatingForm& w) {
  require_dims(w.dim() == g.dim(), "form dimension vs Lie algebra");
  const int n = g.dim();
  const int p = w.degree();
  AlternatingForm out(n, p + 1);
  for_each_increasing(n, p + 1, [&](const std::vector<int>& xs) {
    Scalar total = 0;
    for (int i = 0; i <= p; ++i)
      for (int j = i + 1; j <= p; ++j) {
        std::vector<int> rest;
        for (int l = 0; l <= p; ++l)
          if (l != i && l != j) rest.push_back(xs[static_cast<std::size_t>(l)]);
        std::vector<int> args(1 + rest.size());
        std::copy(rest.begin(), rest.end(), args.begin() + 1);
        Scalar term = 0;
        for (int m = 0; m < n; ++m) {
          const Scalar& c = g.constant(xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)], m);
          if (c.is_zero()) continue;
          args[0] = m;
          term += c * w.at(args);
        }
        if ((i + j) % 2 == 0)
          total += term;
        else
          total -= term;
      }
    out.set_component(xs, total);
  });
  return out;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& e) {
  require_dims(e.ambient_dim() == g.dim(), "subspace vs Lie algebra");
  for (Eigen::Index a = 0; a < e.dim(); ++a)
    for (Eigen::Index b = a + 1; b < e.dim(); ++b)
      if (!e.contains(g.bracket(e.vector(a), e.vector(b)))) return false;
  return true;
}

std::vector<AlternatingForm> closed_forms(const LieAlgebra& g, int degree) {
  const int n = g.dim();
  std::vector<std::vector<int>> coords;
  for_each_increasing(n, degree, [&](const std::vector<int>& idx) { coords.push_back(idx); });
  std::vector<AlternatingForm> images;
  for (const auto& idx : coords) {
    AlternatingForm w(n, degree);
    w.set_component(idx, 1);
    images.push_back(ce_differential(g, w));
  }
  std::vector<std::vector<int>> targets;
  for_each_increasing(n, degree + 1, [&](const std::vector<int>& idx) { targets.push_back(idx); });
  Matrix dmat(static_cast<Eigen::Index>(targets.size()), static_cast<Eigen::Index>(coords.size()));
  for (std::size_t c = 0; c < coords.size(); ++c)
    for (std::size_t t = 0; t < targets.size(); ++t)
      dmat(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(c)) = images[c].at(targets[t]);
  const Matrix ker = null_space(dmat);
  std::vector<AlternatingForm> out;
  for (Eigen::Index s = 0; s < ker.cols(); ++s) {
    AlternatingForm w(n, degree);
    for (std::size_t c = 0; c < coords.size(); ++c) w.set_component(coords[c], ker(static_cast<Eigen::Index>(c), s));
    out.push_back(w);
  }
  return out;
}

Subspace ideal_generated_by(const LieAlgebra& g, const Subspace& s) {
  require_dims(s.ambient_dim() == g.dim(), "subspace vs Lie algebra");
  Subspace current = s;
  while (true) {
    Matrix rows(current.dim() * (g.dim() + 1), g.dim());
    Eigen::Index r = 0;
    for (Eigen::Index b = 0; b < current.dim(); ++b) {
      rows.row(r++) = current.vector(b).transpose();
      for (int i = 0; i < g.dim(); ++i) rows.row(r++) = g.bracket(g.basis_vector(i), current.vector(b)).transpose();
    }
    Subspace next = Subspace::span(rows);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool is_ideal(const LieAlgebra& g, const Subspace& k) {
  require_dims(k.ambient_dim() == g.dim(), "subspace vs Lie algebra");
  for (int i = 0; i < g.dim(); ++i)
    for (Eigen::Index b = 0; b < k.dim(); ++b)
      if (!k.contains(g.bracket(g.basis_vector(i), k.vector(b)))) return false;
  return true;
}

AlternatingForm ce_diff_on_Eform(const LieAlgebra& g, const Subspace& E, const Matrix& eps) {
  require_dims(E.ambient_dim() == g.dim(), "E vs Lie algebra");
  require_dims(eps.rows() == E.dim() && eps.cols() == E.dim(), "eps size vs dim E");
  const int k = static_cast<int>(E.dim());
  // br[a][b] = [b_a, b_b] in E coordinates
  std::vector<std::vector<Vector>> br(static_cast<std::size_t>(k), std::vector<Vector>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      auto c = E.coordinates(g.bracket(E.vector(a), E.vector(b)));
      if (!c) throw LieAlgebraError("E is not a subalgebra");
      br[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = *c;
    }
  auto eps_with = [&](int a, const Vector& v) {
    Scalar s = 0;
    for (int m = 0; m < k; ++m) s += eps(a, m) * v(m);
    return s;
  };
  AlternatingForm out(k, 3);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z) {
        const auto ux = static_cast<std::size_t>(x);
        const auto uy = static_cast<std::size_t>(y);
        const auto uz = static_cast<std::size_t>(z);
        out.at({x, y, z}) = eps_with(x, br[uy][uz]) + eps_with(y, br[uz][ux]) + eps_with(z, br[ux][uy]);
      }
  return out;
}

// ------------------------------------------------- invariant Courant bracket

Vector InvariantSection::stacked() const {
  Vector v(x.size() + xi.size());
  v.head(x.size()) = x;
  v.tail(xi.size()) = xi;
  return v;
}

InvariantSection InvariantSection::from_stacked(const Vector& v) {
  require_dims(v.size() % 2 == 0, "stacked section length");
  const Eigen::Index n = v.size() / 2;
  return {v.head(n), v.tail(n)};
}

namespace {

void check_section(const LieAlgebra& g, const InvariantSection& s) {
  require_dims(s.x.size() == g.dim() && s.xi.size() == g.dim(), "invariant section vs Lie algebra");
}

void check_twist(const LieAlgebra& g, const ThreeForm* H) {
  if (!H) return;
  require_dims(H->dim() == g.dim() && H->degree() == 3, "3-form vs Lie algebra");
}

}  // namespace

InvariantSection invariant_courant_bracket(const LieAlgebra& g, const InvariantSection& a, const InvariantSection& b,
                                           const ThreeForm* H) {
  check_section(g, a);
  check_section(g, b);
  check_twist(g, H);
  InvariantSection out;
  out.x = g.bracket(a.x, b.x);
  // (ad_x)^T xi evaluates Z -> xi([x, Z]).
  out.xi = g.ad(b.x).transpose() * a.xi - g.ad(a.x).transpose() * b.xi;
  if (H) {
    for (int m = 0; m < g.dim(); ++m) out.xi(m) += H->evaluate({a.x, b.x, g.basis_vector(m)});
  }
  return out;
}

bool invariant_integrable(const LieAlgebra& g, const LinearDirac& d, const ThreeForm* H) {
  require_dims(d.n() == g.dim(), "Dirac structure vs Lie algebra");
  check_twist(g, H);
  const Subspace& s = d.sub();
  for (Eigen::Index a = 0; a < s.dim(); ++a)
    for (Eigen::Index b = a + 1; b < s.dim(); ++b) {
      const auto br = invariant_courant_bracket(g, InvariantSection::from_stacked(s.vector(a)),
                                                InvariantSection::from_stacked(s.vector(b)), H);
      if (!s.contains(br.stacked())) return false;
    }
  return true;
}

Scalar nijenhuis_invariant(const LieAlgebra& g, const InvariantSection& a, const InvariantSection& b,
                           const InvariantSection& c, const ThreeForm* H) {
  auto term = [&](const InvariantSection& u, const InvariantSection& v, const InvariantSection& w) {
    return pairing(invariant_courant_bracket(g, u, v, H).stacked(), w.stacked());
  };
  return (term(a, b, c) + term(b, c, a) + term(c, a, b)) / Scalar(3);
}

// --------------------------------------------------------------- Schouten

AlternatingForm schouten_constant(const LieAlgebra& g, const Matrix& P, const Matrix& Q) {
  const int n = g.dim();
  require_dims(P.rows() == n && P.cols() == n && Q.rows() == n && Q.cols() == n, "bivectors vs Lie algebra");
  if (!is_antisymmetric(P) || !is_antisymmetric(Q)) throw std::invalid_argument("bivectors must be antisymmetric");
  AlternatingForm out(n, 3);
  // [x^y, z^w] = [x,z]^y^w - [x,w]^y^z - [y,z]^x^w + [y,w]^x^z
  auto add_term = [&](int u, int v, int r, int s, const Scalar& coef) {
    for (int m = 0; m < n; ++m) {
      const Scalar& c = g.constant(u, v, m);
      if (!c.is_zero()) out.add_wedge({m, r, s}, coef * c);
    }
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (P(i, j).is_zero()) continue;
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (Q(k, l).is_zero()) continue;
          const Scalar coef = P(i, j) * Q(k, l);
          add_term(i, k, j, l, coef);
          add_term(i, l, j, k, -coef);
          add_term(j, k, i, l, -coef);
          add_term(j, l, i, k, coef);
        }
    }
  return out;
}

QuotientCoordinates quotient_coordinates(const Subspace& k) {
  const Eigen::Index n = k.ambient_dim();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : k.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  const auto q = static_cast<Eigen::Index>(free.size());
  QuotientCoordinates qc{Matrix::Zero(q, n), Matrix::Zero(n, q)};
  for (Eigen::Index a = 0; a < q; ++a) {
    qc.splitting(free[static_cast<std::size_t>(a)], a) = 1;
    qc.projection(a, free[static_cast<std::size_t>(a)]) = 1;
  }
  // e_{p_r} = k_r - (non-pivot part of k_r), so it projects to -(that part).
  for (Eigen::Index r = 0; r < k.dim(); ++r) {
    const Eigen::Index p = k.pivots()[static_cast<std::size_t>(r)];
    for (Eigen::Index a = 0; a < q; ++a) qc.projection(a, p) = -k.basis()(r, free[static_cast<std::size_t>(a)]);
  }
  return qc;
}

LieAlgebra quotient_algebra(const LieAlgebra& g, const Subspace& k) {
  if (!is_ideal(g, k)) throw LieAlgebraError("quotient by a subspace that is not an ideal");
  const auto qc = quotient_coordinates(k);
  const int q = static_cast<int>(qc.projection.rows());
  std::vector<Scalar> c(static_cast<std::size_t>(q) * q * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      const Vector br = qc.projection * g.bracket(qc.splitting.col(a), qc.splitting.col(b));
      for (int m = 0; m < q; ++m) c[static_cast<std::size_t>((a * q + b) * q + m)] = br(m);
    }
  return {q, std::move(c)};
}

AlternatingForm schouten_quotient(const LieAlgebra& g, const Subspace& k, const Matrix& P, const Matrix& Q,
                                  const std::optional<Matrix>& splitting) {
  if (!is_ideal(g, k)) throw LieAlgebraError("k is not an ideal");
  const auto qc = quotient_coordinates(k);
  const Eigen::Index q = qc.projection.rows();
  require_dims(P.rows() == q && P.cols() == q && Q.rows() == q && Q.cols() == q, "bivectors vs dim g/k");
  const Matrix sigma = splitting ? *splitting : qc.splitting;
  require_dims(sigma.rows() == g.dim() && sigma.cols() == q, "splitting shape");
  if (Matrix(qc.projection * sigma) != identity<Scalar>(q))
    throw std::invalid_argument("splitting is not a section of the quotient map");
  const Matrix p_hat = sigma * P * sigma.transpose();
  const Matrix q_hat = sigma * Q * sigma.transpose();
  // Push the trivector forward: T(a, b, c) = T_hat(pi^T a, pi^T b, pi^T c).
  return schouten_constant(g, p_hat, q_hat).restrict_to(qc.projection);
}

// ----------------------------------------------------------------- Killing

Matrix killing_form(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<Matrix> ads;
  ads.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ads.push_back(g.ad(g.basis_vector(i)));
  Matrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      b(i, j) = Matrix(ads[static_cast<std::size_t>(i)] * ads[static_cast<std::size_t>(j)]).trace();
      b(j, i) = b(i, j);
    }
  return b;
}

bool is_semisimple(const LieAlgebra& g) { return rank(killing_form(g)) == g.dim(); }

Subspace complementary_ideal(const LieAlgebra& g, const Subspace& k) {
  if (!is_semisimple(g)) throw LieAlgebraError("complementary ideal requested for a non-semisimple algebra");
  if (!is_ideal(g, k)) throw LieAlgebraError("k is not an ideal");
  const Subspace kc = kernel(Matrix(k.basis() * killing_form(g)));
  if (!is_ideal(g, kc) || !intersect(k, kc).is_zero() || k.dim() + kc.dim() != g.dim())
    throw LieAlgebraError("no complementary ideal");
  return kc;
}

}  // namespace dirac
