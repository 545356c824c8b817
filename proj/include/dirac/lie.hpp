#ifndef DIRAC_LIE_HPP
#define DIRAC_LIE_HPP

// Finite-dimensional Lie algebras over Q(i) given by structure constants,
// alternating forms and their Chevalley-Eilenberg differential, the
// left-trivialised (invariant) Courant bracket with an optional 3-form
// twist, and the Schouten bracket of constant bivectors.

#include "dirac/dirac.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dirac {

class LieAlgebraError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class LieAlgebra {
public:
  struct Bracket {
    int i;
    int j;
    Vector result;  // [e_i, e_j]
  };

  LieAlgebra() = default;
  /// c[(i*n + j)*n + k] is the e_k-component of [e_i, e_j].  Throws
  /// LieAlgebraError unless antisymmetric and Jacobi.
  LieAlgebra(int dim, std::vector<Scalar> constants);
  /// Unlisted pairs are zero; [e_j, e_i] is filled in by antisymmetry.
  static LieAlgebra from_brackets(int dim, const std::vector<Bracket>& brackets);
  /// "abelian:n", "heisenberg3", "axb", "sl2", "sl2xsl2".
  static LieAlgebra builtin(const std::string& name);
  static std::vector<std::string> builtin_names();

  int dim() const { return dim_; }
  const Scalar& constant(int i, int j, int k) const {
    return c_[static_cast<std::size_t>((i * dim_ + j) * dim_ + k)];
  }
  const std::vector<Scalar>& constants() const { return c_; }

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad_x, columns are [x, e_j].
  Matrix ad(const Vector& x) const;
  Vector basis_vector(int i) const;

  /// First basis triple (i, j, k) whose Jacobiator is nonzero, if any.
  static std::optional<std::array<int, 3>> jacobi_violation(int dim, const std::vector<Scalar>& constants);

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

private:
  int dim_ = 0;
  std::vector<Scalar> c_;
};

/// Alternating p-linear table on an n-dimensional space, stored densely.
class AlternatingForm {
public:
  AlternatingForm() = default;
  AlternatingForm(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }

  const Scalar& at(const std::vector<int>& idx) const { return values_[offset(idx)]; }
  Scalar& at(const std::vector<int>& idx) { return values_[offset(idx)]; }
  const Scalar& operator()(int a, int b, int c) const { return at({a, b, c}); }

  /// Sets the component at idx and all its permutations (with sign).
  void set_component(const std::vector<int>& idx, const Scalar& v);
  /// Adds v * (e^{i_1} ∧ ... ∧ e^{i_p}) evaluated on coordinate slots.
  void add_wedge(const std::vector<int>& idx, const Scalar& v);

  bool is_alternating() const;
  bool is_zero() const;

  /// Multilinear evaluation on vectors (one per slot).
  Scalar evaluate(const std::vector<Vector>& args) const;
  /// Pullback along the rows of `basis` (each row a vector of the ambient space).
  AlternatingForm restrict_to(const Matrix& basis) const;

  /// First index tuple with a nonzero value, for failure witnesses.
  std::optional<std::vector<int>> first_nonzero() const;

  const std::vector<Scalar>& values() const { return values_; }

  AlternatingForm& operator+=(const AlternatingForm& o);
  friend AlternatingForm operator+(AlternatingForm a, const AlternatingForm& b) { return a += b; }
  friend AlternatingForm operator-(AlternatingForm a, const AlternatingForm& b);
  friend AlternatingForm operator*(const Scalar& s, AlternatingForm a);
  friend bool operator==(const AlternatingForm& a, const AlternatingForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.values_ == b.values_;
  }

private:
  std::size_t offset(const std::vector<int>& idx) const;

  int dim_ = 0;
  int degree_ = 0;
  std::vector<Scalar> values_;
};

using ThreeForm = AlternatingForm;

/// Alternating 2-form (antisymmetric matrix) as an AlternatingForm.
AlternatingForm two_form(const Matrix& omega);

/// Chevalley-Eilenberg differential of an invariant p-form:
/// dw(x_0..x_p) = sum_{i<j} (-1)^{i+j} w([x_i, x_j], x_0, ..^i..^j.., x_p).
AlternatingForm ce_differential(const LieAlgebra& g, const AlternatingForm& w);

/// Basis of the closed invariant p-forms (kernel of the CE differential).
std::vector<AlternatingForm> closed_forms(const LieAlgebra& g, int degree);

bool is_subalgebra(const LieAlgebra& g, const Subspace& e);
bool is_ideal(const LieAlgebra& g, const Subspace& k);
/// Smallest ideal containing s.
Subspace ideal_generated_by(const LieAlgebra& g, const Subspace& s);

/// d_E eps(X, Y, Z) = eps(X, [Y,Z]) + eps(Y, [Z,X]) + eps(Z, [X,Y]) on E's
/// canonical basis.  Throws LieAlgebraError unless E is a subalgebra.
AlternatingForm ce_diff_on_Eform(const LieAlgebra& g, const Subspace& E, const Matrix& eps);

struct InvariantSection {
  Vector x;   // in g
  Vector xi;  // in g*

  Vector stacked() const;
  static InvariantSection from_stacked(const Vector& v);
  friend bool operator==(const InvariantSection& a, const InvariantSection& b) { return a.x == b.x && a.xi == b.xi; }
};

/// [a, b]_H for left-invariant sections:
/// [x_a, x_b] + (Z -> -xi_b([x_a, Z]) + xi_a([x_b, Z]) + H(x_a, x_b, Z)).
/// Pass H = nullptr for the untwisted bracket.
InvariantSection invariant_courant_bracket(const LieAlgebra& g, const InvariantSection& a, const InvariantSection& b,
                                           const ThreeForm* H = nullptr);

/// True iff the (twisted) invariant Courant bracket preserves d.
bool invariant_integrable(const LieAlgebra& g, const LinearDirac& d, const ThreeForm* H = nullptr);

/// (1/3)(<[a,b],c> + <[b,c],a> + <[c,a],b>) with the twisted bracket.
Scalar nijenhuis_invariant(const LieAlgebra& g, const InvariantSection& a, const InvariantSection& b,
                           const InvariantSection& c, const ThreeForm* H = nullptr);

/// Schouten bracket of constant bivectors P, Q (P(alpha, beta) = alpha^T P beta),
/// returned as an alternating table on g*.  Uses the Leibniz extension
/// [x^y, z] = x^[y,z] + [x,z]^y.
AlternatingForm schouten_constant(const LieAlgebra& g, const Matrix& P, const Matrix& Q);

/// Coordinates on g/k: projection (q x n) and the canonical splitting
/// (n x q) onto the non-pivot coordinate directions of k.
struct QuotientCoordinates {
  Matrix projection;
  Matrix splitting;
};
QuotientCoordinates quotient_coordinates(const Subspace& k);

/// The Lie algebra g/k in the coordinates of quotient_coordinates(k).
LieAlgebra quotient_algebra(const LieAlgebra& g, const Subspace& k);

/// Schouten bracket of bivectors on g/k: lift through a splitting, bracket
/// in g, project.  `splitting` defaults to the canonical one and must
/// satisfy projection * splitting = 1.
AlternatingForm schouten_quotient(const LieAlgebra& g, const Subspace& k, const Matrix& P, const Matrix& Q,
                                  const std::optional<Matrix>& splitting = std::nullopt);

Matrix killing_form(const LieAlgebra& g);
bool is_semisimple(const LieAlgebra& g);
/// Killing-orthogonal complement of the ideal k; throws LieAlgebraError if g
/// is not semisimple or k is not an ideal.
Subspace complementary_ideal(const LieAlgebra& g, const Subspace& k);

}  // namespace dirac

#endif  // DIRAC_LIE_HPP
