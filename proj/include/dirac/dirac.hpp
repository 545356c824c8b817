#ifndef DIRAC_DIRAC_HPP
#define DIRAC_DIRAC_HPP

// Linear Dirac structures: Lagrangian subspaces of V + V* for the split
// pairing <X + xi, Y + eta> = xi(Y) + eta(X).  Ambient coordinates are
// (x_1..x_n, xi_1..xi_n); the dual space shares coordinates with V.
//
// Bilinear forms are stored as matrices of values: eps(e_a, e_b) = eps(a, b),
// pi(e_a*, e_b*) = pi(a, b), and the sharp maps are eps#(X) = eps(X, -).

#include "dirac/linalg.hpp"

#include <stdexcept>

namespace dirac {

class NotLagrangianError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// V + V* for dim V = n.
struct SplitSpace {
  Eigen::Index n = 0;

  Eigen::Index ambient_dim() const { return 2 * n; }
  /// Gram matrix [[0, I], [I, 0]] of the pairing.
  Matrix pairing_matrix() const;
  Subspace tangent() const;    // V
  Subspace cotangent() const;  // V*

  friend bool operator==(SplitSpace a, SplitSpace b) { return a.n == b.n; }
};

/// <u, v> for u, v in V + V*.
Scalar pairing(const Vector& u, const Vector& v);

/// True iff s is isotropic of dimension n inside V + V*.
bool is_lagrangian(const Subspace& s, SplitSpace space);

/// A maximal isotropic subspace of V + V*.  Construction validates it.
class LinearDirac {
public:
  LinearDirac() = default;
  explicit LinearDirac(Subspace sub);

  static LinearDirac from_rows(const Matrix& rows) { return LinearDirac(Subspace::span(rows)); }
  static LinearDirac tangent(Eigen::Index n);
  static LinearDirac cotangent(Eigen::Index n);

  SplitSpace space() const { return {sub_.ambient_dim() / 2}; }
  Eigen::Index n() const { return sub_.ambient_dim() / 2; }
  const Subspace& sub() const { return sub_; }

  /// d ∩ V as a subspace of V.
  Subspace tangent_part() const;
  /// d ∩ V* as a subspace of V*.
  Subspace cotangent_part() const;
  /// Projection of d to V.
  Subspace tangent_projection() const;
  /// Projection of d to V*.
  Subspace cotangent_projection() const;

  friend bool operator==(const LinearDirac& a, const LinearDirac& b) { return a.sub_ == b.sub_; }
  friend bool operator!=(const LinearDirac& a, const LinearDirac& b) { return !(a == b); }

private:
  Subspace sub_ = Subspace::zero(0);
};

/// Presentation L(E, eps) with eps given in the coordinates of E's
/// canonical (RREF) basis.
struct EEpsForm {
  Subspace E;
  Matrix eps;

  /// Validates that eps is antisymmetric with size dim E.
  EEpsForm(Subspace e, Matrix eps_in_basis);
  /// E spanned by independent `rows`, eps given in the coordinates of those rows.
  static EEpsForm from_rows(const Matrix& rows, const Matrix& eps_in_rows);

  /// eps#(X) restricted to E, in E coordinates; X given in E coordinates.
  Matrix sharp() const { return eps.transpose(); }
  /// Ker(eps#) as a subspace of V.
  Subspace kernel_of_sharp() const;

  friend bool operator==(const EEpsForm& a, const EEpsForm& b) { return a.E == b.E && a.eps == b.eps; }
};

/// Presentation L(pi, U), U inside V*, pi in coordinates of U's canonical basis.
struct PiUForm {
  Subspace U;
  Matrix pi;

  PiUForm(Subspace u, Matrix pi_in_basis);
  static PiUForm from_rows(const Matrix& rows, const Matrix& pi_in_rows);

  friend bool operator==(const PiUForm& a, const PiUForm& b) { return a.U == b.U && a.pi == b.pi; }
};

LinearDirac from_E_eps(const EEpsForm& form);
LinearDirac from_pi_U(const PiUForm& form);
EEpsForm decompose_E_eps(const LinearDirac& d);
PiUForm decompose_pi_U(const LinearDirac& d);

/// E ⊕ Ann(E) with E the i-eigenspace of J; requires J*J = -1.
LinearDirac from_complex(const Matrix& J);
/// L(V, omega).
LinearDirac from_presymplectic(const Matrix& omega);
/// L(V, i*omega); requires omega invertible.
LinearDirac from_symplectic_gc(const Matrix& omega);
/// L(pi, V*).
LinearDirac from_poisson(const Matrix& pi);

/// The block matrix [[1, 0], [B#, 1]] on V + V*.
Matrix b_transform_matrix(const Matrix& B);
/// e^B d.
LinearDirac b_transform(const LinearDirac& d, const Matrix& B);

LinearDirac conj(const LinearDirac& d);
bool is_real(const LinearDirac& d);
bool is_generalized_complex(const LinearDirac& d);

/// The real orthogonal endomorphism with J^2 = -1 whose i-eigenspace is d.
/// Throws std::invalid_argument unless d ∩ conj(d) = 0.
Matrix gc_endomorphism(const LinearDirac& d);

/// Exchanges the V and V* blocks of a vector space of dimension 2n.
Matrix swap_blocks_matrix(Eigen::Index n);

}  // namespace dirac

#endif  // DIRAC_DIRAC_HPP
