#ifndef DIRAC_GROUP_DATA_HPP
#define DIRAC_GROUP_DATA_HPP

// Validators for the Lie-algebraic data classifying Dirac, dual-Dirac,
// generalized complex and twisted dual-Dirac groups.  Invariance under a
// connected group is checked infinitesimally (ad-invariance).
//
// Bivectors on g/k are written in the coordinates of quotient_coordinates(k).

#include "dirac/lie.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dirac {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::vector<int> witness;  // failing basis tuple
  std::string detail;

  bool passed() const { return status == CheckStatus::pass; }
};

struct Report {
  bool verdict = true;
  std::vector<CheckResult> checks;
  std::optional<Matrix> J;  // gc datum only

  void add(CheckResult c);
  const CheckResult* find(const std::string& name) const;
};

struct DiracGroupDatum {
  LieAlgebra g;
  Subspace k;
  std::vector<Matrix> eps;  // eps[i] = eps(e_i) in ∧²(g/k)

  DiracGroupDatum(LieAlgebra algebra, Subspace ideal, std::vector<Matrix> cobracket);

  Eigen::Index quotient_dim() const { return k.ambient_dim() - k.dim(); }
  /// eps(v) = sum_i v_i eps[i].
  Matrix eps_at(const Vector& v) const;
};

struct DualDiracGroupDatum {
  LieAlgebra g;
  Subspace E;
  Matrix eps;

  DualDiracGroupDatum(LieAlgebra algebra, Subspace e, Matrix form);
};

struct GCGroupDatum {
  LieAlgebra g_real;
  Subspace k;

  GCGroupDatum(LieAlgebra algebra, Subspace sub);
};

struct TwistedDualDiracGroupDatum {
  LieAlgebra g;
  Subspace E;
  Matrix eps;
  ThreeForm H;

  TwistedDualDiracGroupDatum(LieAlgebra algebra, Subspace e, Matrix form, ThreeForm h);
};

/// [g, k] ⊂ k.  Witness (i, b): [e_i, k_b] not in k.
CheckResult check_ideal(const LieAlgebra& g, const Subspace& k);
/// ad_x eps(y) - ad_y eps(x) - eps([x,y]) = 0 on basis pairs, with ad acting
/// on ∧²(g/k) by the induced action.  Throws LieAlgebraError unless k is an ideal.
CheckResult check_cocycle(const DiracGroupDatum& d);
/// eps(k) = 0.  Witness (b): eps(k_b) != 0.
CheckResult check_vanishing_on_k(const DiracGroupDatum& d);
/// Jacobi for the bracket on (g/k)* dual to the factored eps.  Throws
/// std::invalid_argument if eps does not vanish on k.
CheckResult dual_jacobi(const DiracGroupDatum& d);
/// Structure constants of the dual bracket: [q_a*, q_b*] = sum_c eps(q_c)(a, b) q_c*.
std::vector<Scalar> dual_bracket_constants(const DiracGroupDatum& d);

/// All four conditions.  A condition whose precondition failed is reported
/// as skipped (cocycle and dual Jacobi need eps to factor through g/k).
Report check_dirac_group_datum(const DiracGroupDatum& d);

/// eps([x,w], w') + eps(w, [x,w']) = 0 for x in g, w, w' in E.  E must be an ideal.
CheckResult check_invariance(const LieAlgebra& g, const Subspace& E, const Matrix& eps);
Report check_dual_dirac_group_datum(const DualDiracGroupDatum& d);

struct CocycleSpace {
  int dimension = 0;
  std::vector<Matrix> basis;  // antisymmetric, in E's canonical basis
};
/// Invariant 2-cocycles on the ideal E.  Throws LieAlgebraError unless E is an ideal.
CocycleSpace invariant_cocycle_space(const LieAlgebra& g, const Subspace& E);

/// k ideal of the complexification, k ∩ conj(k) = 0, k + conj(k) = g.  On
/// success the report carries the real J with i-eigenspace k.
Report check_gc_group_datum(const GCGroupDatum& d);

Report check_twisted_dual_dirac_group_datum(const TwistedDualDiracGroupDatum& d);

struct GroupElementSample {
  Matrix ad;    // Ad(h) on g
  Matrix beta;  // beta_h in ∧²(g/k)
};
struct MultiplicationTriple {
  int g;
  int h;
  int gh;
};
/// beta_gh - beta_h - Ad(h^{-1}) beta_g for each triple, with Ad(h^{-1})
/// acting on ∧²(g/k) through the quotient.  Throws std::invalid_argument on
/// shape errors, singular Ad, or Ad not preserving the bracket or k.
std::vector<Matrix> multiplicativity_residual(const LieAlgebra& g, const Subspace& k,
                                              const std::vector<GroupElementSample>& elements,
                                              const std::vector<MultiplicationTriple>& triples);

std::string to_string(CheckStatus s);

}  // namespace dirac

#endif  // DIRAC_GROUP_DATA_HPP
