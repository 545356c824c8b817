#ifndef DIRAC_MAPS_HPP
#define DIRAC_MAPS_HPP

// Maps between linear Dirac structures.  f : V1 -> V2 is a dim V2 x dim V1
// matrix; its transpose is f* : V2* -> V1* in the shared coordinates.
//
// The Dirac-map predicate is implemented five times from five different
// characterisations; they are required to agree on every input and are
// cross-checked against each other by the test and suite harnesses.

#include "dirac/dirac.hpp"

namespace dirac {

struct DiracMapProblem {
  Matrix f;
  LinearDirac d1;
  LinearDirac d2;

  DiracMapProblem(Matrix map, LinearDirac source, LinearDirac target);
};

/// f_* d = { fX + xi : X + f* xi in d }.
LinearDirac pushforward(const Matrix& f, const LinearDirac& d);
/// f^* d = { X + f* xi : fX + xi in d }.
LinearDirac pullback(const Matrix& f, const LinearDirac& d);

/// Reference predicate: (M1) f(L1 ∩ V1) ⊂ L2 ∩ V2 and
/// (M2) p_{V1*}^{-1}(f*(p_{V2*} L2)) ∩ L1 ⊂ f^* L2.
bool is_dirac_M(const DiracMapProblem& p);
/// (M1) and the elementwise implication Y+xi ∈ L2, X + f*xi ∈ L1 ⇒ fX + xi ∈ L2.
bool is_dirac_M2prime(const DiracMapProblem& p);
/// (M1) and f^* L2 ⊂ L1 + f^{-1}(L2 ∩ V2).
bool is_dirac_M2doubleprime(const DiracMapProblem& p);
/// f*(U2) ⊂ U1 and phi* pi1 = pi2 with phi = f*|U2.
bool is_dirac_piU(const DiracMapProblem& p);
/// f(Ker eps1#) ⊂ Ker eps2# and the E/eps form of the (M2') implication.
bool is_dirac_Eeps(const DiracMapProblem& p);

/// f* : (V2*, L2) -> (V1*, L1) is a Dirac map.
bool is_dual_dirac(const DiracMapProblem& p);
/// f(E1) ⊂ E2 and f* eps2 = eps1.
bool is_dual_dirac_Eeps(const DiracMapProblem& p);

/// f_*(e^B d1) = d2, with B a 2-form on V1.
bool is_abm_dirac(const Matrix& f, const Matrix& B, const LinearDirac& d1, const LinearDirac& d2);

/// The same subspace read as a Dirac structure on V* (blocks exchanged).
LinearDirac dual_swap(const LinearDirac& d);

/// f*B = f^T B f, for B a 2-form on the codomain.
Matrix pullback_form(const Matrix& f, const Matrix& B);

}  // namespace dirac

#endif  // DIRAC_MAPS_HPP
