#ifndef DIRAC_RANDOM_HPP
#define DIRAC_RANDOM_HPP

// Seeded generators for exact random instances.  All draws go through one
// std::mt19937_64 stream, so a seed fixes every instance.

#include "dirac/group_data.hpp"
#include "dirac/maps.hpp"

#include <random>

namespace dirac {

struct ScalarOptions {
  int bound = 5;           // |numerator|, denominator <= bound
  double zero_bias = 0.3;  // probability of an exact zero
  bool complex = false;    // draw an imaginary part too
};

class Random {
public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi);  // inclusive
  bool coin(double p = 0.5);
  std::mt19937_64& engine() { return engine_; }

  Scalar scalar(const ScalarOptions& o = {});
  Matrix matrix(Eigen::Index rows, Eigen::Index cols, const ScalarOptions& o = {});
  Matrix antisymmetric(Eigen::Index n, const ScalarOptions& o = {});

  /// Span of `count` random vectors (so dimension <= count).
  Subspace subspace(Eigen::Index ambient, Eigen::Index count, const ScalarOptions& o = {});
  /// Subspace of random dimension 0..ambient.
  Subspace subspace(Eigen::Index ambient, const ScalarOptions& o = {});
  /// Random subspace of s.
  Subspace subspace_of(const Subspace& s, const ScalarOptions& o = {});
  /// Random subspace containing s.
  Subspace superspace_of(const Subspace& s, const ScalarOptions& o = {});

  /// L(E, eps) with random E and eps, then optionally a random B-transform.
  LinearDirac lagrangian(Eigen::Index n, const ScalarOptions& o = {}, bool b_transform = true);
  /// A Lagrangian with d ∩ conj(d) = 0 (n even; rejection sampling).
  LinearDirac gc_structure(Eigen::Index n);

  /// Dirac map built from (f, U1, pi1): U2 inside (f*)^{-1}(U1), pi2 = phi* pi1.
  DiracMapProblem dirac_map(Eigen::Index n1, Eigen::Index n2, const ScalarOptions& o = {});
  /// Dual-Dirac map built from (f, E2, eps2): E1 inside f^{-1}(E2), eps1 = f* eps2.
  DiracMapProblem dual_dirac_map(Eigen::Index n1, Eigen::Index n2, const ScalarOptions& o = {});
  /// Unconstrained triple.
  DiracMapProblem map_triple(Eigen::Index n1, Eigen::Index n2, const ScalarOptions& o = {});

  /// Random ideal of g: the ideal generated by a random subspace.
  Subspace ideal(const LieAlgebra& g);
  /// Random combination of the closed invariant 3-forms.
  ThreeForm closed_three_form(const LieAlgebra& g, const std::vector<ThreeForm>& closed_basis);

private:
  std::mt19937_64 engine_;
};

/// Subspace spanned by the basis vectors e_i with bit i of mask set.
Subspace coordinate_subspace(int n, unsigned mask);

}  // namespace dirac

#endif  // DIRAC_RANDOM_HPP
