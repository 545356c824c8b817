#include "test_util.hpp"

#include <set>

using namespace dirac;
using namespace dirac::test;

namespace {

const Scalar I = Scalar::i();
const LieAlgebra h3 = LieAlgebra::builtin("heisenberg3");
const LieAlgebra sl2 = LieAlgebra::builtin("sl2");
const LieAlgebra axb = LieAlgebra::builtin("axb");

Matrix wedge2(int n, int a, int b) {
  Matrix m = Matrix::Zero(n, n);
  m(a, b) = 1;
  m(b, a) = -1;
  return m;
}

std::vector<Matrix> zeros(int count, int q) { return std::vector<Matrix>(static_cast<std::size_t>(count), Matrix::Zero(q, q)); }

std::set<std::string> failing(const Report& r) {
  std::set<std::string> out;
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::fail) out.insert(c.name);
  return out;
}

DiracGroupDatum axb_bialgebra() {
  std::vector<Matrix> eps = zeros(2, 2);
  eps[1] = wedge2(2, 0, 1);
  return {axb, Subspace::zero(2), eps};
}

DiracGroupDatum h3_center_violation() {
  std::vector<Matrix> eps = zeros(3, 2);
  eps[2] = wedge2(2, 0, 1);
  return {h3, span({{0, 0, 1}}), eps};
}

// Jacobi for [a*, b*] = sum_c eps[c](a, b) c*, evaluated directly.
bool dual_bracket_is_lie(const std::vector<Matrix>& eps) {
  const int q = static_cast<int>(eps.size());
  auto br = [&](const Vector& u, const Vector& v) {
    Vector w = Vector::Zero(q);
    for (int c = 0; c < q; ++c) w(c) = u.dot(eps[static_cast<std::size_t>(c)] * v);
    return w;
  };
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        const Vector x = unit(q, a), y = unit(q, b), z = unit(q, c);
        if (!is_zero_matrix(Matrix(br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))))) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("check_ideal") {
  CHECK(check_ideal(h3, Subspace::zero(3)).passed());
  CHECK(check_ideal(h3, Subspace::full(3)).passed());
  CHECK(check_ideal(h3, span({{0, 0, 1}})).passed());
  const CheckResult r = check_ideal(sl2, span({{0, 1, 0}}));
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("check_cocycle") {
  CHECK(check_cocycle({h3, Subspace::zero(3), zeros(3, 3)}).passed());
  Random rng(1);
  std::vector<Matrix> any;
  for (int i = 0; i < 3; ++i) any.push_back(rng.antisymmetric(3));
  CHECK(check_cocycle({LieAlgebra::builtin("abelian:3"), Subspace::zero(3), any}).passed());
  CHECK(check_cocycle(axb_bialgebra()).passed());
  // eps(x) = x^y on h3: -ad_y(x^y) = -y^z
  std::vector<Matrix> bad = zeros(3, 3);
  bad[0] = wedge2(3, 0, 1);
  const CheckResult r = check_cocycle({h3, Subspace::zero(3), bad});
  CHECK_FALSE(r.passed());
  CHECK(r.witness == std::vector<int>{0, 1});
  CHECK_THROWS_AS(check_cocycle({sl2, span({{0, 1, 0}}), zeros(3, 2)}), LieAlgebraError);
}

TEST_CASE("check_vanishing_on_k") {
  CHECK(check_vanishing_on_k({h3, Subspace::zero(3), zeros(3, 3)}).passed());
  CHECK(check_vanishing_on_k({h3, span({{0, 0, 1}}), zeros(3, 2)}).passed());
  const CheckResult r = check_vanishing_on_k(h3_center_violation());
  CHECK_FALSE(r.passed());
  CHECK(r.witness == std::vector<int>{0});
}

TEST_CASE("dual_jacobi") {
  CHECK(dual_jacobi({h3, Subspace::zero(3), zeros(3, 3)}).passed());
  CHECK(dual_jacobi(axb_bialgebra()).passed());
  const std::vector<Scalar> c = dual_bracket_constants(axb_bialgebra());
  // [e1*, e2*] = e2*
  CHECK(c[(0 * 2 + 1) * 2 + 1] == Scalar(1));
  CHECK(c[(0 * 2 + 1) * 2 + 0] == Scalar(0));
  CHECK_THROWS_AS(dual_jacobi(h3_center_violation()), std::invalid_argument);

  // search for a dual bracket that is not a Lie bracket, and agree with a direct evaluation
  const LieAlgebra ab = LieAlgebra::builtin("abelian:3");
  Random rng(2);
  bool found_failure = false;
  for (int t = 0; t < 200; ++t) {
    std::vector<Matrix> eps;
    for (int i = 0; i < 3; ++i) eps.push_back(rng.antisymmetric(3));
    const bool expected = dual_bracket_is_lie(eps);
    CHECK(dual_jacobi({ab, Subspace::zero(3), eps}).passed() == expected);
    found_failure = found_failure || !expected;
  }
  CHECK(found_failure);
}

TEST_CASE("check_dirac_group_datum") {
  const Report trivial = check_dirac_group_datum({LieAlgebra::builtin("abelian:2"), Subspace::zero(2), zeros(2, 2)});
  CHECK(trivial.verdict);
  CHECK(trivial.checks.size() == 4);

  const Report bialgebra = check_dirac_group_datum(axb_bialgebra());
  CHECK(bialgebra.verdict);
  for (const auto& c : bialgebra.checks) CHECK(c.passed());

  const Report center = check_dirac_group_datum(h3_center_violation());
  CHECK_FALSE(center.verdict);
  CHECK(failing(center) == std::set<std::string>{"vanishing_on_k"});
  CHECK(center.find("cocycle")->status == CheckStatus::skipped);
  CHECK(center.find("dual_jacobi")->status == CheckStatus::skipped);

  const Report not_ideal = check_dirac_group_datum({sl2, span({{0, 1, 0}}), zeros(3, 2)});
  CHECK(failing(not_ideal) == std::set<std::string>{"ideal"});
  CHECK(not_ideal.find("cocycle")->status == CheckStatus::skipped);

  std::vector<Matrix> bad = zeros(3, 3);
  bad[0] = wedge2(3, 0, 1);
  CHECK(failing(check_dirac_group_datum({h3, Subspace::zero(3), bad})).count("cocycle") == 1);

  CHECK_THROWS_AS(DiracGroupDatum(h3, Subspace::zero(3), zeros(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(DiracGroupDatum(h3, Subspace::zero(3), zeros(3, 2)), std::invalid_argument);
}

TEST_CASE("check_dual_dirac_group_datum") {
  Random rng(3);
  const LieAlgebra ab = LieAlgebra::builtin("abelian:3");
  CHECK(check_dual_dirac_group_datum({ab, Subspace::full(3), rng.antisymmetric(3)}).verdict);
  CHECK(check_dual_dirac_group_datum({h3, Subspace::full(3), wedge2(3, 0, 1)}).verdict);

  // eps = x*^z* on h3: eps([x,y], x) + eps(y, [x,x]) = eps(z, x) = -1
  const Report inv = check_dual_dirac_group_datum({h3, Subspace::full(3), wedge2(3, 0, 2)});
  CHECK(failing(inv) == std::set<std::string>{"invariance"});

  const Report sl = check_dual_dirac_group_datum({sl2, Subspace::full(3), wedge2(3, 1, 2)});
  CHECK_FALSE(sl.verdict);

  const Report not_ideal = check_dual_dirac_group_datum({sl2, span({{0, 1, 0}}), Matrix::Zero(1, 1)});
  CHECK(failing(not_ideal) == std::set<std::string>{"ideal"});

  // d eps(h1, e2, f2) = eps(h1, [e2, f2]) = eps(h1, h2) = 1 on sl2 x sl2
  const Report co = check_dual_dirac_group_datum({LieAlgebra::builtin("sl2xsl2"), Subspace::full(6), wedge2(6, 0, 3)});
  CHECK(failing(co).count("cocycle") == 1);
  CHECK(co.find("cocycle")->witness == std::vector<int>{0, 4, 5});
}

TEST_CASE("invariant_cocycle_space") {
  CHECK(invariant_cocycle_space(sl2, Subspace::full(3)).dimension == 0);
  const LieAlgebra s2 = LieAlgebra::builtin("sl2xsl2");
  CHECK(invariant_cocycle_space(s2, Subspace::full(6)).dimension == 0);
  CHECK(invariant_cocycle_space(s2, span({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}})).dimension == 0);
  const CocycleSpace ab = invariant_cocycle_space(LieAlgebra::builtin("abelian:2"), Subspace::full(2));
  CHECK(ab.dimension == 1);
  CHECK(ab.basis.size() == 1);
  CHECK_THROWS_AS(invariant_cocycle_space(sl2, span({{0, 1, 0}})), LieAlgebraError);

  // h3 by enumeration of eps = a x*^y* + b x*^z* + c y*^z*
  int passing = 0, total = 0;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) {
        const Matrix eps = Scalar(a) * wedge2(3, 0, 1) + Scalar(b) * wedge2(3, 0, 2) + Scalar(c) * wedge2(3, 1, 2);
        bool ok = true;
        for (int i = 0; i < 3; ++i)
          for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q) {
              const Vector u = unit(3, i), w = unit(3, p), v = unit(3, q);
              ok = ok && (h3.bracket(u, w).dot(eps * v) + w.dot(eps * h3.bracket(u, v))).is_zero();
            }
        ++total;
        passing += ok;
      }
  CHECK(total == 27);
  CHECK(passing == 3);  // b = c = 0
  const CocycleSpace hs = invariant_cocycle_space(h3, Subspace::full(3));
  REQUIRE(hs.dimension == 1);
  CHECK(is_zero_matrix(Matrix(hs.basis[0](0, 1) * wedge2(3, 0, 1) - hs.basis[0])));
  for (const auto& eps : hs.basis) CHECK(check_dual_dirac_group_datum({h3, Subspace::full(3), eps}).verdict);
}

TEST_CASE("check_gc_group_datum") {
  const LieAlgebra ab = LieAlgebra::builtin("abelian:2");
  const Subspace k = Subspace::span(mat({{1, -I}}));
  const Report r = check_gc_group_datum({ab, k});
  CHECK(r.verdict);
  REQUIRE(r.J);
  CHECK(*r.J == mat({{0, -1}, {1, 0}}));
  CHECK(from_complex(*r.J) == from_E_eps(EEpsForm(k, Matrix::Zero(1, 1))));
  CHECK(from_complex(*r.J).tangent_part() == k);
  CHECK(from_complex(*r.J).cotangent_part() == annihilator(k));

  const Report real = check_gc_group_datum({ab, span({{1, 0}})});
  CHECK_FALSE(real.verdict);
  CHECK(failing(real).count("k_cap_conj_k") == 1);
  CHECK_FALSE(real.J);

  // odd dimension: no candidate works
  Random rng(4);
  const LieAlgebra ab3 = LieAlgebra::builtin("abelian:3");
  for (int t = 0; t < 30; ++t) {
    const Subspace cand = rng.subspace(3, ScalarOptions{3, 0.3, true});
    CHECK_FALSE(check_gc_group_datum({ab3, cand}).verdict);
  }
  // axb has only real ideals
  CHECK_FALSE(check_gc_group_datum({axb, Subspace::span(mat({{1, I}}))}).verdict);
}

TEST_CASE("check_twisted_dual_dirac_group_datum") {
  const ThreeForm zero(3, 3);
  const Report plain = check_twisted_dual_dirac_group_datum({h3, Subspace::full(3), wedge2(3, 0, 1), zero});
  CHECK(plain.verdict);
  // E = span{x, z}: abelian ideal, every eps is invariant
  const Report abel = check_twisted_dual_dirac_group_datum({h3, span({{1, 0, 0}, {0, 0, 1}}), wedge2(2, 0, 1), zero});
  CHECK(abel.verdict);
  ThreeForm H(3, 3);
  H.set_component({0, 1, 2}, Scalar(1));
  const Report twisted = check_twisted_dual_dirac_group_datum({h3, Subspace::full(3), wedge2(3, 0, 1), H});
  CHECK(failing(twisted) == std::set<std::string>{"H_restricted"});
  CHECK(twisted.find("H_restricted")->witness == std::vector<int>{0, 1, 2});

  // H = -d_E eps on sl2 x sl2 restores the condition
  const LieAlgebra s2 = LieAlgebra::builtin("sl2xsl2");
  const Matrix eps = wedge2(6, 0, 3);
  const ThreeForm fix = Scalar(-1) * ce_diff_on_Eform(s2, Subspace::full(6), eps);
  const Report t2 = check_twisted_dual_dirac_group_datum({s2, Subspace::full(6), eps, fix});
  CHECK(t2.find("H_restricted")->passed());
  CHECK(t2.find("H_closed")->passed());

  // a non-closed H on sl2 x sl2
  ThreeForm open(6, 3);
  open.set_component({0, 1, 3}, Scalar(1));
  CHECK(failing(check_twisted_dual_dirac_group_datum({s2, Subspace::zero(6), Matrix::Zero(0, 0), open})).count("H_closed") == 1);

  // H = 0 agrees with the untwisted validator
  Random rng(5);
  for (int t = 0; t < 20; ++t) {
    const Matrix e = rng.antisymmetric(3);
    CHECK(check_twisted_dual_dirac_group_datum({h3, Subspace::full(3), e, zero}).verdict ==
          check_dual_dirac_group_datum({h3, Subspace::full(3), e}).verdict);
  }
}

TEST_CASE("multiplicativity_residual") {
  const LieAlgebra ab = LieAlgebra::builtin("abelian:2");
  const Matrix one = identity<Scalar>(2);
  const Matrix w = wedge2(2, 0, 1);
  // beta = 0 everywhere
  auto r0 = multiplicativity_residual(ab, Subspace::zero(2), {{one, Matrix::Zero(2, 2)}}, {{0, 0, 0}});
  CHECK(is_zero_matrix(r0.at(0)));
  // a single element with beta_e != 0
  auto r1 = multiplicativity_residual(ab, Subspace::zero(2), {{one, w}}, {{0, 0, 0}});
  CHECK(r1.at(0) == Matrix(-w));
  // additive table on an abelian group: g, h, gh, e
  const std::vector<GroupElementSample> add = {{one, Matrix(2 * w)}, {one, Matrix(3 * w)}, {one, Matrix(5 * w)}, {one, Matrix::Zero(2, 2)}};
  for (const auto& r : multiplicativity_residual(ab, Subspace::zero(2), add, {{0, 1, 2}, {1, 0, 2}, {3, 3, 3}, {0, 3, 0}}))
    CHECK(is_zero_matrix(r));
  const std::vector<GroupElementSample> skew = {{one, Matrix(2 * w)}, {one, Matrix(3 * w)}, {one, Matrix(4 * w)}};
  CHECK(multiplicativity_residual(ab, Subspace::zero(2), skew, {{0, 1, 2}}).at(0) == Matrix(-w));

  // Ad(h^-1) acts on g/k: h3 with k = center and Ad = 1 + ad_x
  const Matrix adx = Matrix(identity<Scalar>(3) + h3.ad(unit(3, 0)));
  auto rh = multiplicativity_residual(h3, span({{0, 0, 1}}), {{adx, w}, {adx, w}, {Matrix(adx * adx), Matrix(2 * w)}}, {{0, 1, 2}});
  CHECK(is_zero_matrix(rh.at(0)));

  CHECK_THROWS_AS(multiplicativity_residual(ab, Subspace::zero(2), {{one, w}}, {{0, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(multiplicativity_residual(ab, Subspace::zero(2), {{Matrix::Zero(2, 2), w}}, {}), std::invalid_argument);
  // a scaling of x alone does not preserve [x, y] = z
  CHECK_THROWS_AS(multiplicativity_residual(h3, Subspace::zero(3), {{Matrix(mat({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})), Matrix::Zero(3, 3)}}, {}),
                  std::invalid_argument);
}
