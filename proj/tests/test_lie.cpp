#include "test_util.hpp"

using namespace dirac;
using namespace dirac::test;

namespace {

const LieAlgebra h3 = LieAlgebra::builtin("heisenberg3");
const LieAlgebra sl2 = LieAlgebra::builtin("sl2");

InvariantSection vector_part(const Vector& x) { return {x, Vector::Zero(x.size())}; }
InvariantSection covector_part(const Vector& xi) { return {Vector::Zero(xi.size()), xi}; }

// x*^y* style 2-form on dimension n.
Matrix wedge2(int n, int a, int b) {
  Matrix m = Matrix::Zero(n, n);
  m(a, b) = 1;
  m(b, a) = -1;
  return m;
}

std::vector<InvariantSection> sections(const LinearDirac& d) {
  std::vector<InvariantSection> out;
  for (Eigen::Index r = 0; r < d.sub().dim(); ++r) out.push_back(InvariantSection::from_stacked(d.sub().vector(r)));
  return out;
}

}  // namespace

TEST_CASE("brackets of the built-in algebras") {
  const LieAlgebra ab = LieAlgebra::builtin("abelian:3");
  CHECK(ab.bracket(unit(3, 0), unit(3, 1)) == Vector::Zero(3));
  CHECK(sl2.bracket(unit(3, 0), unit(3, 1)) == Vector(2 * unit(3, 1)));
  CHECK(sl2.bracket(unit(3, 0), unit(3, 2)) == Vector(-2 * unit(3, 2)));
  CHECK(sl2.bracket(unit(3, 1), unit(3, 2)) == unit(3, 0));
  const LieAlgebra axb = LieAlgebra::builtin("axb");
  CHECK(axb.bracket(unit(2, 0), unit(2, 1)) == unit(2, 1));
  CHECK(h3.bracket(unit(3, 0), unit(3, 1)) == unit(3, 2));
  CHECK(h3.bracket(unit(3, 1), unit(3, 0)) == Vector(-unit(3, 2)));
  for (const auto& name : LieAlgebra::builtin_names()) {
    const LieAlgebra g = LieAlgebra::builtin(name);
    CHECK_FALSE(LieAlgebra::jacobi_violation(g.dim(), g.constants()));
  }
  CHECK_THROWS_AS(LieAlgebra::builtin("so3"), LieAlgebraError);
  CHECK_THROWS_AS(h3.bracket(unit(2, 0), unit(3, 0)), DimensionError);
}

TEST_CASE("structure constants are validated") {
  // [e0,e1] = e1, [e0,e2] = e0 violates Jacobi
  CHECK_THROWS_AS(LieAlgebra::from_brackets(3, {{0, 1, unit(3, 1)}, {0, 2, unit(3, 0)}}), LieAlgebraError);
  std::vector<Scalar> c(8, Scalar(0));
  c[(0 * 2 + 1) * 2 + 1] = 1;  // [e0,e1] = e1 without the antisymmetric partner
  CHECK_THROWS_AS(LieAlgebra(2, c), LieAlgebraError);
  c[(1 * 2 + 0) * 2 + 1] = -1;
  CHECK(LieAlgebra(2, c) == LieAlgebra::builtin("axb"));
}

TEST_CASE("ce_diff_on_Eform examples") {
  const LieAlgebra ab = LieAlgebra::builtin("abelian:3");
  Random rng(1);
  CHECK(ce_diff_on_Eform(ab, Subspace::full(3), rng.antisymmetric(3)).is_zero());
  // cyclic sum on h3 reduces to eps(z, z) = 0
  CHECK(ce_diff_on_Eform(h3, Subspace::full(3), wedge2(3, 0, 1)).is_zero());
  CHECK(ce_diff_on_Eform(h3, Subspace::full(3), wedge2(3, 0, 2)).is_zero());
  CHECK(ce_diff_on_Eform(h3, Subspace::full(3), wedge2(3, 1, 2)).is_zero());
  // sl2: eps = h*^e*, d eps(h,e,f) = eps(h,[e,f]) + eps(e,[f,h]) + eps(f,[h,e]) = 0 + eps(e, 2f) + 0 = 0
  CHECK(ce_diff_on_Eform(sl2, Subspace::full(3), wedge2(3, 0, 1)).is_zero());
  // eps = e*^f*: eps(h,h) + eps(e,2f) + eps(f,2e) = 2 - 2 = 0
  const AlternatingForm d = ce_diff_on_Eform(sl2, Subspace::full(3), wedge2(3, 1, 2));
  CHECK(d(0, 1, 2) == Scalar(0));
  CHECK_THROWS_AS(ce_diff_on_Eform(h3, span({{1, 0, 0}, {0, 1, 0}}), wedge2(2, 0, 1)), LieAlgebraError);
}

TEST_CASE("ce_diff_on_Eform on E = g matches the CE differential") {
  Random rng(2);
  for (const auto& name : LieAlgebra::builtin_names()) {
    const LieAlgebra g = LieAlgebra::builtin(name);
    for (int t = 0; t < 5; ++t) {
      const Matrix eps = rng.antisymmetric(g.dim());
      CHECK(ce_diff_on_Eform(g, Subspace::full(g.dim()), eps) == ce_differential(g, two_form(eps)));
    }
  }
  // d z* (x, y) = -z*([x, y]) on h3
  AlternatingForm zstar(3, 1);
  zstar.at({2}) = 1;
  CHECK(ce_differential(h3, zstar).at({0, 1}) == Scalar(-1));
  CHECK(ce_differential(h3, ce_differential(h3, zstar)).is_zero());
  CHECK(closed_forms(h3, 3).size() == 1);
  CHECK(closed_forms(LieAlgebra::builtin("abelian:4"), 3).size() == 4);
}

TEST_CASE("invariant Courant bracket") {
  const Vector x = unit(3, 0), y = unit(3, 1), z = unit(3, 2);
  const InvariantSection b = invariant_courant_bracket(h3, vector_part(x), vector_part(y));
  CHECK(b.x == z);
  CHECK(b.xi == Vector::Zero(3));
  // covector parts bracket to zero
  CHECK(invariant_courant_bracket(h3, covector_part(x), covector_part(z)) == covector_part(Vector::Zero(3)));
  // [y, z*] = (Z -> -z*([y, Z])) = x*
  CHECK(invariant_courant_bracket(h3, vector_part(y), covector_part(z)) == covector_part(x));
  // twist adds H(x_a, x_b, .)
  ThreeForm H(3, 3);
  H.set_component({0, 1, 2}, Scalar(5));
  const InvariantSection t = invariant_courant_bracket(h3, vector_part(x), vector_part(y), &H);
  CHECK(t.x == z);
  CHECK(t.xi == Vector(5 * z));
  const LieAlgebra ab = LieAlgebra::builtin("abelian:2");
  Random rng(3);
  for (int k = 0; k < 10; ++k) {
    const InvariantSection p{rng.matrix(2, 1).col(0), rng.matrix(2, 1).col(0)};
    const InvariantSection q{rng.matrix(2, 1).col(0), rng.matrix(2, 1).col(0)};
    CHECK(invariant_courant_bracket(ab, p, q) == covector_part(Vector::Zero(2)));
  }
}

TEST_CASE("invariant integrability examples") {
  for (const auto& name : LieAlgebra::builtin_names()) {
    const LieAlgebra g = LieAlgebra::builtin(name);
    CHECK(invariant_integrable(g, LinearDirac::tangent(g.dim())));
    CHECK(invariant_integrable(g, LinearDirac::cotangent(g.dim())));
  }
  // span{x, y} is not a subalgebra of h3
  const LinearDirac bad = from_E_eps(EEpsForm(span({{1, 0, 0}, {0, 1, 0}}), Matrix::Zero(2, 2)));
  CHECK_FALSE(invariant_integrable(h3, bad));
  // the center is
  CHECK(invariant_integrable(h3, from_E_eps(EEpsForm(span({{0, 0, 1}}), Matrix::Zero(1, 1)))));
  // any eps on h3 is closed
  CHECK(invariant_integrable(h3, from_presymplectic(wedge2(3, 0, 2))));
  // on sl2 x sl2 the twist -d eps makes L(g, eps) integrable
  const LieAlgebra s2 = LieAlgebra::builtin("sl2xsl2");
  const Matrix eps = wedge2(6, 0, 3);
  const AlternatingForm d = ce_diff_on_Eform(s2, Subspace::full(6), eps);
  // d eps(e1, f1, h2) = eps(h2, [e1, f1]) = eps(h2, h1) = -1
  CHECK(d(1, 2, 3) == Scalar(-1));
  CHECK_FALSE(invariant_integrable(s2, from_presymplectic(eps)));
  const ThreeForm H = Scalar(-1) * d;
  CHECK(invariant_integrable(s2, from_presymplectic(eps), &H));
  CHECK_FALSE(invariant_integrable(s2, LinearDirac::tangent(6), &H));
}

TEST_CASE("Nijenhuis tensor") {
  for (const auto& name : LieAlgebra::builtin_names()) {
    const LieAlgebra g = LieAlgebra::builtin(name);
    const auto s = sections(LinearDirac::tangent(g.dim()));
    for (const auto& a : s)
      for (const auto& b : s)
        for (const auto& c : s) CHECK(nijenhuis_invariant(g, a, b, c) == Scalar(0));
  }
  const auto s = sections(from_presymplectic(wedge2(3, 0, 1)));
  for (const auto& a : s)
    for (const auto& b : s)
      for (const auto& c : s) CHECK(nijenhuis_invariant(h3, a, b, c) == Scalar(0));

  const auto t = sections(from_E_eps(EEpsForm(span({{1, 0, 0}, {0, 1, 0}}), Matrix::Zero(2, 2))));
  bool found = false;
  for (const auto& a : t)
    for (const auto& b : t)
      for (const auto& c : t) found = found || !nijenhuis_invariant(h3, a, b, c).is_zero();
  CHECK(found);
  // by hand: Nij(x, y, z*) = (1 + 1 + 1) / 3
  const InvariantSection x = vector_part(unit(3, 0)), y = vector_part(unit(3, 1)), zs = covector_part(unit(3, 2));
  CHECK(nijenhuis_invariant(h3, x, y, zs) == Scalar(1));
}

TEST_CASE("Schouten bracket of constant bivectors") {
  Random rng(4);
  const LieAlgebra ab = LieAlgebra::builtin("abelian:3");
  for (int t = 0; t < 10; ++t) {
    const Matrix P = rng.antisymmetric(3), Q = rng.antisymmetric(3);
    CHECK(schouten_constant(ab, P, Q).is_zero());
    CHECK(schouten_constant(sl2, P, Matrix::Zero(3, 3)).is_zero());
    CHECK(schouten_constant(sl2, P, Q) == schouten_constant(sl2, Q, P));
    CHECK(schouten_constant(h3, P, Q).is_alternating());
  }
  // P = x^y on h3: [P, P] against the Jacobiator of the bracket {a, b} = P(a, b)
  const Matrix P = wedge2(3, 0, 1);
  const AlternatingForm pp = schouten_constant(h3, P, P);
  CHECK(bivector_jacobiator(h3, P, 0, 1, 2) == Scalar(1));
  CHECK(pp(0, 1, 2) == Scalar(2));
  CHECK(pp(0, 1, 2) == 2 * bivector_jacobiator(h3, P, 0, 1, 2));
  // r = e^f on sl2
  const Matrix r = wedge2(3, 1, 2);
  CHECK(schouten_constant(sl2, r, r)(0, 1, 2) == 2 * bivector_jacobiator(sl2, r, 0, 1, 2));
  CHECK_THROWS_AS(schouten_constant(h3, wedge2(2, 0, 1), P), DimensionError);
}

TEST_CASE("quotients and Schouten on g/k") {
  const Subspace center = span({{0, 0, 1}});
  const QuotientCoordinates qc = quotient_coordinates(center);
  CHECK(Matrix(qc.projection * qc.splitting) == Matrix(identity<Scalar>(2)));
  CHECK(is_zero_matrix(Matrix(qc.projection * center.basis().transpose())));
  CHECK(quotient_algebra(h3, center) == LieAlgebra::builtin("abelian:2"));
  CHECK(quotient_algebra(h3, Subspace::zero(3)) == h3);

  Random rng(5);
  const Matrix P = rng.antisymmetric(3), Q = rng.antisymmetric(3);
  CHECK(schouten_quotient(sl2, Subspace::zero(3), P, Q) == schouten_constant(sl2, P, Q));

  const Matrix p2 = mat({{0, 1}, {-1, 0}});
  const Matrix other = mat({{1, 0}, {0, 1}, {0, 1}});  // complement span{x, y + z}
  CHECK(schouten_quotient(h3, center, p2, p2) == schouten_quotient(h3, center, p2, p2, other));
  CHECK(schouten_quotient(h3, center, p2, p2).is_zero());
  CHECK_THROWS_AS(schouten_quotient(sl2, span({{0, 1, 0}}), Matrix::Zero(2, 2), Matrix::Zero(2, 2)), LieAlgebraError);
  CHECK_THROWS_AS(schouten_quotient(h3, center, p2, p2, Matrix(mat({{1, 0}, {1, 0}, {0, 1}}))), std::invalid_argument);
}

TEST_CASE("subalgebras, ideals and the Killing form") {
  CHECK(is_ideal(h3, span({{0, 0, 1}})));
  CHECK(is_ideal(h3, Subspace::zero(3)));
  CHECK(is_ideal(h3, Subspace::full(3)));
  CHECK_FALSE(is_ideal(sl2, span({{0, 1, 0}})));
  CHECK(is_subalgebra(sl2, span({{1, 0, 0}, {0, 1, 0}})));
  CHECK_FALSE(is_subalgebra(sl2, span({{0, 1, 0}, {0, 0, 1}})));
  CHECK(ideal_generated_by(sl2, span({{0, 1, 0}})) == Subspace::full(3));
  CHECK(ideal_generated_by(h3, span({{1, 0, 0}})) == span({{1, 0, 0}, {0, 0, 1}}));

  // sl2 Killing form in (h, e, f): B(h,h) = 8, B(e,f) = 4
  CHECK(killing_form(sl2) == mat({{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}));
  CHECK(is_semisimple(sl2));
  CHECK(is_semisimple(LieAlgebra::builtin("sl2xsl2")));
  CHECK_FALSE(is_semisimple(h3));
  CHECK(is_zero_matrix(killing_form(h3)));
  CHECK_FALSE(is_semisimple(LieAlgebra::builtin("axb")));

  const LieAlgebra s2 = LieAlgebra::builtin("sl2xsl2");
  const Subspace first = span({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}});
  const Subspace second = span({{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
  CHECK(complementary_ideal(s2, first) == second);
  CHECK(complementary_ideal(s2, second) == first);
  CHECK(complementary_ideal(sl2, Subspace::zero(3)) == Subspace::full(3));
  CHECK_THROWS_AS(complementary_ideal(h3, span({{0, 0, 1}})), LieAlgebraError);
  CHECK_THROWS_AS(complementary_ideal(s2, span({{1, 0, 0, 0, 0, 0}})), LieAlgebraError);
}

TEST_CASE("alternating forms") {
  ThreeForm H(3, 3);
  H.set_component({0, 1, 2}, Scalar(2));
  CHECK(H(1, 0, 2) == Scalar(-2));
  CHECK(H(2, 0, 1) == Scalar(2));
  CHECK(H(0, 0, 2) == Scalar(0));
  CHECK(H.is_alternating());
  CHECK(H.evaluate({unit(3, 0), unit(3, 1), unit(3, 2)}) == Scalar(2));
  CHECK(H.restrict_to(mat({{1, 0, 0}, {0, 1, 1}})).is_zero());
  const AlternatingForm w = two_form(mat({{0, 3}, {-3, 0}}));
  CHECK(w.at({0, 1}) == Scalar(3));
  CHECK(w.first_nonzero() == std::vector<int>{0, 1});
  CHECK_FALSE(AlternatingForm(3, 2).first_nonzero());
}
