#include "test_util.hpp"

using namespace dirac;
using namespace dirac::test;

namespace {

const Scalar I = Scalar::i();

Matrix omega2() { return mat({{0, 1}, {-1, 0}}); }

// Membership-based oracle: every generator lies in d.
bool contains_all(const LinearDirac& d, const Matrix& rows) {
  for (Eigen::Index r = 0; r < rows.rows(); ++r)
    if (!d.sub().contains(Vector(rows.row(r).transpose()))) return false;
  return true;
}

}  // namespace

TEST_CASE("pairing") {
  CHECK(pairing(vec({1, 0}), vec({0, 1})) == Scalar(1));
  CHECK(pairing(vec({1, 0, 0, 0}), vec({0, 1, 0, 0})) == Scalar(0));
  CHECK(pairing(vec({1, 1}), vec({1, 1})) == Scalar(2));
  CHECK(SplitSpace{2}.pairing_matrix() == mat({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK_THROWS_AS(pairing(vec({1, 0}), vec({1, 0, 0, 0})), DimensionError);
}

TEST_CASE("is_lagrangian") {
  CHECK(is_lagrangian(span({{1, 0, 0, 0}, {0, 1, 0, 0}}), SplitSpace{2}));
  CHECK_FALSE(is_lagrangian(Subspace::full(4), SplitSpace{2}));
  CHECK_FALSE(is_lagrangian(span({{1, 1}}), SplitSpace{1}));  // graph of a symmetric form
  CHECK(is_lagrangian(Subspace::zero(0), SplitSpace{0}));
  CHECK_THROWS_AS(LinearDirac::from_rows(mat({{1, 1}})), NotLagrangianError);
}

TEST_CASE("from_E_eps examples") {
  CHECK(from_E_eps(EEpsForm(Subspace::full(2), Matrix::Zero(2, 2))) == LinearDirac::tangent(2));
  const LinearDirac d = from_E_eps(EEpsForm(Subspace::full(2), omega2()));
  CHECK(d == LinearDirac::from_rows(mat({{1, 0, 0, 1}, {0, 1, -1, 0}})));
  CHECK(contains_all(d, mat({{1, 0, 0, 1}, {0, 1, -1, 0}})));
  CHECK(from_E_eps(EEpsForm(span({{1, 0}}), Matrix::Zero(1, 1))) ==
        LinearDirac::from_rows(mat({{1, 0, 0, 0}, {0, 0, 0, 1}})));
  CHECK_THROWS_AS(EEpsForm(Subspace::full(2), mat({{0, 1}, {1, 0}})), std::invalid_argument);
}

TEST_CASE("from_pi_U examples") {
  CHECK(from_pi_U(PiUForm(Subspace::full(2), Matrix::Zero(2, 2))) == LinearDirac::cotangent(2));
  CHECK(from_pi_U(PiUForm(Subspace::full(2), omega2())) == LinearDirac::from_rows(mat({{0, 1, 1, 0}, {-1, 0, 0, 1}})));
  CHECK(from_pi_U(PiUForm(Subspace::zero(2), Matrix::Zero(0, 0))) == LinearDirac::tangent(2));
}

TEST_CASE("decompositions") {
  const EEpsForm t = decompose_E_eps(LinearDirac::tangent(2));
  CHECK(t.E == Subspace::full(2));
  CHECK(is_zero_matrix(t.eps));
  const Matrix w = mat({{0, 3, -1}, {-3, 0, s("1/2")}, {1, s("-1/2"), 0}});
  const EEpsForm g = decompose_E_eps(from_presymplectic(w));
  CHECK(g.E == Subspace::full(3));
  CHECK(g.eps == w);
  const LinearDirac mixed = LinearDirac::from_rows(mat({{1, 0, 0, 0}, {0, 0, 0, 1}}));
  const EEpsForm m = decompose_E_eps(mixed);
  CHECK(m.E == span({{1, 0}}));
  CHECK(is_zero_matrix(m.eps));

  const PiUForm c = decompose_pi_U(LinearDirac::cotangent(2));
  CHECK(c.U == Subspace::full(2));
  CHECK(is_zero_matrix(c.pi));
  const PiUForm p = decompose_pi_U(from_poisson(w));
  CHECK(p.U == Subspace::full(3));
  CHECK(p.pi == w);
  const PiUForm q = decompose_pi_U(mixed);
  CHECK(q.U == span({{0, 1}}));
  CHECK(is_zero_matrix(q.pi));
}

TEST_CASE("from_complex") {
  const Matrix J = mat({{0, -1}, {1, 0}});
  const LinearDirac d = from_complex(J);
  const Subspace E = Subspace::span(mat({{1, -I}}));
  CHECK(J * E.vector(0) == I * E.vector(0));
  CHECK(d == from_E_eps(EEpsForm(E, Matrix::Zero(1, 1))));
  CHECK(contains_all(d, mat({{1, -I, 0, 0}, {0, 0, 1, -I}})));
  CHECK(intersect(d.sub(), conj(d.sub())).is_zero());
  CHECK(is_generalized_complex(d));
  CHECK_THROWS_AS(from_complex(mat({{1, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("presymplectic, symplectic and Poisson constructors") {
  CHECK(from_presymplectic(Matrix::Zero(3, 3)) == LinearDirac::tangent(3));
  CHECK(from_poisson(omega2()) == LinearDirac::from_rows(mat({{0, 1, 1, 0}, {-1, 0, 0, 1}})));
  const LinearDirac gc = from_symplectic_gc(omega2());
  // graph of i*omega#: e1 -> i e2*, e2 -> -i e1*
  CHECK(gc == LinearDirac::from_rows(mat({{1, 0, 0, I}, {0, 1, -I, 0}})));
  CHECK(is_generalized_complex(gc));
  CHECK_FALSE(is_real(gc));
  CHECK_THROWS_AS(from_symplectic_gc(Matrix::Zero(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(from_poisson(mat({{1, 0}, {0, 0}})), std::invalid_argument);
}

TEST_CASE("b_transform examples") {
  Random rng(5);
  const LinearDirac d = rng.lagrangian(3);
  const Matrix B = rng.antisymmetric(3);
  CHECK(b_transform(d, Matrix::Zero(3, 3)) == d);
  CHECK(b_transform(LinearDirac::tangent(3), B) == from_presymplectic(B));
  CHECK(b_transform(b_transform(d, B), Matrix(-B)) == d);
  CHECK(b_transform_matrix(omega2()) == mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 1, 0}, {1, 0, 0, 1}}));
  CHECK_THROWS_AS(b_transform(d, mat({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})), std::invalid_argument);
}

TEST_CASE("reality and generalized complex predicates") {
  CHECK(is_real(LinearDirac::tangent(2)));
  CHECK_FALSE(is_generalized_complex(LinearDirac::tangent(2)));
  CHECK(is_generalized_complex(from_symplectic_gc(omega2())));
  CHECK(is_generalized_complex(from_complex(mat({{0, -1}, {1, 0}}))));
  // n = 0: the empty Lagrangian is both
  CHECK(is_generalized_complex(LinearDirac::tangent(0)));
  CHECK(is_real(LinearDirac::tangent(0)));
}

TEST_CASE("gc_endomorphism block forms") {
  const Matrix Jsym = gc_endomorphism(from_symplectic_gc(omega2()));
  CHECK(Jsym == mat({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}));
  const Matrix Jc = mat({{0, -1}, {1, 0}});
  CHECK(gc_endomorphism(from_complex(Jc)) == mat({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}));
  CHECK_THROWS_AS(gc_endomorphism(LinearDirac::tangent(2)), std::invalid_argument);
}

TEST_CASE("dirac_core properties on random Lagrangians") {
  Random rng(77);
  for (int t = 0; t < 1000; ++t) {
    const Eigen::Index n = rng.uniform(0, 4);
    const ScalarOptions o{5, 0.3, t % 4 == 0};
    const LinearDirac d = rng.lagrangian(n, o);
    CAPTURE(t);
    REQUIRE(is_lagrangian(d.sub(), d.space()));
    const EEpsForm e = decompose_E_eps(d);
    const PiUForm u = decompose_pi_U(d);
    CHECK(from_E_eps(e) == d);
    CHECK(from_pi_U(u) == d);
    CHECK(annihilator(u.U) == d.tangent_part());
    CHECK(e.kernel_of_sharp() == d.tangent_part());
    CHECK(annihilator(e.E) == d.cotangent_part());
    const Matrix B = rng.antisymmetric(n, o);
    CHECK(b_transform(from_E_eps(e), B) == from_E_eps(EEpsForm(e.E, Matrix(e.eps + e.E.basis() * B * e.E.basis().transpose()))));
    CHECK(is_lagrangian(b_transform(d, B).sub(), d.space()));
    if (n >= 1) CHECK_FALSE((is_real(d) && is_generalized_complex(d)));
  }
}

TEST_CASE("gc_endomorphism properties on random GC structures") {
  Random rng(91);
  for (int t = 0; t < 60; ++t) {
    const Eigen::Index n = 2 * rng.uniform(1, 2);
    const LinearDirac d = rng.gc_structure(n);
    const Matrix J = gc_endomorphism(d);
    const Matrix G = d.space().pairing_matrix();
    CHECK(is_real_matrix(J));
    CHECK(Matrix(J * J) == Matrix(-identity<Scalar>(2 * n)));
    CHECK(Matrix(J.transpose() * G * J) == G);
    CHECK(kernel(Matrix(J - I * identity<Scalar>(2 * n))) == d.sub());
    CHECK(kernel(Matrix(J + I * identity<Scalar>(2 * n))) == conj(d.sub()));
  }
}

TEST_CASE("constructors always produce Lagrangians") {
  Random rng(3);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index n = rng.uniform(0, 4);
    const Matrix w = rng.antisymmetric(n);
    CHECK(is_lagrangian(from_presymplectic(w).sub(), SplitSpace{n}));
    CHECK(is_lagrangian(from_poisson(w).sub(), SplitSpace{n}));
    const Subspace E = rng.subspace(n);
    CHECK(is_lagrangian(from_E_eps(EEpsForm(E, rng.antisymmetric(E.dim()))).sub(), SplitSpace{n}));
    CHECK(is_lagrangian(from_pi_U(PiUForm(E, rng.antisymmetric(E.dim()))).sub(), SplitSpace{n}));
  }
}
