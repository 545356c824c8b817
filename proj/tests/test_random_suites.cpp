#include "test_util.hpp"

#include <set>

using namespace dirac;
using namespace dirac::test;

namespace {

const CheckTally* find_check(const SuiteReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("random Lagrangians") {
  Random rng(2025);
  std::set<Eigen::Index> E_dims;
  for (int t = 0; t < 1000; ++t) {
    const LinearDirac d = rng.lagrangian(3);
    CHECK(is_lagrangian(d.sub(), SplitSpace{3}));
    E_dims.insert(decompose_E_eps(d).E.dim());
  }
  CHECK(E_dims == std::set<Eigen::Index>{0, 1, 2, 3});
  const LinearDirac empty = rng.lagrangian(0);
  CHECK(empty.n() == 0);
  CHECK(empty.sub().dim() == 0);
  CHECK(empty == LinearDirac::tangent(0));
}

TEST_CASE("random map generators") {
  Random rng(99);
  for (int t = 0; t < 1000; ++t) {
    const Eigen::Index n1 = rng.uniform(0, 3), n2 = rng.uniform(0, 3);
    const DiracMapProblem p = rng.dirac_map(n1, n2);
    CHECK(p.f.rows() == n2);
    CHECK(p.f.cols() == n1);
    CHECK(is_dirac_M(p));
  }
  for (int t = 0; t < 300; ++t) CHECK(is_dual_dirac(rng.dual_dirac_map(rng.uniform(0, 3), rng.uniform(0, 3))));
  for (int t = 0; t < 60; ++t) {
    const LinearDirac d = rng.gc_structure(2 * rng.uniform(0, 2));
    CHECK(is_generalized_complex(d));
  }
}

TEST_CASE("random subspaces and scalars") {
  Random rng(5);
  const ScalarOptions o{3, 0.0, false};
  for (int t = 0; t < 200; ++t) {
    const Scalar x = rng.scalar(o);
    CHECK(x.is_real());
    CHECK(abs(x.re().get_num()) <= 3);
    CHECK(x.re().get_den() <= 3);
    const Subspace s = rng.subspace(4);
    CHECK(s.contains(rng.subspace_of(s)));
    CHECK(rng.superspace_of(s).contains(s));
    CHECK(is_antisymmetric(rng.antisymmetric(3)));
  }
  CHECK(coordinate_subspace(3, 0b101) == span({{1, 0, 0}, {0, 0, 1}}));
  CHECK(coordinate_subspace(3, 0) == Subspace::zero(3));
}

TEST_CASE("check streams are deterministic and independent") {
  Random a = check_stream(7, "x"), b = check_stream(7, "x"), c = check_stream(7, "y"), d = check_stream(8, "x");
  const auto ra = a.engine()(), rb = b.engine()(), rc = c.engine()(), rd = d.engine()();
  CHECK(ra == rb);
  CHECK(ra != rc);
  CHECK(ra != rd);
}

TEST_CASE("check recorder") {
  SuiteReport r{"demo", {}, {}, {}, 0};
  CheckRecorder rec(r, "demo/check");
  for (int t = 0; t < 30; ++t)
    rec.run([&] { return json(t); }, [&]() -> Outcome {
      if (t == 3) throw std::runtime_error("boom");
      return {t % 2 == 0, json(true), json(t % 2 == 0), t % 2 == 0};
    });
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].trials == 30);
  CHECK(r.checks[0].failures == 15);
  CHECK(r.failure_count() == 15);
  CHECK(r.failures.front().trial == 1);
  CHECK(r.failures[1].trial == 3);
  CHECK(r.failures[1].got.contains("exception"));
  CHECK_FALSE(r.passed());
}

TEST_CASE("identical configs give bit-identical reports") {
  const SuiteConfig c{7, 15, 2};
  for (const auto& name : {"stability", "functoriality", "groups"}) {
    const std::string a = to_json(run_suite(name, c)).dump();
    const std::string b = to_json(run_suite(name, c)).dump();
    CHECK(a == b);
    CHECK(a.find("elapsed_ms") == std::string::npos);
  }
  const SuiteReport r = run_suite("stability", c);
  CHECK(to_json(r, true).contains("elapsed_ms"));
  CHECK(to_text(r).find("stability") != std::string::npos);
  CHECK_THROWS_AS(run_suite("nothing", c), std::invalid_argument);
}

TEST_CASE("bundled suites pass at small trial counts") {
  const SuiteConfig c{11, 25, 3};
  for (const auto& name : {"stability", "functoriality", "groups"}) {
    const SuiteReport r = run_suite(name, c);
    CAPTURE(name);
    CHECK(r.passed());
    CHECK(r.trials() > 0);
  }
}

TEST_CASE("equivalence suite: consistent groups agree, the printed five-way claim is tracked") {
  const SuiteReport r = run_suite("equivalences", SuiteConfig{3, 60, 2});
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.trials > 0);
    const bool within_group = c.name.find("/M_vs_M2pp") != std::string::npos ||
                              c.name.find("/M2p_vs_piU_vs_Eeps") != std::string::npos;
    if (within_group) CHECK(c.failures == 0);
  }
  REQUIRE(find_check(r, "duality/dual_vs_swapped_M"));
  CHECK(find_check(r, "duality/dual_vs_swapped_M")->failures == 0);
  CHECK(find_check(r, "duality/swapped_M2p_vs_dual_Eeps")->failures == 0);
  CHECK(find_check(r, "equivalence/random_triples"));
}

TEST_CASE("b_transform counterexample in larger dimensions") {
  for (Eigen::Index n1 = 1; n1 <= 2; ++n1)
    for (Eigen::Index n2 = 1; n2 <= 2; ++n2) {
      const BTransformCounterexample c = b_transform_counterexample(n1, n2);
      CHECK(is_zero_matrix(pullback_form(c.inclusion, c.B)));
      CHECK(is_dirac_M({c.inclusion, c.d1, c.d2}));
      CHECK_FALSE(is_dirac_M({c.inclusion, c.d1, b_transform(c.d2, c.B)}));
    }
}

TEST_CASE("printed block forms") {
  const Matrix w = mat({{0, 2}, {-2, 0}});
  CHECK(symplectic_block(w) == gc_endomorphism(from_symplectic_gc(w)));
  const Matrix J = mat({{1, -2}, {1, -1}});
  REQUIRE(Matrix(J * J) == Matrix(-identity<Scalar>(2)));
  CHECK(complex_block(J) == gc_endomorphism(from_complex(J)));
  CHECK_THROWS_AS(symplectic_block(Matrix::Zero(2, 2)), std::invalid_argument);
}
