#include "dirac/suites.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

namespace dirac {

namespace {

constexpr std::size_t kKeptFailures = 20;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

json problem_json(const DiracMapProblem& p) {
  return json{{"f", to_json(p.f)}, {"d1", structure_to_json(p.d1)}, {"d2", structure_to_json(p.d2)}};
}

json bools(std::initializer_list<bool> v) { return json(std::vector<bool>(v)); }

Matrix invertible(Random& rng, Eigen::Index n, const ScalarOptions& o = {}) {
  while (true) {
    Matrix m = rng.matrix(n, n, o);
    if (rank(m) == n) return m;
  }
}

Matrix standard_complex(Eigen::Index n) {
  Matrix J = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    J(k + 1, k) = 1;
    J(k, k + 1) = -1;
  }
  return J;
}

// B restricted to E, in E's canonical basis.
Matrix restrict_form(const Matrix& B, const Subspace& E) { return E.basis() * B * E.basis().transpose(); }

// A 2-form on g whose restriction to E is eps (E-canonical coordinates).
Matrix extend_form(const Matrix& eps, const Subspace& E) {
  Matrix P = Matrix::Zero(E.dim(), E.ambient_dim());
  for (Eigen::Index a = 0; a < E.dim(); ++a) P(a, E.pivots()[static_cast<std::size_t>(a)]) = 1;
  return P.transpose() * eps * P;
}

std::array<bool, 5> five_predicates(const DiracMapProblem& p) {
  return {is_dirac_M(p), is_dirac_M2prime(p), is_dirac_M2doubleprime(p), is_dirac_piU(p), is_dirac_Eeps(p)};
}

Outcome agreement(const std::array<bool, 5>& v) {
  const bool ok = std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; });
  return {ok, json(v[0]), json(std::vector<bool>(v.begin(), v.end())), v[0]};
}

// Five-way agreement plus the two internally consistent groups:
// {M, M2''} compare set inclusions, {M2', piU, Eeps} compare elements.
class EquivalenceChecks {
public:
  EquivalenceChecks(SuiteReport& r, const std::string& family)
      : all_(r, "equivalence/" + family),
        inclusions_(r, "equivalence/" + family + "/M_vs_M2pp"),
        elements_(r, "equivalence/" + family + "/M2p_vs_piU_vs_Eeps") {}

  // `expected` is the known answer for the family, if any.
  void run(const DiracMapProblem& p, std::optional<bool> expected = std::nullopt) {
    std::array<bool, 5> v{};
    auto input = [&] { return problem_json(p); };
    auto values = [&] { return json(std::vector<bool>(v.begin(), v.end())); };
    all_.run(input, [&] {
      v = five_predicates(p);
      return agreement(v);
    });
    inclusions_.run(input, [&] {
      return Outcome{v[0] == v[2], json(v[0]), values(), v[0]};
    });
    elements_.run(input, [&] {
      bool ok = v[1] == v[3] && v[3] == v[4];
      if (expected) ok = ok && v[1] == *expected;
      return Outcome{ok, expected ? json(*expected) : json(v[1]), values(), v[1]};
    });
  }

private:
  CheckRecorder all_, inclusions_, elements_;
};

}  // namespace

// ------------------------------------------------------------------ report

long SuiteReport::trials() const {
  long t = 0;
  for (const auto& c : checks) t += c.trials;
  return t;
}

long SuiteReport::failure_count() const {
  long f = 0;
  for (const auto& c : checks) f += c.failures;
  return f;
}

void SuiteReport::merge(const SuiteReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  for (const auto& f : other.failures)
    if (failures.size() < kKeptFailures) failures.push_back(f);
  elapsed_ms += other.elapsed_ms;
}

json to_json(const SuiteReport& r, bool include_timing) {
  json out;
  out["suite"] = r.suite;
  out["config"] = json{{"seed", r.config.seed}, {"trials", r.config.trials}, {"max_dim", r.config.max_dim}};
  out["passed"] = r.passed();
  out["trials"] = r.trials();
  out["failure_count"] = r.failure_count();
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"trials", c.trials}, {"positives", c.positives}, {"failures", c.failures}});
  out["checks"] = std::move(checks);
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back(
        json{{"check", f.check}, {"trial", f.trial}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  out["failures"] = std::move(failures);
  if (include_timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

std::string to_text(const SuiteReport& r, bool include_timing) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.trials() << " trials, "
     << r.failure_count() << " failures";
  if (include_timing) os << ", " << static_cast<long>(r.elapsed_ms) << " ms";
  os << ")\n";
  for (const auto& c : r.checks)
    os << "  " << c.name << ": " << c.trials << " trials, " << c.positives << " positive, " << c.failures
       << " failures\n";
  for (const auto& f : r.failures)
    os << "  failure in " << f.check << " trial " << f.trial << ": expected " << f.expected.dump() << ", got "
       << f.got.dump() << "\n    input " << f.input.dump() << "\n";
  return os.str();
}

CheckRecorder::CheckRecorder(SuiteReport& report, std::string name) : report_(report), index_(report.checks.size()) {
  report_.checks.push_back({std::move(name), 0, 0, 0});
}

void CheckRecorder::run(const std::function<json()>& input, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, json("no exception"), json{{"exception", e.what()}}, false};
  }
  const long trial = tally().trials++;
  if (o.positive) ++tally().positives;
  if (o.ok) return;
  ++tally().failures;
  if (report_.failures.size() < kKeptFailures)
    report_.failures.push_back({tally().name, trial, input(), std::move(o.expected), std::move(o.got)});
}

Random check_stream(std::uint64_t seed, const std::string& check) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char ch : check) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return Random(splitmix64(seed ^ splitmix64(h)));
}

// ---------------------------------------------------------------- helpers

BTransformCounterexample b_transform_counterexample(Eigen::Index n1, Eigen::Index n2) {
  const Eigen::Index n = n1 + n2;
  Matrix inc = Matrix::Zero(n, n1);
  inc.topRows(n1) = identity<Scalar>(n1);
  // B pairs the first coordinate of V1 with the first coordinate of V2.
  Matrix B = Matrix::Zero(n, n);
  B(0, n1) = 1;
  B(n1, 0) = -1;
  return {inc, B, LinearDirac::tangent(n1), LinearDirac::tangent(n)};
}

Matrix symplectic_block(const Matrix& omega) {
  const Eigen::Index n = omega.rows();
  auto inv = inverse(omega);
  if (!inv) throw std::invalid_argument("omega is singular");
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  m.topRightCorner(n, n) = -*inv;
  m.bottomLeftCorner(n, n) = omega;
  return m;
}

Matrix complex_block(const Matrix& J) {
  const Eigen::Index n = J.rows();
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = J;
  m.bottomRightCorner(n, n) = -J.transpose();
  return m;
}

InvariantSection graph_section(const Matrix& P, int m) {
  InvariantSection s;
  s.x = P.row(m).transpose();
  s.xi = Vector::Zero(P.rows());
  s.xi(m) = 1;
  return s;
}

Scalar bivector_jacobiator(const LieAlgebra& g, const Matrix& P, int a, int b, int c) {
  const Vector xa = P.row(a).transpose();
  const Vector xb = P.row(b).transpose();
  const Vector xc = P.row(c).transpose();
  return g.bracket(xa, xb)(c) + g.bracket(xb, xc)(a) + g.bracket(xc, xa)(b);
}

LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& E) {
  const int k = static_cast<int>(E.dim());
  std::vector<Scalar> c(static_cast<std::size_t>(k) * k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      auto coords = E.coordinates(g.bracket(E.vector(a), E.vector(b)));
      if (!coords) throw LieAlgebraError("E is not a subalgebra");
      for (int m = 0; m < k; ++m) c[static_cast<std::size_t>((a * k + b) * k + m)] = (*coords)(m);
    }
  return {k, std::move(c)};
}

// ------------------------------------------------------ map predicate suites

SuiteReport predicate_equivalence_suite(const SuiteConfig& c) {
  const auto start = Clock::now();
  SuiteReport r{"predicate_equivalence", c, {}, {}, 0};
  {
    Random rng = check_stream(c.seed, "equivalence/random_triples");
    EquivalenceChecks checks(r, "random_triples");
    for (int n1 = 1; n1 <= c.max_dim; ++n1)
      for (int n2 = 1; n2 <= c.max_dim; ++n2)
        for (int t = 0; t < c.trials; ++t) {
          DiracMapProblem p = [&] {
            switch (t % 4) {
              case 0:
                return rng.map_triple(n1, n2);
              case 3: {
                DiracMapProblem q = rng.dirac_map(n1, n2);
                const int how = rng.uniform(0, 2);
                if (how == 0) return DiracMapProblem(q.f, q.d1, b_transform(q.d2, rng.antisymmetric(n2)));
                if (how == 1) return DiracMapProblem(Matrix(q.f + rng.matrix(n2, 1) * rng.matrix(1, n1)), q.d1, q.d2);
                return DiracMapProblem(q.f, rng.lagrangian(n1), q.d2);
              }
              default:
                return rng.dirac_map(n1, n2);
            }
          }();
          checks.run(p);
        }
  }
  const int family = std::max(50, c.trials / 10);
  {
    // A map of Poisson spaces is Dirac exactly when f pi1 f^T = pi2.
    Random rng = check_stream(c.seed, "equivalence/poisson");
    EquivalenceChecks checks(r, "poisson");
    for (int t = 0; t < family; ++t) {
      const int n1 = rng.uniform(1, c.max_dim);
      const int n2 = rng.uniform(1, c.max_dim);
      const Matrix f = rng.matrix(n2, n1);
      const Matrix pi1 = rng.antisymmetric(n1);
      const Matrix pi2 = rng.coin() ? Matrix(f * pi1 * f.transpose()) : rng.antisymmetric(n2);
      checks.run({f, from_poisson(pi1), from_poisson(pi2)}, Matrix(f * pi1 * f.transpose()) == pi2);
    }
  }
  if (c.max_dim >= 2) {
    // Between complex structures, Dirac means holomorphic: f J1 = J2 f.
    Random rng = check_stream(c.seed, "equivalence/complex");
    EquivalenceChecks checks(r, "complex");
    const Matrix J0 = standard_complex(2);
    for (int t = 0; t < family; ++t) {
      const Matrix P = invertible(rng, 2);
      const Matrix Q = invertible(rng, 2);
      const Matrix J1 = P * J0 * *inverse(P);
      const Matrix J2 = Q * J0 * *inverse(Q);
      const bool holo = rng.coin();
      const Matrix f =
          holo ? Matrix(Q * (rng.scalar() * identity<Scalar>(2) + rng.scalar() * J0) * *inverse(P)) : rng.matrix(2, 2);
      checks.run({f, from_complex(J1), from_complex(J2)}, Matrix(f * J1) == Matrix(J2 * f));
    }
  }
  {
    Random rng = check_stream(c.seed, "equivalence/presymplectic");
    EquivalenceChecks checks(r, "presymplectic");
    for (int t = 0; t < family; ++t) {
      const int n1 = rng.uniform(1, c.max_dim);
      const int n2 = rng.uniform(1, c.max_dim);
      const Matrix f = rng.matrix(n2, n1, ScalarOptions{5, 0.6, false});
      const Matrix w2 = rng.antisymmetric(n2);
      const Matrix w1 = rng.coin() ? Matrix(f.transpose() * w2 * f) : rng.antisymmetric(n1);
      checks.run({f, from_presymplectic(w1), from_presymplectic(w2)});
    }
  }
  {
    // Every map into a tangent structure is Dirac.
    Random rng = check_stream(c.seed, "equivalence/tangent_cotangent");
    EquivalenceChecks checks(r, "tangent_cotangent");
    for (int t = 0; t < family; ++t) {
      const int n1 = rng.uniform(1, c.max_dim);
      const int n2 = rng.uniform(1, c.max_dim);
      const Matrix f = rng.matrix(n2, n1, ScalarOptions{5, 0.5, false});
      const int kind = t % 4;
      const LinearDirac d1 = kind < 2 ? LinearDirac::tangent(n1) : LinearDirac::cotangent(n1);
      const LinearDirac d2 = kind % 2 == 0 ? LinearDirac::tangent(n2) : LinearDirac::cotangent(n2);
      checks.run({f, d1, d2}, kind % 2 == 0 ? std::optional<bool>(true) : std::nullopt);
    }
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

SuiteReport duality_suite(const SuiteConfig& c) {
  const auto start = Clock::now();
  SuiteReport r{"duality", c, {}, {}, 0};
  Random rng = check_stream(c.seed, "duality");
  CheckRecorder swapped(r, "duality/dual_vs_swapped_M");
  CheckRecorder eeps(r, "duality/dual_vs_dual_Eeps");
  CheckRecorder elements(r, "duality/swapped_M2p_vs_dual_Eeps");
  for (int t = 0; t < c.trials; ++t) {
    const int n1 = rng.uniform(1, c.max_dim);
    const int n2 = rng.uniform(1, c.max_dim);
    DiracMapProblem p = [&] {
      switch (t % 4) {
        case 0:
          return rng.map_triple(n1, n2);
        case 1:
          return rng.dirac_map(n1, n2);
        case 3: {
          DiracMapProblem q = rng.dual_dirac_map(n1, n2);
          return DiracMapProblem(q.f, b_transform(q.d1, rng.antisymmetric(n1)), q.d2);
        }
        default:
          return rng.dual_dirac_map(n1, n2);
      }
    }();
    const DiracMapProblem s(p.f.transpose(), dual_swap(p.d2), dual_swap(p.d1));
    auto input = [&] { return problem_json(p); };
    swapped.run(input, [&] {
      const bool dual = is_dual_dirac(p);
      const bool m = is_dirac_M(s);
      return Outcome{dual == m, json(m), json(dual), dual};
    });
    eeps.run(input, [&] {
      const bool a = is_dual_dirac(p);
      const bool b = is_dual_dirac_Eeps(p);
      return Outcome{a == b, json(a), json(b), a};
    });
    elements.run(input, [&] {
      const bool a = is_dirac_M2prime(s);
      const bool b = is_dual_dirac_Eeps(p);
      return Outcome{a == b, json(a), json(b), b};
    });
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

SuiteReport composition_suite(const SuiteConfig& c) {
  const auto start = Clock::now();
  SuiteReport r{"composition", c, {}, {}, 0};
  {
    Random rng = check_stream(c.seed, "composition/dirac");
    CheckRecorder rec(r, "composition/dirac");
    for (int t = 0; t < c.trials; ++t) {
      const int n1 = rng.uniform(1, c.max_dim);
      const int n2 = rng.uniform(1, c.max_dim);
      const int n3 = rng.uniform(1, c.max_dim);
      const Matrix f = rng.matrix(n2, n1);
      const Matrix g = rng.matrix(n3, n2);
      const Subspace U1 = rng.subspace(n1);
      const Matrix pi1 = rng.antisymmetric(U1.dim());
      auto push = [&](const Matrix& map, const Subspace& U, const Matrix& pi, Subspace& U_out, Matrix& pi_out) {
        const Matrix mt = map.transpose();
        U_out = rng.subspace_of(preimage(mt, U));
        Matrix phi(U_out.dim(), U.dim());
        for (Eigen::Index k = 0; k < U_out.dim(); ++k) phi.row(k) = U.coordinates(mt * U_out.vector(k))->transpose();
        pi_out = phi * pi * phi.transpose();
      };
      Subspace U2 = Subspace::zero(n2), U3 = Subspace::zero(n3);
      Matrix pi2, pi3;
      push(f, U1, pi1, U2, pi2);
      push(g, U2, pi2, U3, pi3);
      const LinearDirac d1 = from_pi_U(PiUForm(U1, pi1));
      const LinearDirac d2 = from_pi_U(PiUForm(U2, pi2));
      const LinearDirac d3 = from_pi_U(PiUForm(U3, pi3));
      rec.run(
          [&] {
            return json{{"f", to_json(f)}, {"g", to_json(g)}, {"d1", structure_to_json(d1)},
                        {"d2", structure_to_json(d2)}, {"d3", structure_to_json(d3)}};
          },
          [&] {
            const bool first = is_dirac_M({f, d1, d2});
            const bool second = is_dirac_M({g, d2, d3});
            const bool composite = is_dirac_M({Matrix(g * f), d1, d3});
            return Outcome{first && second && composite, bools({true, true, true}), bools({first, second, composite}),
                           composite};
          });
    }
  }
  {
    Random rng = check_stream(c.seed, "composition/dual_dirac");
    CheckRecorder rec(r, "composition/dual_dirac");
    for (int t = 0; t < c.trials; ++t) {
      const int n1 = rng.uniform(1, c.max_dim);
      const int n2 = rng.uniform(1, c.max_dim);
      const int n3 = rng.uniform(1, c.max_dim);
      const Matrix f = rng.matrix(n2, n1);
      const Matrix g = rng.matrix(n3, n2);
      const Subspace E3 = rng.subspace(n3);
      const Matrix eps3 = rng.antisymmetric(E3.dim());
      auto pull = [&](const Matrix& map, const Subspace& E, const Matrix& eps, Subspace& E_out, Matrix& eps_out) {
        E_out = rng.subspace_of(preimage(map, E));
        Matrix F(E_out.dim(), E.dim());
        for (Eigen::Index k = 0; k < E_out.dim(); ++k) F.row(k) = E.coordinates(map * E_out.vector(k))->transpose();
        eps_out = F * eps * F.transpose();
      };
      Subspace E2 = Subspace::zero(n2), E1 = Subspace::zero(n1);
      Matrix eps2, eps1;
      pull(g, E3, eps3, E2, eps2);
      pull(f, E2, eps2, E1, eps1);
      const LinearDirac d1 = from_E_eps(EEpsForm(E1, eps1));
      const LinearDirac d2 = from_E_eps(EEpsForm(E2, eps2));
      const LinearDirac d3 = from_E_eps(EEpsForm(E3, eps3));
      rec.run(
          [&] {
            return json{{"f", to_json(f)}, {"g", to_json(g)}, {"d1", structure_to_json(d1)},
                        {"d2", structure_to_json(d2)}, {"d3", structure_to_json(d3)}};
          },
          [&] {
            const bool first = is_dual_dirac({f, d1, d2});
            const bool second = is_dual_dirac({g, d2, d3});
            const bool composite = is_dual_dirac({Matrix(g * f), d1, d3});
            return Outcome{first && second && composite, bools({true, true, true}), bools({first, second, composite}),
                           composite};
          });
    }
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

SuiteReport b_transform_suite(const SuiteConfig& c) {
  const auto start = Clock::now();
  SuiteReport r{"b_transform", c, {}, {}, 0};
  {
    Random rng = check_stream(c.seed, "b_transform/dual_dirac_stability");
    CheckRecorder rec(r, "b_transform/dual_dirac_stability");
    for (int t = 0; t < c.trials; ++t) {
      const int n1 = rng.uniform(1, c.max_dim);
      const int n2 = rng.uniform(1, c.max_dim);
      const DiracMapProblem p = rng.dual_dirac_map(n1, n2);
      const Matrix B = rng.antisymmetric(n2);
      rec.run([&] { return json{{"problem", problem_json(p)}, {"B", to_json(B)}}; },
              [&] {
                const bool before = is_dual_dirac(p);
                const bool after = is_dual_dirac({p.f, b_transform(p.d1, pullback_form(p.f, B)), b_transform(p.d2, B)});
                return Outcome{before && after, bools({true, true}), bools({before, after}), after};
              });
    }
  }
  {
    CheckRecorder rec(r, "b_transform/dirac_instability");
    for (int n1 = 1; n1 <= c.max_dim; ++n1)
      for (int n2 = 1; n2 <= c.max_dim; ++n2) {
        const auto ex = b_transform_counterexample(n1, n2);
        rec.run(
            [&] {
              return json{{"f", to_json(ex.inclusion)}, {"B", to_json(ex.B)}, {"d1", structure_to_json(ex.d1)},
                          {"d2", structure_to_json(ex.d2)}};
            },
            [&] {
              const bool pulled_zero = is_zero_matrix(pullback_form(ex.inclusion, ex.B));
              const bool before = is_dirac_M({ex.inclusion, ex.d1, ex.d2});
              const bool after = is_dirac_M(
                  {ex.inclusion, b_transform(ex.d1, pullback_form(ex.inclusion, ex.B)), b_transform(ex.d2, ex.B)});
              return Outcome{pulled_zero && before && !after, bools({true, true, false}),
                             bools({pulled_zero, before, after}), before};
            });
      }
  }
  {
    Random rng = check_stream(c.seed, "b_transform/normal_form");
    CheckRecorder rec(r, "b_transform/normal_form");
    for (int t = 0; t < c.trials; ++t) {
      const int n = rng.uniform(1, c.max_dim);
      const ScalarOptions o{5, 0.3, t % 3 == 0};
      const Subspace E = rng.subspace(n, o);
      const Matrix eps = rng.antisymmetric(E.dim(), o);
      const Matrix B = rng.antisymmetric(n, o);
      rec.run(
          [&] {
            return json{{"E", to_json(E.basis())}, {"eps", to_json(eps)}, {"B", to_json(B)}, {"n", n}};
          },
          [&] {
            const LinearDirac lhs = b_transform(from_E_eps(EEpsForm(E, eps)), B);
            const LinearDirac rhs = from_E_eps(EEpsForm(E, Matrix(eps + restrict_form(B, E))));
            return Outcome{lhs == rhs, structure_to_json(rhs), structure_to_json(lhs), true};
          });
    }
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

SuiteReport pushforward_suite(const SuiteConfig& c) {
  const auto start = Clock::now();
  SuiteReport r{"pushforward_pullback", c, {}, {}, 0};
  {
    Random rng = check_stream(c.seed, "pushforward/lagrangian");
    CheckRecorder rec(r, "pushforward/lagrangian_outputs");
    for (int t = 0; t < c.trials; ++t) {
      const DiracMapProblem p = rng.map_triple(rng.uniform(1, c.max_dim), rng.uniform(1, c.max_dim));
      rec.run([&] { return problem_json(p); },
              [&] {
                const bool push = is_lagrangian(pushforward(p.f, p.d1).sub(), SplitSpace{p.d2.n()});
                const bool pull = is_lagrangian(pullback(p.f, p.d2).sub(), SplitSpace{p.d1.n()});
                return Outcome{push && pull, bools({true, true}), bools({push, pull}), true};
              });
    }
  }
  const int pairs = std::max(1, c.trials * 3 / 10);
  {
    Random rng = check_stream(c.seed, "pushforward/functorial");
    CheckRecorder push_rec(r, "pushforward/composition");
    CheckRecorder pull_rec(r, "pullback/composition");
    for (int t = 0; t < pairs; ++t) {
      const int n1 = rng.uniform(1, c.max_dim);
      const int n2 = rng.uniform(1, c.max_dim);
      const int n3 = rng.uniform(1, c.max_dim);
      const Matrix f = rng.matrix(n2, n1);
      const Matrix g = rng.matrix(n3, n2);
      const LinearDirac d1 = rng.lagrangian(n1);
      const LinearDirac d3 = rng.lagrangian(n3);
      auto input = [&] {
        return json{{"f", to_json(f)}, {"g", to_json(g)}, {"d1", structure_to_json(d1)}, {"d3", structure_to_json(d3)}};
      };
      push_rec.run(input, [&] {
        const LinearDirac lhs = pushforward(Matrix(g * f), d1);
        const LinearDirac rhs = pushforward(g, pushforward(f, d1));
        return Outcome{lhs == rhs, structure_to_json(rhs), structure_to_json(lhs), true};
      });
      pull_rec.run(input, [&] {
        const LinearDirac lhs = pullback(Matrix(g * f), d3);
        const LinearDirac rhs = pullback(f, pullback(g, d3));
        return Outcome{lhs == rhs, structure_to_json(rhs), structure_to_json(lhs), true};
      });
    }
  }
  {
    Random rng = check_stream(c.seed, "pushforward/kernel_quotient");
    CheckRecorder rec(r, "pushforward/kernel_quotient");
    for (int t = 0; t < pairs; ++t) {
      const int n = rng.uniform(1, c.max_dim);
      LinearDirac d = rng.lagrangian(n);
      if (t % 2 == 0) {
        const Subspace E = rng.subspace(n);
        d = from_E_eps(EEpsForm(E, Matrix::Zero(E.dim(), E.dim())));
      }
      const Subspace K = rng.subspace_of(d.tangent_part());
      const Matrix ann = annihilator(K).basis();
      const Matrix q = invertible(rng, ann.rows()) * ann;
      rec.run([&] { return json{{"q", to_json(q)}, {"d", structure_to_json(d)}}; },
              [&] {
                const LinearDirac back = pullback(q, pushforward(q, d));
                return Outcome{back == d, structure_to_json(d), structure_to_json(back), !K.is_zero()};
              });
    }
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

SuiteReport gc_suite(const SuiteConfig& c) {
  const auto start = Clock::now();
  SuiteReport r{"generalized_complex", c, {}, {}, 0};
  std::vector<int> even;
  for (int n = 2; n <= std::max(2, c.max_dim); n += 2) even.push_back(n);
  {
    Random rng = check_stream(c.seed, "gc/endomorphism");
    CheckRecorder rec(r, "gc/endomorphism_properties");
    for (int t = 0; t < c.trials; ++t) {
      const int n = even[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(even.size()) - 1))];
      const LinearDirac d = rng.gc_structure(n);
      rec.run([&] { return structure_to_json(d); },
              [&] {
                const Matrix J = gc_endomorphism(d);
                const Matrix G = SplitSpace{n}.pairing_matrix();
                const bool real = is_real_matrix(J);
                const bool orthogonal = Matrix(J.transpose() * G * J) == G;
                const bool square = Matrix(J * J) == Matrix(-identity<Scalar>(2 * n));
                const bool eigen = kernel(Matrix(J - Scalar::i() * identity<Scalar>(2 * n))) == d.sub();
                return Outcome{real && orthogonal && square && eigen, bools({true, true, true, true}),
                               bools({real, orthogonal, square, eigen}), true};
              });
    }
  }
  const int blocks = std::max(20, c.trials / 5);
  {
    Random rng = check_stream(c.seed, "gc/symplectic_block");
    CheckRecorder rec(r, "gc/symplectic_block");
    for (int t = 0; t < blocks; ++t) {
      const int n = even[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(even.size()) - 1))];
      Matrix omega = rng.antisymmetric(n);
      while (rank(omega) != n) omega = rng.antisymmetric(n);
      rec.run([&] { return json{{"symplectic_gc", to_json(omega)}}; },
              [&] {
                const Matrix J = gc_endomorphism(from_symplectic_gc(omega));
                const Matrix expected = symplectic_block(omega);
                return Outcome{J == expected, to_json(expected), to_json(J), true};
              });
    }
  }
  {
    Random rng = check_stream(c.seed, "gc/complex_block");
    CheckRecorder rec(r, "gc/complex_block");
    for (int t = 0; t < blocks; ++t) {
      const int n = even[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(even.size()) - 1))];
      const Matrix P = invertible(rng, n);
      const Matrix Jc = P * standard_complex(n) * *inverse(P);
      rec.run([&] { return json{{"complex", to_json(Jc)}}; },
              [&] {
                const Matrix J = gc_endomorphism(from_complex(Jc));
                const Matrix expected = complex_block(Jc);
                return Outcome{J == expected, to_json(expected), to_json(J), true};
              });
    }
  }
  {
    Random rng = check_stream(c.seed, "gc/odd_dimension");
    CheckRecorder rec(r, "gc/odd_dimension_never_gc");
    for (int t = 0; t < blocks; ++t) {
      const int n = 2 * rng.uniform(0, std::max(0, (c.max_dim - 1) / 2)) + 1;
      const LinearDirac d = rng.lagrangian(n, ScalarOptions{3, 0.2, true});
      rec.run([&] { return structure_to_json(d); },
              [&] {
                const bool gc = is_generalized_complex(d);
                return Outcome{!gc, json(false), json(gc), false};
              });
    }
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

// ---------------------------------------------------------- Lie suites

SuiteReport integrability_suite(const SuiteConfig& c) {
  const auto start = Clock::now();
  SuiteReport r{"invariant_integrability", c, {}, {}, 0};
  for (const auto& name : LieAlgebra::builtin_names()) {
    const LieAlgebra g = LieAlgebra::builtin(name);
    const int n = g.dim();
    struct Candidate {
      Subspace E;
      bool closed_under_bracket;
      std::vector<AlternatingForm> cocycles;  // closed 2-forms on E
    };
    std::vector<Candidate> candidates;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Candidate cand{coordinate_subspace(n, mask), false, {}};
      cand.closed_under_bracket = is_subalgebra(g, cand.E);
      if (cand.closed_under_bracket) cand.cocycles = closed_forms(subalgebra(g, cand.E), 2);
      candidates.push_back(std::move(cand));
    }
    const std::vector<ThreeForm> closed3 = closed_forms(g, 3);
    Random rng = check_stream(c.seed, "integrability/" + name);
    auto draw_eps = [&](const Candidate& cand) {
      if (!cand.closed_under_bracket || rng.coin()) return rng.antisymmetric(cand.E.dim());
      Matrix eps = Matrix::Zero(cand.E.dim(), cand.E.dim());
      for (const auto& w : cand.cocycles) {
        const Scalar s = rng.scalar();
        for (Eigen::Index a = 0; a < eps.rows(); ++a)
          for (Eigen::Index b = 0; b < eps.cols(); ++b) eps(a, b) += s * w.at({static_cast<int>(a), static_cast<int>(b)});
      }
      return eps;
    };
    auto formula = [&](const Subspace& E, const Matrix& eps, const ThreeForm* H) {
      if (!is_subalgebra(g, E)) return false;
      AlternatingForm total = ce_diff_on_Eform(g, E, eps);
      if (H) total += H->restrict_to(E.basis());
      return total.is_zero();
    };
    {
      CheckRecorder rec(r, "integrability/untwisted/" + name);
      const int count = std::max(c.trials, static_cast<int>(candidates.size()));
      for (int t = 0; t < count; ++t) {
        const Candidate& cand = candidates[static_cast<std::size_t>(t) % candidates.size()];
        const Matrix eps = draw_eps(cand);
        rec.run([&] { return json{{"algebra", name}, {"E", to_json(cand.E.basis())}, {"eps", to_json(eps)}}; },
                [&] {
                  const bool lhs = invariant_integrable(g, from_E_eps(EEpsForm(cand.E, eps)));
                  const bool rhs = formula(cand.E, eps, nullptr);
                  return Outcome{lhs == rhs, json(rhs), json(lhs), lhs};
                });
      }
    }
    {
      CheckRecorder rec(r, "integrability/twisted/" + name);
      const int count = std::max(c.trials / 2, static_cast<int>(candidates.size()));
      for (int t = 0; t < count; ++t) {
        const Candidate& cand = candidates[static_cast<std::size_t>(t) % candidates.size()];
        const Matrix eps = draw_eps(cand);
        ThreeForm H(n, 3);
        const int mode = t % 3;
        if (mode != 0) H = -1 * ce_differential(g, two_form(extend_form(eps, cand.E)));
        if (mode != 1) H += rng.closed_three_form(g, closed3);
        rec.run(
            [&] {
              return json{{"algebra", name}, {"E", to_json(cand.E.basis())}, {"eps", to_json(eps)}, {"H", to_json(H)}};
            },
            [&] {
              const bool lhs = invariant_integrable(g, from_E_eps(EEpsForm(cand.E, eps)), &H);
              const bool rhs = formula(cand.E, eps, &H);
              return Outcome{lhs == rhs, json(rhs), json(lhs), lhs};
            });
      }
    }
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

SuiteReport group_datum_suite(const SuiteConfig& c) {
  const auto start = Clock::now();
  SuiteReport r{"group_data", c, {}, {}, 0};
  const Matrix w = [] {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1;
    m(1, 0) = -1;
    return m;
  }();
  {
    CheckRecorder rec(r, "groups/axb_bialgebra");
    const DiracGroupDatum d(LieAlgebra::builtin("axb"), Subspace::zero(2), {Matrix::Zero(2, 2), w});
    rec.run([] { return json{{"algebra", "axb"}, {"k", json::array()}, {"eps", "e1 -> 0, e2 -> e1^e2"}}; },
            [&] {
              const Report rep = check_dirac_group_datum(d);
              return Outcome{rep.verdict, json(true), to_json(rep), rep.verdict};
            });
  }
  {
    CheckRecorder rec(r, "groups/heisenberg_center_violation");
    Matrix z = Matrix::Zero(1, 3);
    z(0, 2) = 1;
    const DiracGroupDatum d(LieAlgebra::builtin("heisenberg3"), Subspace::span(z), {Matrix::Zero(2, 2), Matrix::Zero(2, 2), w});
    rec.run([] { return json{{"algebra", "heisenberg3"}, {"k", "span{z}"}, {"eps", "z -> x^y"}}; },
            [&] {
              const Report rep = check_dirac_group_datum(d);
              std::vector<std::string> failing;
              for (const auto& ch : rep.checks)
                if (ch.status == CheckStatus::fail) failing.push_back(ch.name);
              const bool ok = !rep.verdict && failing == std::vector<std::string>{"vanishing_on_k"};
              return Outcome{ok, json(std::vector<std::string>{"vanishing_on_k"}), json(failing), false};
            });
  }
  {
    CheckRecorder rec(r, "groups/semisimple_cocycle_space");
    for (const std::string name : {"sl2", "sl2xsl2"}) {
      const LieAlgebra g = LieAlgebra::builtin(name);
      std::vector<Subspace> ideals{Subspace::full(g.dim())};
      if (name == "sl2xsl2") {
        ideals.push_back(coordinate_subspace(6, 0b000111));
        ideals.push_back(coordinate_subspace(6, 0b111000));
      }
      for (const auto& E : ideals)
        rec.run([&] { return json{{"algebra", name}, {"E", to_json(E.basis())}}; },
                [&] {
                  const int dim = invariant_cocycle_space(g, E).dimension;
                  return Outcome{dim == 0, json(0), json(dim), false};
                });
    }
  }
  {
    CheckRecorder rec(r, "groups/heisenberg_dual_dirac");
    Matrix eps = Matrix::Zero(3, 3);
    eps(0, 1) = 1;
    eps(1, 0) = -1;
    const DualDiracGroupDatum d(LieAlgebra::builtin("heisenberg3"), Subspace::full(3), eps);
    rec.run([] { return json{{"algebra", "heisenberg3"}, {"E", "h3"}, {"eps", "x*^y*"}}; },
            [&] {
              const Report rep = check_dual_dirac_group_datum(d);
              return Outcome{rep.verdict, json(true), to_json(rep), rep.verdict};
            });
  }
  {
    Random rng = check_stream(c.seed, "groups/gc_roundtrip");
    CheckRecorder rec(r, "groups/gc_roundtrip");
    const int count = std::max(20, c.trials / 5);
    for (int t = 0; t < count; ++t) {
      const int n = t == 0 ? 2 : 2 * rng.uniform(1, 2);
      const Matrix P = t == 0 ? identity<Scalar>(n) : invertible(rng, n);
      const Matrix J0 = P * standard_complex(n) * *inverse(P);
      const Subspace k = kernel(Matrix(J0 - Scalar::i() * identity<Scalar>(n)));
      rec.run([&] { return json{{"algebra", "abelian:" + std::to_string(n)}, {"k", to_json(k.basis())}}; },
              [&] {
                const Report rep = check_gc_group_datum(GCGroupDatum(LieAlgebra::builtin("abelian:" + std::to_string(n)), k));
                const bool ok = rep.verdict && rep.J && *rep.J == J0 &&
                                from_complex(*rep.J) == from_E_eps(EEpsForm(k, Matrix::Zero(k.dim(), k.dim())));
                return Outcome{ok, to_json(J0), to_json(rep), rep.verdict};
              });
    }
  }
  {
    Random rng = check_stream(c.seed, "groups/dual_dirac_paths");
    CheckRecorder rec(r, "groups/dual_dirac_three_paths");
    CheckRecorder twisted(r, "groups/twisted_vs_integrability");
    const auto names = LieAlgebra::builtin_names();
    for (int t = 0; t < c.trials; ++t) {
      const std::string name = names[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(names.size()) - 1))];
      const LieAlgebra g = LieAlgebra::builtin(name);
      const Subspace E = rng.ideal(g);
      Matrix eps = rng.antisymmetric(E.dim());
      if (rng.coin()) {
        const auto space = invariant_cocycle_space(g, E);
        eps = Matrix::Zero(E.dim(), E.dim());
        for (const auto& b : space.basis) eps += rng.scalar() * b;
      }
      ThreeForm H(g.dim(), 3);
      if (rng.coin()) H = -1 * ce_differential(g, two_form(extend_form(eps, E)));
      if (rng.coin()) H += rng.closed_three_form(g, closed_forms(g, 3));
      auto input = [&] {
        return json{{"algebra", name}, {"E", to_json(E.basis())}, {"eps", to_json(eps)}, {"H", to_json(H)}};
      };
      rec.run(input, [&] {
        const Report rep = check_dual_dirac_group_datum(DualDiracGroupDatum(g, E, eps));
        const bool by_report = rep.find("cocycle")->passed();
        const bool by_differential = ce_diff_on_Eform(g, E, eps).is_zero();
        const bool by_bracket = invariant_integrable(g, from_E_eps(EEpsForm(E, eps)));
        return Outcome{by_report == by_differential && by_differential == by_bracket, json(by_differential),
                       bools({by_report, by_differential, by_bracket}), by_differential};
      });
      twisted.run(input, [&] {
        const Report rep = check_twisted_dual_dirac_group_datum(TwistedDualDiracGroupDatum(g, E, eps, H));
        const bool by_report = rep.find("H_restricted")->passed();
        const bool by_bracket = invariant_integrable(g, from_E_eps(EEpsForm(E, eps)), &H);
        return Outcome{by_report == by_bracket, json(by_bracket), json(by_report), by_bracket};
      });
    }
  }
  {
    Random rng = check_stream(c.seed, "groups/dirac_components");
    CheckRecorder rec(r, "groups/dirac_datum_components");
    const auto names = LieAlgebra::builtin_names();
    for (int t = 0; t < c.trials; ++t) {
      const std::string name = names[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(names.size()) - 1))];
      const LieAlgebra g = LieAlgebra::builtin(name);
      const Subspace k = rng.ideal(g);
      const auto qc = quotient_coordinates(k);
      const Eigen::Index q = qc.projection.rows();
      std::vector<Matrix> eps;
      const int mode = t % 3;
      std::vector<Matrix> on_quotient;
      for (Eigen::Index a = 0; a < q; ++a) on_quotient.push_back(rng.antisymmetric(q, ScalarOptions{3, 0.6, false}));
      for (int i = 0; i < g.dim(); ++i) {
        if (mode == 0) {
          eps.push_back(rng.antisymmetric(q, ScalarOptions{3, 0.6, false}));
        } else if (mode == 1) {
          Matrix m = Matrix::Zero(q, q);
          for (Eigen::Index a = 0; a < q; ++a) m += qc.projection(a, i) * on_quotient[static_cast<std::size_t>(a)];
          eps.push_back(m);
        } else {
          eps.push_back(Matrix::Zero(q, q));
        }
      }
      const DiracGroupDatum d(g, k, eps);
      rec.run(
          [&] {
            json e = json::array();
            for (const auto& m : eps) e.push_back(to_json(m));
            return json{{"algebra", name}, {"k", to_json(k.basis())}, {"eps", e}};
          },
          [&] {
            const Report rep = check_dirac_group_datum(d);
            const bool ideal = check_ideal(g, k).passed();
            const bool vanishing = check_vanishing_on_k(d).passed();
            const bool cocycle = ideal && check_cocycle(d).passed();
            const bool jacobi = vanishing && dual_jacobi(d).passed();
            const bool all = ideal && vanishing && cocycle && jacobi;
            return Outcome{rep.verdict == all, json(all), json(rep.verdict), all};
          });
    }
  }
  {
    CheckRecorder rec(r, "groups/multiplicativity");
    rec.run([] { return json{{"algebra", "heisenberg3"}, {"k", "span{z}"}, {"table", "additive"}}; },
            [&] {
              const LieAlgebra g = LieAlgebra::builtin("heisenberg3");
              Matrix z = Matrix::Zero(1, 3);
              z(0, 2) = 1;
              const Subspace k = Subspace::span(z);
              const Matrix I = identity<Scalar>(3);
              const Matrix adx = g.ad(g.basis_vector(0));
              const Matrix ady = g.ad(g.basis_vector(1));
              // exp(x), exp(y), exp(x)exp(y), e with beta additive in the quotient coordinates
              const std::vector<GroupElementSample> elems{{Matrix(I + adx), Matrix(2 * w)},
                                                          {Matrix(I + ady), Matrix(3 * w)},
                                                          {Matrix(I + adx + ady), Matrix(5 * w)},
                                                          {I, Matrix::Zero(2, 2)}};
              const auto res = multiplicativity_residual(g, k, elems, {{0, 1, 2}, {3, 3, 3}, {0, 3, 0}, {3, 1, 1}});
              const bool zero = std::all_of(res.begin(), res.end(), [](const Matrix& m) { return is_zero_matrix(m); });
              const auto bad = multiplicativity_residual(g, k, {{I, w}}, {{0, 0, 0}});
              const bool forced = !is_zero_matrix(bad[0]);
              return Outcome{zero && forced, bools({true, true}), bools({zero, forced}), true};
            });
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

SuiteReport schouten_suite(const SuiteConfig& c) {
  const auto start = Clock::now();
  SuiteReport r{"schouten", c, {}, {}, 0};
  const auto names = LieAlgebra::builtin_names();
  {
    Random rng = check_stream(c.seed, "schouten/splitting");
    CheckRecorder rec(r, "schouten/splitting_independence");
    for (int t = 0; t < c.trials; ++t) {
      const std::string name = names[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(names.size()) - 1))];
      const LieAlgebra g = LieAlgebra::builtin(name);
      const Subspace k = rng.ideal(g);
      const auto qc = quotient_coordinates(k);
      const Eigen::Index q = qc.projection.rows();
      const Matrix P = rng.antisymmetric(q);
      const Matrix Q = t % 2 == 0 ? P : rng.antisymmetric(q);
      const Matrix s1 = qc.splitting + k.basis().transpose() * rng.matrix(k.dim(), q);
      const Matrix s2 = qc.splitting + k.basis().transpose() * rng.matrix(k.dim(), q);
      rec.run(
          [&] {
            return json{{"algebra", name}, {"k", to_json(k.basis())}, {"P", to_json(P)}, {"Q", to_json(Q)},
                        {"splittings", json::array({to_json(s1), to_json(s2)})}};
          },
          [&] {
            const AlternatingForm a = schouten_quotient(g, k, P, Q, s1);
            const AlternatingForm b = schouten_quotient(g, k, P, Q, s2);
            const AlternatingForm base = schouten_quotient(g, k, P, Q);
            const AlternatingForm intrinsic = schouten_constant(quotient_algebra(g, k), P, Q);
            const bool ok = a == b && a == base && base == intrinsic && a.is_alternating();
            return Outcome{ok, to_json(base), json::array({to_json(a), to_json(b), to_json(intrinsic)}), !a.is_zero()};
          });
    }
  }
  {
    Random rng = check_stream(c.seed, "schouten/jacobiator");
    CheckRecorder rec(r, "schouten/jacobiator_cross_check");
    for (int t = 0; t < c.trials; ++t) {
      const std::string name = names[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(names.size()) - 1))];
      const LieAlgebra g = LieAlgebra::builtin(name);
      const Subspace k = t % 2 == 0 ? Subspace::zero(g.dim()) : rng.ideal(g);
      const LieAlgebra gq = quotient_algebra(g, k);
      const int q = gq.dim();
      Matrix P = rng.antisymmetric(q);
      if (t % 5 == 0 && q >= 2) {
        // x^y with span{x, y} a subalgebra gives [P, P] = 0.
        P = Matrix::Zero(q, q);
        P(0, 1) = 1;
        P(1, 0) = -1;
      }
      rec.run([&] { return json{{"algebra", name}, {"k", to_json(k.basis())}, {"P", to_json(P)}}; },
              [&] {
                const AlternatingForm T = schouten_quotient(g, k, P, P);
                bool ok = true;
                json got = json::array();
                for (int a = 0; a < q && ok; ++a)
                  for (int b = a + 1; b < q && ok; ++b)
                    for (int cc = b + 1; cc < q && ok; ++cc) {
                      const Scalar jac = bivector_jacobiator(gq, P, a, b, cc);
                      const Scalar nij = nijenhuis_invariant(gq, graph_section(P, a), graph_section(P, b), graph_section(P, cc));
                      if (T(a, b, cc) != Scalar(2) * jac || T(a, b, cc) != Scalar(2) * nij) {
                        ok = false;
                        got = json{{"indices", {a, b, cc}}, {"schouten", T(a, b, cc).str()}, {"jacobiator", jac.str()},
                                   {"nijenhuis", nij.str()}};
                      }
                    }
                return Outcome{ok, json("[P,P] = 2 Jac = 2 Nij"), got, T.is_zero()};
              });
    }
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

// ------------------------------------------------------------- bundles

std::vector<std::string> suite_names() {
  return {"equivalences",  "stability",   "functoriality", "groups",    "predicate_equivalence",
          "duality",       "composition", "b_transform",   "pushforward", "gc",
          "integrability", "group_data",  "schouten"};
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& c) {
  using Fn = SuiteReport (*)(const SuiteConfig&);
  auto bundle = [&](const std::string& label, std::initializer_list<Fn> parts) {
    SuiteReport r{label, c, {}, {}, 0};
    for (Fn f : parts) r.merge(f(c));
    return r;
  };
  if (name == "equivalences") return bundle(name, {predicate_equivalence_suite, duality_suite});
  if (name == "stability") return bundle(name, {b_transform_suite, gc_suite});
  if (name == "functoriality") return bundle(name, {composition_suite, pushforward_suite});
  if (name == "groups") return bundle(name, {integrability_suite, group_datum_suite, schouten_suite});
  if (name == "predicate_equivalence") return predicate_equivalence_suite(c);
  if (name == "duality") return duality_suite(c);
  if (name == "composition") return composition_suite(c);
  if (name == "b_transform") return b_transform_suite(c);
  if (name == "pushforward") return pushforward_suite(c);
  if (name == "gc") return gc_suite(c);
  if (name == "integrability") return integrability_suite(c);
  if (name == "group_data") return group_datum_suite(c);
  if (name == "schouten") return schouten_suite(c);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace dirac
