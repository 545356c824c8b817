#ifndef DIRAC_SUITES_HPP
#define DIRAC_SUITES_HPP

// Deterministic randomized property suites.  Each suite runs a fixed list of
// checks; every check derives its own random stream from the seed and the
// check name, so the report is a function of (seed, trials, max_dim).

#include "dirac/json_io.hpp"
#include "dirac/random.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dirac {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int trials = 1000;
  int max_dim = 3;
};

struct SuiteFailure {
  std::string check;
  long trial = 0;
  json input;
  json expected;
  json got;
};

struct CheckTally {
  std::string name;
  long trials = 0;
  long positives = 0;  // trials where the predicate under test was true
  long failures = 0;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckTally> checks;
  std::vector<SuiteFailure> failures;  // first few, in trial order
  double elapsed_ms = 0;

  long trials() const;
  long failure_count() const;
  bool passed() const { return failure_count() == 0; }
  void merge(const SuiteReport& other);
};

/// Timing is omitted unless requested, so equal configs give identical JSON.
json to_json(const SuiteReport& r, bool include_timing = false);
std::string to_text(const SuiteReport& r, bool include_timing = false);

struct Outcome {
  bool ok = true;
  json expected;
  json got;
  bool positive = false;
};

/// Helper that records trials and keeps the first failures.
class CheckRecorder {
public:
  CheckRecorder(SuiteReport& report, std::string name);
  /// Runs one trial; an exception counts as a failure.  `input` is only
  /// materialised on failure.
  void run(const std::function<json()>& input, const std::function<Outcome()>& body);

private:
  CheckTally& tally() { return report_.checks[index_]; }
  SuiteReport& report_;
  std::size_t index_;
};

/// A fresh stream for one check.
Random check_stream(std::uint64_t seed, const std::string& check);

// One function per property group.  `trials` is the main per-check count.
SuiteReport predicate_equivalence_suite(const SuiteConfig& c);
SuiteReport duality_suite(const SuiteConfig& c);
SuiteReport composition_suite(const SuiteConfig& c);
SuiteReport b_transform_suite(const SuiteConfig& c);
SuiteReport pushforward_suite(const SuiteConfig& c);
SuiteReport gc_suite(const SuiteConfig& c);
SuiteReport integrability_suite(const SuiteConfig& c);
SuiteReport group_datum_suite(const SuiteConfig& c);
SuiteReport schouten_suite(const SuiteConfig& c);

/// Named bundles exposed by the command line:
/// equivalences, stability, functoriality, groups.
SuiteReport run_suite(const std::string& name, const SuiteConfig& c);
std::vector<std::string> suite_names();

/// The Remark-style counterexample: inclusion V1 -> V1 x V2 with a mixed B.
struct BTransformCounterexample {
  Matrix inclusion;
  Matrix B;
  LinearDirac d1;
  LinearDirac d2;
};
BTransformCounterexample b_transform_counterexample(Eigen::Index n1 = 1, Eigen::Index n2 = 1);

/// The two printed block forms of the generalized complex endomorphism.
Matrix symplectic_block(const Matrix& omega);
Matrix complex_block(const Matrix& J);

/// Poisson-style Jacobiator of a constant bivector on basis covectors:
/// a_c([x_a, x_b]) + a_a([x_b, x_c]) + a_b([x_c, x_a]) with x_m = P#(e_m*).
Scalar bivector_jacobiator(const LieAlgebra& g, const Matrix& P, int a, int b, int c);
/// Section of the graph of P over the basis covector e_m*.
InvariantSection graph_section(const Matrix& P, int m);

/// Structure constants of the subalgebra E in its canonical basis.
LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& E);

}  // namespace dirac

#endif  // DIRAC_SUITES_HPP
