#ifndef DIRAC_TEST_UTIL_HPP
#define DIRAC_TEST_UTIL_HPP

#include "dirac/cli.hpp"

#include <doctest.h>

#include <initializer_list>
#include <sstream>

namespace dirac::test {

inline Matrix mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  Matrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline Vector vec(std::initializer_list<Scalar> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

inline Scalar s(const char* text) { return Scalar::parse(text); }

inline Subspace span(std::initializer_list<std::initializer_list<Scalar>> rows) { return Subspace::span(mat(rows)); }

// e_k in dimension n.
inline Vector unit(Eigen::Index n, Eigen::Index k) {
  Vector v = Vector::Zero(n);
  v(k) = 1;
  return v;
}

inline std::string show(const Matrix& m) {
  std::ostringstream os;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << "[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]";
  }
  return os.str();
}

inline RunResult run_cli(std::vector<std::string> command, const std::string& input, const std::string& predicate = "all") {
  RunConfig config;
  config.command = std::move(command);
  config.inline_input = input;
  config.predicate = predicate;
  std::istringstream empty;
  return run(config, empty);
}

}  // namespace dirac::test

#endif  // DIRAC_TEST_UTIL_HPP
