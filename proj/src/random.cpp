#include "dirac/random.hpp"

namespace dirac {

int Random::uniform(int lo, int hi) {
  // Rejection sampling keeps the stream identical across standard libraries.
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<int>(x % range);
}

bool Random::coin(double p) {
  constexpr int resolution = 1 << 20;
  return uniform(0, resolution - 1) < static_cast<int>(p * resolution);
}

Scalar Random::scalar(const ScalarOptions& o) {
  auto part = [&]() -> mpq_class {
    if (coin(o.zero_bias)) return 0;
    return mpq_class(uniform(-o.bound, o.bound), uniform(1, o.bound));
  };
  mpq_class re = part();
  mpq_class im = o.complex ? part() : mpq_class(0);
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

Matrix Random::matrix(Eigen::Index rows, Eigen::Index cols, const ScalarOptions& o) {
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = scalar(o);
  return m;
}

Matrix Random::antisymmetric(Eigen::Index n, const ScalarOptions& o) {
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = r + 1; c < n; ++c) {
      m(r, c) = scalar(o);
      m(c, r) = -m(r, c);
    }
  return m;
}

Subspace Random::subspace(Eigen::Index ambient, Eigen::Index count, const ScalarOptions& o) {
  return Subspace::span(matrix(count, ambient, o));
}

Subspace Random::subspace(Eigen::Index ambient, const ScalarOptions& o) {
  return subspace(ambient, uniform(0, static_cast<int>(ambient)), o);
}

Subspace Random::subspace_of(const Subspace& s, const ScalarOptions& o) {
  const Matrix coeffs = matrix(uniform(0, static_cast<int>(s.dim())), s.dim(), o);
  if (s.dim() == 0) return Subspace::zero(s.ambient_dim());
  return Subspace::span(Matrix(coeffs * s.basis()));
}

Subspace Random::superspace_of(const Subspace& s, const ScalarOptions& o) {
  return sum(s, subspace(s.ambient_dim(), o));
}

LinearDirac Random::lagrangian(Eigen::Index n, const ScalarOptions& o, bool b_transform_too) {
  const Subspace E = subspace(n, o);
  LinearDirac d = from_E_eps(EEpsForm(E, antisymmetric(E.dim(), o)));
  if (b_transform_too && coin(0.3)) d = b_transform(d, antisymmetric(n, o));
  return d;
}

LinearDirac Random::gc_structure(Eigen::Index n) {
  if (n % 2 != 0) throw std::invalid_argument("generalized complex structures need even dimension");
  const ScalarOptions o{3, 0.2, true};
  for (int attempt = 0; attempt < 1000; ++attempt) {
    LinearDirac d = lagrangian(n, o, true);
    if (is_generalized_complex(d)) return d;
  }
  // Symplectic fallback: the standard form on R^n.
  Matrix omega = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    omega(k, k + 1) = 1;
    omega(k + 1, k) = -1;
  }
  return from_symplectic_gc(omega);
}

DiracMapProblem Random::dirac_map(Eigen::Index n1, Eigen::Index n2, const ScalarOptions& o) {
  const Matrix f = matrix(n2, n1, o);
  const Subspace U1 = subspace(n1, o);
  const Matrix pi1 = antisymmetric(U1.dim(), o);
  const Matrix ft = f.transpose();
  const Subspace U2 = subspace_of(preimage(ft, U1), o);
  Matrix phi(U2.dim(), U1.dim());
  for (Eigen::Index k = 0; k < U2.dim(); ++k) phi.row(k) = U1.coordinates(ft * U2.vector(k))->transpose();
  return {f, from_pi_U(PiUForm(U1, pi1)), from_pi_U(PiUForm(U2, Matrix(phi * pi1 * phi.transpose())))};
}

DiracMapProblem Random::dual_dirac_map(Eigen::Index n1, Eigen::Index n2, const ScalarOptions& o) {
  const Matrix f = matrix(n2, n1, o);
  const Subspace E2 = subspace(n2, o);
  const Matrix eps2 = antisymmetric(E2.dim(), o);
  const Subspace E1 = subspace_of(preimage(f, E2), o);
  Matrix F(E1.dim(), E2.dim());
  for (Eigen::Index k = 0; k < E1.dim(); ++k) F.row(k) = E2.coordinates(f * E1.vector(k))->transpose();
  return {f, from_E_eps(EEpsForm(E1, Matrix(F * eps2 * F.transpose()))), from_E_eps(EEpsForm(E2, eps2))};
}

DiracMapProblem Random::map_triple(Eigen::Index n1, Eigen::Index n2, const ScalarOptions& o) {
  Matrix f = matrix(n2, n1, o);
  LinearDirac d1 = lagrangian(n1, o);
  return {std::move(f), std::move(d1), lagrangian(n2, o)};
}

Subspace Random::ideal(const LieAlgebra& g) {
  const int n = g.dim();
  Subspace seed = coin(0.5) ? coordinate_subspace(n, static_cast<unsigned>(uniform(0, (1 << n) - 1)))
                            : subspace(n, uniform(0, n), ScalarOptions{2, 0.5, false});
  return ideal_generated_by(g, seed);
}

ThreeForm Random::closed_three_form(const LieAlgebra& g, const std::vector<ThreeForm>& closed_basis) {
  ThreeForm H(g.dim(), 3);
  for (const auto& b : closed_basis) H += scalar() * b;
  return H;
}

Subspace coordinate_subspace(int n, unsigned mask) {
  std::vector<int> chosen;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) chosen.push_back(i);
  Matrix rows = Matrix::Zero(static_cast<Eigen::Index>(chosen.size()), n);
  for (std::size_t r = 0; r < chosen.size(); ++r) rows(static_cast<Eigen::Index>(r), chosen[r]) = 1;
  return Subspace::span(rows);
}

}  // namespace dirac
