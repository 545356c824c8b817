#include "dirac/maps.hpp"

namespace dirac {

DiracMapProblem::DiracMapProblem(Matrix map, LinearDirac source, LinearDirac target)
    : f(std::move(map)), d1(std::move(source)), d2(std::move(target)) {
  require_dims(f.cols() == d1.n() && f.rows() == d2.n(),
               "map is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + " but structures live on dims " +
                   std::to_string(d1.n()) + " -> " + std::to_string(d2.n()));
}

namespace {

// Block-diagonal matrix diag(a, b).
Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

// The subspace V ⊕ U of V + V* for U inside V*.
Subspace with_full_tangent(const Subspace& u) {
  const Eigen::Index n = u.ambient_dim();
  Matrix rows = Matrix::Zero(n + u.dim(), 2 * n);
  rows.topLeftCorner(n, n) = identity<Scalar>(n);
  rows.bottomRightCorner(u.dim(), n) = u.basis();
  return Subspace::span(rows);
}

// A subspace of V placed inside V + V*.
Subspace in_tangent(const Subspace& s) {
  const Eigen::Index n = s.ambient_dim();
  Matrix rows = Matrix::Zero(s.dim(), 2 * n);
  rows.leftCols(n) = s.basis();
  return Subspace::span(rows);
}

bool condition_m1(const DiracMapProblem& p) {
  return p.d2.tangent_part().contains(image(p.f, p.d1.tangent_part()));
}

}  // namespace

LinearDirac pushforward(const Matrix& f, const LinearDirac& d) {
  require_dims(f.cols() == d.n(), "pushforward: map domain vs structure");
  const Eigen::Index n = f.cols();
  const Eigen::Index m = f.rows();
  // Parametrise pairs (X, xi) in V + W* with X + f* xi in d, then send them to fX + xi.
  const Matrix constraint = block_diag(identity<Scalar>(n), Matrix(f.transpose()));
  const Matrix output = block_diag(f, identity<Scalar>(m));
  return LinearDirac(image(output, preimage(constraint, d.sub())));
}

LinearDirac pullback(const Matrix& f, const LinearDirac& d) {
  require_dims(f.rows() == d.n(), "pullback: map codomain vs structure");
  const Eigen::Index n = f.cols();
  const Eigen::Index m = f.rows();
  const Matrix constraint = block_diag(f, identity<Scalar>(m));
  const Matrix output = block_diag(identity<Scalar>(n), Matrix(f.transpose()));
  return LinearDirac(image(output, preimage(constraint, d.sub())));
}

bool is_dirac_M(const DiracMapProblem& p) {
  if (!condition_m1(p)) return false;
  const Subspace u2 = p.d2.cotangent_projection();
  const Subspace lhs = intersect(with_full_tangent(image(Matrix(p.f.transpose()), u2)), p.d1.sub());
  return pullback(p.f, p.d2).sub().contains(lhs);
}

bool is_dirac_M2prime(const DiracMapProblem& p) {
  if (!condition_m1(p)) return false;
  const Eigen::Index n1 = p.d1.n();
  const Eigen::Index n2 = p.d2.n();
  const Eigen::Index width = n1 + 2 * n2;  // (X, Y, xi)
  Matrix to_l2 = Matrix::Zero(2 * n2, width);  // (Y, xi)
  to_l2.block(0, n1, n2, n2) = identity<Scalar>(n2);
  to_l2.block(n2, n1 + n2, n2, n2) = identity<Scalar>(n2);
  Matrix to_l1 = Matrix::Zero(2 * n1, width);  // (X, f* xi)
  to_l1.block(0, 0, n1, n1) = identity<Scalar>(n1);
  to_l1.block(n1, n1 + n2, n1, n2) = p.f.transpose();
  const Subspace hypotheses = intersect(preimage(to_l2, p.d2.sub()), preimage(to_l1, p.d1.sub()));
  Matrix conclusion = Matrix::Zero(2 * n2, width);  // (fX, xi)
  conclusion.block(0, 0, n2, n1) = p.f;
  conclusion.block(n2, n1 + n2, n2, n2) = identity<Scalar>(n2);
  return p.d2.sub().contains(image(conclusion, hypotheses));
}

bool is_dirac_M2doubleprime(const DiracMapProblem& p) {
  if (!condition_m1(p)) return false;
  const Subspace rhs = sum(p.d1.sub(), in_tangent(preimage(p.f, p.d2.tangent_part())));
  return rhs.contains(pullback(p.f, p.d2).sub());
}

bool is_dirac_piU(const DiracMapProblem& p) {
  const PiUForm a = decompose_pi_U(p.d1);
  const PiUForm b = decompose_pi_U(p.d2);
  // phi = f*|U2 written in the canonical bases of U2 and U1, one row per U2 vector.
  const Matrix ft = p.f.transpose();
  Matrix phi(b.U.dim(), a.U.dim());
  for (Eigen::Index k = 0; k < b.U.dim(); ++k) {
    auto coords = a.U.coordinates(ft * b.U.vector(k));
    if (!coords) return false;  // (D1)
    phi.row(k) = coords->transpose();
  }
  return Matrix(phi * a.pi * phi.transpose()) == b.pi;  // (D2)
}

bool is_dirac_Eeps(const DiracMapProblem& p) {
  const EEpsForm a = decompose_E_eps(p.d1);
  const EEpsForm b = decompose_E_eps(p.d2);
  if (!b.kernel_of_sharp().contains(image(p.f, a.kernel_of_sharp()))) return false;

  // Tuples (x1, x2, xi) with x_k in E_k coordinates, xi in V2*, such that
  // xi|E2 = eps2(X2, -) and (f* xi)|E1 = eps1(X1, -).
  const Eigen::Index k1 = a.E.dim();
  const Eigen::Index k2 = b.E.dim();
  const Eigen::Index n2 = p.d2.n();
  const Eigen::Index width = k1 + k2 + n2;
  Matrix system = Matrix::Zero(k2 + k1, width);
  const Matrix f_e1 = p.f * a.E.basis().transpose();  // columns f(b1_j)
  for (Eigen::Index j = 0; j < k2; ++j) {
    system.block(j, k1 + k2, 1, n2) = b.E.basis().row(j);
    for (Eigen::Index i = 0; i < k2; ++i) system(j, k1 + i) = -b.eps(i, j);
  }
  for (Eigen::Index j = 0; j < k1; ++j) {
    system.block(k2 + j, k1 + k2, 1, n2) = f_e1.col(j).transpose();
    for (Eigen::Index i = 0; i < k1; ++i) system(k2 + j, i) = -a.eps(i, j);
  }
  const Matrix tuples = null_space(system);
  for (Eigen::Index t = 0; t < tuples.cols(); ++t) {
    const Vector x1 = tuples.col(t).head(k1);
    const Vector x2 = tuples.col(t).segment(k1, k2);
    const Vector fx1 = f_e1 * x1;
    auto c = b.E.coordinates(fx1);
    if (!c) return false;
    const Vector diff = *c - x2;
    if (!is_zero_matrix(b.eps.transpose() * diff)) return false;
  }
  return true;
}

LinearDirac dual_swap(const LinearDirac& d) {
  return LinearDirac(image(swap_blocks_matrix(d.n()), d.sub()));
}

bool is_dual_dirac(const DiracMapProblem& p) {
  return is_dirac_M(DiracMapProblem(p.f.transpose(), dual_swap(p.d2), dual_swap(p.d1)));
}

bool is_dual_dirac_Eeps(const DiracMapProblem& p) {
  const EEpsForm a = decompose_E_eps(p.d1);
  const EEpsForm b = decompose_E_eps(p.d2);
  Matrix fmap(a.E.dim(), b.E.dim());
  for (Eigen::Index k = 0; k < a.E.dim(); ++k) {
    auto coords = b.E.coordinates(p.f * a.E.vector(k));
    if (!coords) return false;  // (D1*)
    fmap.row(k) = coords->transpose();
  }
  return Matrix(fmap * b.eps * fmap.transpose()) == a.eps;  // (D2*)
}

bool is_abm_dirac(const Matrix& f, const Matrix& B, const LinearDirac& d1, const LinearDirac& d2) {
  require_dims(f.cols() == d1.n() && f.rows() == d2.n(), "abm: map vs structures");
  return pushforward(f, b_transform(d1, B)) == d2;
}

Matrix pullback_form(const Matrix& f, const Matrix& B) {
  require_dims(B.rows() == f.rows() && B.cols() == f.rows(), "pullback_form: B vs map codomain");
  return f.transpose() * B * f;
}

}  // namespace dirac
