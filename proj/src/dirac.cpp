#include "dirac/dirac.hpp"

namespace dirac {

Matrix SplitSpace::pairing_matrix() const {
  Matrix g = Matrix::Zero(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    g(k, n + k) = 1;
    g(n + k, k) = 1;
  }
  return g;
}

Subspace SplitSpace::tangent() const {
  Matrix rows = Matrix::Zero(n, 2 * n);
  rows.leftCols(n) = identity<Scalar>(n);
  return Subspace::span(rows);
}

Subspace SplitSpace::cotangent() const {
  Matrix rows = Matrix::Zero(n, 2 * n);
  rows.rightCols(n) = identity<Scalar>(n);
  return Subspace::span(rows);
}

Scalar pairing(const Vector& u, const Vector& v) {
  require_dims(u.size() == v.size() && u.size() % 2 == 0, "pairing operands");
  const Eigen::Index n = u.size() / 2;
  Scalar total = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    total += u(k) * v(n + k);
    total += u(n + k) * v(k);
  }
  return total;
}

bool is_lagrangian(const Subspace& s, SplitSpace space) {
  if (s.ambient_dim() != space.ambient_dim() || s.dim() != space.n) return false;
  const Matrix& b = s.basis();
  const Matrix gram = b * space.pairing_matrix() * b.transpose();
  return is_zero_matrix(gram);
}

LinearDirac::LinearDirac(Subspace sub) : sub_(std::move(sub)) {
  if (sub_.ambient_dim() % 2 != 0) throw DimensionError("Dirac structure needs an even-dimensional ambient space");
  if (!is_lagrangian(sub_, space())) {
    throw NotLagrangianError("subspace of dimension " + std::to_string(sub_.dim()) +
                             " is not Lagrangian in V + V* with dim V = " + std::to_string(n()));
  }
}

LinearDirac LinearDirac::tangent(Eigen::Index n) { return LinearDirac(SplitSpace{n}.tangent()); }
LinearDirac LinearDirac::cotangent(Eigen::Index n) { return LinearDirac(SplitSpace{n}.cotangent()); }

Subspace LinearDirac::tangent_part() const {
  const auto meet = intersect(sub_, space().tangent());
  return Subspace::span(meet.basis().leftCols(n()));
}

Subspace LinearDirac::cotangent_part() const {
  const auto meet = intersect(sub_, space().cotangent());
  return Subspace::span(meet.basis().rightCols(n()));
}

Subspace LinearDirac::tangent_projection() const { return Subspace::span(sub_.basis().leftCols(n())); }

Subspace LinearDirac::cotangent_projection() const { return Subspace::span(sub_.basis().rightCols(n())); }

namespace {

// Change of coordinates from independent rows R to the RREF basis B of
// their span: returns C with C * R = B.
Matrix rref_coordinates(const Matrix& rows, const Subspace& span) {
  if (span.dim() != rows.rows()) throw std::invalid_argument("spanning rows are not linearly independent");
  Matrix c(span.dim(), rows.rows());
  const Matrix rt = rows.transpose();
  for (Eigen::Index k = 0; k < span.dim(); ++k) {
    auto sol = solve<Scalar>(rt, span.vector(k));
    c.row(k) = sol->transpose();
  }
  return c;
}

}  // namespace

EEpsForm::EEpsForm(Subspace e, Matrix eps_in_basis) : E(std::move(e)), eps(std::move(eps_in_basis)) {
  require_dims(eps.rows() == E.dim() && eps.cols() == E.dim(), "eps size must equal dim E");
  if (!is_antisymmetric(eps)) throw std::invalid_argument("eps must be antisymmetric");
}

EEpsForm EEpsForm::from_rows(const Matrix& rows, const Matrix& eps_in_rows) {
  auto e = Subspace::span(rows);
  const Matrix c = rref_coordinates(rows, e);
  require_dims(eps_in_rows.rows() == rows.rows() && eps_in_rows.cols() == rows.rows(), "eps size vs rows of E");
  return {e, c * eps_in_rows * c.transpose()};
}

Subspace EEpsForm::kernel_of_sharp() const {
  const Matrix coords = null_space(Matrix(eps.transpose()));
  return Subspace::column_span(Matrix(E.basis().transpose() * coords));
}

PiUForm::PiUForm(Subspace u, Matrix pi_in_basis) : U(std::move(u)), pi(std::move(pi_in_basis)) {
  require_dims(pi.rows() == U.dim() && pi.cols() == U.dim(), "pi size must equal dim U");
  if (!is_antisymmetric(pi)) throw std::invalid_argument("pi must be antisymmetric");
}

PiUForm PiUForm::from_rows(const Matrix& rows, const Matrix& pi_in_rows) {
  auto u = Subspace::span(rows);
  const Matrix c = rref_coordinates(rows, u);
  require_dims(pi_in_rows.rows() == rows.rows() && pi_in_rows.cols() == rows.rows(), "pi size vs rows of U");
  return {u, c * pi_in_rows * c.transpose()};
}

LinearDirac from_E_eps(const EEpsForm& form) {
  const Eigen::Index n = form.E.ambient_dim();
  const Eigen::Index k = form.E.dim();
  const auto ann = annihilator(form.E);
  Matrix rows = Matrix::Zero(n, 2 * n);
  // X = b_i paired with the covector supported on E's pivots that restricts
  // to eps(b_i, -) on E.
  for (Eigen::Index i = 0; i < k; ++i) {
    rows.row(i).head(n) = form.E.basis().row(i);
    for (Eigen::Index j = 0; j < k; ++j) rows(i, n + form.E.pivots()[static_cast<std::size_t>(j)]) = form.eps(i, j);
  }
  rows.block(k, n, ann.dim(), n) = ann.basis();
  return LinearDirac::from_rows(rows);
}

LinearDirac from_pi_U(const PiUForm& form) {
  const Eigen::Index n = form.U.ambient_dim();
  const Eigen::Index k = form.U.dim();
  const auto ann = annihilator(form.U);
  Matrix rows = Matrix::Zero(n, 2 * n);
  for (Eigen::Index i = 0; i < k; ++i) {
    rows.row(i).tail(n) = form.U.basis().row(i);
    for (Eigen::Index j = 0; j < k; ++j) rows(i, form.U.pivots()[static_cast<std::size_t>(j)]) = form.pi(i, j);
  }
  rows.block(k, 0, ann.dim(), n) = ann.basis();
  return LinearDirac::from_rows(rows);
}

EEpsForm decompose_E_eps(const LinearDirac& d) {
  const Eigen::Index n = d.n();
  const Matrix& b = d.sub().basis();
  const auto& piv = d.sub().pivots();
  // The canonical basis lists rows with a V-pivot first; their V-parts are
  // the RREF basis of the projection E.
  Eigen::Index k = 0;
  while (k < static_cast<Eigen::Index>(piv.size()) && piv[static_cast<std::size_t>(k)] < n) ++k;
  const Matrix xs = b.topLeftCorner(k, n);
  const Matrix xis = b.topRightCorner(k, n);
  Subspace e = Subspace::span(xs);
  Matrix eps = xis * xs.transpose();
  return {std::move(e), std::move(eps)};
}

PiUForm decompose_pi_U(const LinearDirac& d) {
  const Eigen::Index n = d.n();
  const auto swapped = Subspace::span(Matrix(d.sub().basis() * swap_blocks_matrix(n)));
  const auto& piv = swapped.pivots();
  Eigen::Index k = 0;
  while (k < static_cast<Eigen::Index>(piv.size()) && piv[static_cast<std::size_t>(k)] < n) ++k;
  const Matrix us = swapped.basis().topLeftCorner(k, n);
  const Matrix xs = swapped.basis().topRightCorner(k, n);
  Subspace u = Subspace::span(us);
  // pi(u_i, u_j) = u_j(X_i)
  Matrix pi = xs * us.transpose();
  return {std::move(u), std::move(pi)};
}

LinearDirac from_complex(const Matrix& J) {
  require_dims(J.rows() == J.cols(), "complex structure must be square");
  const Eigen::Index n = J.rows();
  if (J * J != Matrix(-identity<Scalar>(n))) throw std::invalid_argument("J*J != -1");
  const Matrix shifted = J - Scalar::i() * identity<Scalar>(n);
  const auto e = kernel(shifted);
  return from_E_eps(EEpsForm(e, Matrix::Zero(e.dim(), e.dim())));
}

LinearDirac from_presymplectic(const Matrix& omega) {
  require_dims(omega.rows() == omega.cols(), "2-form must be square");
  return from_E_eps(EEpsForm(Subspace::full(omega.rows()), omega));
}

LinearDirac from_symplectic_gc(const Matrix& omega) {
  require_dims(omega.rows() == omega.cols(), "2-form must be square");
  if (!inverse(omega)) throw std::invalid_argument("symplectic form is degenerate");
  return from_E_eps(EEpsForm(Subspace::full(omega.rows()), Matrix(Scalar::i() * omega)));
}

LinearDirac from_poisson(const Matrix& pi) {
  require_dims(pi.rows() == pi.cols(), "bivector must be square");
  return from_pi_U(PiUForm(Subspace::full(pi.rows()), pi));
}

Matrix b_transform_matrix(const Matrix& B) {
  require_dims(B.rows() == B.cols(), "B must be square");
  if (!is_antisymmetric(B)) throw std::invalid_argument("B must be antisymmetric");
  const Eigen::Index n = B.rows();
  Matrix m = identity<Scalar>(2 * n);
  // (B# X)_j = B(X, e_j) = sum_i X_i B(i, j)
  m.bottomLeftCorner(n, n) = B.transpose();
  return m;
}

LinearDirac b_transform(const LinearDirac& d, const Matrix& B) {
  require_dims(B.rows() == d.n(), "B size vs Dirac structure");
  return LinearDirac(image(b_transform_matrix(B), d.sub()));
}

LinearDirac conj(const LinearDirac& d) { return LinearDirac(conj(d.sub())); }

bool is_real(const LinearDirac& d) { return conj(d.sub()) == d.sub(); }

bool is_generalized_complex(const LinearDirac& d) { return intersect(d.sub(), conj(d.sub())).is_zero(); }

Matrix gc_endomorphism(const LinearDirac& d) {
  if (!is_generalized_complex(d)) throw std::invalid_argument("gc_endomorphism: d ∩ conj(d) != 0");
  const Eigen::Index n = d.n();
  Matrix frame(2 * n, 2 * n);
  frame.leftCols(n) = d.sub().basis().transpose();
  frame.rightCols(n) = conj_matrix(d.sub().basis()).transpose();
  Matrix eigen = Matrix::Zero(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    eigen(k, k) = Scalar::i();
    eigen(n + k, n + k) = -Scalar::i();
  }
  return frame * eigen * *inverse(frame);
}

Matrix swap_blocks_matrix(Eigen::Index n) {
  Matrix p = Matrix::Zero(2 * n, 2 * n);
  p.topRightCorner(n, n) = identity<Scalar>(n);
  p.bottomLeftCorner(n, n) = identity<Scalar>(n);
  return p;
}

}  // namespace dirac
