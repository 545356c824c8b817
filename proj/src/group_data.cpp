#include "dirac/group_data.hpp"

#include <algorithm>
#include <map>

namespace dirac {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

void Report::add(CheckResult c) {
  if (c.status != CheckStatus::pass) verdict = false;
  checks.push_back(std::move(c));
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

CheckResult passed(std::string name) { return {std::move(name), CheckStatus::pass, {}, {}}; }

CheckResult failed(std::string name, std::vector<int> witness, std::string detail = {}) {
  return {std::move(name), CheckStatus::fail, std::move(witness), std::move(detail)};
}

CheckResult skipped(std::string name, std::string why) { return {std::move(name), CheckStatus::skipped, {}, std::move(why)}; }

void require_antisymmetric(const Matrix& m, Eigen::Index size, const std::string& what) {
  require_dims(m.rows() == size && m.cols() == size, what + " must be " + std::to_string(size) + "x" +
                                                         std::to_string(size));
  if (!is_antisymmetric(m)) throw std::invalid_argument(what + " must be antisymmetric");
}

// Matrix of the action induced by `a` (an endomorphism of g preserving k) on g/k.
Matrix induced_on_quotient(const QuotientCoordinates& qc, const Matrix& a) {
  return qc.projection * a * qc.splitting;
}

// Action of A on a bivector given by its matrix of values.
Matrix act_on_bivector(const Matrix& A, const Matrix& M) { return A * M + M * A.transpose(); }

// Coordinates of [x, w] in E, for x in g and w in the ideal E.
Vector bracket_in(const LieAlgebra& g, const Subspace& E, const Vector& x, const Vector& w) {
  auto c = E.coordinates(g.bracket(x, w));
  if (!c) throw LieAlgebraError("bracket leaves E");
  return *c;
}

}  // namespace

DiracGroupDatum::DiracGroupDatum(LieAlgebra algebra, Subspace ideal, std::vector<Matrix> cobracket)
    : g(std::move(algebra)), k(std::move(ideal)), eps(std::move(cobracket)) {
  require_dims(k.ambient_dim() == g.dim(), "k lives in a space of dimension " + std::to_string(k.ambient_dim()) +
                                               " but dim g = " + std::to_string(g.dim()));
  require_dims(static_cast<int>(eps.size()) == g.dim(),
               "eps needs one matrix per basis vector of g (" + std::to_string(g.dim()) + "), got " +
                   std::to_string(eps.size()));
  for (std::size_t i = 0; i < eps.size(); ++i) require_antisymmetric(eps[i], quotient_dim(), "eps[" + std::to_string(i) + "]");
}

Matrix DiracGroupDatum::eps_at(const Vector& v) const {
  require_dims(v.size() == g.dim(), "eps argument vs dim g");
  Matrix out = Matrix::Zero(quotient_dim(), quotient_dim());
  for (int i = 0; i < g.dim(); ++i)
    if (!v(i).is_zero()) out += v(i) * eps[static_cast<std::size_t>(i)];
  return out;
}

DualDiracGroupDatum::DualDiracGroupDatum(LieAlgebra algebra, Subspace e, Matrix form)
    : g(std::move(algebra)), E(std::move(e)), eps(std::move(form)) {
  require_dims(E.ambient_dim() == g.dim(), "E vs dim g");
  require_antisymmetric(eps, E.dim(), "eps");
}

GCGroupDatum::GCGroupDatum(LieAlgebra algebra, Subspace sub) : g_real(std::move(algebra)), k(std::move(sub)) {
  require_dims(k.ambient_dim() == g_real.dim(), "k vs dim g");
}

TwistedDualDiracGroupDatum::TwistedDualDiracGroupDatum(LieAlgebra algebra, Subspace e, Matrix form, ThreeForm h)
    : g(std::move(algebra)), E(std::move(e)), eps(std::move(form)), H(std::move(h)) {
  require_dims(E.ambient_dim() == g.dim(), "E vs dim g");
  require_antisymmetric(eps, E.dim(), "eps");
  require_dims(H.dim() == g.dim() && H.degree() == 3, "H must be a 3-form on g");
}

// ------------------------------------------------------------ Dirac groups

CheckResult check_ideal(const LieAlgebra& g, const Subspace& k) {
  require_dims(k.ambient_dim() == g.dim(), "k vs dim g");
  for (int i = 0; i < g.dim(); ++i)
    for (Eigen::Index b = 0; b < k.dim(); ++b)
      if (!k.contains(g.bracket(g.basis_vector(i), k.vector(b))))
        return failed("ideal", {i, static_cast<int>(b)}, "[e_i, k_b] is not in k");
  return passed("ideal");
}

CheckResult check_cocycle(const DiracGroupDatum& d) {
  if (!check_ideal(d.g, d.k).passed()) throw LieAlgebraError("cocycle condition needs k to be an ideal");
  const auto qc = quotient_coordinates(d.k);
  const int n = d.g.dim();
  std::vector<Matrix> A;
  for (int i = 0; i < n; ++i) A.push_back(induced_on_quotient(qc, d.g.ad(d.g.basis_vector(i))));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Matrix r = act_on_bivector(A[static_cast<std::size_t>(a)], d.eps[static_cast<std::size_t>(b)]) -
                       act_on_bivector(A[static_cast<std::size_t>(b)], d.eps[static_cast<std::size_t>(a)]) -
                       d.eps_at(d.g.bracket(d.g.basis_vector(a), d.g.basis_vector(b)));
      if (!is_zero_matrix(r)) return failed("cocycle", {a, b}, "ad_x eps(y) - ad_y eps(x) - eps([x,y]) != 0");
    }
  return passed("cocycle");
}

CheckResult check_vanishing_on_k(const DiracGroupDatum& d) {
  for (Eigen::Index b = 0; b < d.k.dim(); ++b)
    if (!is_zero_matrix(d.eps_at(d.k.vector(b)))) return failed("vanishing_on_k", {static_cast<int>(b)}, "eps(k_b) != 0");
  return passed("vanishing_on_k");
}

std::vector<Scalar> dual_bracket_constants(const DiracGroupDatum& d) {
  if (!check_vanishing_on_k(d).passed()) throw std::invalid_argument("eps does not factor through g/k");
  const auto qc = quotient_coordinates(d.k);
  const auto q = static_cast<int>(d.quotient_dim());
  std::vector<Scalar> c(static_cast<std::size_t>(q) * q * q);
  for (int m = 0; m < q; ++m) {
    const Matrix em = d.eps_at(qc.splitting.col(m));
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) c[static_cast<std::size_t>((a * q + b) * q + m)] = em(a, b);
  }
  return c;
}

CheckResult dual_jacobi(const DiracGroupDatum& d) {
  const auto c = dual_bracket_constants(d);
  if (auto bad = LieAlgebra::jacobi_violation(static_cast<int>(d.quotient_dim()), c))
    return failed("dual_jacobi", {(*bad)[0], (*bad)[1], (*bad)[2]}, "Jacobiator of the dual bracket is nonzero");
  return passed("dual_jacobi");
}

Report check_dirac_group_datum(const DiracGroupDatum& d) {
  Report r;
  const CheckResult ideal = check_ideal(d.g, d.k);
  const CheckResult vanishing = check_vanishing_on_k(d);
  r.add(ideal);
  r.add(vanishing);
  if (!ideal.passed())
    r.add(skipped("cocycle", "k is not an ideal"));
  else if (!vanishing.passed())
    r.add(skipped("cocycle", "eps does not factor through g/k"));
  else
    r.add(check_cocycle(d));
  if (!vanishing.passed())
    r.add(skipped("dual_jacobi", "eps does not factor through g/k"));
  else
    r.add(dual_jacobi(d));
  return r;
}

// ------------------------------------------------------- dual-Dirac groups

CheckResult check_invariance(const LieAlgebra& g, const Subspace& E, const Matrix& eps) {
  require_antisymmetric(eps, E.dim(), "eps");
  const int k = static_cast<int>(E.dim());
  for (int i = 0; i < g.dim(); ++i) {
    std::vector<Vector> moved;  // [e_i, w_a] in E coordinates
    for (int a = 0; a < k; ++a) moved.push_back(bracket_in(g, E, g.basis_vector(i), E.vector(a)));
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        Scalar s = 0;
        for (int m = 0; m < k; ++m)
          s += moved[static_cast<std::size_t>(a)](m) * eps(m, b) + moved[static_cast<std::size_t>(b)](m) * eps(a, m);
        if (!s.is_zero()) return failed("invariance", {i, a, b}, "eps([x,w], w') + eps(w, [x,w']) != 0");
      }
  }
  return passed("invariance");
}

namespace {

CheckResult check_E_cocycle(const LieAlgebra& g, const Subspace& E, const Matrix& eps, const ThreeForm* H,
                            const std::string& name) {
  const int k = static_cast<int>(E.dim());
  auto e = [&](int a, const Vector& w) {
    Scalar s;
    for (int m = 0; m < k; ++m) s += eps(a, m) * w(m);
    return s;
  };
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c) {
        Scalar s = e(a, bracket_in(g, E, E.vector(b), E.vector(c))) + e(b, bracket_in(g, E, E.vector(c), E.vector(a))) +
                   e(c, bracket_in(g, E, E.vector(a), E.vector(b)));
        if (H) s += H->evaluate({E.vector(a), E.vector(b), E.vector(c)});
        if (!s.is_zero())
          return failed(name, {a, b, c},
                        H ? "H|E + d_E eps != 0" : "eps(x,[y,z]) + eps(y,[z,x]) + eps(z,[x,y]) != 0");
      }
  return passed(name);
}

}  // namespace

Report check_dual_dirac_group_datum(const DualDiracGroupDatum& d) {
  Report r;
  const CheckResult ideal = check_ideal(d.g, d.E);
  r.add(ideal);
  if (!ideal.passed()) {
    r.add(skipped("invariance", "E is not an ideal"));
    r.add(skipped("cocycle", "E is not an ideal"));
    return r;
  }
  r.add(check_invariance(d.g, d.E, d.eps));
  r.add(check_E_cocycle(d.g, d.E, d.eps, nullptr, "cocycle"));
  return r;
}

CocycleSpace invariant_cocycle_space(const LieAlgebra& g, const Subspace& E) {
  if (!check_ideal(g, E).passed()) throw LieAlgebraError("E is not an ideal");
  const int k = static_cast<int>(E.dim());
  std::map<std::pair<int, int>, int> var;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) var[{a, b}] = static_cast<int>(var.size());
  const auto unknowns = static_cast<Eigen::Index>(var.size());
  std::vector<Vector> rows;
  // Adds coef * eps(a, b) to the row.
  auto add = [&](Vector& row, int a, int b, const Scalar& coef) {
    if (a == b || coef.is_zero()) return;
    if (a < b)
      row(var.at({a, b})) += coef;
    else
      row(var.at({b, a})) -= coef;
  };
  std::vector<std::vector<Vector>> br(static_cast<std::size_t>(k), std::vector<Vector>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) br[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = bracket_in(g, E, E.vector(a), E.vector(b));
  for (int i = 0; i < g.dim(); ++i) {
    std::vector<Vector> moved;
    for (int a = 0; a < k; ++a) moved.push_back(bracket_in(g, E, g.basis_vector(i), E.vector(a)));
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        Vector row = Vector::Zero(unknowns);
        for (int m = 0; m < k; ++m) {
          add(row, m, b, moved[static_cast<std::size_t>(a)](m));
          add(row, a, m, moved[static_cast<std::size_t>(b)](m));
        }
        rows.push_back(row);
      }
  }
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c) {
        Vector row = Vector::Zero(unknowns);
        for (int m = 0; m < k; ++m) {
          add(row, a, m, br[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)](m));
          add(row, b, m, br[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)](m));
          add(row, c, m, br[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)](m));
        }
        rows.push_back(row);
      }
  Matrix system(static_cast<Eigen::Index>(rows.size()), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) system.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  const Matrix sol = null_space(system);
  CocycleSpace out;
  out.dimension = static_cast<int>(sol.cols());
  for (Eigen::Index s = 0; s < sol.cols(); ++s) {
    Matrix eps = Matrix::Zero(k, k);
    for (const auto& [ab, v] : var) {
      eps(ab.first, ab.second) = sol(v, s);
      eps(ab.second, ab.first) = -sol(v, s);
    }
    out.basis.push_back(eps);
  }
  return out;
}

// ----------------------------------------------------------------- GC groups

Report check_gc_group_datum(const GCGroupDatum& d) {
  Report r;
  const bool real = std::all_of(d.g_real.constants().begin(), d.g_real.constants().end(),
                                [](const Scalar& s) { return s.is_real(); });
  r.add(real ? passed("real_form") : failed("real_form", {}, "structure constants are not real"));
  r.add(check_ideal(d.g_real, d.k));
  const Subspace kbar = conj(d.k);
  const Subspace meet = intersect(d.k, kbar);
  r.add(meet.is_zero() ? passed("k_cap_conj_k")
                       : failed("k_cap_conj_k", {}, "k ∩ conj(k) has dimension " + std::to_string(meet.dim())));
  const Subspace total = sum(d.k, kbar);
  r.add(total.is_full() ? passed("k_plus_conj_k")
                        : failed("k_plus_conj_k", {}, "k + conj(k) has dimension " + std::to_string(total.dim()) +
                                                          " in dimension " + std::to_string(d.k.ambient_dim())));
  if (!meet.is_zero() || !total.is_full()) {
    r.add(skipped("complex_structure", "g is not k ⊕ conj(k)"));
    return r;
  }
  const Eigen::Index n = d.k.ambient_dim();
  const Eigen::Index m = d.k.dim();
  Matrix M(n, n);
  M.leftCols(m) = d.k.basis().transpose();
  M.rightCols(n - m) = kbar.basis().transpose();
  Matrix D = Matrix::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) D(a, a) = a < m ? Scalar::i() : -Scalar::i();
  const Matrix J = M * D * *inverse(M);
  const bool ok = Matrix(J * J) == Matrix(-identity<Scalar>(n)) && is_real_matrix(J) &&
                  from_complex(J) == from_E_eps(EEpsForm(d.k, Matrix::Zero(m, m)));
  r.add(ok ? passed("complex_structure") : failed("complex_structure", {}, "reconstructed J is inconsistent"));
  r.J = J;
  return r;
}

// ---------------------------------------------------- twisted dual-Dirac

Report check_twisted_dual_dirac_group_datum(const TwistedDualDiracGroupDatum& d) {
  Report r;
  const CheckResult ideal = check_ideal(d.g, d.E);
  r.add(ideal);
  if (ideal.passed())
    r.add(check_invariance(d.g, d.E, d.eps));
  else
    r.add(skipped("invariance", "E is not an ideal"));
  const bool alternating = d.H.is_alternating();
  r.add(alternating ? passed("H_alternating") : failed("H_alternating", {}, "H is not fully antisymmetric"));
  if (alternating) {
    const AlternatingForm dH = ce_differential(d.g, d.H);
    if (auto bad = dH.first_nonzero())
      r.add(failed("H_closed", *bad, "dH != 0"));
    else
      r.add(passed("H_closed"));
  } else {
    r.add(skipped("H_closed", "H is not alternating"));
  }
  if (ideal.passed())
    r.add(check_E_cocycle(d.g, d.E, d.eps, &d.H, "H_restricted"));
  else
    r.add(skipped("H_restricted", "E is not an ideal"));
  return r;
}

// -------------------------------------------------------- multiplicativity

std::vector<Matrix> multiplicativity_residual(const LieAlgebra& g, const Subspace& k,
                                              const std::vector<GroupElementSample>& elements,
                                              const std::vector<MultiplicationTriple>& triples) {
  const int n = g.dim();
  require_dims(k.ambient_dim() == n, "k vs dim g");
  if (!check_ideal(g, k).passed()) throw LieAlgebraError("k is not an ideal");
  const auto qc = quotient_coordinates(k);
  const Eigen::Index q = qc.projection.rows();
  std::vector<Matrix> inverse_on_quotient;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const std::string tag = "element " + std::to_string(e);
    const auto& s = elements[e];
    require_dims(s.ad.rows() == n && s.ad.cols() == n, tag + ": Ad must be " + std::to_string(n) + "x" + std::to_string(n));
    require_antisymmetric(s.beta, q, tag + ": beta");
    auto inv = inverse(s.ad);
    if (!inv) throw std::invalid_argument(tag + ": Ad is singular");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (s.ad * g.bracket(g.basis_vector(i), g.basis_vector(j)) != g.bracket(s.ad.col(i), s.ad.col(j)))
          throw std::invalid_argument(tag + ": Ad does not preserve the bracket");
    if (!k.contains(image(s.ad, k))) throw std::invalid_argument(tag + ": Ad does not preserve k");
    inverse_on_quotient.push_back(induced_on_quotient(qc, *inv));
  }
  std::vector<Matrix> out;
  const int count = static_cast<int>(elements.size());
  for (const auto& t : triples) {
    if (t.g < 0 || t.h < 0 || t.gh < 0 || t.g >= count || t.h >= count || t.gh >= count)
      throw std::invalid_argument("triple refers to a missing element");
    const Matrix& A = inverse_on_quotient[static_cast<std::size_t>(t.h)];
    out.push_back(elements[static_cast<std::size_t>(t.gh)].beta - elements[static_cast<std::size_t>(t.h)].beta -
                  A * elements[static_cast<std::size_t>(t.g)].beta * A.transpose());
  }
  return out;
}

}  // namespace dirac
