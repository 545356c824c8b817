#include "dirac/json_io.hpp"

#include <functional>

namespace dirac {

const json& require_field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw JsonSchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw JsonSchemaError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

int int_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw JsonSchemaError(path, "expected an integer");
  return j.get<int>();
}

std::optional<Eigen::Index> optional_n(const json& obj, const std::string& path) {
  auto it = obj.find("n");
  if (it == obj.end()) return std::nullopt;
  const int n = int_from_json(*it, join(path, "n"));
  if (n < 0) throw JsonSchemaError(join(path, "n"), "must be non-negative");
  return n;
}

// Runs fn and rewraps library errors as schema errors at `path`.
template <typename Fn>
auto at_path(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const JsonSchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw JsonSchemaError(path, e.what());
  } catch (const std::domain_error& e) {
    throw JsonSchemaError(path, e.what());
  }
}

Matrix square_from_json(const json& j, const std::string& path) {
  Matrix m = matrix_from_json(j, path);
  if (m.rows() != m.cols()) throw JsonSchemaError(path, "expected a square matrix");
  return m;
}

// Rows and ambient dimension for forms whose subspace may be empty.
Matrix rows_with_n(const json& obj, const std::string& key, const std::string& path, Eigen::Index& n) {
  const json& rows_json = require_field(obj, key, path);
  const auto declared = optional_n(obj, path);
  Matrix rows = matrix_from_json(rows_json, join(path, key), declared.value_or(0));
  if (rows.rows() == 0 && !declared) throw JsonSchemaError(join(path, "n"), "required when " + key + " is empty");
  n = declared.value_or(rows.cols());
  if (rows.cols() != n) throw JsonSchemaError(join(path, key), "rows must have length n = " + std::to_string(n));
  return rows;
}

}  // namespace

Scalar scalar_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw JsonSchemaError(path, "expected a scalar string such as \"1/2+3*i\"");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw JsonSchemaError(path, e.what());
  }
}

json to_json(const Scalar& s) { return s.str(); }

Matrix matrix_from_json(const json& j, const std::string& path, Eigen::Index cols_if_empty) {
  if (!j.is_array()) throw JsonSchemaError(path, "expected an array of rows");
  if (j.empty()) return Matrix::Zero(0, cols_if_empty);
  Eigen::Index cols = -1;
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array()) throw JsonSchemaError(index(path, r), "expected a row array");
    if (cols < 0) cols = static_cast<Eigen::Index>(j[r].size());
    if (static_cast<Eigen::Index>(j[r].size()) != cols)
      throw JsonSchemaError(index(path, r), "row length " + std::to_string(j[r].size()) + " differs from " +
                                                std::to_string(cols));
  }
  Matrix m(static_cast<Eigen::Index>(j.size()), cols);
  for (std::size_t r = 0; r < j.size(); ++r)
    for (std::size_t c = 0; c < j[r].size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = scalar_from_json(j[r][c], index(index(path, r), c));
  return m;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k).str());
  return out;
}

Vector vector_from_json(const json& j, const std::string& path, Eigen::Index expected) {
  if (!j.is_array()) throw JsonSchemaError(path, "expected an array of scalars");
  if (static_cast<Eigen::Index>(j.size()) != expected)
    throw JsonSchemaError(path, "expected length " + std::to_string(expected) + ", got " + std::to_string(j.size()));
  Vector v(expected);
  for (std::size_t k = 0; k < j.size(); ++k) v(static_cast<Eigen::Index>(k)) = scalar_from_json(j[k], index(path, k));
  return v;
}

LinearDirac structure_from_json(const json& j, const std::string& path) {
  static const std::vector<std::string> kinds = {"basis",   "E_eps",        "pi_U",         "complex",
                                                 "poisson", "presymplectic", "symplectic_gc"};
  if (!j.is_object()) throw JsonSchemaError(path, "expected a structure object");
  std::string kind;
  for (const auto& k : kinds) {
    if (!j.contains(k)) continue;
    if (!kind.empty()) throw JsonSchemaError(path, "both '" + kind + "' and '" + k + "' given");
    kind = k;
  }
  if (kind.empty()) throw JsonSchemaError(path, "expected one of basis, E_eps, pi_U, complex, poisson, presymplectic, symplectic_gc");
  const std::string where = join(path, kind);
  if (kind == "basis") {
    const auto declared = optional_n(j, path);
    const Matrix rows = matrix_from_json(j["basis"], where, 2 * declared.value_or(0));
    if (rows.rows() == 0 && !declared) throw JsonSchemaError(join(path, "n"), "required when basis is empty");
    if (declared && rows.cols() != 2 * *declared)
      throw JsonSchemaError(where, "rows must have length 2n = " + std::to_string(2 * *declared));
    if (rows.cols() % 2 != 0) throw JsonSchemaError(where, "rows must have even length 2n");
    return at_path(where, [&] { return LinearDirac::from_rows(rows); });
  }
  if (kind == "E_eps" || kind == "pi_U") {
    const json& body = j[kind];
    if (!body.is_object()) throw JsonSchemaError(where, "expected an object");
    const std::string sub_key = kind == "E_eps" ? "E" : "U";
    const std::string form_key = kind == "E_eps" ? "eps" : "pi";
    Eigen::Index n = 0;
    const Matrix rows = rows_with_n(body, sub_key, where, n);
    const Matrix form = matrix_from_json(require_field(body, form_key, where), join(where, form_key), rows.rows());
    return at_path(where, [&] {
      if (rank(rows) != rows.rows()) throw std::invalid_argument("rows of " + sub_key + " must be linearly independent");
      return kind == "E_eps" ? from_E_eps(EEpsForm::from_rows(rows, form)) : from_pi_U(PiUForm::from_rows(rows, form));
    });
  }
  const Matrix m = square_from_json(j[kind], where);
  return at_path(where, [&] {
    if (kind == "complex") return from_complex(m);
    if (kind == "poisson") return from_poisson(m);
    if (kind == "presymplectic") return from_presymplectic(m);
    return from_symplectic_gc(m);
  });
}

json structure_to_json(const LinearDirac& d) {
  json out;
  out["n"] = d.n();
  out["basis"] = to_json(d.sub().basis());
  return out;
}

LieAlgebra algebra_from_json(const json& j, const std::string& path) {
  if (j.is_string()) return at_path(path, [&] { return LieAlgebra::builtin(j.get<std::string>()); });
  if (!j.is_object()) throw JsonSchemaError(path, "expected a built-in name or {\"dim\", \"brackets\"}");
  if (j.contains("builtin")) {
    const json& name = j["builtin"];
    if (!name.is_string()) throw JsonSchemaError(join(path, "builtin"), "expected a string");
    return at_path(join(path, "builtin"), [&] { return LieAlgebra::builtin(name.get<std::string>()); });
  }
  const int dim = int_from_json(require_field(j, "dim", path), join(path, "dim"));
  if (dim < 0) throw JsonSchemaError(join(path, "dim"), "must be non-negative");
  std::vector<LieAlgebra::Bracket> brackets;
  if (j.contains("brackets")) {
    const json& list = j["brackets"];
    const std::string lpath = join(path, "brackets");
    if (!list.is_array()) throw JsonSchemaError(lpath, "expected an array");
    for (std::size_t b = 0; b < list.size(); ++b) {
      const std::string bpath = index(lpath, b);
      const int i = int_from_json(require_field(list[b], "i", bpath), join(bpath, "i"));
      const int jj = int_from_json(require_field(list[b], "j", bpath), join(bpath, "j"));
      if (i < 0 || i >= dim || jj < 0 || jj >= dim) throw JsonSchemaError(bpath, "index out of range");
      brackets.push_back({i, jj, vector_from_json(require_field(list[b], "result", bpath), join(bpath, "result"), dim)});
    }
  }
  return at_path(path, [&] { return LieAlgebra::from_brackets(dim, brackets); });
}

json algebra_to_json(const LieAlgebra& g) {
  json out;
  out["dim"] = g.dim();
  json brackets = json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      const Vector r = g.bracket(g.basis_vector(i), g.basis_vector(j));
      if (is_zero_matrix(r)) continue;
      brackets.push_back(json{{"i", i}, {"j", j}, {"result", to_json(r)}});
    }
  out["brackets"] = std::move(brackets);
  return out;
}

Subspace subspace_from_json(const json& j, const std::string& path, Eigen::Index ambient) {
  const Matrix rows = matrix_from_json(j, path, ambient);
  if (rows.cols() != ambient)
    throw JsonSchemaError(path, "rows must have length " + std::to_string(ambient));
  return Subspace::span(rows);
}

ThreeForm three_form_from_json(const json& j, const std::string& path, int n) {
  ThreeForm H(n, 3);
  if (j.is_object()) {
    const json& terms = require_field(j, "terms", path);
    const std::string tpath = join(path, "terms");
    if (!terms.is_array()) throw JsonSchemaError(tpath, "expected an array");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string p = index(tpath, t);
      const json& idx = require_field(terms[t], "indices", p);
      if (!idx.is_array() || idx.size() != 3) throw JsonSchemaError(join(p, "indices"), "expected three indices");
      std::vector<int> ijk;
      for (std::size_t m = 0; m < 3; ++m) {
        const int v = int_from_json(idx[m], index(join(p, "indices"), m));
        if (v < 0 || v >= n) throw JsonSchemaError(join(p, "indices"), "index out of range");
        ijk.push_back(v);
      }
      const Scalar value = scalar_from_json(require_field(terms[t], "value", p), join(p, "value"));
      if (!value.is_zero() && (ijk[0] == ijk[1] || ijk[1] == ijk[2] || ijk[0] == ijk[2]))
        throw JsonSchemaError(join(p, "indices"), "repeated index with nonzero value");
      H.add_wedge(ijk, value);
    }
    return H;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw JsonSchemaError(path, "expected an n x n x n array or {\"terms\"}");
  for (int a = 0; a < n; ++a) {
    const Matrix slab = matrix_from_json(j[static_cast<std::size_t>(a)], index(path, static_cast<std::size_t>(a)), n);
    if (slab.rows() != n || slab.cols() != n) throw JsonSchemaError(index(path, static_cast<std::size_t>(a)), "expected n x n");
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) H.at({a, b, c}) = slab(b, c);
  }
  return H;
}

json to_json(const AlternatingForm& w) {
  json terms = json::array();
  const int n = w.dim();
  const int p = w.degree();
  std::vector<int> idx(static_cast<std::size_t>(p));
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == p) {
      const Scalar& v = w.at(idx);
      if (!v.is_zero()) terms.push_back(json{{"indices", idx}, {"value", v.str()}});
      return;
    }
    for (int k = start; k < n; ++k) {
      idx[static_cast<std::size_t>(pos)] = k;
      rec(pos + 1, k + 1);
    }
  };
  rec(0, 0);
  return json{{"dim", n}, {"degree", p}, {"terms", std::move(terms)}};
}

json to_json(const CheckResult& c) {
  json out;
  out["name"] = c.name;
  if (c.status == CheckStatus::skipped)
    out["pass"] = nullptr;
  else
    out["pass"] = c.passed();
  out["status"] = to_string(c.status);
  out["witness"] = c.witness.empty() ? json(nullptr) : json(c.witness);
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

json to_json(const Report& r) {
  json out;
  out["verdict"] = r.verdict;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  out["checks"] = std::move(checks);
  if (r.J) out["J"] = to_json(*r.J);
  return out;
}

}  // namespace dirac
