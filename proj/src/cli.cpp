#include "dirac/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace dirac {

namespace {

struct CommandOutput {
  bool verdict = true;
  json body = json::object();
};

using Handler = std::function<CommandOutput(const json&, const RunConfig&)>;

// Runs fn and reports any library error as a schema error at `field`.
template <typename Fn>
auto guarded(const std::string& field, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const JsonSchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw JsonSchemaError(field, e.what());
  } catch (const std::domain_error& e) {
    throw JsonSchemaError(field, e.what());
  }
}

void require_object(const json& in) {
  if (!in.is_object()) throw JsonSchemaError("input", "expected a JSON object");
}

Matrix square_matrix(const json& in, const std::string& key, Eigen::Index n) {
  const Matrix m = matrix_from_json(require_field(in, key, ""), key, n);
  if (m.rows() != n || m.cols() != n)
    throw JsonSchemaError(key, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  return m;
}

Matrix antisymmetric_matrix(const json& in, const std::string& key, Eigen::Index n) {
  Matrix m = square_matrix(in, key, n);
  if (!is_antisymmetric(m)) throw JsonSchemaError(key, "must be antisymmetric");
  return m;
}

// The structure is either the whole input or its "structure" member.
LinearDirac structure_arg(const json& in) {
  require_object(in);
  if (in.contains("structure")) return structure_from_json(in["structure"], "structure");
  return structure_from_json(in, "");
}

DiracMapProblem problem_arg(const json& in) {
  require_object(in);
  const LinearDirac d1 = structure_from_json(require_field(in, "d1", ""), "d1");
  const LinearDirac d2 = structure_from_json(require_field(in, "d2", ""), "d2");
  const Matrix f = matrix_from_json(require_field(in, "f", ""), "f", d1.n());
  return guarded("f", [&] { return DiracMapProblem(f, d1, d2); });
}

LieAlgebra algebra_arg(const json& in) {
  require_object(in);
  return algebra_from_json(require_field(in, "algebra", ""), "algebra");
}

Subspace subspace_arg(const json& in, const std::string& key, const LieAlgebra& g, bool full_if_missing) {
  if (!in.contains(key)) return full_if_missing ? Subspace::full(g.dim()) : Subspace::zero(g.dim());
  return subspace_from_json(in[key], key, g.dim());
}

// E from independent rows and eps in the coordinates of those rows.
EEpsForm e_eps_arg(const json& in, const LieAlgebra& g) {
  const Matrix rows =
      in.contains("E") ? matrix_from_json(in["E"], "E", g.dim()) : Matrix(identity<Scalar>(g.dim()));
  if (rows.cols() != g.dim()) throw JsonSchemaError("E", "rows must have length " + std::to_string(g.dim()));
  if (rank(rows) != rows.rows()) throw JsonSchemaError("E", "rows must be linearly independent");
  const Matrix eps = antisymmetric_matrix(in, "eps", rows.rows());
  return guarded("eps", [&] { return EEpsForm::from_rows(rows, eps); });
}

json e_eps_json(const EEpsForm& f) { return json{{"E", to_json(f.E.basis())}, {"eps", to_json(f.eps)}}; }

std::optional<ThreeForm> three_form_arg(const json& in, const LieAlgebra& g) {
  if (!in.contains("H")) return std::nullopt;
  return three_form_from_json(in["H"], "H", g.dim());
}

InvariantSection section_arg(const json& in, const std::string& key, int n) {
  const json& s = require_field(in, key, "");
  if (!s.is_object()) throw JsonSchemaError(key, "expected {\"x\": [...], \"xi\": [...]}");
  InvariantSection out;
  out.x = s.contains("x") ? vector_from_json(s["x"], key + ".x", n) : Vector(Vector::Zero(n));
  out.xi = s.contains("xi") ? vector_from_json(s["xi"], key + ".xi", n) : Vector(Vector::Zero(n));
  return out;
}

json section_json(const InvariantSection& s) { return json{{"x", to_json(s.x)}, {"xi", to_json(s.xi)}}; }

CommandOutput report_output(const Report& r) {
  CommandOutput out;
  out.verdict = r.verdict;
  out.body = to_json(r);
  return out;
}

// ------------------------------------------------------------ structure

CommandOutput structure_decompose(const json& in, const RunConfig&) {
  const LinearDirac d = structure_arg(in);
  const EEpsForm e = decompose_E_eps(d);
  const PiUForm u = decompose_pi_U(d);
  CommandOutput out;
  out.body = structure_to_json(d);
  out.body["E_eps"] = e_eps_json(e);
  out.body["pi_U"] = json{{"U", to_json(u.U.basis())}, {"pi", to_json(u.pi)}};
  return out;
}

CommandOutput structure_btransform(const json& in, const RunConfig&) {
  const LinearDirac d = structure_arg(in);
  const Matrix B = antisymmetric_matrix(in, "B", d.n());
  CommandOutput out;
  out.body["result"] = structure_to_json(b_transform(d, B));
  return out;
}

CommandOutput structure_gc_endo(const json& in, const RunConfig&) {
  const LinearDirac d = structure_arg(in);
  CommandOutput out;
  out.verdict = is_generalized_complex(d);
  if (out.verdict)
    out.body["J"] = to_json(gc_endomorphism(d));
  else
    out.body["J"] = nullptr;
  return out;
}

CommandOutput structure_check(const json& in, const RunConfig&) {
  require_object(in);
  const json& s = in.contains("structure") ? in["structure"] : in;
  const std::string path = in.contains("structure") ? "structure" : "";
  CommandOutput out;
  if (s.is_object() && s.contains("basis")) {
    // Raw rows may fail to be Lagrangian; that is a verdict, not a schema error.
    const std::string where = path.empty() ? "basis" : path + ".basis";
    const Matrix rows = matrix_from_json(s["basis"], where);
    if (rows.cols() % 2 != 0) throw JsonSchemaError(where, "rows must have even length 2n");
    const Subspace sub = Subspace::span(rows);
    const bool lagrangian = is_lagrangian(sub, SplitSpace{rows.cols() / 2});
    out.body["lagrangian"] = lagrangian;
    if (!lagrangian) {
      out.verdict = false;
      out.body["detail"] = "span has dimension " + std::to_string(sub.dim()) + " or is not isotropic";
      return out;
    }
  }
  const LinearDirac d = structure_from_json(s, path);
  out.body["lagrangian"] = true;
  out.body["real"] = is_real(d);
  out.body["generalized_complex"] = is_generalized_complex(d);
  out.body["structure"] = structure_to_json(d);
  return out;
}

// ------------------------------------------------------------------ maps

using MapPredicate = bool (*)(const DiracMapProblem&);

CommandOutput map_predicates(const json& in, const RunConfig& config,
                             const std::vector<std::pair<std::string, MapPredicate>>& table) {
  const DiracMapProblem p = problem_arg(in);
  std::string chosen = config.predicate;
  std::string field = "--predicate";
  if (chosen == "all" && in.contains("predicate")) {
    if (!in["predicate"].is_string()) throw JsonSchemaError("predicate", "expected a string");
    chosen = in["predicate"].get<std::string>();
    field = "predicate";
  }
  CommandOutput out;
  if (chosen == "all") {
    json values = json::object();
    bool agree = true;
    const bool first = table.front().second(p);
    for (const auto& [name, fn] : table) {
      const bool v = fn(p);
      values[name] = v;
      agree = agree && v == first;
    }
    out.verdict = first;
    out.body["predicates"] = std::move(values);
    out.body["agree"] = agree;
    return out;
  }
  for (const auto& [name, fn] : table)
    if (name == chosen) {
      out.verdict = fn(p);
      out.body["predicate"] = name;
      return out;
    }
  std::string known = "all";
  for (const auto& entry : table) known += ", " + entry.first;
  throw JsonSchemaError(field, "unknown predicate '" + chosen + "' (expected " + known + ")");
}

CommandOutput map_dirac(const json& in, const RunConfig& config) {
  return map_predicates(in, config,
                        {{"M", is_dirac_M},
                         {"M2p", is_dirac_M2prime},
                         {"M2pp", is_dirac_M2doubleprime},
                         {"piU", is_dirac_piU},
                         {"Eeps", is_dirac_Eeps}});
}

CommandOutput map_dual_dirac(const json& in, const RunConfig& config) {
  return map_predicates(in, config, {{"dual", is_dual_dirac}, {"dual_Eeps", is_dual_dirac_Eeps}});
}

CommandOutput map_abm(const json& in, const RunConfig&) {
  const DiracMapProblem p = problem_arg(in);
  const Matrix B = antisymmetric_matrix(in, "B", p.d1.n());
  CommandOutput out;
  out.verdict = is_abm_dirac(p.f, B, p.d1, p.d2);
  out.body["pushforward"] = structure_to_json(pushforward(p.f, b_transform(p.d1, B)));
  return out;
}

// ---------------------------------------------------------------- groups

CommandOutput group_dirac_datum(const json& in, const RunConfig&) {
  const LieAlgebra g = algebra_arg(in);
  const Subspace k = subspace_arg(in, "k", g, false);
  const Eigen::Index q = g.dim() - k.dim();
  const json& eps_json = require_field(in, "eps", "");
  if (!eps_json.is_array()) throw JsonSchemaError("eps", "expected one matrix per basis vector of the algebra");
  std::vector<Matrix> eps;
  for (std::size_t i = 0; i < eps_json.size(); ++i) {
    const std::string where = "eps[" + std::to_string(i) + "]";
    const Matrix m = matrix_from_json(eps_json[i], where, q);
    if (m.rows() != q || m.cols() != q || !is_antisymmetric(m))
      throw JsonSchemaError(where, "expected an antisymmetric " + std::to_string(q) + "x" + std::to_string(q) + " matrix");
    eps.push_back(m);
  }
  const DiracGroupDatum d = guarded("eps", [&] { return DiracGroupDatum(g, k, eps); });
  return report_output(check_dirac_group_datum(d));
}

CommandOutput group_dual_dirac_datum(const json& in, const RunConfig&) {
  const LieAlgebra g = algebra_arg(in);
  const EEpsForm f = e_eps_arg(in, g);
  CommandOutput out = report_output(check_dual_dirac_group_datum(DualDiracGroupDatum(g, f.E, f.eps)));
  out.body["E_eps"] = e_eps_json(f);
  return out;
}

CommandOutput group_gc_datum(const json& in, const RunConfig&) {
  const LieAlgebra g = algebra_arg(in);
  const Subspace k = subspace_from_json(require_field(in, "k", ""), "k", g.dim());
  return report_output(check_gc_group_datum(guarded("k", [&] { return GCGroupDatum(g, k); })));
}

CommandOutput group_twisted_datum(const json& in, const RunConfig&) {
  const LieAlgebra g = algebra_arg(in);
  const EEpsForm f = e_eps_arg(in, g);
  if (!in.contains("H")) throw JsonSchemaError("H", "missing required field");
  const ThreeForm H = *three_form_arg(in, g);
  CommandOutput out = report_output(check_twisted_dual_dirac_group_datum(TwistedDualDiracGroupDatum(g, f.E, f.eps, H)));
  out.body["E_eps"] = e_eps_json(f);
  return out;
}

CommandOutput group_cocycle_space(const json& in, const RunConfig&) {
  const LieAlgebra g = algebra_arg(in);
  const Subspace E = subspace_arg(in, "E", g, true);
  CommandOutput out;
  out.body["E"] = to_json(E.basis());
  if (!is_ideal(g, E)) {
    out.verdict = false;
    out.body["detail"] = "E is not an ideal";
    return out;
  }
  const CocycleSpace space = invariant_cocycle_space(g, E);
  out.body["dimension"] = space.dimension;
  json basis = json::array();
  for (const auto& b : space.basis) basis.push_back(to_json(b));
  out.body["basis"] = std::move(basis);
  return out;
}

CommandOutput group_multiplicativity(const json& in, const RunConfig&) {
  const LieAlgebra g = algebra_arg(in);
  const Subspace k = subspace_arg(in, "k", g, false);
  const Eigen::Index q = g.dim() - k.dim();
  const json& elems = require_field(in, "elements", "");
  if (!elems.is_array()) throw JsonSchemaError("elements", "expected an array of {ad, beta}");
  std::vector<GroupElementSample> samples;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::string where = "elements[" + std::to_string(i) + "]";
    if (!elems[i].is_object()) throw JsonSchemaError(where, "expected {\"ad\": ..., \"beta\": ...}");
    samples.push_back({matrix_from_json(require_field(elems[i], "ad", where), where + ".ad", g.dim()),
                       matrix_from_json(require_field(elems[i], "beta", where), where + ".beta", q)});
  }
  const json& trips = require_field(in, "triples", "");
  if (!trips.is_array()) throw JsonSchemaError("triples", "expected an array of [g, h, gh] index triples");
  std::vector<MultiplicationTriple> triples;
  for (std::size_t i = 0; i < trips.size(); ++i) {
    const std::string where = "triples[" + std::to_string(i) + "]";
    const json& t = trips[i];
    if (!t.is_array() || t.size() != 3) throw JsonSchemaError(where, "expected [g, h, gh]");
    int idx[3];
    for (int c = 0; c < 3; ++c) {
      if (!t[static_cast<std::size_t>(c)].is_number_integer())
        throw JsonSchemaError(where, "indices must be integers");
      idx[c] = t[static_cast<std::size_t>(c)].get<int>();
      if (idx[c] < 0 || idx[c] >= static_cast<int>(samples.size()))
        throw JsonSchemaError(where, "index out of range");
    }
    triples.push_back({idx[0], idx[1], idx[2]});
  }
  const auto residuals = guarded("elements", [&] { return multiplicativity_residual(g, k, samples, triples); });
  CommandOutput out;
  json res = json::array();
  json failing = json::array();
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    res.push_back(to_json(residuals[i]));
    if (!is_zero_matrix(residuals[i])) failing.push_back(i);
  }
  out.verdict = failing.empty();
  out.body["residuals"] = std::move(res);
  out.body["failing_triples"] = std::move(failing);
  return out;
}

// ------------------------------------------------------------------- lie

CommandOutput lie_integrable(const json& in, const RunConfig&) {
  const LieAlgebra g = algebra_arg(in);
  const LinearDirac d = structure_from_json(require_field(in, "structure", ""), "structure");
  if (d.n() != g.dim())
    throw JsonSchemaError("structure", "structure lives on dimension " + std::to_string(d.n()) + " but dim g = " +
                                           std::to_string(g.dim()));
  const auto H = three_form_arg(in, g);
  CommandOutput out;
  out.verdict = invariant_integrable(g, d, H ? &*H : nullptr);
  const EEpsForm e = decompose_E_eps(d);
  out.body["E_eps"] = e_eps_json(e);
  out.body["subalgebra"] = is_subalgebra(g, e.E);
  return out;
}

CommandOutput lie_bracket(const json& in, const RunConfig&) {
  const LieAlgebra g = algebra_arg(in);
  const InvariantSection a = section_arg(in, "a", g.dim());
  const InvariantSection b = section_arg(in, "b", g.dim());
  const auto H = three_form_arg(in, g);
  CommandOutput out;
  out.body["result"] = section_json(invariant_courant_bracket(g, a, b, H ? &*H : nullptr));
  return out;
}

CommandOutput lie_schouten(const json& in, const RunConfig&) {
  const LieAlgebra g = algebra_arg(in);
  const Subspace k = subspace_arg(in, "k", g, false);
  if (!is_ideal(g, k)) throw JsonSchemaError("k", "must be an ideal");
  const Eigen::Index q = g.dim() - k.dim();
  const Matrix P = antisymmetric_matrix(in, "P", q);
  const Matrix Q = in.contains("Q") ? antisymmetric_matrix(in, "Q", q) : P;
  std::optional<Matrix> splitting;
  if (in.contains("splitting")) {
    splitting = matrix_from_json(in["splitting"], "splitting", q);
    if (splitting->rows() != g.dim() || splitting->cols() != q)
      throw JsonSchemaError("splitting", "expected a " + std::to_string(g.dim()) + "x" + std::to_string(q) + " matrix");
  }
  const AlternatingForm T = guarded("splitting", [&] { return schouten_quotient(g, k, P, Q, splitting); });
  CommandOutput out;
  out.verdict = T.is_zero();
  out.body["schouten"] = to_json(T);
  return out;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"structure decompose", structure_decompose},
      {"structure btransform", structure_btransform},
      {"structure gc-endo", structure_gc_endo},
      {"structure check", structure_check},
      {"map dirac", map_dirac},
      {"map dual-dirac", map_dual_dirac},
      {"map abm", map_abm},
      {"check map-dirac", map_dirac},
      {"group dirac-datum", group_dirac_datum},
      {"group dual-dirac-datum", group_dual_dirac_datum},
      {"group gc-datum", group_gc_datum},
      {"group twisted-datum", group_twisted_datum},
      {"group cocycle-space", group_cocycle_space},
      {"group multiplicativity", group_multiplicativity},
      {"lie integrable", lie_integrable},
      {"lie bracket", lie_bracket},
      {"lie schouten", lie_schouten},
  };
  return table;
}

std::string join_words(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

json read_input(const RunConfig& config, std::istream& stdin_source) {
  std::string text;
  if (config.inline_input) {
    text = *config.inline_input;
  } else if (config.input_path == "-") {
    std::ostringstream os;
    os << stdin_source.rdbuf();
    text = os.str();
  } else if (!config.input_path.empty()) {
    std::ifstream file(config.input_path);
    if (!file) throw JsonSchemaError("--input", "cannot open '" + config.input_path + "'");
    std::ostringstream os;
    os << file.rdbuf();
    text = os.str();
  } else {
    throw JsonSchemaError("--input", "an input document is required");
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonSchemaError("input", e.what());
  }
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os << report.value("command", std::string("?")) << ": ";
  if (report.contains("error")) {
    os << "error in " << report["error"]["field"].get<std::string>() << ": "
       << report["error"]["message"].get<std::string>() << "\n";
    return os.str();
  }
  os << (report["verdict"].get<bool>() ? "true" : "false") << "\n";
  for (const auto& [key, value] : report.items()) {
    if (key == "command" || key == "verdict" || key == "input") continue;
    if (key == "checks") {
      for (const auto& c : value) {
        os << "  " << c["name"].get<std::string>() << ": " << c["status"].get<std::string>();
        if (!c["witness"].is_null()) os << " witness " << c["witness"].dump();
        if (c.contains("detail")) os << " (" << c["detail"].get<std::string>() << ")";
        os << "\n";
      }
      continue;
    }
    os << "  " << key << ": " << value.dump() << "\n";
  }
  return os.str();
}

RunResult finish(json report, int exit_code, const std::string& text = {}) {
  RunResult r;
  r.exit_code = exit_code;
  r.text = text.empty() ? render_text(report) : text;
  r.report = std::move(report);
  return r;
}

RunResult malformed(const std::string& command, const std::string& field, const std::string& message) {
  json report;
  report["command"] = command;
  report["error"] = json{{"field", field.empty() ? "input" : field}, {"message", message}};
  return finish(std::move(report), 2);
}

RunResult run_suite_command(const RunConfig& config) {
  const std::string command = join_words(config.command);
  if (config.command.size() != 2) return malformed(command, "command", "expected 'suite <name>'");
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), config.command[1]) == names.end())
    return malformed(command, "command", "unknown suite '" + config.command[1] + "'");
  if (config.suite.trials < 0) return malformed(command, "--trials", "must be non-negative");
  if (config.suite.max_dim < 1) return malformed(command, "--max-dim", "must be at least 1");
  const SuiteReport s = run_suite(config.command[1], config.suite);
  json report;
  report["command"] = command;
  report["input"] =
      json{{"seed", config.suite.seed}, {"trials", config.suite.trials}, {"max_dim", config.suite.max_dim}};
  report["verdict"] = s.passed();
  const json body = to_json(s, config.timing);
  for (const auto& [key, value] : body.items()) report[key] = value;
  return finish(std::move(report), s.passed() ? 0 : 1, to_text(s, config.timing));
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> names;
  for (const auto& entry : handlers()) names.push_back(entry.first);
  for (const auto& s : {"equivalences", "stability", "functoriality", "groups"}) names.push_back(std::string("suite ") + s);
  return names;
}

RunResult run(const RunConfig& config, std::istream& stdin_source) {
  const std::string command = join_words(config.command);
  if (!config.command.empty() && config.command[0] == "suite") return run_suite_command(config);
  const auto it = handlers().find(command);
  if (it == handlers().end()) return malformed(command, "command", "unknown subcommand '" + command + "'");
  json input;
  try {
    input = read_input(config, stdin_source);
    const CommandOutput out = it->second(input, config);
    json report;
    report["command"] = command;
    report["input"] = input;
    report["verdict"] = out.verdict;
    for (const auto& [key, value] : out.body.items())
      if (key != "verdict") report[key] = value;
    return finish(std::move(report), out.verdict ? 0 : 1);
  } catch (const JsonSchemaError& e) {
    RunResult r = malformed(command, e.field(), e.message());
    if (!input.is_null()) r.report["input"] = input;
    return r;
  } catch (const std::exception& e) {
    RunResult r = malformed(command, "input", e.what());
    if (!input.is_null()) r.report["input"] = input;
    return r;
  }
}

}  // namespace dirac
