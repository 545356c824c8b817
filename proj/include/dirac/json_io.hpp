#ifndef DIRAC_JSON_IO_HPP
#define DIRAC_JSON_IO_HPP

// JSON forms of scalars, matrices, structures, Lie algebras and group data.
// Scalars are strings in the canonical grammar ("3/2", "1/2+2*i", "-i");
// plain JSON integers are accepted on input.  Every loader reports schema
// violations as JsonSchemaError naming the offending field.

#include "dirac/group_data.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace dirac {

using json = nlohmann::ordered_json;

class JsonSchemaError : public std::invalid_argument {
public:
  JsonSchemaError(const std::string& field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(field), message_(message) {}
  const std::string& field() const { return field_; }
  const std::string& message() const { return message_; }

private:
  std::string field_;
  std::string message_;
};

const json& require_field(const json& obj, const std::string& key, const std::string& path);

Scalar scalar_from_json(const json& j, const std::string& path);
json to_json(const Scalar& s);

/// Array of equal-length rows.  An empty array has `cols_if_empty` columns.
Matrix matrix_from_json(const json& j, const std::string& path, Eigen::Index cols_if_empty = 0);
json to_json(const Matrix& m);
json to_json(const Vector& v);
Vector vector_from_json(const json& j, const std::string& path, Eigen::Index expected);

/// One of {"basis"}, {"E_eps"}, {"pi_U"}, {"complex"}, {"poisson"},
/// {"presymplectic"}, {"symplectic_gc"}; normalised to a LinearDirac.
LinearDirac structure_from_json(const json& j, const std::string& path);
/// {"n": n, "basis": [...]}.
json structure_to_json(const LinearDirac& d);

/// Built-in name (string or {"builtin": name}) or {"dim", "brackets"}.
LieAlgebra algebra_from_json(const json& j, const std::string& path);
json algebra_to_json(const LieAlgebra& g);

/// Subspace spanned by the rows, inside a space of dimension `ambient`.
Subspace subspace_from_json(const json& j, const std::string& path, Eigen::Index ambient);

/// Dense n x n x n nested array, or {"terms": [{"indices": [i,j,k], "value": s}]}
/// with each term expanded antisymmetrically.
ThreeForm three_form_from_json(const json& j, const std::string& path, int n);
json to_json(const AlternatingForm& w);

json to_json(const CheckResult& c);
json to_json(const Report& r);

}  // namespace dirac

#endif  // DIRAC_JSON_IO_HPP
