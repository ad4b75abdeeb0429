#pragma once

#include "octica/linsys.hpp"
#include "octica/paramfam.hpp"
#include "octica/singclass.hpp"
#include "octica/strata.hpp"
#include "octica/verify.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace octica::cli {

using nlohmann::json;

// Bad input that is the user's to fix; exit code 1.
class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path);

Rational rational_field(const json& v, const std::string& where);
Point point_field(const json& v, const std::string& where);
QPoly poly_field(const json& v, const std::string& where, const VarList& frame = xyz());

struct ConstraintFile {
  int degree = 0;
  std::vector<AnchoredCondition> conditions;
};
ConstraintFile parse_constraints(const json& doc);
std::vector<AnchoredCondition> parse_conditions(const json& list);

struct FamilyFile {
  UniversalFamily family;
  std::vector<AnchoredCondition> conditions;
  std::vector<std::vector<Rational>> points;  // empty: use the rational rank-drop points
  std::optional<QPoly> witness_line;
};
FamilyFile parse_family(const json& doc);

json to_json(const Point& p);
json to_json(const LinearSystem& s, bool with_basis);
json to_json(const SingularityReport& r);
json to_json(const PointReport& p);
json to_json(const CurveSingularityProfile& p);
json to_json(const StratumRecord& r);
json to_json(const Catalogue& c);
json to_json(const LemmaCheckResult& r);

}  // namespace octica::cli
