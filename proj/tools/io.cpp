#include "io.hpp"

#include "octica/parse.hpp"

#include <fstream>

namespace octica::cli {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UserError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UserError(path + ": " + e.what());
  }
}

Rational rational_field(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw UserError(where + ": " + e.what());
    }
  }
  throw UserError(where + ": expected an integer or a string \"p/q\"");
}

Point point_field(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_point(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw UserError(where + ": " + e.what());
    }
  }
  if (!v.is_array() || v.size() != 3) throw UserError(where + ": a point has three coordinates");
  Point p{rational_field(v[0], where), rational_field(v[1], where), rational_field(v[2], where)};
  if (p[0] == 0 && p[1] == 0 && p[2] == 0) throw UserError(where + ": (0:0:0) is not a point");
  return p;
}

QPoly poly_field(const json& v, const std::string& where, const VarList& frame) {
  if (!v.is_string()) throw UserError(where + ": expected a polynomial string");
  try {
    return parse_poly(v.get<std::string>(), frame);
  } catch (const ParseError& e) {
    throw UserError(where + ": " + e.what());
  }
}

namespace {

const json& required(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw UserError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

int int_field(const json& obj, const char* key, const std::string& where) {
  const json& v = required(obj, key, where);
  if (!v.is_number_integer()) throw UserError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

}  // namespace

std::vector<AnchoredCondition> parse_conditions(const json& list) {
  if (!list.is_array()) throw UserError("conditions: expected an array");
  std::vector<AnchoredCondition> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& c = list[i];
    std::string where = "conditions[" + std::to_string(i) + "]";
    const json& kind_v = required(c, "kind", where);
    if (!kind_v.is_string()) throw UserError(where + ".kind: expected a string");
    std::string kind = kind_v.get<std::string>();
    AnchoredCondition a;
    if (kind == "multiplicity") {
      a = AnchoredCondition::multiplicity(point_field(required(c, "point", where), where + ".point"), int_field(c, "order", where));
    } else if (kind == "nn_point") {
      a = AnchoredCondition::nn_point(point_field(required(c, "point", where), where + ".point"),
                                      poly_field(required(c, "tangent", where), where + ".tangent"), int_field(c, "order", where));
    } else if (kind == "contains_curve") {
      a = AnchoredCondition::contains_curve(poly_field(required(c, "form", where), where + ".form"), int_field(c, "order", where));
    } else if (kind == "cone_multiple") {
      a = AnchoredCondition::cone_multiple(point_field(required(c, "point", where), where + ".point"),
                                           poly_field(required(c, "tangent", where), where + ".tangent"), int_field(c, "order", where),
                                           int_field(c, "cone_power", where));
    } else if (kind == "nn_degenerate") {
      a = AnchoredCondition::nn_degenerate(point_field(required(c, "point", where), where + ".point"),
                                           poly_field(required(c, "tangent", where), where + ".tangent"), int_field(c, "order", where),
                                           rational_field(required(c, "second_order", where), where + ".second_order"));
    } else {
      throw UserError(where + ": unknown kind '" + kind + "'");
    }
    try {
      a.validate();
    } catch (const AnchorError& e) {
      throw UserError(where + ": " + e.what());
    }
    out.push_back(a);
  }
  return out;
}

ConstraintFile parse_constraints(const json& doc) {
  if (!doc.is_object()) throw UserError("constraint file: expected an object");
  ConstraintFile f;
  if (doc.contains("degree")) f.degree = int_field(doc, "degree", "constraint file");
  if (doc.contains("parameters") && !doc.at("parameters").empty())
    throw UserError("constraint file: parameters belong in a family file (param-analyze)");
  f.conditions = parse_conditions(doc.value("conditions", json::array()));
  return f;
}

FamilyFile parse_family(const json& doc) {
  if (!doc.is_object()) throw UserError("family file: expected an object");
  FamilyFile f;
  const json& fam = required(doc, "family", "family file");
  std::string kind = required(fam, "kind", "family").get<std::string>();
  if (kind == "moving_tangent") {
    f.family = moving_tangent_family(int_field(fam, "n", "family"), int_field(fam, "degree", "family"));
  } else if (kind == "transported") {
    VarList params;
    for (const auto& p : required(fam, "parameters", "family")) params.push_back(p.get<std::string>());
    if (params.empty()) throw UserError("family.parameters: at least one parameter");
    VarList frame = xyz();
    frame.insert(frame.end(), params.begin(), params.end());
    auto base = condition_ideal_graded_piece(parse_conditions(fam.value("base", json::array())), int_field(fam, "degree", "family"));
    const json& imgs = required(fam, "images", "family");
    if (!imgs.is_array() || imgs.size() != 3) throw UserError("family.images: three substitutions for x, y, z");
    std::vector<PPoly> images;
    for (std::size_t i = 0; i < 3; ++i) {
      QPoly q = poly_field(imgs[i], "family.images[" + std::to_string(i) + "]", frame);
      images.push_back(split(q, xyz()).in_frame(xyz()));
    }
    // Coefficients must live in the declared parameter frame.
    for (auto& im : images) {
      PPoly fixed(xyz());
      for (const auto& [e, coeff] : im.terms()) fixed.add_term(e, coeff.in_frame(params));
      im = fixed;
    }
    f.family = transported_family(base, images, params);
  } else {
    throw UserError("family.kind: unknown kind '" + kind + "'");
  }
  f.conditions = parse_conditions(doc.value("conditions", json::array()));
  if (doc.contains("points"))
    for (const auto& p : doc.at("points")) {
      std::vector<Rational> v;
      for (const auto& c : p) v.push_back(rational_field(c, "points"));
      if (v.size() != f.family.params.size()) throw UserError("points: one value per parameter");
      f.points.push_back(v);
    }
  if (doc.contains("witness_line")) f.witness_line = poly_field(doc.at("witness_line"), "witness_line");
  return f;
}

json to_json(const Point& p) { return json::array({to_string(p[0]), to_string(p[1]), to_string(p[2])}); }

json to_json(const LinearSystem& s, bool with_basis) {
  json j{{"degree", s.degree}, {"dim_forms", s.dim_forms}, {"dim_projective", s.dim_projective}};
  if (with_basis) {
    j["basis"] = json::array();
    for (const auto& b : s.basis) j["basis"].push_back(to_string(b));
  }
  return j;
}

json to_json(const SingularityReport& r) {
  json j{{"type", r.type.symbol()},
         {"multiplicity", r.multiplicity},
         {"half_log_canonical", r.type.half_log_canonical()},
         {"milnor", r.milnor ? json(*r.milnor) : json("infinity")}};
  if (r.table_mu) j["table_mu"] = *r.table_mu;
  if (r.branches) j["branches"] = *r.branches;
  if (r.distinguished_tangent) j["distinguished_tangent_local"] = to_string(*r.distinguished_tangent);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

json to_json(const PointReport& p) {
  json j = to_json(p.report);
  j["point"] = to_json(p.point);
  if (p.tangent_line) j["tangent_line"] = to_string(*p.tangent_line);
  return j;
}

json to_json(const CurveSingularityProfile& p) {
  json pts = json::array();
  for (const auto& q : p.points) pts.push_back(to_json(q));
  json mult = json::object();
  for (const auto& [e, q] : p.multiple_components) mult[std::to_string(e)] = to_string(q);
  auto counts = p.elliptic_counts();
  json j{{"degree", p.degree},
         {"points", pts},
         {"multiple_components", mult},
         {"total_milnor_rational", p.total_milnor_rational},
         {"elliptic_counts", {counts[0], counts[1], counts[2], counts[3]}},
         {"half_log_canonical", p.half_log_canonical},
         {"verdict", p.verdict}};
  j["residual_milnor_budget"] = p.residual_milnor_budget ? json(*p.residual_milnor_budget) : json(nullptr);
  j["high_multiplicity_points"] = p.high_multiplicity_points ? json(*p.high_multiplicity_points) : json(nullptr);
  return j;
}

namespace {

json hodge_json(const HodgeType& h) { return {{"r", h.r}, {"s", h.s}, {"name", h.name()}}; }

}  // namespace

json to_json(const StratumRecord& r) {
  json possible = json::array();
  for (const auto& h : r.possible_hodge) possible.push_back(hodge_json(h));
  return {{"label", r.label.ascii()},
          {"name", r.label.name()},
          {"stratum", r.label.stratum().ascii()},
          {"normal", r.label.normal()},
          {"n", r.label.n},
          {"counts", {r.label.a, r.label.b, r.label.c, r.label.d}},
          {"tag", r.label.tag},
          {"dimension", r.dimension},
          {"dimension_source", r.dimension_source},
          {"hodge", r.hodge ? hodge_json(*r.hodge) : json(nullptr)},
          {"possible_hodge", possible},
          {"birational_type", r.birational_type},
          {"configuration", r.configuration},
          {"witness", r.witness}};
}

json to_json(const Catalogue& c) {
  json comps = json::array(), strata = json::array(), empty = json::array();
  for (const auto& r : c.components) {
    comps.push_back(to_json(r));
    std::string s = r.label.stratum().ascii();
    if (strata.empty() || strata.back()["label"] != s)
      strata.push_back({{"label", s}, {"name", r.label.stratum().name()}, {"components", json::array()}});
    strata.back()["components"].push_back(r.label.ascii());
  }
  for (const auto& e : c.empty) empty.push_back({{"label", e.label.ascii()}, {"name", e.label.name()}, {"reason", e.reason}});
  return {{"stratum_count", c.stratum_count()},
          {"component_count", c.components.size()},
          {"normal_stratum_count", c.normal_stratum_count()},
          {"normal_component_count", c.normal_component_count()},
          {"normal_component_multiset", c.normal_component_multiset()},
          {"strata", strata},
          {"components", comps},
          {"empty", empty}};
}

json to_json(const LemmaCheckResult& r) {
  return {{"lemma_id", r.lemma_id},
          {"instances_checked", r.instances_checked},
          {"all_passed", r.all_passed},
          {"counterexample", r.counterexample ? json(to_string(*r.counterexample)) : json(nullptr)},
          {"failures", r.failures}};
}

}  // namespace octica::cli
