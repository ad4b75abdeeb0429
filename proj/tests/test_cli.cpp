#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout when `merge` is set.
Run cli(const std::string& args, bool merge = false) {
  std::string cmd = std::string(OCTICA_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tools(const std::string& rel) { return std::string(OCTICA_TOOLS_DIR) + "/" + rel; }

json load(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  return json::parse(in);
}

bool has_type(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

// The subset of JSON Schema used by the shipped schemas.
void validate(const json& v, const json& schema, const std::string& path, std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) ok = has_type(v, t);
    else
      for (const auto& alt : t) ok = ok || has_type(v, alt);
    if (!ok) {
      errors.push_back(path + ": expected type " + t.dump());
      return;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& e : schema["enum"]) ok = ok || e == v;
    if (!ok) errors.push_back(path + ": not in enum");
  }
  if (v.is_number() && schema.contains("minimum") && v.get<double>() < schema["minimum"].get<double>())
    errors.push_back(path + ": below minimum");
  if (v.is_number() && schema.contains("maximum") && v.get<double>() > schema["maximum"].get<double>())
    errors.push_back(path + ": above maximum");
  if (v.is_array() && schema.contains("maxItems") && v.size() > schema["maxItems"].get<std::size_t>())
    errors.push_back(path + ": too many items");
  if (v.is_object()) {
    for (const auto& key : schema.value("required", json::array()))
      if (!v.contains(key.get<std::string>())) errors.push_back(path + ": missing " + key.get<std::string>());
    if (schema.contains("properties"))
      for (const auto& [key, sub] : schema["properties"].items())
        if (v.contains(key)) validate(v[key], sub, path + "." + key, errors);
  }
  if (v.is_array() && schema.contains("items"))
    for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], schema["items"], path + "[" + std::to_string(i) + "]", errors);
}

void check_schema(const json& v, const std::string& schema_file) {
  std::vector<std::string> errors;
  validate(v, load(tools("schemas/" + schema_file)), "$", errors);
  std::string all;
  for (const auto& e : errors) all += e + "\n";
  INFO(all);
  CHECK(errors.empty());
}

}  // namespace

TEST_CASE("the validator rejects malformed documents") {
  json schema = load(tools("schemas/verify.schema.json"));
  std::vector<std::string> errors;
  validate(json::array({{{"lemma_id", 3}}}), schema, "$", errors);
  CHECK(errors.size() >= 2);
}

TEST_CASE("shipped input files match their schemas") {
  check_schema(load(tools("data/listing1.json")), "constraints.schema.json");
  check_schema(load(tools("data/two_33_points.json")), "constraints.schema.json");
  check_schema(load(tools("data/listing2.json")), "family.schema.json");
}

TEST_CASE("linsys on the quadruple-point constraints") {
  auto r = cli("linsys --constraints " + tools("data/listing1.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("dim_forms: 35") != std::string::npos);
  auto j = cli("linsys --degree 6 --constraints " + tools("data/two_33_points.json") + " --format json --basis");
  REQUIRE(j.code == 0);
  auto doc = json::parse(j.out);
  CHECK(doc["dim_forms"] == 4);
  CHECK(doc["basis"].size() == 4);
}

TEST_CASE("classify") {
  auto r = cli("classify --curve \"x^4+x^2*y^2+y^4\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("X_9") != std::string::npos);
  auto j = cli("classify --curve \"x*y*(x-y)*(x+y)*z^4 + x^8 + y^8\" --format json");
  REQUIRE(j.code == 0);
  check_schema(json::parse(j.out), "profile.schema.json");
  auto affine = cli("classify --curve \"x^3+x^2*y^2+y^7\"");
  CHECK(affine.out.find("J_2,1") != std::string::npos);
  auto at = cli("classify --curve \"x^2*y - z^3\" --point \"0,1,0\" --format json");
  REQUIRE(at.code == 0);
  CHECK(json::parse(at.out)[0]["type"] == "A_2");
}

TEST_CASE("param-analyze reproduces the rank drop at t = 0") {
  auto r = cli("param-analyze --family " + tools("data/listing2.json") + " --format json");
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["generic_rank"] == 10);
  CHECK(doc["rank_drop_gcd"] == "t");
  REQUIRE(doc["comparisons"].size() == 1);
  CHECK(doc["comparisons"][0]["strict"] == true);
  CHECK(doc["comparisons"][0]["split"]["special_multiplicity"] == 1);
  CHECK(doc["comparisons"][0]["split"]["limit_multiplicity"] == 2);
}

TEST_CASE("catalog json: schema, counts and determinism") {
  auto a = cli("catalog --format json");
  REQUIRE(a.code == 0);
  auto doc = json::parse(a.out);
  check_schema(doc, "catalogue.schema.json");
  CHECK(doc["strata"].size() == 47);
  CHECK(doc["components"].size() == 78);
  CHECK(cli("catalog --format json").out == a.out);
  CHECK(cli("--seed 99 catalog --format json").out == a.out);
}

TEST_CASE("diagram and verify") {
  std::string dot = "octica_test_fig2.dot";
  auto d = cli("diagram --scope simply-elliptic --out " + dot);
  CHECK(d.code == 0);
  CHECK(d.out.find("18 nodes, 29 edges") != std::string::npos);
  std::remove(dot.c_str());
  auto v = cli("verify --lemma four-33-points --lemma bezout --format json");
  REQUIRE(v.code == 0);
  auto doc = json::parse(v.out);
  check_schema(doc, "verify.schema.json");
  CHECK(doc.size() == 2);
}

TEST_CASE("errors and exit codes") {
  auto parse = cli("--json-errors classify --curve \"x +* y\"", true);
  CHECK(parse.code == 1);
  auto err = json::parse(parse.out);
  check_schema(err, "error.schema.json");
  CHECK(err["error"]["kind"] == "parse");
  CHECK(err["error"]["column"] == 4);
  CHECK(cli("classify --curve \"x + w\"").code == 1);
  CHECK(cli("no-such-command").code == 1);
  CHECK(cli("linsys --constraints /nonexistent/file.json").code == 1);
  CHECK(cli("verify --lemma no-such-lemma").code == 1);
  CHECK(cli("--seed banana catalog").code == 1);
  CHECK(cli("diagram --scope everything").code == 1);
  CHECK(cli("classify --curve \"x*y\" --point \"1,1,1\"").code == 1);
}
