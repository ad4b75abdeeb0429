#include "io.hpp"

#include "octica/parse.hpp"
#include "octica/random.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef OCTICA_SOURCE_DIR
#define OCTICA_SOURCE_DIR "."
#endif

using namespace octica;
using namespace octica::cli;

namespace {

// A check ran and failed; exit code 2.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool as_json(const std::string& format) {
  if (format == "json") return true;
  if (format == "text") return false;
  throw UserError("--format must be text or json");
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string describe_point(const PointReport& p) {
  std::ostringstream out;
  out << to_string(p.point) << "  " << p.report.type.symbol() << "  multiplicity " << p.report.multiplicity << "  mu ";
  if (p.report.milnor) out << *p.report.milnor;
  else out << "inf";
  if (p.tangent_line) out << "  tangent " << to_string(*p.tangent_line);
  if (!p.report.type.half_log_canonical() && !p.report.reason.empty()) out << "  (" << p.report.reason << ")";
  return out.str();
}

// --- linsys ---------------------------------------------------------------

struct LinsysArgs {
  int degree = -1;
  std::string constraints;
  bool basis = false;
  std::string format = "text";
};

void run_linsys(const LinsysArgs& a) {
  auto file = parse_constraints(read_json_file(a.constraints));
  int degree = a.degree >= 0 ? a.degree : file.degree;
  if (degree <= 0) throw UserError("no degree: pass --degree or set \"degree\" in the constraint file");
  auto sys = condition_ideal_graded_piece(file.conditions, degree);
  if (as_json(a.format)) return print_json(to_json(sys, a.basis));
  std::cout << "dim_forms: " << sys.dim_forms << "\n";
  std::cout << "dim_projective: " << sys.dim_projective << "\n";
  if (a.basis)
    for (const auto& b : sys.basis) std::cout << to_string(b) << "\n";
}

// --- classify -------------------------------------------------------------

struct ClassifyArgs {
  std::string curve;
  std::vector<std::string> points;
  std::string format = "text";
};

void run_classify(const ClassifyArgs& a) {
  QPoly f = parse_poly(a.curve);
  if (f.is_zero()) throw UserError("the zero polynomial is not a curve");
  bool homogeneous = f.is_homogeneous();
  // Affine input is read in the chart z = 1 and classified at its origin.
  if (!homogeneous) {
    f = f.in_frame(xyz());
    if (f.degree_in(2) > 0) throw UserError("a non-homogeneous curve must be affine in x and y");
    int d = f.total_degree();
    QPoly h(xyz());
    for (const auto& [e, c] : f.terms()) {
      Exponents ex = e;
      ex[2] = d - e[0] - e[1];
      h.add_term(ex, c);
    }
    f = h;
  }
  std::vector<Point> pts;
  for (const auto& s : a.points) pts.push_back(parse_point(s));
  if (!homogeneous && pts.empty()) pts.push_back({Rational(0), Rational(0), Rational(1)});

  if (!pts.empty()) {
    json out = json::array();
    for (const auto& p : pts) {
      if (evaluate(f, {p[0], p[1], p[2]}) != 0) throw UserError("point " + to_string(p) + " is not on the curve");
      LocalCurve g = localize(f, p);
      PointReport pr{p, classify(g), std::nullopt};
      if (as_json(a.format)) out.push_back(to_json(pr));
      else std::cout << describe_point(pr) << "\n";
    }
    if (as_json(a.format)) print_json(out);
    return;
  }
  auto prof = curve_profile(f);
  if (as_json(a.format)) return print_json(to_json(prof));
  std::cout << "degree " << prof.degree << "\n";
  for (const auto& [e, q] : prof.multiple_components) std::cout << "multiple component (exponent " << e << "): " << to_string(q) << "\n";
  for (const auto& p : prof.points) std::cout << describe_point(p) << "\n";
  if (prof.residual_milnor_budget) std::cout << "residual Milnor budget " << *prof.residual_milnor_budget << "\n";
  auto c = prof.elliptic_counts();
  std::cout << "elliptic counts (a,b,c,d) = (" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")\n";
  std::cout << "verdict: " << prof.verdict << "\n";
}

// --- param-analyze --------------------------------------------------------

struct ParamArgs {
  std::string family;
  std::string format = "text";
};

void run_param(const ParamArgs& a) {
  auto file = parse_family(read_json_file(a.family));
  auto m = build_condition_matrix(file.family, file.conditions);
  auto locus = rank_drop_locus(m);
  std::vector<std::vector<Rational>> points = file.points;
  if (points.empty() && file.family.params.size() == 1)
    for (const auto& r : locus.rational_points) points.push_back({r});

  json j{{"parameters", file.family.params},
         {"family_size", file.family.size()},
         {"matrix", {m.m.rows, m.m.cols}},
         {"generic_rank", locus.generic_rank},
         {"rank_drop_gcd", to_string(locus.minor_gcd)},
         {"minors_complete", locus.complete}};
  json rats = json::array();
  for (const auto& r : locus.rational_points) rats.push_back(to_string(r));
  j["rank_drop_rational_points"] = rats;
  json comps = json::array();
  for (const auto& p : points) {
    auto cmp = compare_kernels_at(m, p);
    json at = json::array();
    for (const auto& v : p) at.push_back(to_string(v));
    json c{{"at", at},
           {"special_kernel", cmp.special_kernel.size()},
           {"limit_kernel", cmp.limit_kernel.size()},
           {"inclusion_holds", cmp.inclusion_holds},
           {"strict", cmp.strict}};
    if (file.witness_line) {
      auto split = component_split_report(file.family, cmp, p, *file.witness_line);
      c["split"] = {{"split", split.split},
                    {"special_multiplicity", split.special_multiplicity},
                    {"limit_multiplicity", split.limit_multiplicity}};
    }
    comps.push_back(c);
  }
  j["comparisons"] = comps;
  if (as_json(a.format)) return print_json(j);
  std::cout << "generic rank: " << locus.generic_rank << "\n";
  std::cout << "rank-drop locus: " << to_string(locus.minor_gcd) << (locus.complete ? "" : " (minor list capped)") << "\n";
  for (const auto& c : comps) {
    std::cout << "at " << c["at"].dump() << ": special kernel " << c["special_kernel"] << ", limit kernel " << c["limit_kernel"]
              << (c["strict"].get<bool>() ? " (strictly contained)" : " (equal)") << "\n";
    if (c.contains("split"))
      std::cout << "  witness line multiplicity: special " << c["split"]["special_multiplicity"] << ", limit "
                << c["split"]["limit_multiplicity"] << "\n";
  }
}

// --- catalog, diagram -----------------------------------------------------

void run_catalog(const std::string& format) {
  auto cat = build_catalogue();
  if (as_json(format)) return print_json(to_json(cat));
  std::cout << cat.stratum_count() << " strata, " << cat.components.size() << " components\n";
  for (const auto& r : cat.components) {
    std::cout << r.label.ascii() << "  dim " << r.dimension << "  " << (r.hodge ? r.hodge->name() : std::string("-")) << "  "
              << r.birational_type << "\n";
  }
  std::cout << "empty:";
  for (const auto& e : cat.empty) std::cout << " " << e.label.ascii();
  std::cout << "\n";
}

void run_diagram(const std::string& scope, const std::string& out) {
  DegenerationGraph g;
  if (scope == "simply-elliptic") g = simply_elliptic_diagram();
  else if (scope == "full-rules") g = label_degeneration_graph();
  else throw UserError("--scope must be simply-elliptic or full-rules");
  if (out.empty() || out == "-") {
    std::cout << g.to_dot();
    return;
  }
  std::ofstream f(out);
  if (!f) throw UserError("cannot write '" + out + "'");
  f << g.to_dot();
  std::cout << "wrote " << g.nodes.size() << " nodes, " << g.edges.size() << " edges to " << out << "\n";
}

// --- verify ---------------------------------------------------------------

void run_verify(const std::vector<std::string>& lemmas, const std::string& format) {
  std::vector<std::string> ids = lemmas.empty() ? lemma_ids() : lemmas;
  json all = json::array();
  bool ok = true;
  for (const auto& id : ids) {
    LemmaCheckResult r;
    try {
      r = run_lemma(id);
    } catch (const std::invalid_argument& e) {
      throw UserError(e.what());
    }
    ok = ok && r.all_passed;
    if (as_json(format)) {
      all.push_back(to_json(r));
      continue;
    }
    std::cout << (r.all_passed ? "PASS " : "FAIL ") << r.lemma_id << "  (" << r.instances_checked << " instances)\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  }
  if (as_json(format)) print_json(all);
  if (!ok) throw CheckFailed("verification failed");
}

// --- witnesses ------------------------------------------------------------

void run_witnesses(bool regenerate, const std::string& out, int candidates) {
  if (!regenerate) {
    int bad = 0;
    for (const auto& c : catalogue_components()) {
      auto w = validate_witness(c, witness(c));
      std::cout << (w.valid ? "ok   " : "FAIL ") << c.ascii() << (w.valid ? "" : "  " + w.reason) << "\n";
      bad += !w.valid;
    }
    if (bad) throw CheckFailed(std::to_string(bad) + " stored witnesses fail validation");
    return;
  }
  std::ostringstream body;
  body << "// Generated by `octica witnesses --regenerate`.\n";
  for (const auto& c : catalogue_components()) {
    auto w = search_witness(c, candidates);
    if (!w) throw CheckFailed("no witness found for " + c.ascii() + " within " + std::to_string(candidates) + " candidates");
    body << "{\"" << c.ascii() << "\", \"" << to_string(*w) << "\"},\n";
    std::cerr << c.ascii() << "\n";
  }
  std::ofstream f(out);
  if (!f) throw UserError("cannot write '" + out + "'");
  f << body.str();
  std::cout << "wrote " << catalogue_components().size() << " witnesses to " << out << "\n";
}

std::uint64_t parse_seed(const std::string& text, const std::string& source) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UserError(source + ": not a seed: '" + text + "'");
  }
}

void report_error(bool json_errors, const std::string& kind, const std::string& message, int code,
                  std::optional<std::pair<int, int>> pos = std::nullopt) {
  if (!json_errors) {
    std::cerr << "octica: " << message << "\n";
    return;
  }
  json j{{"error", {{"kind", kind}, {"message", message}}}, {"exit_code", code}};
  if (pos) {
    j["error"]["line"] = pos->first;
    j["error"]["column"] = pos->second;
  }
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on plane octics and the strata of Gorenstein stable surfaces with K^2 = 2, chi = 4"};
  app.require_subcommand(1);
  std::optional<std::string> seed;
  bool json_errors = false;
  app.add_option("--seed", seed, "Seed for every randomised routine (default: OCTICA_SEED or built-in)");
  app.add_flag("--json-errors", json_errors, "Report errors as JSON on stderr");

  LinsysArgs la;
  auto* linsys = app.add_subcommand("linsys", "Dimension and basis of a constrained linear system");
  linsys->add_option("--degree", la.degree, "Degree of the forms (overrides the file)");
  linsys->add_option("--constraints", la.constraints, "Constraint file (JSON)")->required();
  linsys->add_flag("--basis", la.basis, "Print a basis");
  linsys->add_option("--format", la.format, "text or json");

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Classify the singular points of a plane curve");
  classify_cmd->add_option("--curve", ca.curve, "Polynomial in x, y, z; affine input is read in the chart z = 1")->required();
  classify_cmd->add_option("--point", ca.points, "Point \"a,b,c\" to classify at (repeatable)");
  classify_cmd->add_option("--format", ca.format, "text or json");

  ParamArgs pa;
  auto* param = app.add_subcommand("param-analyze", "Rank and kernel analysis of a parametric family");
  param->add_option("--family", pa.family, "Family file (JSON)")->required();
  param->add_option("--format", pa.format, "text or json");

  std::string catalog_format = "text";
  auto* catalog = app.add_subcommand("catalog", "All inhabited strata and their components");
  catalog->add_option("--format", catalog_format, "text or json");

  std::string scope = "simply-elliptic", dot_out;
  auto* diagram = app.add_subcommand("diagram", "Degeneration diagram as DOT");
  diagram->add_option("--scope", scope, "simply-elliptic or full-rules");
  diagram->add_option("--out", dot_out, "Output file (default stdout)");

  std::vector<std::string> lemmas;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--lemma", lemmas, "Suite id (repeatable): bezout, degree-bounds, milnor, nonexistence, four-33-points");
  verify->add_option("--format", verify_format, "text or json");

  bool regenerate = false;
  std::string fixture_out = std::string(OCTICA_SOURCE_DIR) + "/src/strata/witness_fixtures.inc";
  int candidates = 20;
  auto* witnesses = app.add_subcommand("witnesses", "Check the stored witnesses, or regenerate them");
  witnesses->add_flag("--regenerate", regenerate, "Search new witnesses and rewrite the fixture file");
  witnesses->add_option("--out", fixture_out, "Fixture file to write");
  witnesses->add_option("--candidates", candidates, "Candidates tried per component");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    report_error(json_errors || std::find(argv, argv + argc, std::string("--json-errors")) != argv + argc, "usage", e.what(), 1);
    return 1;
  }

  try {
    if (seed) set_global_seed(parse_seed(*seed, "--seed"));
    else if (const char* env = std::getenv("OCTICA_SEED"); env && *env) set_global_seed(parse_seed(env, "OCTICA_SEED"));

    if (*linsys) run_linsys(la);
    else if (*classify_cmd) run_classify(ca);
    else if (*param) run_param(pa);
    else if (*catalog) run_catalog(catalog_format);
    else if (*diagram) run_diagram(scope, dot_out);
    else if (*verify) run_verify(lemmas, verify_format);
    else if (*witnesses) run_witnesses(regenerate, fixture_out, candidates);
  } catch (const ParseError& e) {
    report_error(json_errors, "parse", json_errors ? e.message() : e.what(), 1, std::make_pair(e.line(), e.column()));
    return 1;
  } catch (const UserError& e) {
    report_error(json_errors, "input", e.what(), 1);
    return 1;
  } catch (const CheckFailed& e) {
    report_error(json_errors, "check", e.what(), 2);
    return 2;
  } catch (const std::invalid_argument& e) {
    report_error(json_errors, "input", e.what(), 1);
    return 1;
  } catch (const std::exception& e) {
    report_error(json_errors, "internal", e.what(), 2);
    return 2;
  }
  return 0;
}
