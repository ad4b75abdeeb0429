#include "octica/parse.hpp"
#include "octica/paramfam.hpp"
#include "octica/random.hpp"
#include "spec.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace octica {

namespace {

struct Fixture {
  const char* label;
  const char* octic;
};

const Fixture kWitnesses[] = {
#include "witness_fixtures.inc"
    {nullptr, nullptr}};

std::uint64_t label_salt(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

int primes_of(const std::string& tag) {
  int k = 0;
  while (k < static_cast<int>(tag.size()) && tag[k] == '\'') ++k;
  return k;
}

bool is_j(const SingType& t) { return t.kind == SingKind::J10 || t.kind == SingKind::J2; }
bool is_quadruple(const SingType& t) { return t.kind == SingKind::X || t.kind == SingKind::Y; }

bool proportional(const std::array<Rational, 3>& u, const std::array<Rational, 3>& v) {
  return u[0] * v[1] == u[1] * v[0] && u[0] * v[2] == u[2] * v[0] && u[1] * v[2] == u[2] * v[1];
}

// Is there a conic through the three points tangent to the three lines?
bool tangents_along_conic(const std::vector<const PointReport*>& js) {
  try {
    QPoly q = conic_through({{js[0]->point, js[0]->tangent_line}, {js[1]->point, js[1]->tangent_line}, {js[2]->point, std::nullopt}});
    std::array<Rational, 3> grad;
    for (std::size_t i = 0; i < 3; ++i) grad[i] = evaluate(q.derivative(i), {js[2]->point[0], js[2]->point[1], js[2]->point[2]});
    return proportional(grad, linear_coeffs(*js[2]->tangent_line));
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string tag_verdict(const StratumLabel& l, const CurveSingularityProfile& prof) {
  std::vector<const PointReport*> js, quads;
  for (const auto& p : prof.points) {
    if (is_j(p.report.type)) js.push_back(&p);
    if (is_quadruple(p.report.type)) quads.push_back(&p);
  }
  std::stable_sort(js.begin(), js.end(),
                   [](const PointReport* u, const PointReport* v) { return u->report.type.kind == SingKind::J10 && v->report.type.kind != SingKind::J10; });
  for (const auto* j : js)
    if (!j->tangent_line) return "a [3;3]-point has no distinguished tangent";
  auto through = [](const PointReport* j, const PointReport* q) { return on_line(q->point, *j->tangent_line); };
  int p = primes_of(l.tag);
  std::string ref = l.tag.find('[') == std::string::npos ? "" : l.tag.substr(l.tag.find('[') + 1, l.tag.size() - l.tag.find('[') - 2);
  int nj = static_cast<int>(js.size()), nq = static_cast<int>(quads.size());
  if (nj == 1 && nq == 1) {
    if (through(js[0], quads[0]) != (p == 2)) return "tangent incidence with the quadruple point does not match the tag";
  } else if (nj == 2 && nq == 1) {
    bool t0 = through(js[0], quads[0]), t1 = through(js[1], quads[0]);
    if (t0 + t1 != p - 1) return "number of tangents through the quadruple point does not match the tag";
    if (ref == "1" && !t0) return "the J_10 tangent should pass through the quadruple point";
    if (ref == "1b" && !t1) return "the J_2,p tangent should pass through the quadruple point";
  } else if (nj == 1 && nq == 2) {
    bool t0 = through(js[0], quads[0]), t1 = through(js[0], quads[1]);
    if (t0 + t1 != p - 1) return "number of quadruple points on the tangent does not match the tag";
    if (!ref.empty()) {
      const PointReport* hit = t0 ? quads[0] : quads[1];
      bool x9 = hit->report.type.simply_elliptic();
      if ((ref == "2") != x9) return "the wrong quadruple point lies on the tangent";
    }
  } else if (nj == 3) {
    bool conic = tangents_along_conic(js);
    if (nq == 0 && conic != (p == 2)) return "tangent conic condition does not match the tag";
    if (nq == 1) {
      bool concurrent = through(js[0], quads[0]) && through(js[1], quads[0]) && through(js[2], quads[0]);
      if (p == 1 && !concurrent) return "tangents should meet at the quadruple point";
      if (p == 2 && !conic) return "tangents should lie along a conic";
    }
  }
  return "";
}

QPoly random_form(int degree, std::mt19937_64& rng) {
  QPoly f(xyz());
  for (const auto& e : monomial_basis(3, degree)) f.add_term(e, Rational(draw(rng, -9, 9)));
  return f;
}

}  // namespace

WitnessCheck validate_witness(const StratumLabel& l, const QPoly& octic) {
  WitnessCheck w;
  if (octic.is_zero() || !octic.is_homogeneous() || octic.total_degree() != 8) {
    w.reason = "not an octic form";
    return w;
  }
  w.profile = curve_profile(octic);
  const auto& prof = w.profile;
  if (l.n == 0 && !prof.multiple_components.empty()) {
    w.reason = "curve is not reduced";
    return w;
  }
  if (l.n > 0) {
    auto it = prof.multiple_components.find(2);
    if (prof.multiple_components.size() != 1 || it == prof.multiple_components.end() || it->second.total_degree() != l.n) {
      w.reason = "doubled component does not have degree " + std::to_string(l.n);
      return w;
    }
  }
  if (!prof.half_log_canonical) {
    w.reason = prof.verdict;
    return w;
  }
  if (prof.elliptic_counts() != std::array<int, 4>{l.a, l.b, l.c, l.d}) {
    w.reason = "elliptic point counts differ from the label";
    return w;
  }
  if (l.n == 0) {
    std::string t = tag_verdict(l, prof);
    if (!t.empty()) {
      w.reason = t;
      return w;
    }
  }
  w.valid = true;
  w.reason = "ok";
  return w;
}

std::optional<QPoly> search_witness(const StratumLabel& l, int max_candidates) {
  auto spec = detail::component_spec(l);
  std::vector<QPoly> basis{qconst(Rational(1), xyz())};
  if (spec.degree > 0) basis = condition_ideal_graded_piece(spec.conditions, spec.degree).basis;
  if (basis.empty()) return std::nullopt;
  auto rng = seeded_rng(label_salt(l.ascii()));
  for (int i = 0; i < max_candidates; ++i) {
    QPoly b1(xyz());
    for (const auto& b : basis) b1 += qconst(Rational(draw(rng, -9, 9)), xyz()) * b;
    if (b1.is_zero()) continue;
    QPoly b2 = l.n == 0 ? qconst(Rational(1), xyz()) : spec.double_curve ? *spec.double_curve : random_form(l.n, rng);
    QPoly octic = primitive_integer(b1 * b2 * b2);
    if (validate_witness(l, octic).valid) return octic;
  }
  return std::nullopt;
}

QPoly witness(const StratumLabel& l) {
  std::string key = l.ascii();
  for (const Fixture* f = kWitnesses; f->label; ++f)
    if (key == f->label) return parse_poly(f->octic);
  throw std::out_of_range("no stored witness for " + key);
}

std::size_t Catalogue::stratum_count() const {
  std::vector<StratumLabel> s;
  for (const auto& c : components) s.push_back(c.label.stratum());
  std::sort(s.begin(), s.end());
  return std::unique(s.begin(), s.end()) - s.begin();
}

std::size_t Catalogue::normal_stratum_count() const { return normal_component_multiset().size(); }

std::size_t Catalogue::normal_component_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.label.n == 0;
  return n;
}

std::vector<int> Catalogue::normal_component_multiset() const {
  std::map<StratumLabel, int> counts;
  for (const auto& c : components)
    if (c.label.n == 0) ++counts[c.label.stratum()];
  std::vector<int> out;
  for (const auto& [l, k] : counts) out.push_back(k);
  std::sort(out.rbegin(), out.rend());
  return out;
}

Catalogue build_catalogue() {
  Catalogue cat;
  for (const auto& l : catalogue_components()) {
    StratumRecord r;
    r.label = l;
    auto pipeline = dimension_pipeline(l);
    r.dimension = static_cast<int>(run_pipeline(*pipeline).dimension);
    r.dimension_source = "anchored linear system";
    r.configuration = pipeline->configuration.describe();
    r.hodge = hodge_type(l);
    r.possible_hodge = possible_hodge_types(l);
    r.birational_type = birational_type(l);
    r.witness = to_string(witness(l));
    cat.components.push_back(r);
  }
  for (int a = 4; a >= 0; --a)
    for (int b = 4 - a; b >= 0; --b)
      for (int c = 4 - a - b; c >= 0; --c) {
        StratumLabel l{0, a, b, c, 4 - a - b - c, ""};
        if ((a == 3 && c == 1) || c == 4) continue;
        std::string why;
        if (l.b + l.d > 0) why = "four elliptic points force all of them to be simply elliptic";
        else if (a == 4) why = "no octic has four [3;3]-points";
        else if (a == 2) why = "no octic has two [3;3]-points and two quadruple points";
        else why = "no octic has one [3;3]-point and three quadruple points";
        cat.empty.push_back({l, why});
      }
  return cat;
}

DegenerationGraph simply_elliptic_diagram() {
  static const std::vector<std::pair<const char*, const char*>> edges = {
      {"N_e", "N_2"},           {"N_e", "N_1"},          {"N_2", "N_22"},           {"N_2", "N_12_p"},
      {"N_2", "N_12_pp"},       {"N_1", "N_11"},         {"N_1", "N_12_p"},         {"N_1", "N_12_pp"},
      {"N_22", "N_222"},        {"N_22", "N_122_p"},     {"N_22", "N_122_pp"},      {"N_12_p", "N_122_p"},
      {"N_12_p", "N_122_pp"},   {"N_12_p", "N_112_p"},   {"N_12_p", "N_112_pp"},    {"N_12_pp", "N_122_pp"},
      {"N_12_pp", "N_112_pp"},  {"N_12_pp", "N_112_ppp"}, {"N_11", "N_111_p"},      {"N_11", "N_111_pp"},
      {"N_11", "N_112_p"},      {"N_11", "N_112_pp"},    {"N_11", "N_112_ppp"},     {"N_222", "N_2222"},
      {"N_111_p", "N_1112_p"},  {"N_111_pp", "N_1112_pp"}, {"N_112_pp", "N_1112_pp"}, {"N_112_ppp", "N_1112_p"},
      {"N_112_ppp", "N_1112_pp"}};
  DegenerationGraph g;
  for (const auto& c : catalogue_components())
    if (c.n == 0 && c.b == 0 && c.d == 0) g.nodes.push_back(c);
  auto index = [&](const char* name) {
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      if (g.nodes[i].ascii() == name) return i;
    throw std::logic_error(std::string("unknown diagram node ") + name);
  };
  for (const auto& [u, v] : edges) g.edges.push_back({index(u), index(v)});
  return g;
}

DegenerationGraph label_degeneration_graph() {
  DegenerationGraph g;
  for (const auto& c : catalogue_components())
    if (c.n == 0 && (g.nodes.empty() || !(g.nodes.back() == c.stratum()))) g.nodes.push_back(c.stratum());
  std::size_t n = g.nodes.size();
  auto below = [&](std::size_t i, std::size_t j) { return i != j && may_degenerate(g.nodes[i], g.nodes[j]); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!below(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) covered = !(below(i, k) && below(k, j));
      if (covered) g.edges.push_back({i, j});
    }
  return g;
}

std::string DegenerationGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph degenerations {\n  rankdir=TB;\n";
  for (const auto& v : nodes) os << "  " << v.ascii() << " [label=\"" << v.name() << "\"];\n";
  for (const auto& [u, v] : edges) os << "  " << nodes[u].ascii() << " -> " << nodes[v].ascii() << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace octica
