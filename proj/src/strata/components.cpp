#include "spec.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace octica {

namespace {

Point pt(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }
QPoly line(long a, long b, long c) { return linear_form(Rational(a), Rational(b), Rational(c)); }

const Point A = pt(1, 0, 0), B = pt(0, 1, 0), C = pt(0, 0, 1), D = pt(1, 1, 1);

int primes_of(const std::string& tag) {
  int k = 0;
  while (k < static_cast<int>(tag.size()) && tag[k] == '\'') ++k;
  return k;
}

std::vector<std::string> tags_for(const StratumLabel& l) {
  int j = l.a + l.b, q = l.c + l.d;
  if (l.n != 0) return {""};
  if (j == 3) return {"'", "''"};
  if (j == 1 && q == 1) return {"'", "''"};
  if (j == 2 && q == 1) {
    if (l.a == 1 && l.b == 1) return {"'", "''[1]", "''[1b]", "'''"};
    return {"'", "''", "'''"};
  }
  if (j == 1 && q == 2) {
    if (l.c == 1 && l.d == 1) return {"'", "''[2]", "''[2b]"};
    return {"'", "''"};
  }
  return {""};
}

// Dimension of the space of configurations with the same incidences, before
// any condition beyond incidence: 2 per point, 2 minus the number of
// anchored points on each line.
int naive_dimension(const Configuration& c) {
  int dim = 2 * static_cast<int>(c.points.size());
  for (const auto& f : c.curves) {
    if (f.total_degree() != 1) {
      dim += static_cast<int>((f.total_degree() + 1) * (f.total_degree() + 2) / 2) - 1;
      continue;
    }
    int on = 0;
    for (const auto& p : c.points) on += on_line(p, f);
    dim += std::max(0, 2 - on);
  }
  return dim;
}

void add_curve(Configuration& c, const QPoly& f) {
  for (const auto& g : c.curves)
    if (make_monic(g) == make_monic(f)) return;
  c.curves.push_back(f);
}

struct Builder {
  detail::ComponentSpec spec;
  int special_conditions = 0;
  int degenerate_points = 0;

  void j_point(const Point& p, const QPoly& tangent, bool barred) {
    static const long second_order[] = {3, -5, 7};
    if (barred) ++degenerate_points;
    spec.conditions.push_back(barred ? AnchoredCondition::nn_degenerate(p, tangent, 3, Rational(second_order[degenerate_points - 1]))
                                     : AnchoredCondition::nn_point(p, tangent, 3));
    spec.configuration.points.push_back(p);
    add_curve(spec.configuration, tangent);
  }
  void quad_point(const Point& p, const QPoly* special) {
    spec.conditions.push_back(special ? AnchoredCondition::cone_multiple(p, *special, 4, 2)
                                      : AnchoredCondition::multiplicity(p, 4));
    spec.configuration.points.push_back(p);
    if (special) add_curve(spec.configuration, *special);
  }
  void finish(int extra_parameters) {
    Configuration& c = spec.configuration;
    int moduli = naive_dimension(c) - special_conditions - (8 - stabilizer_dimension(c));
    c.free_parameters = extra_parameters + std::max(0, moduli);
  }
};

detail::ComponentSpec normal_spec(const StratumLabel& l) {
  Builder bld;
  bld.spec.label = l;
  int j = l.a + l.b, q = l.c + l.d, p = primes_of(l.tag);
  std::string ref = l.tag.find('[') == std::string::npos ? "" : l.tag.substr(l.tag.find('[') + 1, l.tag.size() - l.tag.find('[') - 2);
  std::vector<bool> barred;
  for (int i = 0; i < l.a; ++i) barred.push_back(false);
  for (int i = 0; i < l.b; ++i) barred.push_back(true);
  std::vector<bool> degenerate;
  for (int i = 0; i < l.c; ++i) degenerate.push_back(false);
  for (int i = 0; i < l.d; ++i) degenerate.push_back(true);

  auto quads = [&](const std::vector<Point>& where, const std::vector<QPoly>& specials) {
    for (int i = 0; i < q; ++i) bld.quad_point(where[i], degenerate[i] ? &specials[i] : nullptr);
  };

  if (j == 0) {
    quads({A, B, C, D}, {line(0, 1, -1), line(1, 0, -1), line(1, -3, 0), line(0, 0, 1)});
  } else if (j == 1) {
    QPoly t = line(1, 1, 0);
    if (p >= 2) t = ref == "2b" ? line(1, 0, 0) : line(0, 1, 0);
    bld.j_point(C, t, barred[0]);
    quads({A, B}, {line(0, 1, -1), line(1, 0, -1)});
  } else if (j == 2) {
    QPoly t1 = line(0, 1, -1), t2 = line(1, 0, -1);
    if (p == 3 || (p == 2 && ref != "1b")) t1 = line(0, 1, 0);
    if (p == 3 || ref == "1b") t2 = line(1, 0, 0);
    bld.j_point(A, t1, barred[0]);
    bld.j_point(B, t2, barred[1]);
    quads({C}, {line(1, 1, 0)});
  } else {
    QPoly t3 = p == 2 ? line(1, 1, 0) : (q == 1 ? line(1, -1, 0) : line(1, -3, 0));
    if (p == 2) bld.special_conditions = 1;  // tangents along a conic
    bld.j_point(A, line(0, 1, -1), barred[0]);
    bld.j_point(B, line(1, 0, -1), barred[1]);
    bld.j_point(C, t3, barred[2]);
    quads({D}, {});
  }
  bld.finish(l.b);
  return bld.spec;
}

detail::ComponentSpec nonnormal_spec(const StratumLabel& l) {
  Builder bld;
  bld.spec.label = l;
  bld.spec.degree = 8 - 2 * l.n;
  auto& cfg = bld.spec.configuration;
  if (l.elliptic() == 0) {
    cfg.free_parameters = (l.n + 1) * (l.n + 2) / 2 - 1;
    return bld.spec;
  }
  if (l.n == 2) {
    // Quartics with a quadruple point at (1:1:1) through two fixed lines,
    // B'' a general member of the pencil spanned by xy and z^2.
    QPoly x = qvar(xyz(), "x"), y = qvar(xyz(), "y"), z = qvar(xyz(), "z");
    bld.spec.conditions = {AnchoredCondition::multiplicity(D, 4), AnchoredCondition::contains_curve(line(1, 0, -1), 1),
                           AnchoredCondition::contains_curve(line(0, 1, -1), 1)};
    bld.spec.double_curve = x * y - qconst(Rational(2), xyz()) * z * z;
    cfg.points = {D};
    cfg.curves = {line(1, 0, -1), line(0, 1, -1), *bld.spec.double_curve};
    cfg.free_parameters = 1;
    return bld.spec;
  }
  if (l.a == 2) {
    bld.j_point(A, line(0, 1, -1), false);
    bld.j_point(B, line(1, 0, -1), false);
    bld.spec.double_curve = line(1, 1, 1);
  } else {
    QPoly special = line(0, 1, 0);
    if (l.a + l.b == 1) bld.j_point(C, special, l.b == 1);
    else bld.quad_point(C, l.d == 1 ? &special : nullptr);
    bld.spec.double_curve = line(0, 0, 1);
  }
  add_curve(cfg, *bld.spec.double_curve);
  bld.finish(l.b);
  return bld.spec;
}

// Tangent vector of a hypersurface f under X in sl_3, modulo f itself.
std::vector<Rational> curve_motion(const QPoly& f, const std::array<std::array<Rational, 3>, 3>& X) {
  QPoly g = f.in_frame(xyz());
  int deg = g.total_degree();
  QPoly delta(xyz());
  for (std::size_t i = 0; i < 3; ++i) {
    QPoly xi(xyz());
    for (std::size_t k = 0; k < 3; ++k)
      if (X[i][k] != 0) xi += qconst(X[i][k], xyz()) * qvar(xyz(), xyz()[k]);
    delta -= g.derivative(i) * xi;
  }
  RationalVector v = coefficient_vector(delta, deg), w = coefficient_vector(g, deg);
  std::size_t pivot = 0;
  while (w[pivot] == 0) ++pivot;
  Rational ratio = v[pivot] / w[pivot];
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != pivot) out.push_back(v[i] - ratio * w[i]);
  return out;
}

}  // namespace

std::string Configuration::describe() const {
  std::ostringstream os;
  os << "points:";
  for (const auto& p : points) os << " " << to_string(p);
  os << "; curves:";
  for (const auto& f : curves) os << " [" << to_string(f) << "]";
  os << "; free parameters: " << free_parameters;
  return os.str();
}

int stabilizer_dimension(const Configuration& config) {
  std::vector<std::array<std::array<Rational, 3>, 3>> basis;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k)
      if (i != k) {
        std::array<std::array<Rational, 3>, 3> e{};
        e[i][k] = 1;
        basis.push_back(e);
      }
  for (std::size_t i = 0; i < 2; ++i) {
    std::array<std::array<Rational, 3>, 3> e{};
    e[i][i] = 1;
    e[i + 1][i + 1] = -1;
    basis.push_back(e);
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& X : basis) {
    std::vector<Rational> row;
    for (const auto& p : config.points) {
      Point v{};
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) v[i] += X[i][k] * p[k];
      row.push_back(p[1] * v[2] - p[2] * v[1]);
      row.push_back(p[2] * v[0] - p[0] * v[2]);
      row.push_back(p[0] * v[1] - p[1] * v[0]);
    }
    for (const auto& f : config.curves) {
      auto m = curve_motion(f, X);
      row.insert(row.end(), m.begin(), m.end());
    }
    rows.push_back(row);
  }
  if (rows.front().empty()) return 8;
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return 8 - static_cast<int>(rank(m));
}

long stratum_dimension(const Configuration& config, std::size_t k) {
  if (k == 0) throw std::invalid_argument("empty linear system");
  return config.free_parameters + static_cast<long>(k) - 1 - stabilizer_dimension(config);
}

std::vector<StratumLabel> catalogue_components() {
  static const std::vector<StratumLabel> all = [] {
    std::vector<StratumLabel> strata;
    for (int e = 0; e <= 3; ++e)
      for (int a = e; a >= 0; --a)
        for (int b = e - a; b >= 0; --b)
          for (int c = e - a - b; c >= 0; --c) strata.push_back({0, a, b, c, e - a - b - c, ""});
    strata.push_back({0, 3, 0, 1, 0, ""});
    strata.push_back({0, 0, 0, 4, 0, ""});
    std::vector<StratumLabel> out;
    for (const auto& s : strata)
      for (const auto& t : tags_for(s)) out.push_back({0, s.a, s.b, s.c, s.d, t});
    for (const StratumLabel& m : std::vector<StratumLabel>{{4, 0, 0, 0, 0, ""},
                                                          {3, 0, 0, 0, 0, ""},
                                                          {2, 0, 0, 0, 0, ""},
                                                          {2, 0, 0, 1, 0, ""},
                                                          {1, 0, 0, 0, 0, ""},
                                                          {1, 1, 0, 0, 0, ""},
                                                          {1, 0, 1, 0, 0, ""},
                                                          {1, 0, 0, 1, 0, ""},
                                                          {1, 0, 0, 0, 1, ""},
                                                          {1, 2, 0, 0, 0, ""}})
      out.push_back(m);
    return out;
  }();
  return all;
}

namespace detail {

ComponentSpec component_spec(const StratumLabel& component) {
  auto all = catalogue_components();
  if (std::find(all.begin(), all.end(), component) == all.end())
    throw std::out_of_range("no component " + component.ascii() + " in the catalogue");
  return component.n == 0 ? normal_spec(component) : nonnormal_spec(component);
}

}  // namespace detail

DimensionResult run_pipeline(const DimensionPipeline& p) {
  DimensionResult r;
  if (p.degree == 0) {
    r.k = 1;
  } else {
    r.k = condition_ideal_graded_piece(p.conditions, p.degree).dim_forms;
  }
  r.stabilizer = stabilizer_dimension(p.configuration);
  r.dimension = stratum_dimension(p.configuration, r.k);
  return r;
}

std::optional<DimensionPipeline> dimension_pipeline(const StratumLabel& component) {
  auto spec = detail::component_spec(component);
  return DimensionPipeline{component, spec.degree, spec.conditions, spec.configuration};
}

std::vector<DimensionPipeline> dimension_pipelines() {
  std::vector<DimensionPipeline> out;
  for (const auto& c : catalogue_components())
    if (auto p = dimension_pipeline(c)) out.push_back(*p);
  return out;
}

int table4_dimension(const StratumLabel& l) {
  static const std::vector<std::pair<StratumLabel, int>> table = {
      {{4, 0, 0, 0, 0, ""}, 6},  {{3, 0, 0, 0, 0, ""}, 6},  {{2, 0, 0, 0, 0, ""}, 11}, {{2, 0, 0, 1, 0, ""}, 3},
      {{1, 0, 0, 0, 0, ""}, 21}, {{1, 1, 0, 0, 0, ""}, 12}, {{1, 0, 1, 0, 0, ""}, 11}, {{1, 0, 0, 1, 0, ""}, 13},
      {{1, 0, 0, 0, 1, ""}, 12}, {{1, 2, 0, 0, 0, ""}, 3}};
  for (const auto& [k, v] : table)
    if (k == l) return v;
  throw std::out_of_range("no tabulated dimension for " + l.ascii());
}

}  // namespace octica
