#include "octica/random.hpp"
#include "octica/singclass.hpp"

#include <stdexcept>

namespace octica {

namespace {

QPoly X() { return qvar(local_frame(), "x"); }
QPoly Y() { return qvar(local_frame(), "y"); }
QPoly c(const Rational& v) { return qconst(v, local_frame()); }

bool through_origin(const QPoly& q) { return q.constant_term() == 0; }

QPoly divide_by_x_power(const QPoly& p, int m) {
  QPoly r(p.vars());
  for (const auto& [e, co] : p.terms()) {
    if (e[0] < m) throw std::logic_error("strict transform is not divisible by the exceptional power");
    r.add_term({e[0] - m, e[1]}, co);
  }
  return r;
}

QPoly swap_xy(const QPoly& p) { return p.compose({Y(), X()}, local_frame()); }

QPoly lowest_part(const QPoly& f) {
  int m = f.low_degree();
  QPoly t(f.vars());
  for (const auto& [e, co] : f.terms())
    if (total_degree(e) == m) t.add_term(e, co);
  return t;
}

// Direction (a:b) annihilated by a linear form alpha*x + beta*y.
std::array<Rational, 2> direction_of(const QPoly& line) {
  return {line.coeff({0, 1}), -line.coeff({1, 0})};
}

int branches_of_a(int n) { return n % 2 == 1 ? 2 : 1; }

SingularityReport report(SingKind kind, int p, int q, int m, std::optional<long> mu) {
  SingularityReport r;
  r.type = {kind, p, q};
  r.multiplicity = m;
  r.milnor = mu;
  r.table_mu = mu;
  switch (kind) {
    case SingKind::Smooth: r.branches = 1; break;
    case SingKind::A: r.branches = branches_of_a(p); break;
    case SingKind::D: r.branches = p % 2 == 0 ? 3 : 2; break;
    case SingKind::E: r.branches = p == 7 ? 2 : 1; break;
    case SingKind::X: r.branches = p == 9 ? 4 : (p % 2 == 1 ? 4 : 3); break;
    case SingKind::Y: r.branches = (p % 2 == 0 ? 2 : 1) + (q % 2 == 0 ? 2 : 1); break;
    case SingKind::J10: r.branches = 3; break;
    case SingKind::J2: r.branches = p % 2 == 0 ? 3 : 2; break;
    case SingKind::AInf: r.table_mu = 0; break;
    case SingKind::DInf: r.table_mu = 1; break;
    case SingKind::J2Inf: r.table_mu = 4; break;
    case SingKind::XInf: r.table_mu = 5; break;
    case SingKind::YInf: r.table_mu = p + 5; break;
    case SingKind::YInfInf: r.table_mu = 4; break;
    case SingKind::NotHLC: r.table_mu.reset(); break;
  }
  return r;
}

SingularityReport reject(int m, std::optional<long> mu, const std::string& why) {
  SingularityReport r = report(SingKind::NotHLC, 0, 0, m, mu);
  r.reason = why;
  return r;
}

SingularityReport classify_non_isolated(const QPoly& f, const SquarefreeDecomposition& sf) {
  int m = multiplicity(f);
  QPoly u = sf.factors.count(1) ? sf.factors.at(1) : c(1);
  QPoly v = sf.factors.at(2);
  int mu_u = through_origin(u) ? multiplicity(u) : 0;
  int mv = multiplicity(v);
  if (mv == 1) {
    if (mu_u == 0) return report(SingKind::AInf, 0, 0, m, std::nullopt);
    auto meet = intersection_multiplicity(u, v);
    if (mu_u == 1) {
      if (meet == 1) return report(SingKind::DInf, 0, 0, m, std::nullopt);
      if (meet == 2) return report(SingKind::J2Inf, 0, 0, m, std::nullopt);
      return reject(m, std::nullopt, "reduced branch meets the double component with contact order above 2");
    }
    if (mu_u == 2) {
      if (meet != 2) return reject(m, std::nullopt, "tangent of the double component lies in the tangent cone of the reduced part");
      auto k = milnor_number(u);
      if (!k) throw std::logic_error("reduced part is not isolated");
      if (*k == 1) return report(SingKind::XInf, 0, 0, m, std::nullopt);
      return report(SingKind::YInf, static_cast<int>(*k) - 1, 0, m, std::nullopt);
    }
    return reject(m, std::nullopt, "reduced part has multiplicity above 2 on the double component");
  }
  if (mv == 2 && mu_u == 0 && milnor_number(v) == 1) return report(SingKind::YInfInf, 0, 0, m, std::nullopt);
  return reject(m, std::nullopt, "double component is not a smooth branch or a node");
}

}  // namespace

VarList local_frame() { return {"x", "y"}; }

LocalCurve localize(const QPoly& form, const Point& p) {
  QPoly cform = form.in_frame(xyz());
  if (cform.is_zero() || !cform.is_homogeneous()) throw std::invalid_argument("curve must be a nonzero homogeneous form");
  if (evaluate(cform, {p[0], p[1], p[2]}) != 0) throw std::invalid_argument("point " + to_string(p) + " is not on the curve");
  LocalCurve g;
  g.original_point = p;
  g.transport = anchor_frame(p, nullptr);
  g.f_local = apply_matrix(cform, g.transport).compose({X(), Y(), c(1)}, local_frame());
  return g;
}

int multiplicity(const QPoly& germ) {
  if (germ.is_zero()) throw std::invalid_argument("multiplicity of the zero germ");
  return germ.low_degree();
}

std::vector<std::pair<int, int>> TangentCone::structure() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [e, q] : factors) out.emplace_back(e, q.total_degree());
  return out;
}

TangentCone tangent_cone_structure(const QPoly& germ) {
  TangentCone t;
  t.form = lowest_part(germ.in_frame(local_frame()));
  auto sf = squarefree_decomposition(t.form);
  for (const auto& [e, q] : sf.factors)
    if (!q.is_constant()) t.factors[e] = q;
  t.ordinary = t.factors.size() == 1 && t.factors.count(1);
  return t;
}

QPoly strict_transform_at(const QPoly& germ, const std::array<Rational, 2>& d) {
  const auto& [a, b] = d;
  if (a == 0 && b == 0) throw std::invalid_argument("zero direction");
  Rational cc = a != 0 ? Rational(0) : Rational(1), e = a != 0 ? Rational(1) : Rational(0);
  QPoly f = germ.in_frame(local_frame());
  int m = multiplicity(f);
  QPoly g = f.compose({c(a) * X() + c(cc) * Y(), c(b) * X() + c(e) * Y()}, local_frame());
  return divide_by_x_power(g.compose({X(), X() * Y()}, local_frame()), m);
}

BlowUp blow_up_strict_transform(const QPoly& germ) {
  QPoly f = germ.in_frame(local_frame());
  BlowUp out;
  out.multiplicity = multiplicity(f);
  if (out.multiplicity < 1) throw std::invalid_argument("germ does not pass through the origin");
  out.chart_x = divide_by_x_power(f.compose({X(), X() * Y()}, local_frame()), out.multiplicity);
  out.chart_y = swap_xy(divide_by_x_power(swap_xy(f).compose({X(), X() * Y()}, local_frame()), out.multiplicity));
  TangentCone t = tangent_cone_structure(f);
  QPoly sq(local_frame());
  sq = c(1);
  for (const auto& [e, q] : t.factors) sq = sq * q;
  out.distinct_directions = sq.total_degree();
  std::vector<std::array<Rational, 2>> dirs;
  QPoly on_affine = t.form.substitute(1, c(1));
  if (on_affine.degree_in(0) >= 1)
    for (const auto& r : rational_roots(on_affine, 0)) dirs.push_back({r, Rational(1)});
  if (t.form.coeff({out.multiplicity, 0}) == 0) dirs.push_back({Rational(1), Rational(0)});
  for (const auto& d : dirs) {
    BlowUpPoint p;
    p.direction = d;
    p.germ = strict_transform_at(f, d);
    p.multiplicity = through_origin(p.germ) ? multiplicity(p.germ) : 0;
    out.rational_points.push_back(p);
  }
  return out;
}

std::optional<long> intersection_multiplicity(const QPoly& f0, const QPoly& g0) {
  QPoly f = f0.in_frame(local_frame()), g = g0.in_frame(local_frame());
  if ((!f.is_zero() && !through_origin(f)) || (!g.is_zero() && !through_origin(g))) return 0;
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  QPoly h = gcd(f, g);
  if (!h.is_constant()) {
    if (through_origin(h)) return std::nullopt;
    f = divide_exact(f, h);
    g = divide_exact(g, h);
  }
  auto rng = seeded_rng(0x5e4a);
  auto order_with_shear = [&](long s) -> std::optional<long> {
    QPoly a = f.compose({X() + c(s) * Y(), Y()}, local_frame()), b = g.compose({X() + c(s) * Y(), Y()}, local_frame());
    if (a.degree_in(1) != a.total_degree() || b.degree_in(1) != b.total_degree()) return std::nullopt;
    if (a.degree_in(1) < 1 || b.degree_in(1) < 1) return std::nullopt;
    return order_at_zero(resultant(a, b, 1), 0);
  };
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::optional<long> first, second;
    long s1 = 0;
    while (!first) first = order_with_shear(s1 = draw(rng, -40, 40));
    for (int k = 0; k < 100 && !second; ++k) {
      long s2 = draw(rng, -40, 40);
      if (s2 != s1) second = order_with_shear(s2);
    }
    if (second && *first == *second) return *first;
  }
  throw std::runtime_error("intersection multiplicity: independent shears disagree");
}

std::optional<long> milnor_number(const QPoly& germ) {
  QPoly f = germ.in_frame(local_frame());
  if (f.is_zero()) return std::nullopt;
  if (!through_origin(f)) return 0;
  auto sf = squarefree_decomposition(f);
  for (const auto& [e, q] : sf.factors)
    if (e >= 2 && through_origin(q)) return std::nullopt;
  return intersection_multiplicity(f.derivative(0), f.derivative(1));
}

std::string SingType::symbol() const {
  auto n = [](int v) { return std::to_string(v); };
  switch (kind) {
    case SingKind::Smooth: return "smooth";
    case SingKind::A: return "A_" + n(p);
    case SingKind::D: return "D_" + n(p);
    case SingKind::E: return "E_" + n(p);
    case SingKind::X: return "X_" + n(p);
    case SingKind::Y: return "Y_" + n(p) + "," + n(q);
    case SingKind::J10: return "J_10";
    case SingKind::J2: return "J_2," + n(p);
    case SingKind::AInf: return "A_inf";
    case SingKind::DInf: return "D_inf";
    case SingKind::J2Inf: return "J_2,inf";
    case SingKind::XInf: return "X_inf";
    case SingKind::YInf: return "Y_" + n(p) + ",inf";
    case SingKind::YInfInf: return "Y_inf,inf";
    case SingKind::NotHLC: return "not-hlc";
  }
  return "?";
}

bool SingType::isolated() const {
  switch (kind) {
    case SingKind::AInf:
    case SingKind::DInf:
    case SingKind::J2Inf:
    case SingKind::XInf:
    case SingKind::YInf:
    case SingKind::YInfInf: return false;
    default: return true;
  }
}

int SingType::elliptic_degree() const {
  switch (kind) {
    case SingKind::J10:
    case SingKind::J2: return 1;
    case SingKind::X:
    case SingKind::Y: return 2;
    default: return 0;
  }
}

SingType parse_sing_type(const std::string& s) {
  auto num = [&](const std::string& t) {
    std::size_t used = 0;
    int v = std::stoi(t, &used);
    if (used != t.size() || v < 0) throw std::invalid_argument("bad singularity symbol '" + s + "'");
    return v;
  };
  if (s == "smooth") return {SingKind::Smooth, 0, 0};
  if (s == "not-hlc") return {SingKind::NotHLC, 0, 0};
  if (s == "A_inf") return {SingKind::AInf, 0, 0};
  if (s == "D_inf") return {SingKind::DInf, 0, 0};
  if (s == "J_2,inf") return {SingKind::J2Inf, 0, 0};
  if (s == "X_inf") return {SingKind::XInf, 0, 0};
  if (s == "Y_inf,inf") return {SingKind::YInfInf, 0, 0};
  if (s == "J_10") return {SingKind::J10, 0, 0};
  if (s.size() > 4 && s.rfind("J_2,", 0) == 0) return {SingKind::J2, num(s.substr(4)), 0};
  if (s.size() > 2 && s[1] == '_') {
    std::string rest = s.substr(2);
    switch (s[0]) {
      case 'A': return {SingKind::A, num(rest), 0};
      case 'D': return {SingKind::D, num(rest), 0};
      case 'E': return {SingKind::E, num(rest), 0};
      case 'X': return {SingKind::X, num(rest), 0};
      case 'Y': {
        auto comma = rest.find(',');
        if (comma == std::string::npos) break;
        std::string second = rest.substr(comma + 1);
        if (second == "inf") return {SingKind::YInf, num(rest.substr(0, comma)), 0};
        return {SingKind::Y, num(rest.substr(0, comma)), num(second)};
      }
      default: break;
    }
  }
  throw std::invalid_argument("bad singularity symbol '" + s + "'");
}

SingularityReport classify(const QPoly& germ) {
  QPoly f = germ.in_frame(local_frame());
  if (f.is_zero()) throw std::invalid_argument("cannot classify the zero germ");
  if (!through_origin(f)) throw std::invalid_argument("germ does not pass through the origin");
  auto sf = squarefree_decomposition(f);
  for (const auto& [e, q] : sf.factors)
    if (e >= 3 && through_origin(q)) return reject(multiplicity(f), std::nullopt, "component of multiplicity " + std::to_string(e));
  if (sf.factors.count(2) && through_origin(sf.factors.at(2))) return classify_non_isolated(f, sf);

  int m = multiplicity(f);
  if (m == 1) return report(SingKind::Smooth, 0, 0, 1, 0);
  auto mu = milnor_number(f);
  if (!mu) throw std::logic_error("isolated germ with infinite Milnor number");
  int n = static_cast<int>(*mu);
  if (m == 2) return report(SingKind::A, n, 0, m, mu);
  TangentCone t = tangent_cone_structure(f);
  if (m == 3) {
    if (t.ordinary) return report(SingKind::D, 4, 0, m, mu);
    if (t.factors.count(2)) return report(SingKind::D, n, 0, m, mu);
    QPoly line = t.factors.at(3);
    if (n >= 6 && n <= 8) {
      auto r = report(SingKind::E, n, 0, m, mu);
      r.distinguished_tangent = line;
      return r;
    }
    QPoly st = strict_transform_at(f, direction_of(line));
    if (!through_origin(st) || multiplicity(st) != 3)
      return reject(m, mu, "triple tangent line without a triple point after one blow-up");
    TangentCone t2 = tangent_cone_structure(st);
    SingularityReport r;
    if (t2.ordinary && n == 10) r = report(SingKind::J10, 0, 0, m, mu);
    else if (t2.factors.count(2) && !t2.factors.count(3) && n > 10) r = report(SingKind::J2, n - 10, 0, m, mu);
    else return reject(m, mu, "infinitely near triple point is not of type D");
    r.distinguished_tangent = line;
    return r;
  }
  if (m == 4) {
    if (t.ordinary) return report(SingKind::X, 9, 0, m, mu);
    if (t.factors.count(3) || t.factors.count(4)) return reject(m, mu, "tangent cone has a line of multiplicity above 2");
    QPoly doubled = t.factors.at(2);
    if (doubled.total_degree() == 1) {
      auto r = report(SingKind::X, n, 0, m, mu);
      r.distinguished_tangent = doubled;
      return r;
    }
    int excess = n - 9;
    std::vector<int> rs;
    QPoly aff = doubled.substitute(1, c(1));
    std::vector<std::array<Rational, 2>> dirs;
    if (aff.degree_in(0) >= 1)
      for (const auto& r : rational_roots(aff, 0)) dirs.push_back({r, Rational(1)});
    if (doubled.coeff({2, 0}) == 0) dirs.push_back({Rational(1), Rational(0)});
    if (dirs.size() == 2) {
      for (const auto& d : dirs) {
        QPoly st = strict_transform_at(f, d);
        auto k = milnor_number(st);
        if (!k || (through_origin(st) && multiplicity(st) > 2)) return reject(m, mu, "degenerate point infinitely near a double tangent");
        rs.push_back(static_cast<int>(*k) + 1);
      }
    } else if (dirs.empty() && excess % 2 == 0) {
      // conjugate double tangents carry equal contact orders
      rs = {excess / 2, excess / 2};
    } else {
      return reject(m, mu, "cannot resolve the double tangent directions");
    }
    if (rs[0] > rs[1]) std::swap(rs[0], rs[1]);
    if (rs[0] < 1 || rs[0] + rs[1] != excess) return reject(m, mu, "contact orders do not match the Milnor number");
    return report(SingKind::Y, rs[0], rs[1], m, mu);
  }
  return reject(m, mu, "multiplicity " + std::to_string(m) + " exceeds 4");
}

}  // namespace octica
