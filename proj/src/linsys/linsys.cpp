#include "octica/linsys.hpp"

#include <sstream>

namespace octica {

namespace {

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

bool is_zero_point(const Point& p) { return p[0] == 0 && p[1] == 0 && p[2] == 0; }

void require_linear(const QPoly& l, const char* what) {
  if (l.vars() != xyz() || l.is_zero() || !l.is_homogeneous() || l.total_degree() != 1)
    throw AnchorError(std::string(what) + " must be a nonzero linear form in x,y,z");
}

Rational dot(const std::array<Rational, 3>& l, const Point& p) { return l[0] * p[0] + l[1] * p[1] + l[2] * p[2]; }

Rational det3(const Matrix3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Point unit(int i) {
  Point e{Rational(0), Rational(0), Rational(0)};
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

Matrix3 from_columns(const Point& a1, const Point& a2, const Point& a3) {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i) {
    m[i][0] = a1[i];
    m[i][1] = a2[i];
    m[i][2] = a3[i];
  }
  return m;
}

// Coefficients of every basis monomial after the change of coordinates:
// column j is the coefficient vector of basis[j] composed with a.
RationalMatrix transported_basis(const Matrix3& a, int degree) {
  auto basis = monomial_basis(3, degree);
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  RationalMatrix t(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    QPoly g = apply_matrix(QPoly::monomial(xyz(), basis[j], Rational(1)), a);
    for (const auto& [e, c] : g.terms()) t(index.at(e), j) = c;
  }
  return t;
}

std::size_t local_index(int a, int b, int degree) {
  static thread_local std::map<int, std::map<Exponents, std::size_t>> cache;
  auto& idx = cache[degree];
  if (idx.empty()) {
    auto basis = monomial_basis(3, degree);
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
  }
  return idx.at(Exponents{a, b, degree - a - b});
}

RationalMatrix select_rows(const RationalMatrix& t, const std::vector<std::size_t>& rows) {
  RationalMatrix r(rows.size(), t.cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < t.cols; ++j) r(i, j) = t(rows[i], j);
  return r;
}

RationalMatrix curve_rows(const AnchoredCondition& c, int degree) {
  auto basis = monomial_basis(3, degree);
  QPoly g = c.form.pow(static_cast<unsigned>(c.order));
  int rest = degree - g.total_degree();
  if (rest < 0) return RationalMatrix::identity(basis.size());
  RationalMatrix image(0, basis.size());
  for (const auto& e : monomial_basis(3, rest)) image.append_row(coefficient_vector(g * QPoly::monomial(xyz(), e, Rational(1)), degree));
  RationalMatrix rows(0, basis.size());
  for (const auto& v : kernel_basis(image)) rows.append_row(v);
  return rows;
}

}  // namespace

std::string to_string(const Point& p) { return "(" + p[0].get_str() + ":" + p[1].get_str() + ":" + p[2].get_str() + ")"; }

bool same_point(const Point& a, const Point& b) {
  return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

QPoly linear_form(const Rational& a, const Rational& b, const Rational& c) {
  QPoly l(xyz());
  l.add_term({1, 0, 0}, a);
  l.add_term({0, 1, 0}, b);
  l.add_term({0, 0, 1}, c);
  return l;
}

std::array<Rational, 3> linear_coeffs(const QPoly& line) {
  QPoly l = line.in_frame(xyz());
  return {l.coeff({1, 0, 0}), l.coeff({0, 1, 0}), l.coeff({0, 0, 1})};
}

bool on_line(const Point& p, const QPoly& line) { return dot(linear_coeffs(line), p) == 0; }

AnchoredCondition AnchoredCondition::multiplicity(const Point& p, int m) {
  AnchoredCondition c;
  c.kind = Kind::Multiplicity;
  c.point = p;
  c.order = m;
  c.validate();
  return c;
}

AnchoredCondition AnchoredCondition::nn_point(const Point& p, const QPoly& tangent, int n) {
  AnchoredCondition c;
  c.kind = Kind::NNPoint;
  c.point = p;
  c.tangent = tangent;
  c.order = n;
  c.validate();
  return c;
}

AnchoredCondition AnchoredCondition::contains_curve(const QPoly& form, int mult) {
  AnchoredCondition c;
  c.kind = Kind::ContainsCurve;
  c.form = form;
  c.order = mult;
  c.validate();
  return c;
}

AnchoredCondition AnchoredCondition::cone_multiple(const Point& p, const QPoly& line, int m, int power) {
  AnchoredCondition c;
  c.kind = Kind::ConeMultiple;
  c.point = p;
  c.tangent = line;
  c.order = m;
  c.cone_power = power;
  c.validate();
  return c;
}

AnchoredCondition AnchoredCondition::nn_degenerate(const Point& p, const QPoly& tangent, int n, const Rational& s) {
  AnchoredCondition c;
  c.kind = Kind::NNDegenerate;
  c.point = p;
  c.tangent = tangent;
  c.order = n;
  c.second_order = s;
  c.validate();
  return c;
}

void AnchoredCondition::validate() const {
  if (kind == Kind::ContainsCurve) {
    if (form.vars() != xyz() || form.is_zero() || !form.is_homogeneous() || form.total_degree() < 1)
      throw AnchorError("contained curve must be a homogeneous form of positive degree in x,y,z");
    if (order < 1) throw AnchorError("curve multiplicity must be at least 1");
    return;
  }
  if (is_zero_point(point)) throw AnchorError("degenerate point (0:0:0)");
  if (order < 1) throw AnchorError("condition order must be positive");
  if (kind == Kind::Multiplicity) return;
  require_linear(tangent, "tangent");
  if (!on_line(point, tangent)) throw AnchorError("tangent line does not pass through " + to_string(point));
  if (kind == Kind::ConeMultiple && (cone_power < 0 || cone_power > order))
    throw AnchorError("cone power must lie between 0 and the multiplicity");
}

std::string AnchoredCondition::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Multiplicity: os << "mult " << order << " at " << to_string(point); break;
    case Kind::NNPoint: os << "[" << order << ";" << order << "] at " << to_string(point) << " tangent " << to_string(tangent); break;
    case Kind::ContainsCurve: os << "contains (" << to_string(form) << ")^" << order; break;
    case Kind::ConeMultiple:
      os << "mult " << order << " at " << to_string(point) << " cone divisible by (" << to_string(tangent) << ")^" << cone_power;
      break;
    case Kind::NNDegenerate:
      os << "degenerate [" << order << ";" << order << "] at " << to_string(point) << " tangent " << to_string(tangent)
         << " second order " << second_order.get_str();
      break;
  }
  return os.str();
}

Matrix3 anchor_frame(const Point& p, const QPoly* tangent) {
  if (is_zero_point(p)) throw AnchorError("degenerate point (0:0:0)");
  if (!tangent) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        Matrix3 m = from_columns(unit(i), unit(j), p);
        if (det3(m) != 0) return m;
      }
  }
  auto l = linear_coeffs(*tangent);
  if (dot(l, p) != 0) throw AnchorError("tangent line does not pass through " + to_string(p));
  RationalMatrix row(1, 3);
  for (std::size_t i = 0; i < 3; ++i) row(0, i) = l[i];
  Point a1{}, a2{};
  bool found = false;
  for (const auto& v : kernel_basis(row)) {
    Point q{v[0], v[1], v[2]};
    if (!same_point(q, p)) {
      a1 = q;
      found = true;
      break;
    }
  }
  if (!found) throw AnchorError("tangent line is zero");
  for (int i = 0; i < 3; ++i)
    if (l[static_cast<std::size_t>(i)] != 0) {
      a2 = unit(i);
      break;
    }
  return from_columns(a1, a2, p);
}

QPoly apply_matrix(const QPoly& f, const Matrix3& a) {
  std::vector<QPoly> images;
  for (std::size_t i = 0; i < 3; ++i) images.push_back(linear_form(a[i][0], a[i][1], a[i][2]));
  return f.in_frame(xyz()).compose(images, xyz());
}

RationalVector coefficient_vector(const QPoly& f, int degree) {
  auto basis = monomial_basis(3, degree);
  QPoly g = f.in_frame(xyz());
  if (!g.is_zero() && (!g.is_homogeneous() || g.total_degree() != degree))
    throw std::invalid_argument("form is not homogeneous of degree " + std::to_string(degree));
  RationalVector v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) v[i] = g.coeff(basis[i]);
  return v;
}

QPoly form_from_vector(const RationalVector& v, int degree) {
  auto basis = monomial_basis(3, degree);
  if (v.size() != basis.size()) throw std::invalid_argument("coefficient vector has wrong length");
  QPoly f(xyz());
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], v[i]);
  return f;
}

RationalMatrix condition_rows(const AnchoredCondition& c, int degree) {
  c.validate();
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (c.kind == AnchoredCondition::Kind::ContainsCurve) return curve_rows(c, degree);
  bool with_tangent = c.kind != AnchoredCondition::Kind::Multiplicity;
  Matrix3 a = anchor_frame(c.point, with_tangent ? &c.tangent : nullptr);
  RationalMatrix t = transported_basis(a, degree);
  int n = c.order;
  std::vector<std::size_t> rows;
  auto add = [&](int x, int y) {
    if (x >= 0 && y >= 0 && x + y <= degree) rows.push_back(local_index(x, y, degree));
  };
  switch (c.kind) {
    case AnchoredCondition::Kind::Multiplicity:
      for (int s = 0; s < n; ++s)
        for (int y = 0; y <= s; ++y) add(s - y, y);
      break;
    case AnchoredCondition::Kind::ConeMultiple:
      for (int s = 0; s < n; ++s)
        for (int y = 0; y <= s; ++y) add(s - y, y);
      for (int j = 0; j < c.cone_power; ++j) add(n - j, j);
      break;
    case AnchoredCondition::Kind::NNPoint:
    case AnchoredCondition::Kind::NNDegenerate:
      for (int y = 0; y < n; ++y)
        for (int x = 0; x + y <= degree; ++x)
          if (!in_nn_ideal(x, y, n)) add(x, y);
      break;
    case AnchoredCondition::Kind::ContainsCurve: break;
  }
  RationalMatrix out = select_rows(t, rows);
  if (c.kind == AnchoredCondition::Kind::NNDegenerate) {
    // Weighted initial form sum_b c(2n-2b, b) u^b must vanish to order two at u = s.
    RationalVector value(t.cols), slope(t.cols);
    Rational pw = 1, pw_prev = 0;
    for (int b = 0; b <= n; ++b) {
      int x = 2 * n - 2 * b;
      if (x + b <= degree) {
        auto r = t.row(local_index(x, b, degree));
        for (std::size_t j = 0; j < t.cols; ++j) {
          value[j] += pw * r[j];
          slope[j] += Rational(b) * pw_prev * r[j];
        }
      }
      pw_prev = pw;
      pw *= c.second_order;
    }
    out.append_row(value);
    out.append_row(slope);
  }
  return out;
}

ConditionSystem condition_system(const std::vector<AnchoredCondition>& conditions, int degree) {
  ConditionSystem s;
  s.degree = degree;
  s.constraint_matrix = RationalMatrix(0, monomial_basis(3, degree).size());
  for (const auto& c : conditions) {
    RationalMatrix r = condition_rows(c, degree);
    for (std::size_t i = 0; i < r.rows; ++i) s.constraint_matrix.append_row(r.row(i));
  }
  return s;
}

LinearSystem condition_ideal_graded_piece(const std::vector<AnchoredCondition>& conditions, int degree) {
  if (degree < 0 || degree > 12) throw std::invalid_argument("degree must lie in 0..12");
  ConditionSystem s = condition_system(conditions, degree);
  LinearSystem out;
  out.degree = degree;
  auto ker = kernel_basis(s.constraint_matrix);
  if (!ker.empty()) {
    RationalMatrix k(0, s.constraint_matrix.cols);
    for (const auto& v : ker) k.append_row(v);
    RationalMatrix e = rref(k);
    for (std::size_t i = 0; i < ker.size(); ++i) {
      out.basis_vectors.push_back(e.row(i));
      out.basis.push_back(form_from_vector(e.row(i), degree));
    }
  }
  out.dim_forms = out.basis.size();
  out.dim_projective = static_cast<long>(out.dim_forms) - 1;
  return out;
}

LinearSystem sextic_33_fixed_tangent(const Point& p, const QPoly& tangent) {
  return condition_ideal_graded_piece({AnchoredCondition::nn_point(p, tangent, 3)}, 6);
}

int divisibility_multiplicity(const QPoly& f, const QPoly& line) {
  require_linear(line, "divisor");
  QPoly g = f.in_frame(xyz());
  if (g.is_zero()) throw std::invalid_argument("zero form is divisible by every power");
  QPoly l = line.in_frame(xyz());
  int k = 0;
  while (divides(l, g)) {
    g = divide_exact(g, l);
    ++k;
  }
  return k;
}

}  // namespace octica
