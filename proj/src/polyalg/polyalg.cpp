#include "octica/polyalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace octica {

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Exponents> monomial_basis(int num_vars, int degree) {
  if (num_vars < 1) throw std::invalid_argument("monomial_basis needs at least one variable");
  std::vector<Exponents> out;
  Exponents e(num_vars, 0);
  // Enumerate compositions of degree into num_vars parts.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == num_vars - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (degree >= 0) rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

namespace {

VarList common_frame(const QPoly& a, const QPoly& b) {
  if (!a.vars().empty() && !b.vars().empty() && a.vars() != b.vars())
    throw VariableMismatch("variable frames differ");
  return a.vars().empty() ? b.vars() : a.vars();
}

}  // namespace

QPoly divide_exact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionError("division by zero polynomial");
  VarList frame = common_frame(a, b);
  QPoly r = a.in_frame(frame), d = b.in_frame(frame), q(frame);
  const Exponents& lb = d.leading_exponents();
  Rational lc = d.leading_coeff();
  Exponents diff(frame.size());
  while (!r.is_zero()) {
    const Exponents& le = r.leading_exponents();
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = le[i] - lb[i];
      if (diff[i] < 0) throw DivisionError("polynomial division is not exact");
    }
    QPoly t = QPoly::monomial(frame, diff, r.leading_coeff() / lc);
    q += t;
    r -= t * d;
  }
  return q;
}

bool divides(const QPoly& b, const QPoly& a) {
  try {
    divide_exact(a, b);
    return true;
  } catch (const DivisionError&) {
    return false;
  }
}

QPoly make_monic(const QPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading_coeff();
  return inv * p;
}

QPoly primitive_integer(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational s(den, num);
  s.canonicalize();
  return s * p;
}

std::vector<QPoly> coefficients_in(const QPoly& p, std::size_t var) {
  std::vector<QPoly> cs(std::max(p.degree_in(var) + 1, 0), QPoly(p.vars()));
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    int k = f[var];
    f[var] = 0;
    cs[k].add_term(f, c);
  }
  return cs;
}

QPoly from_coefficients(const std::vector<QPoly>& cs, std::size_t var, const VarList& vars) {
  QPoly r(vars);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    QPoly ck = cs[k].in_frame(vars);
    for (const auto& [e, c] : ck.terms()) {
      Exponents f = e;
      f[var] += static_cast<int>(k);
      r.add_term(f, c);
    }
  }
  return r;
}

namespace {

using UPoly = std::vector<QPoly>;

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

QPoly gcd_rec(const QPoly& a, const QPoly& b, std::vector<bool> active);
QPoly gcd_univariate(const QPoly& a, const QPoly& b, std::size_t v);

bool only_in(const QPoly& p, std::size_t v) {
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != v && e[i] != 0) return false;
  return true;
}

QPoly content_rec(const UPoly& u, const std::vector<bool>& active, const VarList& frame) {
  QPoly g(frame);
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? make_monic(c) : gcd_rec(g, c, active);
    if (g.is_constant()) return QPoly::constant(1, frame);
  }
  return g;
}

UPoly divide_all(const UPoly& u, const QPoly& d) {
  UPoly r;
  for (const auto& c : u) r.push_back(c.is_zero() ? c : divide_exact(c, d));
  return r;
}

// Rescales u by a rational so that its coefficients are coprime integers.
void clear_scalar(UPoly& u) {
  Integer den = 1, num = 0;
  for (const auto& c : u)
    for (const auto& [e, r] : c.terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), r.get_num_mpz_t());
    }
  if (num == 0) return;
  Rational s(den, num);
  s.canonicalize();
  for (auto& c : u) c = s * c;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 1 in the main variable).
UPoly prem(UPoly a, const UPoly& b) {
  std::size_t n = b.size() - 1;
  const QPoly& lb = b.back();
  while (a.size() >= b.size()) {
    QPoly la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = lb * c;
    for (std::size_t k = 0; k <= n; ++k) a[k + shift] -= la * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

QPoly gcd_rec(const QPoly& a, const QPoly& b, std::vector<bool> active) {
  VarList frame = common_frame(a, b);
  if (a.is_zero()) return make_monic(b.in_frame(frame));
  if (b.is_zero()) return make_monic(a.in_frame(frame));
  int v = -1;
  for (std::size_t i = 0; i < active.size(); ++i) {
    if (active[i] && (a.degree_in(i) > 0 || b.degree_in(i) > 0)) {
      v = static_cast<int>(i);
      break;
    }
  }
  if (v < 0) return QPoly::constant(1, frame);
  if (only_in(a, v) && only_in(b, v)) return gcd_univariate(a.in_frame(frame), b.in_frame(frame), v);
  active[v] = false;
  UPoly A = coefficients_in(a.in_frame(frame), v), B = coefficients_in(b.in_frame(frame), v);
  QPoly ca = content_rec(A, active, frame), cb = content_rec(B, active, frame);
  QPoly gc = gcd_rec(ca, cb, active);
  A = divide_all(A, ca);
  B = divide_all(B, cb);
  clear_scalar(A);
  clear_scalar(B);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    if (B.size() == 1) return gc;
    UPoly R = prem(A, B);
    A = std::move(B);
    if (R.empty()) {
      B.clear();
      break;
    }
    B = divide_all(R, content_rec(R, active, frame));
    clear_scalar(B);
  }
  return make_monic(gc * from_coefficients(A, v, frame));
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
  VarList frame = common_frame(a, b);
  return gcd_rec(a.in_frame(frame), b.in_frame(frame), std::vector<bool>(frame.size(), true));
}

QPoly gcd(const std::vector<QPoly>& ps) {
  QPoly g;
  for (const auto& p : ps) {
    g = gcd(g, p);
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

QPoly content(const std::vector<QPoly>& v) { return gcd(v); }

QPoly SquarefreeDecomposition::squarefree_part() const {
  QPoly r = QPoly::constant(1);
  for (const auto& [i, f] : factors) r = r * f;
  return r;
}

SquarefreeDecomposition squarefree_decomposition(const QPoly& f) {
  SquarefreeDecomposition out;
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  out.unit = f.leading_coeff();
  if (f.is_constant()) return out;
  QPoly m = make_monic(f);
  QPoly g = m;
  for (std::size_t i = 0; i < m.nvars(); ++i) g = gcd(g, m.derivative(i));
  QPoly w = divide_exact(m, g);
  int i = 1;
  while (!w.is_constant()) {
    QPoly y = gcd(w, g);
    QPoly fi = divide_exact(w, y);
    if (!fi.is_constant()) out.factors[i] = make_monic(fi);
    w = y;
    g = divide_exact(g, y);
    ++i;
  }
  return out;
}

std::pair<QPoly, QPoly> divmod_univariate(const QPoly& a, const QPoly& b, std::size_t var) {
  if (b.is_zero()) throw DivisionError("division by zero polynomial");
  VarList frame = common_frame(a, b);
  QPoly r = a.in_frame(frame), d = b.in_frame(frame), q(frame);
  int db = d.degree_in(var);
  Rational lc = d.leading_coeff();
  while (!r.is_zero() && r.degree_in(var) >= db) {
    Exponents e(frame.size(), 0);
    e[var] = r.degree_in(var) - db;
    QPoly t = QPoly::monomial(frame, e, r.leading_coeff() / lc);
    q += t;
    r -= t * d;
  }
  return {q, r};
}

QPoly determinant(PolyMatrix m) {
  std::size_t n = m.rows;
  if (n != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return QPoly::constant(1);
  int sign = 1;
  QPoly prev = QPoly::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      const QPoly& c = m(i, k);
      if (c.is_zero()) continue;
      if (best == n || c.total_degree() < m(best, k).total_degree() ||
          (c.total_degree() == m(best, k).total_degree() && c.size() < m(best, k).size()))
        best = i;
    }
    if (best == n) return QPoly();
    if (best != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(best, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        QPoly v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = divide_exact(v, prev);
      }
    }
    prev = m(k, k);
  }
  return sign < 0 ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

ZPoly zdivexact(ZPoly a, const ZPoly& b) {
  ztrim(a);
  if (a.empty()) return {};
  if (b.empty() || a.size() < b.size()) throw std::logic_error("inexact polynomial division in resultant");
  ZPoly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = a[k + b.size() - 1];
    if (top == 0) continue;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  return q;
}

// Sylvester resultant when the coefficients depend on a single other
// variable: dense integer polynomials and fraction-free elimination.
QPoly resultant_dense(const UPoly& F, const UPoly& G, std::size_t other, const VarList& frame) {
  int m = static_cast<int>(F.size()) - 1, n = static_cast<int>(G.size()) - 1;
  auto to_dense = [&](const UPoly& P, Integer& den) {
    den = 1;
    for (const auto& c : P)
      for (const auto& [e, co] : c.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), co.get_den_mpz_t());
    std::vector<ZPoly> out;
    for (const auto& c : P) {
      ZPoly z(static_cast<std::size_t>(std::max(c.total_degree(), 0)) + 1);
      for (const auto& [e, co] : c.terms()) {
        Rational v = co * Rational(den);
        z[static_cast<std::size_t>(e[other])] = v.get_num();
      }
      ztrim(z);
      out.push_back(z);
    }
    return out;
  };
  Integer lf, lg;
  auto Fz = to_dense(F, lf), Gz = to_dense(G, lg);
  std::size_t N = static_cast<std::size_t>(m + n);
  std::vector<std::vector<ZPoly>> a(N, std::vector<ZPoly>(N));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) a[i][i + k] = Fz[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) a[n + i][i + k] = Gz[n - k];
  int sign = 1;
  ZPoly prev{Integer(1)};
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t best = N;
    for (std::size_t i = k; i < N; ++i) {
      if (a[i][k].empty()) continue;
      if (best == N || a[i][k].size() < a[best][k].size()) best = i;
    }
    if (best == N) return QPoly(frame);
    if (best != k) {
      std::swap(a[best], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < N; ++i)
      for (std::size_t j = k + 1; j < N; ++j)
        a[i][j] = zdivexact(zsub(zmul(a[k][k], a[i][j]), zmul(a[i][k], a[k][j])), prev);
    prev = a[k][k];
  }
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), lf.get_mpz_t(), static_cast<unsigned long>(n));
  Integer sg;
  mpz_pow_ui(sg.get_mpz_t(), lg.get_mpz_t(), static_cast<unsigned long>(m));
  scale *= sg;
  QPoly r(frame);
  const ZPoly& det = a[N - 1][N - 1];
  for (std::size_t k = 0; k < det.size(); ++k) {
    if (det[k] == 0) continue;
    Exponents e(frame.size(), 0);
    e[other] = static_cast<int>(k);
    Rational v(det[k] * sign, scale);
    v.canonicalize();
    r.add_term(e, v);
  }
  return r;
}

}  // namespace

QPoly resultant(const QPoly& f, const QPoly& g, std::size_t var) {
  VarList frame = common_frame(f, g);
  int m = f.degree_in(var), n = g.degree_in(var);
  if (m < 1 || n < 1) throw std::invalid_argument("resultant operand has degree zero in the eliminated variable");
  UPoly F = coefficients_in(f.in_frame(frame), var), G = coefficients_in(g.in_frame(frame), var);
  if (frame.size() == 2) return resultant_dense(F, G, 1 - var, frame);
  std::size_t N = static_cast<std::size_t>(m + n);
  PolyMatrix S(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) S(i, j) = QPoly(frame);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) S(i, i + k) = F[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) S(n + i, i + k) = G[n - k];
  return determinant(S).in_frame(frame);
}

int order_at_zero(const QPoly& p, std::size_t var) {
  int m = -1;
  for (const auto& [e, c] : p.terms())
    if (m < 0 || e[var] < m) m = e[var];
  return m;
}

namespace {

using ModPoly = std::vector<long>;  // coefficient of x^i at index i

long mod(const Integer& a, long p) {
  Integer r = a % p;
  if (r < 0) r += p;
  return r.get_si();
}

long powmod(long b, long e, long p) {
  long r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = static_cast<long>((__int128)r * b % p);
    b = static_cast<long>((__int128)b * b % p);
    e >>= 1;
  }
  return r;
}

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mrem(ModPoly a, const ModPoly& b, long p) {
  long inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    long f = a.back() * inv % p;
    std::size_t s = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = ((a[s + i] - f * b[i]) % p + p) % p;
    mtrim(a);
  }
  return a;
}

std::size_t mgcd_degree(ModPoly a, ModPoly b, long p) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    ModPoly r = mrem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Rational eval_int_poly(const std::vector<Integer>& c, const Rational& x) {
  Rational s = 0;
  for (std::size_t i = c.size(); i-- > 0;) s = s * x + c[i];
  return s;
}

// Rational reconstruction of r mod M with numerator and denominator <= N.
bool reconstruct(const Integer& r, const Integer& M, const Integer& N, Rational& out) {
  Integer r0 = M, r1 = r, t0 = 0, t1 = 1;
  while (r1 > N) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > N) return false;
  out = Rational(r1, t1);
  out.canonicalize();
  return true;
}


ZPoly dense_integer(const QPoly& p, std::size_t v) {
  Integer den = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out(p.degree_in(v) + 1);
  for (const auto& [e, c] : p.terms()) out[e[v]] = c.get_num() * (den / c.get_den());
  return out;
}

void make_primitive(ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

const std::vector<long>& gcd_primes() {
  static const std::vector<long> primes = [] {
    std::vector<long> out;
    for (long p = 2147483647; out.size() < 400; p -= 2)
      if (is_prime(p)) out.push_back(p);
    return out;
  }();
  return primes;
}

// Monic gcd modulo p.
ModPoly mgcd(ModPoly a, ModPoly b, long p) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    ModPoly r = mrem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  long inv = powmod(a.back(), p - 2, p);
  for (auto& c : a) c = static_cast<long>((__int128)c * inv % p);
  return a;
}

bool zdivides(const ZPoly& b, ZPoly a) {
  while (a.size() >= b.size()) {
    if (a.back() % b.back() != 0) return false;
    Integer q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
    a.pop_back();
    ztrim(a);
  }
  return a.empty();
}

// Univariate gcd over Q by Chinese remaindering of modular gcds scaled to
// the gcd of the leading coefficients, accepted once it divides both inputs.
QPoly gcd_univariate(const QPoly& a, const QPoly& b, std::size_t v) {
  ZPoly A = dense_integer(a, v), B = dense_integer(b, v);
  make_primitive(A);
  make_primitive(B);
  Integer lc;
  mpz_gcd(lc.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
  std::size_t deg = std::min(A.size(), B.size()) + 1;
  ZPoly acc;
  Integer modulus = 1;
  for (long p : gcd_primes()) {
    if (mod(A.back(), p) == 0 || mod(B.back(), p) == 0) continue;
    ModPoly ma, mb;
    for (const auto& c : A) ma.push_back(mod(c, p));
    for (const auto& c : B) mb.push_back(mod(c, p));
    ModPoly g = mgcd(ma, mb, p);
    if (g.size() == 1) return QPoly::constant(1, a.vars());
    if (g.size() > deg) continue;
    long l = mod(lc, p);
    for (auto& c : g) c = static_cast<long>((__int128)c * l % p);
    if (g.size() < deg) {
      deg = g.size();
      acc.assign(deg, Integer(0));
      modulus = 1;
    }
    // Combine acc (mod modulus) with g (mod p) into symmetric residues.
    Integer inv;
    Integer pz(p);
    mpz_invert(inv.get_mpz_t(), Integer(modulus % p).get_mpz_t(), pz.get_mpz_t());
    bool changed = false;
    Integer next = modulus * p;
    for (std::size_t i = 0; i < deg; ++i) {
      Integer r = (Integer(g[i]) - acc[i]) % p;
      if (r < 0) r += p;
      r = r * inv % p;
      Integer c = acc[i] + modulus * r;
      if (c > next / 2) c -= next;
      if (c != acc[i]) changed = true;
      acc[i] = c;
    }
    modulus = next;
    if (changed) continue;
    ZPoly cand = acc;
    make_primitive(cand);
    if (zdivides(cand, A) && zdivides(cand, B)) {
      QPoly out(a.vars());
      for (std::size_t i = 0; i < cand.size(); ++i) {
        Exponents e(a.nvars(), 0);
        e[v] = static_cast<int>(i);
        if (cand[i] != 0) out.add_term(e, Rational(cand[i]));
      }
      return make_monic(out);
    }
  }
  throw std::runtime_error("modular gcd did not stabilise");
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& f, std::size_t var) {
  std::vector<Rational> roots;
  if (f.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
  for (const auto& [e, c] : f.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw std::invalid_argument("rational_roots expects a univariate polynomial");
  QPoly g = f;
  int z = order_at_zero(g, var);
  if (z > 0) {
    roots.push_back(0);
    Exponents e(g.nvars(), 0);
    e[var] = z;
    g = divide_exact(g, QPoly::monomial(g.vars(), e, 1));
  }
  if (g.degree_in(var) >= 1) {
    QPoly s = divide_exact(g, gcd(g, g.derivative(var)));
    s = primitive_integer(s);
    std::vector<Integer> c(s.degree_in(var) + 1);
    for (const auto& [e, q] : s.terms()) c[e[var]] = q.get_num();
    std::size_t n = c.size() - 1;
    if (n == 1) {
      Rational r(-c[0], c[1]);
      r.canonicalize();
      roots.push_back(r);
    } else if (n > 1) {
      long p = std::max<long>(1009, static_cast<long>(n) + 2);
      ModPoly cp, dp;
      for (;; ++p) {
        if (!is_prime(p) || mod(c[n], p) == 0) continue;
        cp.assign(n + 1, 0);
        for (std::size_t i = 0; i <= n; ++i) cp[i] = mod(c[i], p);
        dp.assign(n, 0);
        for (std::size_t i = 1; i <= n; ++i) dp[i - 1] = cp[i] * static_cast<long>(i % p) % p;
        if (mgcd_degree(cp, dp, p) == 0) break;
      }
      Integer B = abs(c[0]) > abs(c[n]) ? Integer(abs(c[0])) : Integer(abs(c[n]));
      Integer bound = 2 * B * B + 1;
      Integer M = p;
      int steps = 0;
      while (M <= bound) {
        M *= M;
        ++steps;
      }
      Integer N;
      mpz_sqrt(N.get_mpz_t(), Integer(M / 2).get_mpz_t());
      for (long r0 = 0; r0 < p; ++r0) {
        long v = 0;
        for (std::size_t i = n + 1; i-- > 0;) v = static_cast<long>(((__int128)v * r0 + cp[i]) % p);
        if (v != 0) continue;
        // Newton lift from p to M by repeated squaring of the modulus.
        Integer r = r0, mod_k = p;
        for (int s = 0; s < steps; ++s) {
          mod_k *= mod_k;
          Integer fv = 0, dv = 0;
          for (std::size_t i = n + 1; i-- > 0;) fv = (fv * r + c[i]) % mod_k;
          for (std::size_t i = n; i >= 1; --i) dv = (dv * r + c[i] * static_cast<long>(i)) % mod_k;
          Integer inv;
          mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), mod_k.get_mpz_t());
          r = (r - fv * inv) % mod_k;
          if (r < 0) r += mod_k;
        }
        Rational q;
        if (reconstruct(r, M, N, q) && eval_int_poly(c, q) == 0) roots.push_back(q);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace octica
