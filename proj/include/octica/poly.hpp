#pragma once

#include "octica/rational.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace octica {

using Exponents = std::vector<int>;
using VarList = std::vector<std::string>;

class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline int total_degree(const Exponents& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

// Graded reverse lexicographic order, used as "a comes before b" so that
// iteration runs from the largest monomial down.
struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

template <class C>
class Poly;

template <class C>
bool is_zero(const Poly<C>& p) {
  return p.is_zero();
}

// A polynomial with coefficients in C (Rational, or Poly<Rational> for a
// parameter ring). A polynomial whose frame is empty is a scalar and adopts
// the frame of whatever it is combined with.
template <class C>
class Poly {
 public:
  using Coeff = C;
  using TermMap = std::map<Exponents, C, GrevlexGreater>;

  Poly() = default;
  explicit Poly(VarList vars) : vars_(std::move(vars)) {}
  template <class T>
    requires std::is_arithmetic_v<T>
  explicit Poly(T v) {
    C c(v);
    if (!octica::is_zero(c)) terms_.emplace(Exponents{}, c);
  }
  explicit Poly(const Rational& v)
    requires(!std::is_same_v<C, Rational>)
  {
    C c(v);
    if (!octica::is_zero(c)) terms_.emplace(Exponents{}, c);
  }

  static Poly constant(const C& c, VarList vars = {}) {
    Poly p(std::move(vars));
    if (!octica::is_zero(c)) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
  }
  static Poly variable(const VarList& vars, std::size_t index) {
    Exponents e(vars.size(), 0);
    e.at(index) = 1;
    return monomial(vars, e, C(1));
  }
  static Poly monomial(const VarList& vars, const Exponents& e, const C& c) {
    if (e.size() != vars.size()) throw std::invalid_argument("exponent length does not match frame");
    Poly p(vars);
    if (!octica::is_zero(c)) p.terms_.emplace(e, c);
    return p;
  }

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && octica::total_degree(terms_.begin()->first) == 0);
  }
  C constant_term() const { return coeff(Exponents(vars_.size(), 0)); }

  int total_degree() const { return terms_.empty() ? -1 : octica::total_degree(terms_.begin()->first); }
  int low_degree() const {
    int m = -1;
    for (const auto& [e, c] : terms_) {
      int d = octica::total_degree(e);
      if (m < 0 || d < m) m = d;
    }
    return m;
  }
  int degree_in(std::size_t var) const {
    int m = -1;
    for (const auto& [e, c] : terms_) m = std::max(m, e.at(var));
    return m;
  }
  bool is_homogeneous() const { return low_degree() == total_degree(); }

  C coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }
  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const C& leading_coeff() const { return terms_.begin()->second; }

  std::size_t var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    throw VariableMismatch("variable '" + name + "' not in frame");
  }

  void add_term(const Exponents& e, const C& c) {
    if (octica::is_zero(c)) return;
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent length does not match frame");
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (octica::is_zero(it->second)) terms_.erase(it);
    }
  }

  // Re-express a scalar (empty-frame) polynomial in a concrete frame.
  Poly in_frame(const VarList& vars) const {
    if (vars_ == vars) return *this;
    if (!vars_.empty()) throw VariableMismatch("cannot move polynomial between variable frames");
    Poly p(vars);
    for (const auto& [e, c] : terms_) p.terms_.emplace(Exponents(vars.size(), 0), c);
    return p;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    unify(o);
    if (o.vars_.size() == vars_.size()) {
      for (const auto& [e, c] : o.terms_) add_term(e, c);
    } else {
      Poly lifted = o.in_frame(vars_);
      for (const auto& [e, c] : lifted.terms_) add_term(e, c);
    }
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    VarList frame = a.vars_.empty() ? b.vars_ : a.vars_;
    if (!a.vars_.empty() && !b.vars_.empty() && a.vars_ != b.vars_)
      throw VariableMismatch("variable frames differ");
    Poly r(frame);
    if (a.is_zero() || b.is_zero()) return r;
    Poly la = a.in_frame(frame), lb = b.in_frame(frame);
    Exponents e(frame.size());
    for (const auto& [ea, ca] : la.terms_) {
      for (const auto& [eb, cb] : lb.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend Poly operator*(const C& s, const Poly& p) {
    Poly r(p.vars_);
    if (octica::is_zero(s)) return r;
    for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.vars_ != b.vars_) {
      if (a.vars_.empty() || b.vars_.empty()) {
        VarList f = a.vars_.empty() ? b.vars_ : a.vars_;
        return a.in_frame(f).terms_ == b.in_frame(f).terms_;
      }
      return false;
    }
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned n) const {
    Poly result = Poly::constant(C(1), vars_);
    Poly base = *this;
    while (n) {
      if (n & 1u) result = result * base;
      n >>= 1u;
      if (n) base = base * base;
    }
    return result;
  }

  Poly derivative(std::size_t var) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(var) == 0) continue;
      Exponents f = e;
      --f[var];
      r.add_term(f, C(e[var]) * c);
    }
    return r;
  }

  // Ring homomorphism sending variable i to images[i]; all images share one frame.
  Poly compose(const std::vector<Poly>& images, const VarList& target) const {
    if (images.size() != vars_.size()) throw VariableMismatch("substitution needs one image per variable");
    std::vector<std::vector<Poly>> powers(images.size());
    Poly r(target);
    for (const auto& [e, c] : terms_) {
      Poly t = Poly::constant(c, target);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Poly::constant(C(1), target));
        while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i].in_frame(target));
        t = t * pw[e[i]];
      }
      r += t;
    }
    return r;
  }

  // Substitute a single variable, keeping the frame.
  Poly substitute(std::size_t var, const Poly& value) const {
    std::vector<Poly> images;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      images.push_back(i == var ? value.in_frame(vars_) : Poly::variable(vars_, i));
    return compose(images, vars_);
  }

  // Apply f to every coefficient (e.g. specialising parameters).
  template <class F>
  auto map_coeffs(F f) const -> Poly<decltype(f(std::declval<C>()))> {
    Poly<decltype(f(std::declval<C>()))> r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

 private:
  void unify(const Poly& o) {
    if (vars_ == o.vars_ || o.vars_.empty()) return;
    if (vars_.empty()) {
      *this = in_frame(o.vars_);
      return;
    }
    throw VariableMismatch("variable frames differ");
  }

  VarList vars_;
  TermMap terms_;
};

using QPoly = Poly<Rational>;
// Polynomials in x,y,z whose coefficients live in a parameter ring Q[t,...].
using PPoly = Poly<QPoly>;

VarList xyz();
QPoly qvar(const VarList& vars, const std::string& name);
QPoly qconst(const Rational& c, const VarList& vars = {});

std::string to_string(const QPoly& p);
std::string to_string(const PPoly& p);

// Merge inner parameter variables into a flat frame outer ++ params.
QPoly flatten(const PPoly& p, const VarList& params);
// Split a flat polynomial into outer variables with coefficients in the rest.
PPoly split(const QPoly& p, const VarList& outer);
PPoly lift(const QPoly& p, const VarList& params);
QPoly specialize(const PPoly& p, const std::vector<Rational>& values);
QPoly evaluate_params(const QPoly& coeff, const std::vector<Rational>& values);
Rational evaluate(const QPoly& p, const std::vector<Rational>& point);

}  // namespace octica
