#include "octica/poly.hpp"

#include <sstream>

namespace octica {

VarList xyz() { return {"x", "y", "z"}; }

QPoly qvar(const VarList& vars, const std::string& name) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return QPoly::variable(vars, i);
  throw VariableMismatch("variable '" + name + "' not in frame");
}

QPoly qconst(const Rational& c, const VarList& vars) { return QPoly::constant(c, vars); }

namespace {

std::string monomial_string(const VarList& vars, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_string(p.vars(), e);
    if (mono.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

std::string to_string(const PPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono = monomial_string(p.vars(), e);
    std::string cs = to_string(c);
    bool single = c.size() == 1;
    bool neg = single && sgn(c.leading_coeff()) < 0;
    if (single && neg) cs = to_string(-c);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (mono.empty()) {
      os << (single ? cs : "(" + cs + ")");
    } else if (single && cs == "1") {
      os << mono;
    } else {
      os << (single ? cs : "(" + cs + ")") << "*" << mono;
    }
  }
  return os.str();
}

QPoly flatten(const PPoly& p, const VarList& params) {
  VarList all = p.vars();
  all.insert(all.end(), params.begin(), params.end());
  QPoly r(all);
  std::size_t n = p.nvars();
  for (const auto& [e, c] : p.terms()) {
    QPoly cc = c.in_frame(c.vars().empty() ? VarList{} : params);
    for (const auto& [f, q] : cc.terms()) {
      Exponents g(all.size(), 0);
      for (std::size_t i = 0; i < n; ++i) g[i] = e[i];
      for (std::size_t i = 0; i < f.size(); ++i) g[n + i] = f[i];
      r.add_term(g, q);
    }
  }
  return r;
}

PPoly split(const QPoly& p, const VarList& outer) {
  VarList params;
  std::vector<int> where(p.nvars(), -1);
  std::vector<int> pwhere(p.nvars(), -1);
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < outer.size(); ++j)
      if (outer[j] == p.vars()[i]) {
        where[i] = static_cast<int>(j);
        found = true;
      }
    if (!found) {
      pwhere[i] = static_cast<int>(params.size());
      params.push_back(p.vars()[i]);
    }
  }
  PPoly r(outer);
  for (const auto& [e, c] : p.terms()) {
    Exponents oe(outer.size(), 0), pe(params.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (where[i] >= 0) oe[where[i]] = e[i];
      else pe[pwhere[i]] = e[i];
    }
    r.add_term(oe, QPoly::monomial(params, pe, c));
  }
  return r;
}

PPoly lift(const QPoly& p, const VarList& params) {
  PPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, QPoly::constant(c, params));
  return r;
}

Rational evaluate(const QPoly& p, const std::vector<Rational>& point) {
  if (point.size() != p.nvars()) throw VariableMismatch("evaluation point has wrong length");
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Rational pw = 1;
      for (int k = 0; k < e[i]; ++k) pw *= point[i];
      t *= pw;
    }
    s += t;
  }
  return s;
}

QPoly evaluate_params(const QPoly& coeff, const std::vector<Rational>& values) {
  if (coeff.vars().empty()) return coeff;
  return QPoly::constant(evaluate(coeff, values));
}

QPoly specialize(const PPoly& p, const std::vector<Rational>& values) {
  QPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Rational v = c.vars().empty() ? c.constant_term() : evaluate(c, values);
    r.add_term(e, v);
  }
  return r;
}

}  // namespace octica
