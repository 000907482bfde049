#include "wmi/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "wmi/errors.hpp"

namespace wmi {

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rational& c) {
  Polynomial p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw std::invalid_argument("variable '" + name + "' is not integrated over");
  Polynomial p(std::move(vars));
  Exponents e(p.vars_.size(), 0);
  e[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
  p.add_term(e, 1);
  return p;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [e, _] : terms_) {
    unsigned s = 0;
    for (unsigned k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials over different variable lists");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, c] : terms_) c *= k;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.vars_);
  Polynomial::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("point dimension mismatch");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) m *= point[i];
    s += m;
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += wmi::to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      s += "*" + vars_[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

Polynomial polynomial_from_weight(const WeightTerm& w, const std::vector<std::string>& vars) {
  switch (w.kind()) {
    case TKind::Const: return Polynomial::constant(vars, w.value());
    case TKind::Var: return Polynomial::variable(vars, w.name());
    case TKind::Add: return polynomial_from_weight(w.args()[0], vars) + polynomial_from_weight(w.args()[1], vars);
    case TKind::Sub: return polynomial_from_weight(w.args()[0], vars) - polynomial_from_weight(w.args()[1], vars);
    case TKind::Mul: return polynomial_from_weight(w.args()[0], vars) * polynomial_from_weight(w.args()[1], vars);
    case TKind::Div: {
      Polynomial d = polynomial_from_weight(w.args()[1], vars);
      if (d.degree() > 0) throw NonPolynomialWeight("division by a non-constant term: " + w.to_string());
      if (d.is_zero()) throw NonPolynomialWeight("division by zero: " + w.to_string());
      return polynomial_from_weight(w.args()[0], vars) * (1 / d.terms().begin()->second);
    }
    case TKind::Func: throw NonPolynomialWeight("no integrator for function '" + w.name() + "'");
    case TKind::Ite: throw std::invalid_argument("weight is not free of conditions: " + w.to_string());
  }
  return Polynomial(vars);
}

}  // namespace wmi
