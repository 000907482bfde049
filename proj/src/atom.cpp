#include "wmi/atom.hpp"

#include <sstream>
#include <stdexcept>

namespace wmi {

LinearTerm LinearTerm::variable(const std::string& name) {
  LinearTerm t;
  t.coeffs[name] = 1;
  return t;
}

LinearTerm LinearTerm::constant_term(const Rational& c) {
  LinearTerm t;
  t.constant = c;
  return t;
}

LinearTerm& LinearTerm::operator+=(const LinearTerm& o) {
  for (const auto& [v, c] : o.coeffs) {
    auto& slot = coeffs[v];
    slot += c;
    if (slot == 0) coeffs.erase(v);
  }
  constant += o.constant;
  return *this;
}

LinearTerm& LinearTerm::operator-=(const LinearTerm& o) {
  for (const auto& [v, c] : o.coeffs) {
    auto& slot = coeffs[v];
    slot -= c;
    if (slot == 0) coeffs.erase(v);
  }
  constant -= o.constant;
  return *this;
}

LinearTerm& LinearTerm::operator*=(const Rational& k) {
  if (k == 0) {
    coeffs.clear();
    constant = 0;
    return *this;
  }
  for (auto& [v, c] : coeffs) c *= k;
  constant *= k;
  return *this;
}

Rational LinearTerm::eval(const std::map<std::string, Rational>& values) const {
  Rational r = constant;
  for (const auto& [v, c] : coeffs) r += c * values.at(v);
  return r;
}

std::string LinearTerm::var_part_sexpr() const {
  if (coeffs.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& [v, c] : coeffs) {
    if (c == 1)
      parts.push_back(v);
    else
      parts.push_back("(* " + to_string(c) + " " + v + ")");
  }
  if (parts.size() == 1) return parts.front();
  std::string s = "(+";
  for (const auto& p : parts) s += " " + p;
  return s + ")";
}

// ---------------------------------------------------------------------------

ETerm ETerm::yvar(unsigned index) {
  auto d = std::make_shared<Data>();
  d->kind = ETermKind::YVar;
  d->index = index;
  d->key = index == 0 ? std::string("$y") : "$y" + std::to_string(index);
  ETerm t;
  t.d_ = std::move(d);
  return t;
}

ETerm ETerm::real(const std::string& name) {
  auto d = std::make_shared<Data>();
  d->kind = ETermKind::Real;
  d->name = name;
  d->key = name;
  ETerm t;
  t.d_ = std::move(d);
  return t;
}

ETerm ETerm::constant(const Rational& value) {
  auto d = std::make_shared<Data>();
  d->kind = ETermKind::Const;
  d->value = value;
  d->key = to_string(value);
  ETerm t;
  t.d_ = std::move(d);
  return t;
}

ETerm ETerm::app(const std::string& symbol, std::vector<ETerm> args) {
  auto d = std::make_shared<Data>();
  d->kind = ETermKind::App;
  d->name = symbol;
  d->key = "(" + symbol;
  for (const auto& a : args) d->key += " " + a.key();
  d->key += ")";
  d->args = std::move(args);
  ETerm t;
  t.d_ = std::move(d);
  return t;
}

// ---------------------------------------------------------------------------

Atom Atom::boolean(const std::string& name) {
  auto d = std::make_shared<Data>();
  d->kind = AtomKind::Bool;
  d->name = name;
  d->key = name;
  Atom a;
  a.d_ = std::move(d);
  return a;
}

Atom Atom::lra(LinearTerm var_part, Rel rel, Rational rhs) {
  if (var_part.coeffs.empty()) throw std::invalid_argument("LRA atom without variables");
  var_part.constant = 0;
  auto d = std::make_shared<Data>();
  d->kind = AtomKind::Lra;
  d->rel = rel;
  d->rhs = std::move(rhs);
  const char* op = rel == Rel::Le ? "<=" : rel == Rel::Lt ? "<" : "=";
  d->key = std::string("(") + op + " " + var_part.var_part_sexpr() + " " + to_string(d->rhs) + ")";
  d->lhs = std::move(var_part);
  Atom a;
  a.d_ = std::move(d);
  return a;
}

Atom Atom::euf_eq(ETerm a, ETerm b) {
  if (b < a) std::swap(a, b);
  auto d = std::make_shared<Data>();
  d->kind = AtomKind::Euf;
  d->key = "(= " + a.key() + " " + b.key() + ")";
  d->e1 = std::move(a);
  d->e2 = std::move(b);
  Atom r;
  r.d_ = std::move(d);
  return r;
}

LraResult make_lra_literal(const LinearTerm& lhs, RelOp op, const LinearTerm& rhs) {
  LinearTerm t = lhs - rhs;  // t op 0
  Rational bound = -t.constant;
  t.constant = 0;
  if (t.coeffs.empty()) {
    const Rational& b = bound;  // 0 op b
    switch (op) {
      case RelOp::Le: return bool(0 <= b);
      case RelOp::Lt: return bool(0 < b);
      case RelOp::Eq: return bool(0 == b);
      case RelOp::Ne: return bool(0 != b);
      case RelOp::Ge: return bool(0 >= b);
      case RelOp::Gt: return bool(0 > b);
    }
  }
  // Express op through {Le, Lt, Eq} plus a polarity.
  Rel rel = Rel::Le;
  bool positive = true;
  switch (op) {
    case RelOp::Le: rel = Rel::Le; break;
    case RelOp::Lt: rel = Rel::Lt; break;
    case RelOp::Eq: rel = Rel::Eq; break;
    case RelOp::Ne: rel = Rel::Eq; positive = false; break;
    case RelOp::Ge: rel = Rel::Lt; positive = false; break;
    case RelOp::Gt: rel = Rel::Le; positive = false; break;
  }
  Rational lead = t.coeffs.begin()->second;
  if (lead < 0) {
    // -t rel' -b: t <= b  <=>  -t >= -b  <=>  not(-t < -b)
    if (rel != Rel::Eq) {
      rel = rel == Rel::Le ? Rel::Lt : Rel::Le;
      positive = !positive;
    }
  }
  Rational scale = 1 / abs(lead);
  if (lead < 0) scale = -scale;
  t *= scale;
  bound *= scale;
  return Literal{Atom::lra(std::move(t), rel, std::move(bound)), positive};
}

std::variant<Literal, bool> make_euf_literal(const ETerm& a, const ETerm& b) {
  if (a == b) return true;
  if (a.kind() == ETermKind::Const && b.kind() == ETermKind::Const) return a.value() == b.value();
  return Literal{Atom::euf_eq(a, b), true};
}

std::string literal_to_string(const Literal& l) {
  if (l.positive) return l.atom.key();
  return "(not " + l.atom.key() + ")";
}

}  // namespace wmi
