#include "wmi/formula.hpp"

#include <stdexcept>

namespace wmi {

// ---------------------------------------------------------------------------
// Formula

namespace {

const Formula& shared_true() {
  static const Formula t = Formula::top();
  return t;
}

}  // namespace

Formula::Formula() : Formula(shared_true()) {}

Formula Formula::make(FKind k, std::vector<Formula> kids) {
  auto d = std::make_shared<Data>();
  d->kind = k;
  d->kids = std::move(kids);
  return Formula(std::shared_ptr<const Data>(std::move(d)));
}

Formula Formula::top() {
  static const std::shared_ptr<const Data> t = [] {
    auto d = std::make_shared<Data>();
    d->kind = FKind::True;
    return std::shared_ptr<const Data>(d);
  }();
  return Formula(t);
}

Formula Formula::bottom() {
  static const std::shared_ptr<const Data> f = [] {
    auto d = std::make_shared<Data>();
    d->kind = FKind::False;
    return std::shared_ptr<const Data>(d);
  }();
  return Formula(f);
}

Formula Formula::atom(const Atom& a) {
  auto d = std::make_shared<Data>();
  d->kind = FKind::Atom;
  d->atom = a;
  return Formula(std::shared_ptr<const Data>(std::move(d)));
}

Formula Formula::literal(const Literal& l) {
  Formula a = atom(l.atom);
  return l.positive ? a : lnot(a);
}

Formula Formula::lnot(const Formula& f) {
  switch (f.kind()) {
    case FKind::True: return bottom();
    case FKind::False: return top();
    case FKind::Not: return f.kids().front();
    default: return make(FKind::Not, {f});
  }
}

Formula Formula::land(std::vector<Formula> kids) {
  std::vector<Formula> flat;
  for (auto& k : kids) {
    if (k.kind() == FKind::And)
      flat.insert(flat.end(), k.kids().begin(), k.kids().end());
    else
      flat.push_back(std::move(k));
  }
  if (flat.empty()) return top();
  if (flat.size() == 1) return flat.front();
  return make(FKind::And, std::move(flat));
}

Formula Formula::lor(std::vector<Formula> kids) {
  std::vector<Formula> flat;
  for (auto& k : kids) {
    if (k.kind() == FKind::Or)
      flat.insert(flat.end(), k.kids().begin(), k.kids().end());
    else
      flat.push_back(std::move(k));
  }
  if (flat.empty()) return bottom();
  if (flat.size() == 1) return flat.front();
  return make(FKind::Or, std::move(flat));
}

Formula Formula::implies(const Formula& a, const Formula& b) { return make(FKind::Implies, {a, b}); }
Formula Formula::iff(const Formula& a, const Formula& b) { return make(FKind::Iff, {a, b}); }

bool Formula::is_literal() const {
  if (kind() == FKind::Atom) return true;
  return kind() == FKind::Not && kids().front().kind() == FKind::Atom;
}

Literal Formula::as_literal() const {
  if (kind() == FKind::Atom) return {atom_of(), true};
  if (kind() == FKind::Not && kids().front().kind() == FKind::Atom) return {kids().front().atom_of(), false};
  throw std::logic_error("formula is not a literal");
}

bool Formula::operator==(const Formula& o) const {
  if (d_ == o.d_) return true;
  if (kind() != o.kind()) return false;
  if (kind() == FKind::Atom) return atom_of() == o.atom_of();
  if (kids().size() != o.kids().size()) return false;
  for (std::size_t i = 0; i < kids().size(); ++i)
    if (!(kids()[i] == o.kids()[i])) return false;
  return true;
}

std::string Formula::to_string() const {
  switch (kind()) {
    case FKind::True: return "true";
    case FKind::False: return "false";
    case FKind::Atom: return atom_of().key();
    default: break;
  }
  const char* op = "";
  switch (kind()) {
    case FKind::Not: op = "not"; break;
    case FKind::And: op = "and"; break;
    case FKind::Or: op = "or"; break;
    case FKind::Implies: op = "->"; break;
    case FKind::Iff: op = "<->"; break;
    default: break;
  }
  std::string s = std::string("(") + op;
  for (const auto& k : kids()) s += " " + k.to_string();
  return s + ")";
}

// ---------------------------------------------------------------------------
// WeightTerm

WeightTerm::WeightTerm() : WeightTerm(constant(0)) {}

WeightTerm WeightTerm::constant(const Rational& c) {
  auto d = std::make_shared<Data>();
  d->kind = TKind::Const;
  d->value = c;
  return WeightTerm(std::shared_ptr<const Data>(std::move(d)));
}

WeightTerm WeightTerm::var(const std::string& name) {
  auto d = std::make_shared<Data>();
  d->kind = TKind::Var;
  d->name = name;
  return WeightTerm(std::shared_ptr<const Data>(std::move(d)));
}

WeightTerm WeightTerm::binop(TKind op, const WeightTerm& l, const WeightTerm& r) {
  if (op != TKind::Add && op != TKind::Sub && op != TKind::Mul && op != TKind::Div)
    throw std::invalid_argument("binop expects + - * /");
  auto d = std::make_shared<Data>();
  d->kind = op;
  d->args = {l, r};
  return WeightTerm(std::shared_ptr<const Data>(std::move(d)));
}

WeightTerm WeightTerm::func(const std::string& name, std::vector<WeightTerm> args) {
  auto d = std::make_shared<Data>();
  d->kind = TKind::Func;
  d->name = name;
  d->args = std::move(args);
  return WeightTerm(std::shared_ptr<const Data>(std::move(d)));
}

WeightTerm WeightTerm::ite(const Formula& cond, const WeightTerm& then_, const WeightTerm& else_) {
  if (then_ == else_) return then_;
  auto d = std::make_shared<Data>();
  d->kind = TKind::Ite;
  d->cond = cond;
  d->args = {then_, else_};
  return WeightTerm(std::shared_ptr<const Data>(std::move(d)));
}

bool WeightTerm::operator==(const WeightTerm& o) const {
  if (d_ == o.d_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case TKind::Const: return value() == o.value();
    case TKind::Var: return name() == o.name();
    case TKind::Func:
      if (name() != o.name()) return false;
      break;
    case TKind::Ite:
      if (!(cond() == o.cond())) return false;
      break;
    default: break;
  }
  if (args().size() != o.args().size()) return false;
  for (std::size_t i = 0; i < args().size(); ++i)
    if (!(args()[i] == o.args()[i])) return false;
  return true;
}

std::string WeightTerm::to_string() const {
  switch (kind()) {
    case TKind::Const: return wmi::to_string(value());
    case TKind::Var: return name();
    case TKind::Add: return "(+ " + args()[0].to_string() + " " + args()[1].to_string() + ")";
    case TKind::Sub: return "(- " + args()[0].to_string() + " " + args()[1].to_string() + ")";
    case TKind::Mul: return "(* " + args()[0].to_string() + " " + args()[1].to_string() + ")";
    case TKind::Div: return "(/ " + args()[0].to_string() + " " + args()[1].to_string() + ")";
    case TKind::Func: {
      std::string s = "(func " + name();
      for (const auto& a : args()) s += " " + a.to_string();
      return s + ")";
    }
    case TKind::Ite:
      return "(ite " + cond().to_string() + " " + then_branch().to_string() + " " +
             else_branch().to_string() + ")";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(const std::vector<Literal>& lits) {
  for (const auto& l : lits) set(l);
}

void Assignment::set(const Atom& a, bool value) {
  auto [it, inserted] = map_.emplace(a, value);
  if (!inserted && it->second != value)
    throw std::logic_error("inconsistent assignment for atom " + a.key());
}

std::optional<bool> Assignment::get(const Atom& a) const {
  auto it = map_.find(a);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

bool Assignment::is_total_over(const AtomSet& universe) const {
  for (const auto& a : universe)
    if (!contains(a)) return false;
  return true;
}

bool Assignment::subset_of(const Assignment& other) const {
  for (const auto& [a, v] : map_) {
    auto o = other.get(a);
    if (!o || *o != v) return false;
  }
  return true;
}

Assignment Assignment::restricted_to(const AtomSet& universe) const {
  Assignment r;
  for (const auto& [a, v] : map_)
    if (universe.count(a)) r.map_.emplace(a, v);
  return r;
}

std::vector<Literal> Assignment::literals() const {
  std::vector<Literal> out;
  out.reserve(map_.size());
  for (const auto& [a, v] : map_) out.push_back({a, v});
  return out;
}

std::string Assignment::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [a, v] : map_) {
    if (!first) s += ", ";
    first = false;
    s += literal_to_string({a, v});
  }
  return s + "}";
}

std::vector<Atom> Problem::bool_atoms() const {
  std::vector<Atom> out;
  out.reserve(bools.size());
  for (const auto& b : bools) out.push_back(Atom::boolean(b));
  return out;
}

}  // namespace wmi
