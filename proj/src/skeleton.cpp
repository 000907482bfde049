#include "wmi/skeleton.hpp"

#include <set>
#include <stdexcept>

namespace wmi {

namespace {

void collect_reals(const WeightTerm& w, std::set<std::string>& out) {
  if (w.kind() == TKind::Var) out.insert(w.name());
  for (const auto& a : w.args()) collect_reals(a, out);
}

Formula equality(const ETerm& a, const ETerm& b) {
  auto r = make_euf_literal(a, b);
  if (auto* v = std::get_if<bool>(&r)) return Formula::constant(*v);
  return Formula::literal(std::get<Literal>(r));
}

std::string op_symbol(TKind k) {
  switch (k) {
    case TKind::Add: return "f+";
    case TKind::Sub: return "f-";
    case TKind::Mul: return "f*";
    case TKind::Div: return "f/";
    default: throw std::logic_error("not an arithmetic operator");
  }
}

void append(std::vector<Clause>& out, std::vector<Clause>&& in) {
  for (auto& c : in) out.push_back(std::move(c));
}

void append(std::vector<ETerm>& out, std::vector<ETerm>&& in) {
  for (auto& y : in) out.push_back(std::move(y));
}

}  // namespace

Formula clause_formula(const Clause& c) { return Formula::lor(c); }

Formula SkeletonEncoding::formula() const {
  std::vector<Formula> parts;
  parts.reserve(defs.size());
  for (const auto& c : defs) parts.push_back(clause_formula(c));
  return Formula::land(std::move(parts));
}

std::string SkeletonEncoding::dump() const {
  std::string s = "(skeleton";
  for (const auto& c : defs) s += "\n  " + clause_formula(c).to_string();
  return s + ")\n";
}

ETerm SkeletonEncoder::leaf(const WeightTerm& term) {
  std::set<std::string> reals;
  collect_reals(term, reals);
  std::vector<ETerm> args;
  for (const auto& r : reals) args.push_back(ETerm::real(r));
  return ETerm::app("leaf" + std::to_string(next_leaf_++), std::move(args));
}

ConvertResult SkeletonEncoder::convert(const WeightTerm& term, const std::vector<Formula>& conds) {
  return convert_rec(term, conds, false);
}

ConvertResult SkeletonEncoder::convert_rec(const WeightTerm& term, const std::vector<Formula>& conds,
                                           bool branch) {
  if (branch && is_fi(term)) return {leaf(term), {}, {}};
  switch (term.kind()) {
    case TKind::Const: return {ETerm::constant(term.value()), {}, {}};
    case TKind::Var: return {ETerm::real(term.name()), {}, {}};
    case TKind::Func: {
      ConvertResult out;
      std::vector<ETerm> args;
      for (const auto& a : term.args()) {
        ConvertResult r = convert_rec(a, conds, false);
        args.push_back(r.term);
        append(out.defs, std::move(r.defs));
        append(out.ys, std::move(r.ys));
      }
      out.term = ETerm::app("f_" + term.name(), std::move(args));
      return out;
    }
    case TKind::Ite: {
      std::vector<Formula> then_conds = conds;
      then_conds.push_back(term.cond());
      std::vector<Formula> else_conds = conds;
      else_conds.push_back(Formula::lnot(term.cond()));
      ConvertResult r1 = convert_rec(term.then_branch(), then_conds, true);
      ConvertResult r2 = convert_rec(term.else_branch(), else_conds, true);
      ETerm y = ETerm::yvar(next_y_++);

      Clause guard;
      for (const auto& c : conds) guard.push_back(Formula::lnot(c));
      Formula eq1 = equality(y, r1.term);
      Formula eq2 = equality(y, r2.term);

      ConvertResult out;
      out.defs = std::move(r1.defs);
      append(out.defs, std::move(r2.defs));
      Clause c1 = guard, c2 = guard, c3 = guard;
      c1.push_back(Formula::lnot(term.cond()));
      c1.push_back(eq1);
      c2.push_back(term.cond());
      c2.push_back(eq2);
      c3.push_back(Formula::lnot(eq1));
      c3.push_back(Formula::lnot(eq2));
      out.defs.push_back(std::move(c1));
      out.defs.push_back(std::move(c2));
      out.defs.push_back(std::move(c3));
      out.ys = std::move(r1.ys);
      append(out.ys, std::move(r2.ys));
      out.ys.push_back(y);
      out.term = y;
      return out;
    }
    default: {
      ConvertResult l = convert_rec(term.args()[0], conds, false);
      ConvertResult r = convert_rec(term.args()[1], conds, false);
      ConvertResult out;
      out.term = ETerm::app(op_symbol(term.kind()), {l.term, r.term});
      out.defs = std::move(l.defs);
      append(out.defs, std::move(r.defs));
      out.ys = std::move(l.ys);
      append(out.ys, std::move(r.ys));
      return out;
    }
  }
}

SkeletonEncoding SkeletonEncoder::encode(const WeightTerm& w) {
  ConvertResult r = convert(w, {});
  SkeletonEncoding enc;
  enc.top = ETerm::yvar(0);
  enc.defs = std::move(r.defs);
  enc.defs.push_back({equality(enc.top, r.term)});
  enc.ys = std::move(r.ys);
  enc.ys.push_back(enc.top);
  enc.conditions = atoms_of(w);
  return enc;
}

SkeletonEncoding encode_skeleton(const WeightTerm& w) { return SkeletonEncoder().encode(w); }

// ---------------------------------------------------------------------------

Formula substitute_atoms(const Formula& f, const std::map<Atom, Formula>& sub) {
  switch (f.kind()) {
    case FKind::True:
    case FKind::False: return f;
    case FKind::Atom: {
      auto it = sub.find(f.atom_of());
      return it == sub.end() ? f : it->second;
    }
    case FKind::Not: return Formula::lnot(substitute_atoms(f.kids()[0], sub));
    case FKind::Implies:
      return Formula::implies(substitute_atoms(f.kids()[0], sub), substitute_atoms(f.kids()[1], sub));
    case FKind::Iff:
      return Formula::iff(substitute_atoms(f.kids()[0], sub), substitute_atoms(f.kids()[1], sub));
    case FKind::And:
    case FKind::Or: {
      std::vector<Formula> kids;
      for (const auto& k : f.kids()) kids.push_back(substitute_atoms(k, sub));
      return f.kind() == FKind::And ? Formula::land(std::move(kids)) : Formula::lor(std::move(kids));
    }
  }
  return f;
}

WeightTerm substitute_atoms(const WeightTerm& w, const std::map<Atom, Formula>& sub) {
  switch (w.kind()) {
    case TKind::Const:
    case TKind::Var: return w;
    case TKind::Ite:
      return WeightTerm::ite(substitute_atoms(w.cond(), sub), substitute_atoms(w.then_branch(), sub),
                             substitute_atoms(w.else_branch(), sub));
    case TKind::Func: {
      std::vector<WeightTerm> args;
      for (const auto& a : w.args()) args.push_back(substitute_atoms(a, sub));
      return WeightTerm::func(w.name(), std::move(args));
    }
    default:
      return WeightTerm::binop(w.kind(), substitute_atoms(w.args()[0], sub), substitute_atoms(w.args()[1], sub));
  }
}

std::size_t count_ite(const WeightTerm& w) {
  std::size_t n = w.kind() == TKind::Ite ? 1 : 0;
  for (const auto& a : w.args()) n += count_ite(a);
  return n;
}

LabeledProblem label_conditions(const Problem& p) {
  std::set<std::string> taken(p.reals.begin(), p.reals.end());
  taken.insert(p.bools.begin(), p.bools.end());

  LabeledProblem out;
  std::map<Atom, Formula> sub;
  std::vector<Formula> parts = {p.phi, p.chi};
  unsigned k = 1;
  for (const auto& lit : condition_literals_in_order(p.weight)) {
    if (!lit.atom.is_lra() || sub.count(lit.atom)) continue;
    std::string name;
    do {
      name = "B" + std::to_string(k++);
    } while (taken.count(name));
    taken.insert(name);
    Atom b = Atom::boolean(name);
    sub.emplace(lit.atom, Formula::atom(b));
    out.b_vars.push_back(name);
    out.condition_map.emplace(name, lit.atom);
    parts.push_back(Formula::iff(Formula::atom(b), Formula::atom(lit.atom)));
  }
  out.phi_star = Formula::land(std::move(parts));
  out.weight_star = sub.empty() ? p.weight : substitute_atoms(p.weight, sub);
  return out;
}

AtomSet select_conditions(const SkeletonEncoding& enc, const Problem& p) {
  AtomSet out = atoms_of(p.phi);
  for (const auto& a : atoms_of(p.chi)) out.insert(a);
  for (const auto& a : enc.conditions) out.insert(a);
  return out;
}

}  // namespace wmi
