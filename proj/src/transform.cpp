#include <algorithm>
#include <functional>

#include "wmi/formula.hpp"

namespace wmi {

namespace {

Formula fold_and(std::vector<Formula> kids) {
  std::vector<Formula> kept;
  for (auto& k : kids) {
    if (k.is_false()) return Formula::bottom();
    if (k.is_true()) continue;
    kept.push_back(std::move(k));
  }
  return Formula::land(std::move(kept));
}

Formula fold_or(std::vector<Formula> kids) {
  std::vector<Formula> kept;
  for (auto& k : kids) {
    if (k.is_true()) return Formula::top();
    if (k.is_false()) continue;
    kept.push_back(std::move(k));
  }
  return Formula::lor(std::move(kept));
}

Formula fold_implies(const Formula& a, const Formula& b) {
  if (a.is_false() || b.is_true()) return Formula::top();
  if (a.is_true()) return b;
  if (b.is_false()) return Formula::lnot(a);
  return Formula::implies(a, b);
}

Formula fold_iff(const Formula& a, const Formula& b) {
  if (a.is_true()) return b;
  if (b.is_true()) return a;
  if (a.is_false()) return Formula::lnot(b);
  if (b.is_false()) return Formula::lnot(a);
  return Formula::iff(a, b);
}

Formula restrict_impl(const Formula& f, const Assignment& mu, bool& changed) {
  switch (f.kind()) {
    case FKind::True:
    case FKind::False: return f;
    case FKind::Atom: {
      if (auto v = mu.get(f.atom_of())) {
        changed = true;
        return Formula::constant(*v);
      }
      return f;
    }
    default: break;
  }
  bool local = false;
  std::vector<Formula> kids;
  kids.reserve(f.kids().size());
  for (const auto& k : f.kids()) kids.push_back(restrict_impl(k, mu, local));
  if (!local) return f;
  changed = true;
  switch (f.kind()) {
    case FKind::Not: return Formula::lnot(kids[0]);
    case FKind::And: return fold_and(std::move(kids));
    case FKind::Or: return fold_or(std::move(kids));
    case FKind::Implies: return fold_implies(kids[0], kids[1]);
    case FKind::Iff: return fold_iff(kids[0], kids[1]);
    default: return f;
  }
}

void dedupe(std::vector<Formula>& kids) {
  std::vector<Formula> out;
  std::vector<std::string> seen;
  for (auto& k : kids) {
    std::string s = k.to_string();
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
    seen.push_back(std::move(s));
    out.push_back(std::move(k));
  }
  kids = std::move(out);
}

/// Builds the assignment induced by the literal children (negated for Or).
/// Returns false when two children are complementary.
bool unit_assignment(const std::vector<Formula>& kids, bool negate, Assignment& units) {
  for (const auto& k : kids) {
    if (!k.is_literal()) continue;
    Literal l = k.as_literal();
    if (negate) l = l.negated();
    auto cur = units.get(l.atom);
    if (cur && *cur != l.positive) return false;
    units.set(l);
  }
  return true;
}

Formula simplify_nary(FKind kind, std::vector<Formula> kids);

Formula simplify_rec(const Formula& f) {
  switch (f.kind()) {
    case FKind::True:
    case FKind::False:
    case FKind::Atom: return f;
    case FKind::Not: return Formula::lnot(simplify_rec(f.kids()[0]));
    case FKind::Implies: {
      Formula a = simplify_rec(f.kids()[0]);
      Formula b = simplify_rec(f.kids()[1]);
      return fold_implies(a, b);
    }
    case FKind::Iff: {
      Formula a = simplify_rec(f.kids()[0]);
      Formula b = simplify_rec(f.kids()[1]);
      return fold_iff(a, b);
    }
    case FKind::And:
    case FKind::Or: {
      std::vector<Formula> kids;
      kids.reserve(f.kids().size());
      for (const auto& k : f.kids()) kids.push_back(simplify_rec(k));
      return simplify_nary(f.kind(), std::move(kids));
    }
  }
  return f;
}

// Unit absorption: in And(l, c) every occurrence of l's atom in c can be
// replaced by l's value; dually in Or(l, c) by the negation of l.
Formula simplify_nary(FKind kind, std::vector<Formula> kids) {
  const bool is_and = kind == FKind::And;
  for (;;) {
    Formula folded = is_and ? fold_and(std::move(kids)) : fold_or(std::move(kids));
    if (folded.kind() != kind) return folded;
    kids = folded.kids();
    dedupe(kids);

    Assignment units;
    // A literal next to its complement.
    if (!unit_assignment(kids, !is_and, units)) return Formula::constant(!is_and);
    if (units.empty()) break;
    bool changed = false;
    std::vector<Formula> next;
    next.reserve(kids.size());
    for (const auto& k : kids) {
      if (k.is_literal()) {
        next.push_back(k);
        continue;
      }
      bool c = false;
      Formula r = restrict_impl(k, units, c);
      if (c) {
        changed = true;
        next.push_back(simplify_rec(r));
      } else {
        next.push_back(k);
      }
    }
    kids = std::move(next);
    if (!changed) break;
  }
  return is_and ? Formula::land(std::move(kids)) : Formula::lor(std::move(kids));
}

void collect_atoms(const Formula& f, std::vector<Atom>& order, AtomSet& seen) {
  if (f.kind() == FKind::Atom) {
    if (seen.insert(f.atom_of()).second) order.push_back(f.atom_of());
    return;
  }
  for (const auto& k : f.kids()) collect_atoms(k, order, seen);
}

void collect_polarized(const Formula& f, bool positive, std::vector<Literal>& out, AtomSet& seen) {
  switch (f.kind()) {
    case FKind::Atom:
      if (seen.insert(f.atom_of()).second) out.push_back({f.atom_of(), positive});
      return;
    case FKind::Not: collect_polarized(f.kids()[0], !positive, out, seen); return;
    case FKind::Implies:
      collect_polarized(f.kids()[0], !positive, out, seen);
      collect_polarized(f.kids()[1], positive, out, seen);
      return;
    default:
      for (const auto& k : f.kids()) collect_polarized(k, positive, out, seen);
  }
}

void collect_weight_conditions(const WeightTerm& w, std::vector<Literal>& out, AtomSet& seen) {
  if (w.kind() == TKind::Ite) collect_polarized(w.cond(), true, out, seen);
  for (const auto& a : w.args()) collect_weight_conditions(a, out, seen);
}

}  // namespace

Formula restrict_formula(const Formula& phi, const Assignment& mu) {
  if (mu.empty()) return phi;
  bool changed = false;
  return restrict_impl(phi, mu, changed);
}

WeightTerm restrict_weight(const WeightTerm& w, const Assignment& mu) {
  switch (w.kind()) {
    case TKind::Const:
    case TKind::Var: return w;
    case TKind::Ite: {
      Formula c = simplify(restrict_formula(w.cond(), mu));
      if (c.is_true()) return restrict_weight(w.then_branch(), mu);
      if (c.is_false()) return restrict_weight(w.else_branch(), mu);
      WeightTerm t = restrict_weight(w.then_branch(), mu);
      WeightTerm e = restrict_weight(w.else_branch(), mu);
      if (c.same_node(w.cond()) && t.same_node(w.then_branch()) && e.same_node(w.else_branch())) return w;
      return WeightTerm::ite(c, t, e);
    }
    case TKind::Func: {
      bool changed = false;
      std::vector<WeightTerm> args;
      for (const auto& a : w.args()) {
        args.push_back(restrict_weight(a, mu));
        changed |= !args.back().same_node(a);
      }
      return changed ? WeightTerm::func(w.name(), std::move(args)) : w;
    }
    default: {
      WeightTerm l = restrict_weight(w.args()[0], mu);
      WeightTerm r = restrict_weight(w.args()[1], mu);
      if (l.same_node(w.args()[0]) && r.same_node(w.args()[1])) return w;
      return WeightTerm::binop(w.kind(), l, r);
    }
  }
}

bool is_fi(const WeightTerm& w) {
  if (w.kind() == TKind::Ite) return false;
  return std::all_of(w.args().begin(), w.args().end(), [](const WeightTerm& a) { return is_fi(a); });
}

AtomSet atoms_of(const Formula& f) {
  std::vector<Atom> order;
  AtomSet seen;
  collect_atoms(f, order, seen);
  return seen;
}

AtomSet atoms_of(const WeightTerm& w) {
  AtomSet out;
  for (const auto& l : condition_literals_in_order(w)) out.insert(l.atom);
  return out;
}

std::vector<Atom> atoms_in_order(const Formula& f) {
  std::vector<Atom> order;
  AtomSet seen;
  collect_atoms(f, order, seen);
  return order;
}

std::vector<Literal> condition_literals_in_order(const WeightTerm& w) {
  std::vector<Literal> out;
  AtomSet seen;
  collect_weight_conditions(w, out, seen);
  return out;
}

Formula simplify(const Formula& f) { return simplify_rec(f); }

bool is_literal_conjunction(const Formula& f) {
  if (f.is_true() || f.is_literal()) return true;
  if (f.kind() != FKind::And) return false;
  return std::all_of(f.kids().begin(), f.kids().end(), [](const Formula& k) { return k.is_literal(); });
}

std::vector<Literal> conjunction_literals(const Formula& f) {
  std::vector<Literal> out;
  if (f.is_true()) return out;
  if (f.is_literal()) return {f.as_literal()};
  for (const auto& k : f.kids()) out.push_back(k.as_literal());
  return out;
}

std::optional<bool> evaluate(const Formula& f, const Assignment& mu) {
  switch (f.kind()) {
    case FKind::True: return true;
    case FKind::False: return false;
    case FKind::Atom: return mu.get(f.atom_of());
    case FKind::Not: {
      auto v = evaluate(f.kids()[0], mu);
      if (!v) return std::nullopt;
      return !*v;
    }
    case FKind::And: {
      bool unknown = false;
      for (const auto& k : f.kids()) {
        auto v = evaluate(k, mu);
        if (!v) unknown = true;
        else if (!*v) return false;
      }
      if (unknown) return std::nullopt;
      return true;
    }
    case FKind::Or: {
      bool unknown = false;
      for (const auto& k : f.kids()) {
        auto v = evaluate(k, mu);
        if (!v) unknown = true;
        else if (*v) return true;
      }
      if (unknown) return std::nullopt;
      return false;
    }
    case FKind::Implies: {
      auto a = evaluate(f.kids()[0], mu);
      if (a && !*a) return true;
      auto b = evaluate(f.kids()[1], mu);
      if (b && *b) return true;
      if (a && b) return false;
      return std::nullopt;
    }
    case FKind::Iff: {
      auto a = evaluate(f.kids()[0], mu);
      auto b = evaluate(f.kids()[1], mu);
      if (!a || !b) return std::nullopt;
      return *a == *b;
    }
  }
  return std::nullopt;
}

}  // namespace wmi
