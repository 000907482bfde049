#include "wmi/enumerate.hpp"

#include <algorithm>

#include "wmi/theory.hpp"

namespace wmi {

std::vector<Literal> decide_order(const AtomSet& universe, const std::vector<Literal>& preferred) {
  std::vector<Literal> out;
  AtomSet seen;
  for (const auto& l : preferred)
    if (universe.count(l.atom) && seen.insert(l.atom).second) out.push_back(l);
  for (const auto& a : universe)
    if (!seen.count(a)) out.push_back({a, true});
  return out;
}

namespace {

bool clause_satisfied(const std::vector<Literal>& clause, const Assignment& mu) {
  for (const auto& l : clause) {
    auto v = mu.get(l.atom);
    if (v && *v == l.positive) return true;
  }
  return false;
}

}  // namespace

Assignment minimize_assignment(const std::vector<Literal>& mu, const Formula& formula, const AtomSet& universe,
                               const std::vector<std::vector<Literal>>& keep, const AssignmentFilter& accept) {
  Assignment cur(mu);
  for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
    if (!universe.count(it->atom)) continue;
    cur.erase(it->atom);
    bool ok = evaluate(formula, cur) == std::optional<bool>(true);
    for (std::size_t i = 0; ok && i < keep.size(); ++i) ok = clause_satisfied(keep[i], cur);
    if (ok && accept) ok = accept(cur);
    if (!ok) cur.set(*it);
  }
  return cur.restricted_to(universe);
}

// ---------------------------------------------------------------------------

Enumerator::Enumerator(const Formula& formula, const AtomSet& universe, bool total,
                       const std::vector<Literal>& preferred, Deadline deadline)
    : formula_(formula), universe_(universe), total_(total), deadline_(deadline) {
  AtomSet formula_atoms = atoms_of(formula);
  // Atom variables first, in canonical order, so numbering is deterministic.
  for (const auto& a : formula_atoms) var_of(a);
  for (const auto& a : universe) var_of(a);

  // Top-level conjunctions and disjunctions become clauses directly.
  std::vector<Formula> todo = {formula};
  while (!todo.empty() && !unsat_) {
    Formula f = todo.back();
    todo.pop_back();
    switch (f.kind()) {
      case FKind::True: break;
      case FKind::False: unsat_ = true; break;
      case FKind::And:
        for (auto it = f.kids().rbegin(); it != f.kids().rend(); ++it) todo.push_back(*it);
        break;
      case FKind::Or: {
        std::vector<int> lits;
        for (const auto& k : f.kids()) lits.push_back(encode(k));
        add_clause(std::move(lits));
        break;
      }
      default: add_clause({encode(f)}); break;
    }
  }

  AtomSet rest;
  for (const auto& a : formula_atoms)
    if (!universe.count(a)) rest.insert(a);
  auto push_order = [&](const std::vector<Literal>& lits) {
    for (const auto& l : lits) order_.push_back(2 * var_index_.at(l.atom) + (l.positive ? 0 : 1));
  };
  push_order(decide_order(universe, preferred));
  push_order(decide_order(rest, preferred));
  for (int v = 0; v < static_cast<int>(atoms_.size()); ++v)
    if (!atoms_[v].valid()) order_.push_back(2 * v);
}

int Enumerator::var_of(const Atom& a) {
  if (a.valid()) {
    auto it = var_index_.find(a);
    if (it != var_index_.end()) return it->second;
  }
  int v = static_cast<int>(atoms_.size());
  atoms_.push_back(a);
  assign_.push_back(-1);
  watches_.resize(2 * atoms_.size());
  if (a.valid()) var_index_.emplace(a, v);
  return v;
}

int Enumerator::encode(const Formula& f) {
  switch (f.kind()) {
    case FKind::Atom: return 2 * var_of(f.atom_of());
    case FKind::Not: return encode(f.kids()[0]) ^ 1;
    case FKind::True:
    case FKind::False: {
      int t = 2 * var_of(Atom());
      add_clause({t});
      return f.is_true() ? t : t ^ 1;
    }
    case FKind::And:
    case FKind::Or:
    case FKind::Implies: {
      std::vector<int> kids;
      if (f.kind() == FKind::Implies) {
        kids = {encode(f.kids()[0]) ^ 1, encode(f.kids()[1])};
      } else {
        for (const auto& k : f.kids()) kids.push_back(encode(k));
      }
      int v = 2 * var_of(Atom());
      // And: v -> k_i, (and k_i) -> v. Or is the dual.
      const bool is_and = f.kind() == FKind::And;
      int pos = is_and ? v : v ^ 1;
      std::vector<int> big = {pos};
      for (int k : kids) {
        int kk = is_and ? k : k ^ 1;
        add_clause({pos ^ 1, kk});
        big.push_back(kk ^ 1);
      }
      add_clause(std::move(big));
      return v;
    }
    case FKind::Iff: {
      int a = encode(f.kids()[0]);
      int b = encode(f.kids()[1]);
      int v = 2 * var_of(Atom());
      add_clause({v ^ 1, a ^ 1, b});
      add_clause({v ^ 1, a, b ^ 1});
      add_clause({v, a, b});
      add_clause({v, a ^ 1, b ^ 1});
      return v;
    }
  }
  return 0;
}

int Enumerator::value(int lit) const {
  int a = assign_[lit >> 1];
  if (a < 0) return -1;
  return a ^ (lit & 1);
}

// Only called at decision level 0.
void Enumerator::add_clause(std::vector<int> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  std::vector<int> kept;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i + 1 < lits.size() && (lits[i] ^ 1) == lits[i + 1]) return;  // tautology
    int val = value(lits[i]);
    if (val == 1) return;
    if (val == 0) continue;
    kept.push_back(lits[i]);
  }
  if (kept.empty()) {
    unsat_ = true;
    return;
  }
  if (kept.size() == 1) {
    if (!enqueue(kept[0])) unsat_ = true;
    return;
  }
  int idx = static_cast<int>(clauses_.size());
  watches_[kept[0]].push_back(idx);
  watches_[kept[1]].push_back(idx);
  clauses_.push_back(std::move(kept));
}

bool Enumerator::enqueue(int lit) {
  int v = value(lit);
  if (v == 0) return false;
  if (v == 1) return true;
  assign_[lit >> 1] = (lit & 1) ^ 1;
  trail_.push_back(lit);
  return true;
}

bool Enumerator::propagate() {
  while (qhead_ < trail_.size()) {
    int false_lit = trail_[qhead_++] ^ 1;
    auto& ws = watches_[false_lit];
    std::size_t i = 0, j = 0;
    bool conflict = false;
    while (i < ws.size()) {
      int ci = ws[i];
      auto& c = clauses_[ci];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (value(c[0]) == 1) {
        ws[j++] = ws[i++];
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[c[1]].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) {
        ++i;
        continue;
      }
      ws[j++] = ws[i++];
      if (!enqueue(c[0])) {
        conflict = true;
        while (i < ws.size()) ws[j++] = ws[i++];
      }
    }
    ws.resize(j);
    if (conflict) return false;
  }
  return true;
}

bool Enumerator::theory_ok() {
  bool fresh = false;
  for (std::size_t i = theory_checked_; i < trail_.size() && !fresh; ++i) {
    const Atom& a = atoms_[trail_[i] >> 1];
    fresh = a.valid() && !a.is_bool();
  }
  if (!fresh) {
    theory_checked_ = trail_.size();
    return true;
  }
  std::vector<int> codes;
  for (int lit : trail_) {
    const Atom& a = atoms_[lit >> 1];
    if (a.valid() && !a.is_bool()) codes.push_back(lit);
  }
  std::sort(codes.begin(), codes.end());
  std::string key;
  for (int c : codes) key += std::to_string(c) + ",";
  bool ok;
  if (auto it = theory_cache_.find(key); it != theory_cache_.end()) {
    ++stats_.theory_cache_hits;
    ok = it->second;
  } else {
    ++stats_.theory_checks;
    std::vector<Literal> lits;
    for (int c : codes) lits.push_back({atoms_[c >> 1], (c & 1) == 0});
    ok = theory_consistent(lits);
    theory_cache_.emplace(std::move(key), ok);
  }
  if (ok) theory_checked_ = trail_.size();
  return ok;
}

void Enumerator::backtrack(std::size_t level) {
  while (level_start_.size() > level) {
    std::size_t start = level_start_.back();
    for (std::size_t i = start; i < trail_.size(); ++i) assign_[trail_[i] >> 1] = -1;
    trail_.resize(start);
    level_start_.pop_back();
    flipped_.pop_back();
  }
  qhead_ = std::min(qhead_, trail_.size());
  theory_checked_ = std::min(theory_checked_, trail_.size());
}

bool Enumerator::flip_last_decision() {
  while (!flipped_.empty() && flipped_.back()) backtrack(level_start_.size() - 1);
  if (level_start_.empty()) return false;
  int decision = trail_[level_start_.back()];
  backtrack(level_start_.size() - 1);
  level_start_.push_back(trail_.size());
  flipped_.push_back(true);
  enqueue(decision ^ 1);
  return true;
}

int Enumerator::pick_branch() const {
  for (int lit : order_)
    if (assign_[lit >> 1] < 0) return lit;
  return -1;
}

Assignment Enumerator::extract() {
  if (total_) {
    Assignment mu;
    for (const auto& a : universe_) mu.set(a, assign_[var_index_.at(a)] == 1);
    return mu;
  }
  std::vector<Literal> eta;
  for (int lit : trail_) {
    const Atom& a = atoms_[lit >> 1];
    if (a.valid()) eta.push_back({a, (lit & 1) == 0});
  }
  return minimize_assignment(eta, formula_, universe_, blocking_, accept_);
}

std::optional<Assignment> Enumerator::next() {
  if (unsat_) return std::nullopt;
  for (;;) {
    deadline_.check();
    if (!propagate() || !theory_ok()) {
      ++stats_.conflicts;
      if (!flip_last_decision()) {
        unsat_ = true;
        return std::nullopt;
      }
      continue;
    }
    int lit = pick_branch();
    if (lit < 0) {
      Assignment mu = extract();
      backtrack(0);
      std::vector<Literal> block;
      std::vector<int> codes;
      for (const auto& l : mu.literals()) {
        block.push_back(l.negated());
        codes.push_back(2 * var_index_.at(l.atom) + (l.positive ? 1 : 0));
      }
      blocking_.push_back(std::move(block));
      add_clause(std::move(codes));
      if (trace_) trace_(mu);
      return mu;
    }
    ++stats_.decisions;
    level_start_.push_back(trail_.size());
    flipped_.push_back(false);
    enqueue(lit);
  }
}

std::vector<Assignment> Enumerator::all() {
  std::vector<Assignment> out;
  while (auto mu = next()) out.push_back(std::move(*mu));
  return out;
}

std::vector<Assignment> all_smt(const Formula& formula, const AtomSet& universe, bool total,
                                const std::vector<Literal>& preferred, Deadline deadline) {
  return Enumerator(formula, universe, total, preferred, deadline).all();
}

}  // namespace wmi
