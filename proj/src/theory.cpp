#include "wmi/theory.hpp"

#include <stdexcept>

#include "wmi/congruence.hpp"

namespace wmi {

namespace {

LinearTerm arith_term(const ETerm& t) {
  if (t.kind() == ETermKind::Real) return LinearTerm::variable(t.name());
  return LinearTerm::constant_term(t.value());
}

LraConstraint equal_zero(const LinearTerm& d, RelOp op) {
  LinearTerm lhs = d;
  Rational rhs = -lhs.constant;
  lhs.constant = 0;
  return {lhs, op, rhs};
}

struct Solver {
  CongruenceClosure cc;
  std::vector<LraConstraint> lra;  // from LRA literals, Ne included
  std::vector<std::pair<int, int>> eqs, neqs;

  // Filled by run() on success.
  std::vector<LraConstraint> combined;
  std::map<int, int> arith_rep;  // class root -> arithmetic member

  explicit Solver(const std::vector<Literal>& lits) {
    for (const auto& l : lits) {
      switch (l.atom.kind()) {
        case AtomKind::Bool: break;
        case AtomKind::Lra: lra.push_back(constraint_of(l)); break;
        case AtomKind::Euf: {
          int a = cc.add(l.atom.eq_lhs());
          int b = cc.add(l.atom.eq_rhs());
          (l.positive ? eqs : neqs).emplace_back(a, b);
          break;
        }
      }
    }
  }

  bool run() {
    if (eqs.empty() && neqs.empty()) {
      combined = lra;
      return lra_feasible(lra);
    }
    for (auto [a, b] : eqs) cc.merge(a, b);
    for (;;) {
      if (!cc.close()) return false;
      for (auto [a, b] : neqs)
        if (cc.find(a) == cc.find(b)) return false;

      arith_rep.clear();
      std::vector<LraConstraint> base;
      for (const auto& c : lra)
        if (c.op != RelOp::Ne) base.push_back(c);
      for (int i = 0; i < static_cast<int>(cc.size()); ++i) {
        if (!cc.is_arithmetic(i)) continue;
        auto [it, fresh] = arith_rep.emplace(cc.find(i), i);
        if (!fresh) base.push_back(equal_zero(arith_term(cc.term(i)) - arith_term(cc.term(it->second)), RelOp::Eq));
      }
      combined = base;
      for (const auto& c : lra)
        if (c.op == RelOp::Ne) combined.push_back(c);
      for (auto [a, b] : neqs) {
        auto ra = arith_rep.find(cc.find(a));
        auto rb = arith_rep.find(cc.find(b));
        if (ra == arith_rep.end() || rb == arith_rep.end()) continue;
        combined.push_back(
            equal_zero(arith_term(cc.term(ra->second)) - arith_term(cc.term(rb->second)), RelOp::Ne));
      }
      if (!lra_feasible(combined)) return false;

      // Equalities entailed by arithmetic that can trigger a congruence. A
      // pair that differs in one model of base cannot be entailed.
      Model model;
      Simplex::feasible(base, &model);
      auto value = [&](const ETerm& t) {
        if (t.kind() != ETermKind::Real) return t.value();
        auto it = model.find(t.name());
        return it == model.end() ? Rational(0) : it->second;
      };
      bool changed = false;
      for (int i = 0; i < static_cast<int>(cc.size()) && !changed; ++i) {
        if (!cc.is_app(i)) continue;
        for (int j = i + 1; j < static_cast<int>(cc.size()) && !changed; ++j) {
          if (!cc.is_app(j) || cc.term(i).name() != cc.term(j).name()) continue;
          if (cc.args(i).size() != cc.args(j).size() || cc.find(i) == cc.find(j)) continue;
          for (std::size_t k = 0; k < cc.args(i).size(); ++k) {
            int ra = cc.find(cc.args(i)[k]);
            int rb = cc.find(cc.args(j)[k]);
            if (ra == rb) continue;
            auto ia = arith_rep.find(ra);
            auto ib = arith_rep.find(rb);
            if (ia == arith_rep.end() || ib == arith_rep.end()) continue;
            if (value(cc.term(ia->second)) != value(cc.term(ib->second))) continue;
            if (lra_entails_equal(base, arith_term(cc.term(ia->second)), arith_term(cc.term(ib->second)))) {
              cc.merge(ra, rb);
              changed = true;
              break;
            }
          }
        }
      }
      if (!changed) return true;
    }
  }
};

}  // namespace

bool theory_consistent(const std::vector<Literal>& lits) { return Solver(lits).run(); }

TheoryVerdict check_theory(const std::vector<Literal>& lits) {
  if (theory_consistent(lits)) return {};
  std::vector<Literal> core;
  for (const auto& l : lits)
    if (!l.atom.is_bool()) core.push_back(l);
  for (std::size_t i = 0; i < core.size();) {
    std::vector<Literal> rest = core;
    rest.erase(rest.begin() + static_cast<long>(i));
    if (!theory_consistent(rest))
      core = std::move(rest);
    else
      ++i;
  }
  return {TheoryStatus::Unsat, std::move(core)};
}

std::optional<TheoryWitness> theory_witness(const std::vector<Literal>& lits) {
  Solver s(lits);
  if (!s.run()) return std::nullopt;

  std::vector<int> reps;
  for (const auto& [root, member] : s.arith_rep) reps.push_back(member);
  std::vector<LinearTerm> avoid;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      avoid.push_back(arith_term(s.cc.term(reps[i])) - arith_term(s.cc.term(reps[j])));
  auto model = lra_generic_model(s.combined, avoid);
  if (!model) return std::nullopt;

  TheoryWitness w;
  w.reals = *model;
  for (int i = 0; i < static_cast<int>(s.cc.size()); ++i)
    if (s.cc.term(i).kind() == ETermKind::Real) w.reals.emplace(s.cc.term(i).name(), 0);
  for (const auto& l : lits)
    if (l.atom.is_lra())
      for (const auto& [v, c] : l.atom.lhs().coeffs) w.reals.emplace(v, 0);

  auto value_of = [&](const ETerm& t) {
    return t.kind() == ETermKind::Real ? w.reals.at(t.name()) : t.value();
  };
  std::map<int, Rational> class_value;
  Rational bound = 0;
  for (const auto& [root, member] : s.arith_rep) {
    Rational v = value_of(s.cc.term(member));
    class_value.emplace(root, v);
    if (abs(v) > bound) bound = abs(v);
  }
  Rational next = bound + 1;
  for (int i = 0; i < static_cast<int>(s.cc.size()); ++i) {
    int root = s.cc.find(i);
    if (!class_value.count(root)) class_value.emplace(root, next++);
    w.terms[s.cc.term(i).key()] = class_value.at(root);
  }
  return w;
}

}  // namespace wmi
