#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wmi/deadline.hpp"
#include "wmi/formula.hpp"

namespace wmi {

/// Branching order over `universe`: the preferred literals that belong to
/// it (in the given order and polarity), then the rest in canonical atom
/// order with positive polarity.
std::vector<Literal> decide_order(const AtomSet& universe, const std::vector<Literal>& preferred = {});

/// Extra condition a minimized assignment must keep satisfying.
using AssignmentFilter = std::function<bool(const Assignment&)>;

/// Greedily drops literals of mu, last one first, as long as `formula`
/// stays true under three-valued evaluation, every clause in `keep` keeps
/// a true literal and `accept` (when set) still holds. The result is
/// restricted to `universe`.
Assignment minimize_assignment(const std::vector<Literal>& mu, const Formula& formula, const AtomSet& universe,
                               const std::vector<std::vector<Literal>>& keep = {},
                               const AssignmentFilter& accept = {});

struct EnumStats {
  std::size_t decisions = 0;
  std::size_t conflicts = 0;
  std::size_t theory_checks = 0;
  std::size_t theory_cache_hits = 0;
};

/// AllSMT by DPLL over a Tseitin CNF with theory consistency checks, one
/// blocking clause over `universe` per emitted assignment and a restart
/// after every emission.
///
/// Total mode emits each theory-consistent total assignment over the
/// universe that extends to a model once. Partial mode minimizes each
/// model first, so emitted assignments are pairwise contradictory partial
/// assignments whose extensions cover all models.
class Enumerator {
 public:
  Enumerator(const Formula& formula, const AtomSet& universe, bool total,
             const std::vector<Literal>& preferred = {}, Deadline deadline = {});

  std::optional<Assignment> next();
  std::vector<Assignment> all();

  const std::vector<std::vector<Literal>>& blocking_clauses() const { return blocking_; }
  const EnumStats& stats() const { return stats_; }
  /// Called with every emitted assignment.
  void set_trace(std::function<void(const Assignment&)> f) { trace_ = std::move(f); }
  /// Partial mode: literals are only dropped while `f` accepts the rest.
  void set_minimize_filter(AssignmentFilter f) { accept_ = std::move(f); }

 private:
  int var_of(const Atom& a);
  int encode(const Formula& f);
  void add_clause(std::vector<int> lits);
  bool enqueue(int lit);
  bool propagate();
  bool theory_ok();
  void backtrack(std::size_t level);
  bool flip_last_decision();
  int pick_branch() const;
  Assignment extract();

  int value(int lit) const;  // 1 true, 0 false, -1 unassigned

  Formula formula_;
  AtomSet universe_;
  bool total_;
  Deadline deadline_;

  std::vector<Atom> atoms_;  // var -> atom; invalid for auxiliaries
  std::map<Atom, int> var_index_;
  std::vector<int> assign_;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<int> trail_;
  std::vector<std::size_t> level_start_;
  std::vector<bool> flipped_;
  std::size_t qhead_ = 0;
  std::size_t theory_checked_ = 0;
  std::vector<int> order_;  // literals to branch on
  bool unsat_ = false;

  std::vector<std::vector<Literal>> blocking_;
  std::unordered_map<std::string, bool> theory_cache_;
  EnumStats stats_;
  std::function<void(const Assignment&)> trace_;
  AssignmentFilter accept_;
};

/// Convenience wrapper collecting the whole stream.
std::vector<Assignment> all_smt(const Formula& formula, const AtomSet& universe, bool total,
                                const std::vector<Literal>& preferred = {}, Deadline deadline = {});

}  // namespace wmi
