#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmi/atom.hpp"

namespace wmi {

/// lhs op rhs with op one of Le, Lt, Eq, Ge, Gt. The constant of lhs is
/// folded into rhs.
struct LraConstraint {
  LinearTerm lhs;
  RelOp op = RelOp::Le;
  Rational rhs;
};

/// The LRA constraint expressed by a literal over an LRA atom. Negated
/// equalities have op Ne and are not accepted by the simplex itself.
LraConstraint constraint_of(const Literal& l);

using Model = std::map<std::string, Rational>;

/// General simplex over exact rationals with symbolic infinitesimals for
/// strict bounds. Stateless: every call builds a fresh tableau.
class Simplex {
 public:
  /// Feasibility of a conjunction (no Ne). On success fills `model` (when
  /// given) with a concrete rational solution for every variable mentioned.
  static bool feasible(const std::vector<LraConstraint>& cs, Model* model = nullptr);
};

/// Conjunction possibly containing disequalities (op Ne). Feasible iff the
/// rest is feasible and no disequality hyperplane contains the whole
/// feasible set.
bool lra_feasible(const std::vector<LraConstraint>& cs);

/// True iff the conjunction (without Ne) entails a == b.
bool lra_entails_equal(const std::vector<LraConstraint>& cs, const LinearTerm& a, const LinearTerm& b);

/// A solution of `cs` (Ne allowed) avoiding every hyperplane t = 0 listed
/// in `avoid` that the feasible set does not lie in. nullopt if infeasible.
std::optional<Model> lra_generic_model(const std::vector<LraConstraint>& cs, const std::vector<LinearTerm>& avoid);

}  // namespace wmi
