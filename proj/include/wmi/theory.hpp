#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmi/atom.hpp"
#include "wmi/simplex.hpp"

namespace wmi {

enum class TheoryStatus { Sat, Unsat };

struct TheoryVerdict {
  TheoryStatus status = TheoryStatus::Sat;
  /// On Unsat: a subset-minimal unsatisfiable subset of the input.
  std::vector<Literal> conflict_core;

  bool sat() const { return status == TheoryStatus::Sat; }
};

/// LRA u EUF satisfiability of a conjunction of literals. Boolean literals
/// are ignored. Throws std::invalid_argument on a malformed literal.
TheoryVerdict check_theory(const std::vector<Literal>& lits);

/// Same decision as check_theory, without computing a core.
bool theory_consistent(const std::vector<Literal>& lits);

/// Concrete model: rational values for the reals and a value for every EUF
/// term occurring in the literals (keyed by term key). Values of distinct
/// congruence classes differ, so function tables read off the term values
/// are well defined.
struct TheoryWitness {
  Model reals;
  std::map<std::string, Rational> terms;
};

std::optional<TheoryWitness> theory_witness(const std::vector<Literal>& lits);

}  // namespace wmi
