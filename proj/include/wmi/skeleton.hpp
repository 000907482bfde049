#pragma once

#include <map>
#include <string>
#include <vector>

#include "wmi/formula.hpp"

namespace wmi {

/// A disjunction. Disjuncts are literals, except for Ite conditions that are
/// themselves compound formulas.
using Clause = std::vector<Formula>;

Formula clause_formula(const Clause& c);

struct ConvertResult {
  ETerm term;
  std::vector<Clause> defs;
  std::vector<ETerm> ys;
};

/// The formula <y = w>_EUF split into its definition clauses. The last
/// clause is always the top equation (y = w').
struct SkeletonEncoding {
  ETerm top;
  std::vector<Clause> defs;
  std::vector<ETerm> ys;  // y1..yk in allocation order, then y
  AtomSet conditions;     // atoms of the Ite conditions

  Formula formula() const;
  std::string dump() const;
};

/// Rewrites weight terms into EUF terms. Counters are per instance, so
/// separate encoders never share fresh names.
///
/// Operators become applications of f+, f-, f*, f/; an unconditioned g
/// becomes f_g. An Ite-free branch of an Ite is replaced as a whole by a
/// fresh leaf symbol applied to the reals it mentions, one symbol per
/// occurrence, so two leaves never share a symbol.
class SkeletonEncoder {
 public:
  ConvertResult convert(const WeightTerm& term, const std::vector<Formula>& conds);
  SkeletonEncoding encode(const WeightTerm& w);

 private:
  ConvertResult convert_rec(const WeightTerm& term, const std::vector<Formula>& conds, bool branch);
  ETerm leaf(const WeightTerm& term);

  unsigned next_y_ = 1;
  unsigned next_leaf_ = 1;
};

SkeletonEncoding encode_skeleton(const WeightTerm& w);

/// Condition labeling for the baseline algorithm: each LRA atom occurring
/// in an Ite condition of w is renamed to a fresh Boolean B_k.
struct LabeledProblem {
  Formula phi_star;  // phi & chi & AND_k (B_k <-> psi_k)
  WeightTerm weight_star;
  std::vector<std::string> b_vars;
  std::map<std::string, Atom> condition_map;  // B_k -> psi_k
};

LabeledProblem label_conditions(const Problem& p);

/// Atoms(phi & chi) united with the weight conditions.
AtomSet select_conditions(const SkeletonEncoding& enc, const Problem& p);

/// Replaces atoms by formulas everywhere in f / in the conditions of w.
Formula substitute_atoms(const Formula& f, const std::map<Atom, Formula>& sub);
WeightTerm substitute_atoms(const WeightTerm& w, const std::map<Atom, Formula>& sub);

/// Number of Ite nodes (occurrences) in w.
std::size_t count_ite(const WeightTerm& w);

}  // namespace wmi
