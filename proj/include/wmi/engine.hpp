#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wmi/deadline.hpp"
#include "wmi/formula.hpp"
#include "wmi/integrate.hpp"

namespace wmi {

struct WmiOptions {
  bool log = false;
  /// Reuse integrals of identical (region, weight) pairs. Cached hits do not
  /// count as integrals.
  bool cache_integrals = false;
  Deadline deadline;
  std::size_t bool_cap = 16;  // brute force only
  IntegratorOptions integrator;
};

struct LogEntry {
  Assignment assignment;
  std::uint64_t multiplier = 1;
  Rational integral;
};

struct WmiResult {
  Rational value;
  std::size_t n_integrals = 0;
  std::size_t n_assignments = 0;
  /// The Boolean assignments the algorithm iterated over (M^A* for the
  /// predicate-abstraction algorithms, satisfying totals for brute force).
  std::vector<Assignment> boolean_assignments;
  std::vector<LogEntry> log;  // filled when WmiOptions::log is set
};

enum class Algorithm { BruteForce, PA, SA };

/// "bf", "pa" or "sa"; throws std::invalid_argument otherwise.
Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);

/// Sum over all total Boolean assignments of the integral of the residual,
/// each residual split into cells by a decision tree over its arithmetic
/// atoms and the reachable weight conditions.
WmiResult wmi_bruteforce(const Problem& p, const WmiOptions& opt = {});

/// Predicate abstraction over Booleans and labeled conditions.
WmiResult wmi_pa(const Problem& p, const WmiOptions& opt = {});

/// Structure-aware predicate abstraction driven by the weight skeleton.
WmiResult sa_wmi_pa(const Problem& p, const WmiOptions& opt = {});

WmiResult run_algorithm(Algorithm a, const Problem& p, const WmiOptions& opt = {});

/// phi & chi & skeleton(w).
Formula sa_formula(const Problem& p);

/// Completion step of the structure-aware algorithm: simplifies `formula`
/// under mu and, when Booleans remain, extends mu by every total assignment
/// to exactly those Booleans that keeps the residual satisfiable.
std::vector<Assignment> sa_complete_boolean(const Formula& formula, const Assignment& mu);

/// The problem with phi replaced by phi & support.
Problem support_conjoin(const Problem& p, const Formula& support);

/// JSON document with value, counts and the per-assignment log.
std::string result_to_json(const WmiResult& r, Algorithm a);

}  // namespace wmi
