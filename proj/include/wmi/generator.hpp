#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wmi/formula.hpp"

namespace wmi {

/// Seeded pseudo-random source. Integer draws use rejection sampling on
/// the raw 64-bit stream, so sequences are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform index in [0, n).
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }
  bool coin() { return (next() >> 63) != 0; }
  /// Nonzero integer in [-bound, bound].
  std::int64_t nonzero(std::int64_t bound);

 private:
  std::mt19937_64 eng_;
};

struct GenConfig {
  unsigned depth = 2;
  unsigned n_bool = 2;
  unsigned n_real = 2;
  unsigned branching = 2;  // Q, children per connective
  unsigned poly_degree = 2;
  std::int64_t coeff_bound = 8;
  Rational lower = -1;
  Rational upper = 1;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
  std::vector<std::string> real_names() const;  // x1..xN
  std::vector<std::string> bool_names() const;  // A1..AM
};

/// Random linear inequality sum c_i x_i <= c over a random non-empty subset
/// of `reals`, with c drawn so the hyperplane can cut the default box.
Formula gen_inequality(const std::vector<std::string>& reals, std::int64_t coeff_bound, Rng& rng);

/// Connective tree of the given depth: Q children under one of or, and,
/// nor, nand; leaves are possibly negated Boolean variables or inequalities.
Formula gen_formula(const GenConfig& cfg, Rng& rng, unsigned depth);
Formula gen_formula(const GenConfig& cfg, Rng& rng);

/// Random polynomial of degree at most cfg.poly_degree over the reals.
WeightTerm gen_polynomial(const GenConfig& cfg, Rng& rng);

/// Weight tree of the given depth: either an Ite on a formula of the same
/// depth or a sum/product of two subtrees; random polynomials at the leaves.
WeightTerm gen_weight(const GenConfig& cfg, Rng& rng, unsigned depth);
WeightTerm gen_weight(const GenConfig& cfg, Rng& rng);

/// chi = formula & box bounds, w = weight tree, phi = formula, all of
/// depth cfg.depth, drawn from cfg.seed.
Problem gen_problem(const GenConfig& cfg);

/// Writes `count` problems (seeds cfg.seed, cfg.seed + 1, ...) to
/// dir/problem_<seed>.wmi and returns the paths.
std::vector<std::string> write_problems(const GenConfig& cfg, unsigned count, const std::string& dir);

}  // namespace wmi
