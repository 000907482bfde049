#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wmi/engine.hpp"
#include "wmi/generator.hpp"

namespace wmi {

/// Node of a density estimation tree. Real splits send var < threshold to
/// the left; Boolean splits send false to the left.
struct DetNode {
  enum class Kind { Leaf, RealSplit, BoolSplit };
  Kind kind = Kind::Leaf;
  std::string var;
  Rational threshold;
  Rational density;  // leaves only
  std::shared_ptr<DetNode> left;
  std::shared_ptr<DetNode> right;
};

struct DetReal {
  std::string name;
  Rational lower;
  Rational upper;
};

struct DetModel {
  std::vector<DetReal> reals;
  std::vector<std::string> bools;
  std::shared_ptr<DetNode> root;

  /// phi = true, chi = the box, weight = the tree as nested Ite.
  Problem problem() const;
};

/// Parses and validates the JSON form
///   {"reals":[{"name","lower","upper"}], "bools":[...],
///    "root": {"split":{"var","threshold"} | {"bool"}, "left", "right"}
///            | {"density":"p/q"}}
/// Throws std::invalid_argument on schema or validity errors.
DetModel parse_det(std::string_view json);
std::string det_to_json(const DetModel& m);

/// Pr(query) = WMI(query & chi, w) / WMI(chi, w) with the structure-aware
/// algorithm. Throws std::domain_error when the total mass is zero.
Rational det_query(const DetModel& m, const Formula& query, const WmiOptions& opt = {});

/// Random linear inequality over exactly max(1, floor(h * |reals|)) reals.
Formula gen_query(const DetModel& m, double h, Rng& rng);

/// Random tree with the given split depth over n_real reals in [0, 1] and
/// n_bool Booleans, positive dyadic thresholds and positive densities.
DetModel random_det(Rng& rng, unsigned n_real, unsigned n_bool, unsigned depth);

}  // namespace wmi
