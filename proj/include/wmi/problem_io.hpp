#pragma once

#include <string>
#include <string_view>

#include "wmi/formula.hpp"

namespace wmi {

/// Reads the s-expression problem format:
///
///   (declare-real x) (declare-bool A)
///   (phi <formula>) (chi <formula>) (weight <term>)
///
/// phi and chi default to true, weight to 1. Throws ParseError.
Problem parse_problem(std::string_view text);
std::string serialize_problem(const Problem& p);

/// Parses a formula / weight term over the variables declared in `scope`.
Formula parse_formula(std::string_view text, const Problem& scope);
WeightTerm parse_weight(std::string_view text, const Problem& scope);

}  // namespace wmi
