#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wmi/rational.hpp"

namespace wmi {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Weight leaf that the exact backend cannot integrate (transcendental
/// function, division by a non-constant).
class NonPolynomialWeight : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundedRegion : public std::runtime_error {
 public:
  UnboundedRegion(const std::string& msg, std::vector<Rational> ray)
      : std::runtime_error(msg), ray_(std::move(ray)) {}
  /// Direction r != 0 with the region closed under x -> x + t*r, t >= 0.
  const std::vector<Rational>& ray() const { return ray_; }

 private:
  std::vector<Rational> ray_;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("timeout") {}
};

}  // namespace wmi
