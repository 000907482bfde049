#pragma once

#include <map>
#include <string>
#include <vector>

#include "wmi/formula.hpp"

namespace wmi {

/// Multivariate polynomial with exact rational coefficients over a fixed,
/// ordered variable list. No zero coefficient is ever stored.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  static Polynomial constant(std::vector<std::string> vars, const Rational& c);
  static Polynomial variable(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  void add_term(const Exponents& e, const Rational& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& k);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
  bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  Polynomial pow(unsigned e) const;
  Rational eval(const std::vector<Rational>& point) const;
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

/// Expands an Ite-free weight into a polynomial over `vars`. Throws
/// NonPolynomialWeight for unconditioned functions, division by a
/// non-constant or by zero; std::invalid_argument for an Ite or a variable
/// outside `vars`.
Polynomial polynomial_from_weight(const WeightTerm& w, const std::vector<std::string>& vars);

}  // namespace wmi
