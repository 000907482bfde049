#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "wmi/rational.hpp"

namespace wmi {

/// Sum of c_i * x_i plus a constant, kept canonical: no zero coefficient is stored.
struct LinearTerm {
  std::map<std::string, Rational> coeffs;
  Rational constant;

  static LinearTerm variable(const std::string& name);
  static LinearTerm constant_term(const Rational& c);

  bool is_constant() const { return coeffs.empty(); }
  LinearTerm& operator+=(const LinearTerm& o);
  LinearTerm& operator-=(const LinearTerm& o);
  LinearTerm& operator*=(const Rational& k);
  friend LinearTerm operator+(LinearTerm a, const LinearTerm& b) { return a += b; }
  friend LinearTerm operator-(LinearTerm a, const LinearTerm& b) { return a -= b; }
  friend LinearTerm operator*(LinearTerm a, const Rational& k) { return a *= k; }
  bool operator==(const LinearTerm& o) const = default;

  /// Value under a (total on coeffs) variable assignment.
  Rational eval(const std::map<std::string, Rational>& values) const;
  /// s-expression of the variable part only (constant ignored).
  std::string var_part_sexpr() const;
};

// ---------------------------------------------------------------------------
// EUF terms: the vocabulary of the skeleton encoding.

enum class ETermKind { YVar, Real, Const, App };

class ETerm {
 public:
  ETerm() = default;
  static ETerm yvar(unsigned index);  // 0 is the top-level y
  static ETerm real(const std::string& name);
  static ETerm constant(const Rational& value);
  static ETerm app(const std::string& symbol, std::vector<ETerm> args);

  ETermKind kind() const { return d_->kind; }
  unsigned index() const { return d_->index; }
  const std::string& name() const { return d_->name; }  // real name or symbol
  const Rational& value() const { return d_->value; }
  const std::vector<ETerm>& args() const { return d_->args; }
  const std::string& key() const { return d_->key; }
  bool valid() const { return d_ != nullptr; }

  bool operator==(const ETerm& o) const { return d_ == o.d_ || d_->key == o.d_->key; }
  bool operator<(const ETerm& o) const { return d_->key < o.d_->key; }

 private:
  struct Data {
    ETermKind kind;
    unsigned index = 0;
    std::string name;
    Rational value;
    std::vector<ETerm> args;
    std::string key;
  };
  std::shared_ptr<const Data> d_;
};

// ---------------------------------------------------------------------------
// Atoms.

enum class AtomKind { Bool, Lra, Euf };

/// Canonical LRA relations. >= and > never appear in an atom: they are
/// negations of < and <= respectively. != is the negation of =.
enum class Rel { Le, Lt, Eq };

/// Relations accepted when building an LRA atom from two sides.
enum class RelOp { Le, Lt, Eq, Ne, Ge, Gt };

class Atom {
 public:
  Atom() = default;
  static Atom boolean(const std::string& name);
  /// Builds (var_part rel rhs). var_part must be canonical already
  /// (leading coefficient 1); use make_lra_literal for general input.
  static Atom lra(LinearTerm var_part, Rel rel, Rational rhs);
  static Atom euf_eq(ETerm a, ETerm b);

  AtomKind kind() const { return d_->kind; }
  bool is_bool() const { return kind() == AtomKind::Bool; }
  bool is_lra() const { return kind() == AtomKind::Lra; }
  bool is_euf() const { return kind() == AtomKind::Euf; }

  const std::string& name() const { return d_->name; }  // Bool only
  const LinearTerm& lhs() const { return d_->lhs; }     // Lra only, constant is 0
  Rel rel() const { return d_->rel; }
  const Rational& rhs() const { return d_->rhs; }
  const ETerm& eq_lhs() const { return d_->e1; }  // Euf only
  const ETerm& eq_rhs() const { return d_->e2; }

  /// Canonical s-expression; total order is (kind, key).
  const std::string& key() const { return d_->key; }
  bool valid() const { return d_ != nullptr; }

  bool operator==(const Atom& o) const {
    return d_ == o.d_ || (d_->kind == o.d_->kind && d_->key == o.d_->key);
  }
  bool operator<(const Atom& o) const {
    if (d_->kind != o.d_->kind) return d_->kind < o.d_->kind;
    return d_->key < o.d_->key;
  }

 private:
  struct Data {
    AtomKind kind;
    std::string name;
    LinearTerm lhs;
    Rel rel = Rel::Le;
    Rational rhs;
    ETerm e1, e2;
    std::string key;
  };
  std::shared_ptr<const Data> d_;
};

struct Literal {
  Atom atom;
  bool positive = true;

  Literal negated() const { return {atom, !positive}; }
  bool operator==(const Literal& o) const = default;
  bool operator<(const Literal& o) const {
    if (!(atom == o.atom)) return atom < o.atom;
    return positive < o.positive;
  }
};

using AtomSet = std::set<Atom>;

/// Result of canonicalizing a relation between linear terms: either a
/// literal over a canonical atom, or a truth constant when no variable remains.
using LraResult = std::variant<Literal, bool>;

/// (lhs op rhs) canonicalized: variables moved left, constant right,
/// leading coefficient scaled to 1, >=/>/!= expressed as negations.
LraResult make_lra_literal(const LinearTerm& lhs, RelOp op, const LinearTerm& rhs);

/// EUF equality literal; identical sides fold to true.
std::variant<Literal, bool> make_euf_literal(const ETerm& a, const ETerm& b);

std::string literal_to_string(const Literal& l);

}  // namespace wmi
