#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wmi/atom.hpp"

namespace wmi {

// ---------------------------------------------------------------------------
// Formulas

enum class FKind { True, False, Atom, Not, And, Or, Implies, Iff };

/// Immutable, shareable formula tree. Factories flatten nested And/Or and
/// remove double negation; they do not propagate constants (see simplify).
class Formula {
 public:
  Formula();  // True

  static Formula top();
  static Formula bottom();
  static Formula constant(bool b) { return b ? top() : bottom(); }
  static Formula atom(const Atom& a);
  static Formula literal(const Literal& l);
  static Formula lnot(const Formula& f);
  static Formula land(std::vector<Formula> kids);
  static Formula lor(std::vector<Formula> kids);
  static Formula implies(const Formula& a, const Formula& b);
  static Formula iff(const Formula& a, const Formula& b);

  FKind kind() const { return d_->kind; }
  const Atom& atom_of() const { return d_->atom; }
  const std::vector<Formula>& kids() const { return d_->kids; }

  bool is_true() const { return kind() == FKind::True; }
  bool is_false() const { return kind() == FKind::False; }
  /// Atom or negated atom.
  bool is_literal() const;
  /// Only meaningful when is_literal().
  Literal as_literal() const;

  bool operator==(const Formula& o) const;
  bool same_node(const Formula& o) const { return d_ == o.d_; }
  std::string to_string() const;

 private:
  struct Data {
    FKind kind;
    Atom atom;
    std::vector<Formula> kids;
  };
  explicit Formula(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static Formula make(FKind k, std::vector<Formula> kids);
  std::shared_ptr<const Data> d_;
};

// ---------------------------------------------------------------------------
// Weight terms

enum class TKind { Const, Var, Add, Sub, Mul, Div, Func, Ite };

class WeightTerm {
 public:
  WeightTerm();  // constant 0

  static WeightTerm constant(const Rational& c);
  static WeightTerm var(const std::string& name);
  static WeightTerm binop(TKind op, const WeightTerm& l, const WeightTerm& r);
  static WeightTerm func(const std::string& name, std::vector<WeightTerm> args);
  /// Collapses to `then_` when both branches are syntactically identical.
  static WeightTerm ite(const Formula& cond, const WeightTerm& then_, const WeightTerm& else_);

  TKind kind() const { return d_->kind; }
  const Rational& value() const { return d_->value; }
  const std::string& name() const { return d_->name; }
  const std::vector<WeightTerm>& args() const { return d_->args; }
  const Formula& cond() const { return d_->cond; }
  const WeightTerm& then_branch() const { return d_->args[0]; }
  const WeightTerm& else_branch() const { return d_->args[1]; }

  bool operator==(const WeightTerm& o) const;
  bool same_node(const WeightTerm& o) const { return d_ == o.d_; }
  std::string to_string() const;

 private:
  struct Data {
    TKind kind;
    Rational value;
    std::string name;
    std::vector<WeightTerm> args;
    Formula cond;
  };
  explicit WeightTerm(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

inline WeightTerm operator+(const WeightTerm& a, const WeightTerm& b) { return WeightTerm::binop(TKind::Add, a, b); }
inline WeightTerm operator-(const WeightTerm& a, const WeightTerm& b) { return WeightTerm::binop(TKind::Sub, a, b); }
inline WeightTerm operator*(const WeightTerm& a, const WeightTerm& b) { return WeightTerm::binop(TKind::Mul, a, b); }
inline WeightTerm operator/(const WeightTerm& a, const WeightTerm& b) { return WeightTerm::binop(TKind::Div, a, b); }

// ---------------------------------------------------------------------------
// Assignments

/// Truth map over atoms. Whether it is total is relative to a universe.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(const std::vector<Literal>& lits);

  /// Throws std::logic_error when the atom is already mapped to the other value.
  void set(const Atom& a, bool value);
  void set(const Literal& l) { set(l.atom, l.positive); }
  std::optional<bool> get(const Atom& a) const;
  bool contains(const Atom& a) const { return map_.count(a) != 0; }
  void erase(const Atom& a) { map_.erase(a); }
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  bool is_total_over(const AtomSet& universe) const;
  /// True when every literal of *this also holds in `other`.
  bool subset_of(const Assignment& other) const;

  Assignment restricted_to(const AtomSet& universe) const;
  std::vector<Literal> literals() const;
  const std::map<Atom, bool>& map() const { return map_; }

  bool operator==(const Assignment& o) const = default;
  bool operator<(const Assignment& o) const { return map_ < o.map_; }
  std::string to_string() const;

 private:
  std::map<Atom, bool> map_;
};

// ---------------------------------------------------------------------------
// Problem instance: the tuple <phi, chi, w, x, A>.

struct Problem {
  Formula phi;
  Formula chi;
  WeightTerm weight;
  std::vector<std::string> reals;  // declaration order
  std::vector<std::string> bools;  // declaration order

  std::vector<Atom> bool_atoms() const;
};

// ---------------------------------------------------------------------------
// Structural utilities

/// Substitutes every atom assigned by mu and propagates the constants.
Formula restrict_formula(const Formula& phi, const Assignment& mu);
/// Replaces each Ite whose (restricted, simplified) condition is constant by
/// the selected branch, recursively.
WeightTerm restrict_weight(const WeightTerm& w, const Assignment& mu);
/// True iff no Ite node occurs in w.
bool is_fi(const WeightTerm& w);

AtomSet atoms_of(const Formula& f);
/// Atoms of all Ite conditions of w.
AtomSet atoms_of(const WeightTerm& w);
/// Distinct atoms in first-occurrence (pre-order) order.
std::vector<Atom> atoms_in_order(const Formula& f);
/// Ite condition atoms in pre-order, together with the polarity each
/// atom has where it first occurs.
std::vector<Literal> condition_literals_in_order(const WeightTerm& w);

/// Constant propagation, unit absorption, duplicate removal, flattening.
Formula simplify(const Formula& f);
/// True, a literal, or an And of literals.
bool is_literal_conjunction(const Formula& f);
/// Literals of a literal conjunction (empty for True).
std::vector<Literal> conjunction_literals(const Formula& f);

/// Three-valued evaluation: nullopt when mu leaves the value open.
std::optional<bool> evaluate(const Formula& f, const Assignment& mu);

}  // namespace wmi
