#pragma once

// Random instances and independent checks shared by the unit tests and the
// acceptance runner. Nothing here depends on the test framework.

#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wmi/enumerate.hpp"
#include "wmi/integrate.hpp"
#include "wmi/skeleton.hpp"

namespace props {

using namespace wmi;

// ---------------------------------------------------------------------------
// SMT

inline bool satisfiable(const Formula& f) { return Enumerator(f, AtomSet{}, true).next().has_value(); }

inline bool entailed(const Formula& context, const Formula& goal) {
  return !satisfiable(Formula::land({context, Formula::lnot(goal)}));
}

inline Formula conjunction(const Assignment& nu) {
  std::vector<Formula> parts;
  for (const auto& l : nu.literals()) parts.push_back(Formula::literal(l));
  return Formula::land(std::move(parts));
}

inline LinearTerm random_linear(oracle::Gen& g, const std::vector<std::string>& vars) {
  LinearTerm t;
  for (const auto& v : vars)
    if (g.range(0, 2) != 0) {
      long c = g.range(-3, 3);
      if (c != 0) t.coeffs[v] = Rational(c);
    }
  if (t.coeffs.empty()) t.coeffs[vars[g.range(0, static_cast<long>(vars.size()) - 1)]] = 1;
  return t;
}

inline std::optional<Literal> random_lra(oracle::Gen& g, const std::vector<std::string>& vars) {
  static const RelOp ops[] = {RelOp::Le, RelOp::Lt, RelOp::Ge, RelOp::Gt, RelOp::Eq, RelOp::Ne};
  RelOp op = ops[g.range(0, 5)];
  auto r = make_lra_literal(random_linear(g, vars), op, LinearTerm::constant_term(Rational(g.range(-5, 5))));
  if (auto* l = std::get_if<Literal>(&r)) return *l;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Skeleton

inline bool holds_at(const Atom& a, const std::map<std::string, Rational>& point) {
  Rational s = 0;
  for (const auto& [v, c] : a.lhs().coeffs) s += c * point.at(v);
  switch (a.rel()) {
    case Rel::Le: return s <= a.rhs();
    case Rel::Lt: return s < a.rhs();
    case Rel::Eq: return s == a.rhs();
  }
  return false;
}

/// Total assignment over the conditions read off a random point of the
/// box [-1,1]^n, so it is LRA-consistent by construction.
inline Assignment random_total(const AtomSet& conds, const std::vector<std::string>& reals, oracle::Gen& g) {
  std::map<std::string, Rational> point;
  for (const auto& r : reals) point[r] = make_rational(g.range(-1000, 1000), 1000);
  Assignment nu;
  for (const auto& a : conds) nu.set(a, a.is_bool() ? g.coin() : holds_at(a, point));
  return nu;
}

struct Walk {
  std::size_t active_ites = 0;
  std::size_t selected_leaves = 0;
};

/// Which Ite nodes are reached under a total nu, and how many Ite-free
/// branches get selected, straight from the weight tree.
inline void walk(const WeightTerm& w, const Assignment& nu, bool active, Walk& out) {
  if (w.kind() != TKind::Ite) {
    for (const auto& a : w.args()) walk(a, nu, active, out);
    return;
  }
  bool v = evaluate(w.cond(), nu).value();
  if (active) {
    ++out.active_ites;
    if (is_fi(v ? w.then_branch() : w.else_branch())) ++out.selected_leaves;
  }
  walk(w.then_branch(), nu, active && v, out);
  walk(w.else_branch(), nu, active && !v, out);
}

inline bool is_leaf(const ETerm& t) { return t.kind() == ETermKind::App && t.name().rfind("leaf", 0) == 0; }

struct ChainCheck {
  bool defs_sat = false;
  bool at_most_one_per_ite = true;
  std::size_t chosen = 0;  // Ites with an entailed branch equality
  std::size_t leaves = 0;  // entailed equalities with a leaf symbol
  Walk truth;

  bool ok() const {
    return defs_sat && at_most_one_per_ite && chosen == truth.active_ites && leaves == truth.selected_leaves;
  }
};

/// Under a total nu over the conditions: the definitions are satisfiable,
/// and exactly the reached Ites have one entailed branch equality each.
inline ChainCheck check_chain(const WeightTerm& w, const SkeletonEncoding& enc, const Assignment& nu) {
  ChainCheck out;
  Formula ctx = Formula::land({enc.formula(), conjunction(nu)});
  walk(w, nu, true, out.truth);
  out.defs_sat = satisfiable(ctx);
  if (!out.defs_sat) return out;
  const std::size_t k = (enc.defs.size() - 1) / 3;
  for (std::size_t i = 0; i < k; ++i) {
    // Third clause of each triple: the two candidate equalities.
    const Clause& mutex = enc.defs[3 * i + 2];
    std::size_t hits = 0;
    for (std::size_t j = mutex.size() - 2; j < mutex.size(); ++j) {
      Formula eq = Formula::lnot(mutex[j]);
      if (!eq.is_literal()) continue;
      if (entailed(ctx, eq)) {
        ++hits;
        const Atom& a = eq.as_literal().atom;
        if (is_leaf(a.eq_lhs()) || is_leaf(a.eq_rhs())) ++out.leaves;
      }
    }
    if (hits > 1) out.at_most_one_per_ite = false;
    out.chosen += hits;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integration

inline Rational simplex_volume(const SimplexCell& s) {
  const std::size_t d = s.vertices.size() - 1;
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[i][j] = s.vertices[i + 1][j] - s.vertices[0][j];
  Rational det = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < d; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  Rational fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= Rational(static_cast<long>(i));
  return abs(det) / fact;
}

inline HPolytope box(const std::vector<Rational>& lo, const std::vector<Rational>& hi) {
  const std::size_t d = lo.size();
  HPolytope p;
  for (std::size_t i = 0; i < d; ++i) p.vars.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < d; ++i) {
    Halfspace l, h;
    l.a.assign(d, 0);
    h.a.assign(d, 0);
    l.a[i] = -1;
    l.b = -lo[i];
    h.a[i] = 1;
    h.b = hi[i];
    p.halfspaces.push_back(l);
    p.halfspaces.push_back(h);
  }
  return p;
}

inline HPolytope random_box(std::size_t d, oracle::Gen& g) {
  std::vector<Rational> lo, hi;
  for (std::size_t i = 0; i < d; ++i) {
    lo.push_back(make_rational(g.range(-6, 4), 2));
    hi.push_back(lo.back() + make_rational(g.range(1, 6), 3));
  }
  return box(lo, hi);
}

/// Box [-1,1]^d cut by one to three random halfspaces.
inline HPolytope random_polytope(std::size_t d, oracle::Gen& g) {
  HPolytope p = box(std::vector<Rational>(d, -1), std::vector<Rational>(d, 1));
  long cuts = g.range(1, 3);
  for (long c = 0; c < cuts; ++c) {
    Halfspace h;
    for (std::size_t i = 0; i < d; ++i) h.a.push_back(Rational(g.range(-3, 3)));
    h.a[g.range(0, static_cast<long>(d) - 1)] = Rational(g.range(1, 3));
    h.rel = g.coin() ? Rel::Le : Rel::Lt;
    h.b = make_rational(g.range(-4, 8), 4);
    p.halfspaces.push_back(h);
  }
  return p;
}

inline Polynomial random_poly(const std::vector<std::string>& vars, unsigned max_degree, oracle::Gen& g) {
  Polynomial p(vars);
  for (int t = 0; t < 5; ++t) {
    Polynomial::Exponents e(vars.size(), 0);
    unsigned deg = static_cast<unsigned>(g.range(0, max_degree));
    for (unsigned k = 0; k < deg; ++k) ++e[g.range(0, static_cast<long>(vars.size()) - 1)];
    p.add_term(e, Rational(g.range(-5, 5)));
  }
  return p;
}

/// Random hyperplane through the region, split into (a.x <= b, a.x > b).
inline std::pair<Halfspace, Halfspace> random_split(std::size_t d, oracle::Gen& g) {
  Halfspace cut;
  for (std::size_t i = 0; i < d; ++i) cut.a.push_back(Rational(g.range(-2, 2)));
  cut.a[0] = 1;
  cut.b = make_rational(g.range(-3, 3), 3);
  Halfspace flipped = cut;
  for (auto& a : flipped.a) a = -a;
  flipped.b = -cut.b;
  flipped.rel = Rel::Lt;
  return {cut, flipped};
}

inline bool split_additive(const Polynomial& f, const HPolytope& p, oracle::Gen& g) {
  auto [below_h, above_h] = random_split(p.dimension(), g);
  HPolytope below = p, above = p;
  below.halfspaces.push_back(below_h);
  above.halfspaces.push_back(above_h);
  return integrate_polytope(f, below) + integrate_polytope(f, above) == integrate_polytope(f, p);
}

struct MonteCarlo {
  double exact = 0;
  double estimate = 0;
  double std_error = 0;
  bool within(double k) const { return std::abs(exact - estimate) <= k * std_error + 1e-9; }
};

/// Rejection-sampling estimate over [-1,1]^d against the exact value.
template <class Engine>
MonteCarlo monte_carlo(const Polynomial& f, const HPolytope& p, Engine& eng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t d = p.dimension();
  MonteCarlo mc;
  mc.exact = integrate_polytope(f, p).get_d();
  const double vol = std::pow(2.0, static_cast<double>(d));
  double sum = 0, sum2 = 0;
  std::vector<double> x(d);
  for (int i = 0; i < n; ++i) {
    for (auto& xi : x) xi = u(eng);
    bool in = true;
    for (const auto& h : p.halfspaces) {
      double s = 0;
      for (std::size_t k = 0; k < d; ++k) s += h.a[k].get_d() * x[k];
      if (s > h.b.get_d()) in = false;
    }
    double v = 0;
    if (in) {
      for (const auto& [e, c] : f.terms()) {
        double m = c.get_d();
        for (std::size_t k = 0; k < d; ++k) m *= std::pow(x[k], e[k]);
        v += m;
      }
      v *= vol;
    }
    sum += v;
    sum2 += v * v;
  }
  mc.estimate = sum / n;
  mc.std_error = std::sqrt(std::max(0.0, sum2 / n - mc.estimate * mc.estimate) / n);
  return mc;
}

}  // namespace props
