#pragma once

// Independent reference computations used to check the library.

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmi/atom.hpp"
#include "wmi/rational.hpp"

namespace oracle {

using wmi::Rational;

inline Rational power(const Rational& b, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

/// Integral of prod x_i^{e_i} over the box prod [lo_i, hi_i].
inline Rational box_monomial(const std::vector<unsigned>& e, const std::vector<Rational>& lo,
                             const std::vector<Rational>& hi) {
  Rational r = 1;
  for (std::size_t i = 0; i < e.size(); ++i) r *= (power(hi[i], e[i] + 1) - power(lo[i], e[i] + 1)) / (e[i] + 1);
  return r;
}

/// Fourier-Motzkin feasibility of a conjunction of rows sum a_i x_i REL b,
/// REL in {<=, <}; equalities must be split by the caller.
struct Row {
  std::vector<Rational> a;
  bool strict = false;
  Rational b;
};

// Scales a row so its first nonzero coefficient is +-1 and keeps only the
// tightest row per direction. Constant rows are checked on the spot.
inline bool fm_reduce(std::vector<Row>& rows) {
  std::map<std::vector<Rational>, Row> best;
  for (auto& r : rows) {
    std::size_t k = 0;
    while (k < r.a.size() && r.a[k] == 0) ++k;
    if (k == r.a.size()) {
      if (r.strict ? !(0 < r.b) : !(0 <= r.b)) return false;
      continue;
    }
    Rational s = abs(r.a[k]);
    for (auto& x : r.a) x /= s;
    r.b /= s;
    auto it = best.find(r.a);
    if (it == best.end())
      best.emplace(r.a, r);
    else if (r.b < it->second.b || (r.b == it->second.b && r.strict))
      it->second = r;
  }
  rows.clear();
  for (auto& [a, r] : best) rows.push_back(std::move(r));
  return true;
}

inline bool fm_feasible(std::vector<Row> rows, std::size_t nvars) {
  std::vector<bool> done(nvars, false);
  for (std::size_t step = 0; step < nvars; ++step) {
    if (!fm_reduce(rows)) return false;
    // Eliminate the variable producing the fewest new rows.
    std::size_t v = nvars, cost = 0;
    for (std::size_t c = 0; c < nvars; ++c) {
      if (done[c]) continue;
      std::size_t np = 0, nn = 0;
      for (const auto& r : rows) {
        np += r.a[c] > 0;
        nn += r.a[c] < 0;
      }
      if (v == nvars || np * nn < cost) {
        v = c;
        cost = np * nn;
      }
    }
    done[v] = true;
    std::vector<Row> pos, neg, rest;
    for (auto& r : rows) {
      if (r.a[v] > 0)
        pos.push_back(r);
      else if (r.a[v] < 0)
        neg.push_back(r);
      else
        rest.push_back(r);
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        // p/p_v - n/n_v eliminates v (n_v < 0).
        Rational sp = 1 / p.a[v];
        Rational sn = -1 / n.a[v];
        Row r;
        r.a.resize(nvars);
        for (std::size_t k = 0; k < nvars; ++k) r.a[k] = p.a[k] * sp + n.a[k] * sn;
        r.a[v] = 0;
        r.b = p.b * sp + n.b * sn;
        r.strict = p.strict || n.strict;
        rest.push_back(std::move(r));
      }
    }
    rows = std::move(rest);
  }
  return fm_reduce(rows);
}

/// Rows for a literal over the variable order `vars`. Equalities give two
/// rows; a negated equality gives two alternatives (returned separately).
inline std::vector<std::vector<Row>> literal_rows(const wmi::Literal& l, const std::vector<std::string>& vars) {
  std::vector<Rational> a(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = l.atom.lhs().coeffs.find(vars[i]);
    if (it != l.atom.lhs().coeffs.end()) a[i] = it->second;
  }
  std::vector<Rational> na = a;
  for (auto& x : na) x = -x;
  const Rational& b = l.atom.rhs();
  switch (l.atom.rel()) {
    case wmi::Rel::Le:
      if (l.positive) return {{Row{a, false, b}}};
      return {{Row{na, true, -b}}};
    case wmi::Rel::Lt:
      if (l.positive) return {{Row{a, true, b}}};
      return {{Row{na, false, -b}}};
    case wmi::Rel::Eq:
      if (l.positive) return {{Row{a, false, b}, Row{na, false, -b}}};
      return {{Row{a, true, b}}, {Row{na, true, -b}}};
  }
  return {};
}

/// Feasibility of a conjunction of LRA literals by Fourier-Motzkin with
/// case splitting on negated equalities.
inline bool lra_feasible(const std::vector<wmi::Literal>& lits, const std::vector<std::string>& vars) {
  std::vector<std::vector<Row>> branches = {{}};
  for (const auto& l : lits) {
    auto alts = literal_rows(l, vars);
    std::vector<std::vector<Row>> next;
    for (const auto& br : branches) {
      for (const auto& alt : alts) {
        auto nb = br;
        nb.insert(nb.end(), alt.begin(), alt.end());
        next.push_back(std::move(nb));
      }
    }
    branches = std::move(next);
  }
  for (const auto& br : branches)
    if (fm_feasible(br, vars.size())) return true;
  return false;
}

/// Small deterministic generator for property tests (splitmix64).
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return next() & 1; }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t s_;
};

}  // namespace oracle
