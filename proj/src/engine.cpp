#include "wmi/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "wmi/enumerate.hpp"
#include "wmi/errors.hpp"
#include "wmi/skeleton.hpp"
#include "wmi/theory.hpp"

namespace wmi {

Algorithm parse_algorithm(const std::string& name) {
  if (name == "bf") return Algorithm::BruteForce;
  if (name == "pa") return Algorithm::PA;
  if (name == "sa") return Algorithm::SA;
  throw std::invalid_argument("unknown algorithm '" + name + "' (expected bf, pa or sa)");
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::BruteForce: return "bf";
    case Algorithm::PA: return "pa";
    case Algorithm::SA: return "sa";
  }
  return "?";
}

namespace {

std::vector<Literal> lra_only(const std::vector<Literal>& lits) {
  std::vector<Literal> out;
  for (const auto& l : lits)
    if (l.atom.is_lra()) out.push_back(l);
  return out;
}

AtomSet lra_atoms(const Formula& f) {
  AtomSet out;
  for (const auto& a : atoms_of(f))
    if (a.is_lra()) out.insert(a);
  return out;
}

AtomSet bool_atoms(const Formula& f) {
  AtomSet out;
  for (const auto& a : atoms_of(f))
    if (a.is_bool()) out.insert(a);
  return out;
}

Assignment merge(const Assignment& a, const Assignment& b) {
  Assignment out = a;
  for (const auto& l : b.literals()) out.set(l);
  return out;
}

// Counts, optionally caches and logs every region integral of one run.
class Integrals {
 public:
  Integrals(const Problem& p, const WmiOptions& opt, WmiResult& r) : p_(p), opt_(opt), r_(r) {}

  void add(const Assignment& mu, const std::vector<Literal>& region, const WeightTerm& w, std::uint64_t mult = 1) {
    opt_.deadline.check();
    Rational value = integral(lra_only(region), w);
    r_.value += value * Rational(static_cast<unsigned long>(mult));
    if (opt_.log) r_.log.push_back({mu, mult, value});
  }

 private:
  Rational integral(const std::vector<Literal>& lits, const WeightTerm& w) {
    if (!opt_.cache_integrals) {
      ++r_.n_integrals;
      return wmi_nb(lits, w, p_.reals, opt_.integrator);
    }
    std::vector<std::string> keys;
    for (const auto& l : lits) keys.push_back((l.positive ? "+" : "-") + l.atom.key());
    std::sort(keys.begin(), keys.end());
    std::string key = w.to_string();
    for (const auto& k : keys) key += "|" + k;
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    ++r_.n_integrals;
    Rational v = wmi_nb(lits, w, p_.reals, opt_.integrator);
    cache_.emplace(std::move(key), v);
    return v;
  }

  const Problem& p_;
  const WmiOptions& opt_;
  WmiResult& r_;
  std::map<std::string, Rational> cache_;
};

// Preferred branching: Booleans true, then the weight conditions with the
// polarity of their first occurrence.
std::vector<Literal> preferred_literals(const Problem& p) {
  std::vector<Literal> out;
  for (const auto& a : p.bool_atoms()) out.push_back({a, true});
  for (const auto& l : condition_literals_in_order(p.weight)) out.push_back(l);
  return out;
}

void bf_cells(const Formula& res, const WeightTerm& w, const Assignment& tau, std::vector<Literal>& sigma,
              Integrals& ints, const Deadline& deadline) {
  deadline.check();
  if (!sigma.empty() && !theory_consistent(sigma)) return;
  Assignment a(sigma);
  Formula r = simplify(restrict_formula(res, a));
  if (r.is_false()) return;
  WeightTerm wr = restrict_weight(w, a);
  Atom next;
  if (!r.is_true()) {
    next = atoms_in_order(r).front();
  } else if (!is_fi(wr)) {
    next = condition_literals_in_order(wr).front().atom;
  } else {
    ints.add(merge(tau, a), sigma, wr);
    return;
  }
  for (bool v : {true, false}) {
    sigma.push_back({next, v});
    bf_cells(res, w, tau, sigma, ints, deadline);
    sigma.pop_back();
  }
}

}  // namespace

WmiResult wmi_bruteforce(const Problem& p, const WmiOptions& opt) {
  WmiResult r;
  auto bools = p.bool_atoms();
  if (bools.size() > opt.bool_cap)
    throw CapExceeded(std::to_string(bools.size()) + " Boolean variables exceed the brute-force cap of " +
                      std::to_string(opt.bool_cap));
  Integrals ints(p, opt, r);
  Formula body = Formula::land({p.phi, p.chi});
  const std::uint64_t n = std::uint64_t{1} << bools.size();
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    opt.deadline.check();
    Assignment tau;
    for (std::size_t i = 0; i < bools.size(); ++i) tau.set(bools[i], (bits >> (bools.size() - 1 - i) & 1) == 0);
    Formula res = simplify(restrict_formula(body, tau));
    if (res.is_false()) continue;
    r.boolean_assignments.push_back(tau);
    ++r.n_assignments;
    std::vector<Literal> sigma;
    bf_cells(res, restrict_weight(p.weight, tau), tau, sigma, ints, opt.deadline);
  }
  return r;
}

WmiResult wmi_pa(const Problem& p, const WmiOptions& opt) {
  WmiResult r;
  Integrals ints(p, opt, r);
  LabeledProblem lp = label_conditions(p);
  AtomSet universe;
  for (const auto& a : p.bool_atoms()) universe.insert(a);
  std::vector<Literal> preferred;
  for (const auto& a : p.bool_atoms()) preferred.push_back({a, true});
  for (const auto& l : condition_literals_in_order(lp.weight_star)) preferred.push_back(l);
  for (const auto& b : lp.b_vars) universe.insert(Atom::boolean(b));

  Enumerator outer(lp.phi_star, universe, true, preferred, opt.deadline);
  while (auto mu = outer.next()) {
    Formula res = simplify(restrict_formula(lp.phi_star, *mu));
    WeightTerm w = restrict_weight(lp.weight_star, *mu);
    if (!is_fi(w)) throw std::logic_error("weight not condition-free under " + mu->to_string());
    r.boolean_assignments.push_back(*mu);
    ++r.n_assignments;
    if (res.is_false()) continue;
    if (is_literal_conjunction(res)) {
      ints.add(*mu, conjunction_literals(res), w);
      continue;
    }
    Enumerator inner(res, atoms_of(res), false, preferred, opt.deadline);
    while (auto nu = inner.next()) ints.add(merge(*mu, *nu), nu->literals(), w);
  }
  return r;
}

Formula sa_formula(const Problem& p) {
  return Formula::land({p.phi, p.chi, encode_skeleton(p.weight).formula()});
}

std::vector<Assignment> sa_complete_boolean(const Formula& formula, const Assignment& mu) {
  Formula res = simplify(restrict_formula(formula, mu));
  if (res.is_false()) return {};
  AtomSet rest = bool_atoms(res);
  if (rest.empty()) return {mu};
  std::vector<Assignment> out;
  for (const auto& ext : all_smt(res, rest, true)) out.push_back(merge(mu, ext));
  return out;
}

WmiResult sa_wmi_pa(const Problem& p, const WmiOptions& opt) {
  WmiResult r;
  Integrals ints(p, opt, r);
  Formula phi2 = sa_formula(p);
  AtomSet bools;
  for (const auto& a : p.bool_atoms()) bools.insert(a);

  // Uninterpreted equalities default to false so that a minimized model
  // never keeps two branches of one Ite open at the same time.
  std::vector<Literal> preferred = preferred_literals(p);
  for (const auto& a : atoms_in_order(phi2))
    if (a.is_euf()) preferred.push_back({a, false});

  std::vector<Assignment> m_star;
  Enumerator first(phi2, bools, false, preferred, opt.deadline);
  while (auto mu = first.next())
    for (auto& full : sa_complete_boolean(phi2, *mu)) m_star.push_back(std::move(full));

  for (const auto& mu : m_star) {
    opt.deadline.check();
    r.boolean_assignments.push_back(mu);
    ++r.n_assignments;
    const std::size_t k = bools.size() - mu.restricted_to(bools).size();
    if (k >= 64) throw CapExceeded("too many unassigned Boolean variables");
    const std::uint64_t mult = std::uint64_t{1} << k;
    Formula res = simplify(restrict_formula(phi2, mu));
    WeightTerm w = restrict_weight(p.weight, mu);
    if (res.is_false()) continue;
    if (is_literal_conjunction(res)) {
      auto lits = lra_only(conjunction_literals(res));
      WeightTerm wl = restrict_weight(w, Assignment(lits));
      if (is_fi(wl)) {
        ints.add(merge(mu, Assignment(lits)), lits, wl, mult);
        continue;
      }
    }
    Enumerator second(res, lra_atoms(res), false, preferred, opt.deadline);
    // A condition the skeleton leaves unconstrained (a tautology, say) must
    // still be decided for the weight to be FI.
    second.set_minimize_filter([&](const Assignment& a) { return is_fi(restrict_weight(w, a)); });
    while (auto nu = second.next()) {
      WeightTerm wl = restrict_weight(w, *nu);
      if (!is_fi(wl)) throw std::logic_error("weight not condition-free under " + merge(mu, *nu).to_string());
      ints.add(merge(mu, *nu), nu->literals(), wl, mult);
    }
  }
  return r;
}

WmiResult run_algorithm(Algorithm a, const Problem& p, const WmiOptions& opt) {
  switch (a) {
    case Algorithm::BruteForce: return wmi_bruteforce(p, opt);
    case Algorithm::PA: return wmi_pa(p, opt);
    case Algorithm::SA: return sa_wmi_pa(p, opt);
  }
  throw std::invalid_argument("unknown algorithm");
}

Problem support_conjoin(const Problem& p, const Formula& support) {
  Problem q = p;
  q.phi = Formula::land({p.phi, support});
  return q;
}

std::string result_to_json(const WmiResult& r, Algorithm a) {
  nlohmann::ordered_json j;
  j["algorithm"] = algorithm_name(a);
  j["value"] = to_string(r.value);
  j["n_integrals"] = r.n_integrals;
  j["n_assignments"] = r.n_assignments;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : r.log) {
    nlohmann::ordered_json row;
    auto lits = nlohmann::ordered_json::array();
    for (const auto& l : e.assignment.literals()) lits.push_back(literal_to_string(l));
    row["assignment"] = lits;
    row["multiplier"] = e.multiplier;
    row["integral"] = to_string(e.integral);
    entries.push_back(row);
  }
  j["log"] = entries;
  return j.dump(2) + "\n";
}

}  // namespace wmi
