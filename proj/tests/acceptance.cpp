// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "wmi/bench.hpp"
#include "wmi/det.hpp"
#include "wmi/engine.hpp"
#include "wmi/generator.hpp"
#include "wmi/integrate.hpp"
#include "wmi/problem_io.hpp"
#include "wmi/skeleton.hpp"
#include "wmi/theory.hpp"

using namespace wmi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string str(std::size_t n) { return std::to_string(n); }

// Criterion 3 and 4 instances: D <= 3, |A| <= 3, |x| <= 3, degree <= 2.
GenConfig random_config(std::uint64_t i) {
  GenConfig cfg;
  cfg.seed = 1000 + i;
  cfg.depth = 1 + i % 3;
  cfg.n_bool = i % 4;
  cfg.n_real = 1 + (i / 4) % 3;
  cfg.poly_degree = 2;
  return cfg;
}

Outcome example1_counts() {
  Outcome o;
  Problem p = fixtures::example1();
  WmiOptions opt;
  opt.log = true;
  auto pa = wmi_pa(p, opt);
  auto sa = sa_wmi_pa(p, opt);
  std::multiset<std::uint64_t> mult;
  for (const auto& e : sa.log) mult.insert(e.multiplier);
  o.require(pa.n_integrals == 24, "PA integrals " + str(pa.n_integrals));
  o.require(sa.n_integrals == 6, "SA integrals " + str(sa.n_integrals));
  o.require(mult == std::multiset<std::uint64_t>{1, 1, 2, 2, 2, 2}, "SA multipliers differ");
  o.require(pa.value == sa.value, "PA and SA values differ");
  o.detail = "pa=" + str(pa.n_integrals) + " sa=" + str(sa.n_integrals) + " multipliers {2,2,2,2,1,1}";
  return o;
}

Outcome example3_abstraction() {
  Outcome o;
  Problem p = fixtures::example3();
  Assignment mu;
  mu.set(Atom::boolean("A2"), true);
  auto m = sa_complete_boolean(sa_formula(p), mu);
  Assignment a, b;
  a.set(Atom::boolean("A2"), true);
  a.set(Atom::boolean("A3"), true);
  b.set(Atom::boolean("A2"), true);
  b.set(Atom::boolean("A3"), false);
  o.require(m.size() == 2 && std::set<Assignment>(m.begin(), m.end()) == std::set<Assignment>{a, b},
            "completion of {A2} is not {{A2,A3},{A2,!A3}}");
  o.require(sa_wmi_pa(p).value == wmi_bruteforce(p).value, "SA value differs from brute force");
  if (o.pass) o.detail = "M = {{A2,A3},{A2,!A3}}";
  return o;
}

struct RandomRuns {
  std::size_t instances = 0, nonzero = 0, dominated = 0, strictly = 0;
  std::string mismatch;
};

RandomRuns run_random_instances() {
  RandomRuns r;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Problem p = gen_problem(random_config(i));
    auto bf = wmi_bruteforce(p);
    auto pa = wmi_pa(p);
    auto sa = sa_wmi_pa(p);
    ++r.instances;
    if (!(bf.value == pa.value && pa.value == sa.value) && r.mismatch.empty())
      r.mismatch = "seed " + std::to_string(random_config(i).seed) + ": bf=" + to_string(bf.value) +
                   " pa=" + to_string(pa.value) + " sa=" + to_string(sa.value);
    if (sa.value != 0) ++r.nonzero;
    if (sa.n_integrals <= pa.n_integrals) ++r.dominated;
    if (sa.n_integrals < pa.n_integrals) ++r.strictly;
  }
  return r;
}

Outcome skeleton_properties() {
  Outcome o;
  oracle::Gen g(7);
  std::size_t checked = 0, sa_entries = 0;
  for (std::uint64_t seed = 1; seed <= 100 && o.pass; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.depth = 1 + seed % 4;
    cfg.n_bool = 1 + seed % 3;
    cfg.n_real = 1 + seed % 2;
    Rng rng(seed);
    WeightTerm w = gen_weight(cfg, rng);
    auto enc = encode_skeleton(w);
    const std::size_t k = count_ite(w);
    const std::string at = "weight " + std::to_string(seed) + ": ";
    o.require(enc.defs.size() == 3 * k + 1, at + "clause count " + str(enc.defs.size()));
    AtomSet conds = atoms_of(w);
    for (int trial = 0; trial < 50 && k > 0; ++trial) {
      Assignment nu = props::random_total(conds, cfg.real_names(), g);
      auto c = props::check_chain(w, enc, nu);
      o.require(c.defs_sat, at + "definitions unsatisfiable");
      o.require(c.ok(), at + "selected chain differs from the weight tree");
      ++checked;
    }

    // Every partial assignment SA integrates over pins one FI piece.
    Problem p;
    p.reals = cfg.real_names();
    p.bools = cfg.bool_names();
    p.phi = Formula::top();
    std::vector<Formula> bounds;
    for (const auto& x : p.reals) {
      auto v = LinearTerm::variable(x);
      bounds.push_back(Formula::literal(std::get<Literal>(make_lra_literal(v, RelOp::Ge, LinearTerm::constant_term(-1)))));
      bounds.push_back(Formula::literal(std::get<Literal>(make_lra_literal(v, RelOp::Le, LinearTerm::constant_term(1)))));
    }
    p.chi = Formula::land(bounds);
    p.weight = w;
    WmiOptions opt;
    opt.log = true;
    for (const auto& e : sa_wmi_pa(p, opt).log) {
      o.require(is_fi(restrict_weight(w, e.assignment)), at + "SA assignment leaves conditions open");
      ++sa_entries;
    }
  }
  if (o.pass)
    o.detail = str(checked) + " total assignments checked, " + str(sa_entries) + " SA assignments pin FI weights";
  return o;
}

Outcome support_invariance() {
  Outcome o;
  for (std::uint64_t seed = 1; seed <= 20 && o.pass; ++seed) {
    GenConfig cfg;
    cfg.seed = 500 + seed;
    cfg.depth = 1 + seed % 2;
    cfg.n_bool = 2;
    cfg.n_real = 1 + seed % 2;
    Problem p = gen_problem(cfg);
    Rng rng(seed);
    Formula zero = seed % 2 ? gen_inequality(p.reals, cfg.coeff_bound, rng) : Formula::atom(Atom::boolean("A1"));
    p.weight = WeightTerm::ite(zero, WeightTerm::constant(0), p.weight);
    Problem q = support_conjoin(p, Formula::lnot(zero));
    Rational ref = wmi_bruteforce(p).value;
    for (auto a : {Algorithm::BruteForce, Algorithm::PA, Algorithm::SA}) {
      o.require(run_algorithm(a, p).value == ref, "seed " + std::to_string(seed) + ": algorithms disagree");
      o.require(run_algorithm(a, q).value == ref,
                "seed " + std::to_string(seed) + ": support changed the " + algorithm_name(a) + " value");
    }
  }
  if (o.pass) o.detail = "20 problems x 3 algorithms unchanged";
  return o;
}

Outcome integrator_golden() {
  Outcome o;
  using props::box;
  SimplexCell std2{{{0, 0}, {1, 0}, {0, 1}}};
  o.require(integrate_simplex(Polynomial::constant({"x", "y"}, 1), std2) == Rational(1, 2), "unit simplex");
  SimplexCell seg{{{0}, {1}}};
  o.require(integrate_simplex(Polynomial::variable({"x"}, "x"), seg) == Rational(1, 2), "x over [0,1]");
  auto unit = box({0, 0}, {1, 1});
  Polynomial x1x2 = Polynomial::variable(unit.vars, "x1") * Polynomial::variable(unit.vars, "x2");
  o.require(integrate_polytope(x1x2, unit) == Rational(1, 4), "x1*x2 over the unit square");
  o.require(integrate_polytope(Polynomial::constant(unit.vars, 1), box({0, 0}, {2, 3})) == 6, "box area");
  o.require(integrate_polytope(Polynomial::constant({"x1", "x2", "x3"}, 1), box({0, 0, 0}, {1, 2, 3})) == 6,
            "box volume");

  oracle::Gen g(31);
  for (int i = 0; i < 30; ++i) {
    std::size_t d = 1 + i % 3;
    auto b = props::random_box(d, g);
    std::vector<unsigned> e;
    std::vector<Rational> lo, hi;
    for (std::size_t k = 0; k < d; ++k) {
      e.push_back(static_cast<unsigned>(g.range(0, 3)));
      lo.push_back(-b.halfspaces[2 * k].b);
      hi.push_back(b.halfspaces[2 * k + 1].b);
    }
    Polynomial m(b.vars);
    m.add_term(e, 1);
    o.require(integrate_polytope(m, b) == oracle::box_monomial(e, lo, hi), "box monomial " + std::to_string(i));
  }
  for (int i = 0; i < 50; ++i) {
    auto b = props::random_box(2 + i % 2, g);
    o.require(props::split_additive(props::random_poly(b.vars, 3, g), b, g), "additivity on box " + std::to_string(i));
  }
  std::mt19937_64 eng(2024);
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    auto p = props::random_polytope(2 + i % 2, g);
    auto mc = props::monte_carlo(props::random_poly(p.vars, 3, g), p, eng, 40000);
    if (mc.std_error > 0) worst = std::max(worst, std::abs(mc.exact - mc.estimate) / mc.std_error);
    o.require(mc.within(3), "Monte Carlo mismatch on polytope " + std::to_string(i));
  }
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "golden values exact, 50 splits additive, worst MC deviation %.2f SE", worst);
    o.detail = buf;
  }
  return o;
}

Outcome theory_vs_fm() {
  Outcome o;
  oracle::Gen g(8);
  std::size_t unsat = 0;
  for (int i = 0; i < 500; ++i) {
    std::vector<std::string> vars;
    for (long k = 0, n = g.range(1, 6); k < n; ++k) vars.push_back("v" + std::to_string(k));
    std::vector<Literal> lits;
    for (long k = 0, n = g.range(1, 10); k < n; ++k)
      if (auto l = props::random_lra(g, vars)) lits.push_back(*l);
    bool sat = check_theory(lits).sat();
    o.require(sat == oracle::lra_feasible(lits, vars), "disagreement on conjunction " + std::to_string(i));
    unsat += !sat;
  }
  if (o.pass) o.detail = "500/500 agree (" + str(unsat) + " unsat)";
  return o;
}

Outcome det_sanity() {
  Outcome o;
  auto query = [](const DetModel& m, const char* text) { return det_query(m, parse_formula(text, m.problem())); };
  DetModel u = parse_det(R"({"reals":[{"name":"x","lower":"0","upper":"1"}],"root":{"density":"1"}})");
  o.require(query(u, "(<= x 1/2)") == Rational(1, 2), "uniform interval");
  DetModel sq = parse_det(
      R"({"reals":[{"name":"x","lower":"0","upper":"1"},{"name":"y","lower":"0","upper":"1"}],"root":{"density":"1"}})");
  o.require(query(sq, "(<= x y)") == Rational(1, 2), "uniform square");
  DetModel two = parse_det(R"({"reals":[{"name":"x","lower":"0","upper":"2"}],
    "root":{"split":{"var":"x","threshold":"1"},"left":{"density":"1/4"},"right":{"density":"3/4"}}})");
  o.require(query(two, "(>= x 1)") == Rational(3, 4), "two-leaf model");
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    DetModel m = random_det(rng, 1 + i % 3, i % 2, 1 + i % 3);
    o.require(det_query(m, Formula::top()) == 1, "random DET " + std::to_string(i));
  }
  if (o.pass) o.detail = "1/2, 1/2, 3/4 exact; Pr(true) = 1 on 20 random DETs";
  return o;
}

Outcome determinism() {
  Outcome o;
  std::vector<NamedProblem> probs;
  for (std::uint64_t i = 0; i < 12; ++i) {
    GenConfig cfg = random_config(i);
    probs.push_back({"problem_" + std::to_string(cfg.seed), gen_problem(cfg)});
  }
  BenchOptions bo;
  bo.algorithms = {Algorithm::BruteForce, Algorithm::PA, Algorithm::SA};
  bo.deterministic = true;
  std::string csv1 = bench_csv(run_bench(probs, bo), true);
  std::string csv2 = bench_csv(run_bench(probs, bo), true);
  o.require(csv1 == csv2, "CSV differs between runs");

  WmiOptions opt;
  opt.log = true;
  std::size_t bytes = 0;
  for (const auto& [name, p] : probs)
    for (auto a : bo.algorithms) {
      std::string j1 = result_to_json(run_algorithm(a, p, opt), a);
      std::string j2 = result_to_json(run_algorithm(a, p, opt), a);
      o.require(j1 == j2, "JSON log differs for " + name);
      bytes += j1.size();
    }
  if (o.pass) o.detail = "CSV (" + str(csv1.size()) + " bytes) and JSON logs (" + str(bytes) + " bytes) identical";
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  int failures = 0;
  auto report = [&](int n, double limit_s, const std::function<Outcome()>& body) {
    auto t0 = clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2d: %s  %s [%.1fs]\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
  };

  report(1, 5, example1_counts);
  report(2, 1, example3_abstraction);

  RandomRuns runs;
  report(3, 600, [&] {
    Outcome o;
    runs = run_random_instances();
    o.require(runs.mismatch.empty(), runs.mismatch);
    if (o.pass) o.detail = str(runs.instances) + " instances equal (" + str(runs.nonzero) + " nonzero)";
    return o;
  });
  report(4, 0, [&] {
    Outcome o;
    o.require(runs.instances == 200, "random instances did not run");
    o.require(runs.dominated == runs.instances, str(runs.instances - runs.dominated) + " instances where SA integrates more");
    auto ex = fixtures::example1();
    o.require(sa_wmi_pa(ex).n_integrals < wmi_pa(ex).n_integrals, "no strict gain on example 1");
    if (o.pass)
      o.detail = str(runs.dominated) + "/200 dominated, " + str(runs.strictly) + " strictly fewer, example 1 6 < 24";
    return o;
  });
  report(5, 300, skeleton_properties);
  report(6, 0, support_invariance);
  report(7, 0, integrator_golden);
  report(8, 120, theory_vs_fm);
  report(9, 0, det_sanity);
  report(10, 0, determinism);

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
