#include "wmi/generator.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "wmi/problem_io.hpp"

namespace wmi {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

std::int64_t Rng::nonzero(std::int64_t bound) {
  std::int64_t v = uniform(1, bound);
  return coin() ? v : -v;
}

void GenConfig::validate() const {
  if (n_real == 0 && n_bool == 0) throw std::invalid_argument("need at least one variable");
  if (branching < 1) throw std::invalid_argument("branching must be positive");
  if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  if (!(lower < upper)) throw std::invalid_argument("lower bound must be below upper bound");
}

std::vector<std::string> GenConfig::real_names() const {
  std::vector<std::string> out;
  for (unsigned i = 1; i <= n_real; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<std::string> GenConfig::bool_names() const {
  std::vector<std::string> out;
  for (unsigned i = 1; i <= n_bool; ++i) out.push_back("A" + std::to_string(i));
  return out;
}

Formula gen_inequality(const std::vector<std::string>& reals, std::int64_t coeff_bound, Rng& rng) {
  if (reals.empty()) throw std::invalid_argument("no real variables");
  LinearTerm lhs;
  std::int64_t spread = 0;
  for (const auto& x : reals) {
    if (!rng.coin()) continue;
    std::int64_t c = rng.nonzero(coeff_bound);
    lhs.coeffs[x] = c;
    spread += c < 0 ? -c : c;
  }
  if (lhs.coeffs.empty()) {
    std::int64_t c = rng.nonzero(coeff_bound);
    lhs.coeffs[reals[rng.index(reals.size())]] = c;
    spread = c < 0 ? -c : c;
  }
  auto lit = make_lra_literal(lhs, RelOp::Le, LinearTerm::constant_term(rng.uniform(-spread, spread)));
  if (auto* l = std::get_if<Literal>(&lit)) return Formula::literal(*l);
  return Formula::constant(std::get<bool>(lit));
}

Formula gen_formula(const GenConfig& cfg, Rng& rng, unsigned depth) {
  if (depth == 0) {
    Formula atom;
    bool boolean = cfg.n_real == 0 || (cfg.n_bool > 0 && rng.coin());
    if (boolean)
      atom = Formula::atom(Atom::boolean("A" + std::to_string(rng.uniform(1, cfg.n_bool))));
    else
      atom = gen_inequality(cfg.real_names(), cfg.coeff_bound, rng);
    return rng.coin() ? Formula::lnot(atom) : atom;
  }
  std::int64_t op = rng.uniform(0, 3);
  std::vector<Formula> kids;
  for (unsigned q = 0; q < cfg.branching; ++q) kids.push_back(gen_formula(cfg, rng, depth - 1));
  Formula f = op % 2 == 0 ? Formula::lor(std::move(kids)) : Formula::land(std::move(kids));
  return op >= 2 ? Formula::lnot(f) : f;
}

Formula gen_formula(const GenConfig& cfg, Rng& rng) { return gen_formula(cfg, rng, cfg.depth); }

WeightTerm gen_polynomial(const GenConfig& cfg, Rng& rng) {
  const auto reals = cfg.real_names();
  // Monomials of degree <= poly_degree as exponent vectors.
  std::vector<std::vector<unsigned>> monos = {std::vector<unsigned>(reals.size(), 0)};
  for (unsigned d = 1; d <= cfg.poly_degree; ++d) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& m : monos) {
      unsigned deg = 0;
      std::size_t last = 0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        deg += m[i];
        if (m[i]) last = i;
      }
      if (deg != d - 1) continue;
      for (std::size_t i = deg == 0 ? 0 : last; i < m.size(); ++i) {
        auto n = m;
        ++n[i];
        next.push_back(n);
      }
    }
    monos.insert(monos.end(), next.begin(), next.end());
  }
  WeightTerm sum;
  bool any = false;
  for (const auto& m : monos) {
    if (rng.uniform(0, 2) != 0) continue;
    WeightTerm t = WeightTerm::constant(rng.nonzero(cfg.coeff_bound));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) t = WeightTerm::binop(TKind::Mul, t, WeightTerm::var(reals[i]));
    sum = any ? WeightTerm::binop(TKind::Add, sum, t) : t;
    any = true;
  }
  if (!any) sum = WeightTerm::constant(rng.uniform(1, cfg.coeff_bound));
  return sum;
}

WeightTerm gen_weight(const GenConfig& cfg, Rng& rng, unsigned depth) {
  if (depth == 0) return gen_polynomial(cfg, rng);
  if (rng.coin()) {
    Formula cond = gen_formula(cfg, rng, depth);
    WeightTerm a = gen_weight(cfg, rng, depth - 1);
    WeightTerm b = gen_weight(cfg, rng, depth - 1);
    return WeightTerm::ite(cond, a, b);
  }
  WeightTerm a = gen_weight(cfg, rng, depth - 1);
  WeightTerm b = gen_weight(cfg, rng, depth - 1);
  return WeightTerm::binop(rng.coin() ? TKind::Add : TKind::Mul, a, b);
}

WeightTerm gen_weight(const GenConfig& cfg, Rng& rng) { return gen_weight(cfg, rng, cfg.depth); }

Problem gen_problem(const GenConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  Problem p;
  p.reals = cfg.real_names();
  p.bools = cfg.bool_names();
  std::vector<Formula> chi = {gen_formula(cfg, rng)};
  for (const auto& x : p.reals) {
    auto lo = make_lra_literal(LinearTerm::variable(x), RelOp::Ge, LinearTerm::constant_term(cfg.lower));
    auto hi = make_lra_literal(LinearTerm::variable(x), RelOp::Le, LinearTerm::constant_term(cfg.upper));
    chi.push_back(Formula::literal(std::get<Literal>(lo)));
    chi.push_back(Formula::literal(std::get<Literal>(hi)));
  }
  p.chi = Formula::land(std::move(chi));
  p.weight = gen_weight(cfg, rng);
  p.phi = gen_formula(cfg, rng);
  return p;
}

std::vector<std::string> write_problems(const GenConfig& cfg, unsigned count, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  for (unsigned i = 0; i < count; ++i) {
    GenConfig c = cfg;
    c.seed = cfg.seed + i;
    auto path = (std::filesystem::path(dir) / ("problem_" + std::to_string(c.seed) + ".wmi")).string();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_problem(gen_problem(c));
    if (!out) throw std::runtime_error("cannot write " + path);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace wmi
