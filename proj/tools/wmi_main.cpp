// wmi: command-line front end for the weighted model integration engine.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wmi/bench.hpp"
#include "wmi/det.hpp"
#include "wmi/engine.hpp"
#include "wmi/generator.hpp"
#include "wmi/problem_io.hpp"
#include "wmi/skeleton.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::vector<wmi::Algorithm> parse_algorithms(const std::string& list) {
  std::vector<wmi::Algorithm> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(wmi::parse_algorithm(item));
  if (out.empty()) throw std::invalid_argument("no algorithm given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted model integration by predicate abstraction"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Compute the weighted model integral of a problem file");
  std::string solve_file, algo = "sa", log_json;
  bool dump_skeleton = false, cache = false;
  double solve_timeout = 0;
  solve->add_option("file", solve_file, "Problem file")->required();
  solve->add_option("--algo", algo, "bf, pa or sa")->check(CLI::IsMember({"bf", "pa", "sa"}));
  solve->add_flag("--dump-skeleton", dump_skeleton, "Print the skeleton encoding of the weight");
  solve->add_option("--log-json", log_json, "Write value, counts and per-assignment log as JSON");
  solve->add_flag("--cache", cache, "Reuse integrals of identical regions and weights");
  solve->add_option("--timeout", solve_timeout, "Seconds before giving up (0: none)");

  auto* gen = app.add_subcommand("gen", "Generate random benchmark problems");
  wmi::GenConfig cfg;
  unsigned count = 1;
  std::string out_dir;
  gen->add_option("--depth", cfg.depth, "Tree depth")->required();
  gen->add_option("--bools", cfg.n_bool, "Number of Boolean variables")->required();
  gen->add_option("--reals", cfg.n_real, "Number of real variables")->required();
  gen->add_option("--seed", cfg.seed, "Seed of the first problem")->required();
  gen->add_option("--count", count, "Number of problems");
  gen->add_option("--out-dir", out_dir, "Output directory")->required();
  gen->add_option("--branching", cfg.branching, "Children per connective");
  gen->add_option("--degree", cfg.poly_degree, "Maximum degree of leaf polynomials");

  auto* det = app.add_subcommand("det", "Query a density estimation tree");
  std::string det_file, query;
  double h = -1;
  std::uint64_t det_seed = 0;
  det->add_option("model", det_file, "DET model (JSON)")->required();
  auto* q_opt = det->add_option("--query", query, "Query formula");
  auto* h_opt = det->add_option("--H", h, "Random query over max(1, floor(H*|x|)) reals")->check(CLI::Range(0.0, 1.0));
  det->add_option("--seed", det_seed, "Seed for the random query");
  q_opt->excludes(h_opt);

  auto* bench = app.add_subcommand("bench", "Run algorithms over a directory of problems");
  std::string bench_dir, algos = "pa,sa", csv;
  double timeout = 1200;
  bool deterministic = false;
  bench->add_option("--dir", bench_dir, "Directory of .wmi files")->required();
  bench->add_option("--algos", algos, "Comma-separated list of bf, pa, sa");
  bench->add_option("--timeout", timeout, "Seconds per run (0: none)");
  bench->add_option("--csv", csv, "Output CSV (default: stdout)");
  bench->add_flag("--deterministic", deterministic, "Write 0 in the seconds column");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      wmi::Problem p = wmi::parse_problem(read_file(solve_file));
      if (dump_skeleton) std::cout << wmi::encode_skeleton(p.weight).dump() << "\n";
      wmi::WmiOptions opt;
      opt.log = !log_json.empty();
      opt.cache_integrals = cache;
      if (solve_timeout > 0) opt.deadline = wmi::Deadline::after(std::chrono::duration<double>(solve_timeout));
      wmi::Algorithm a = wmi::parse_algorithm(algo);
      wmi::WmiResult r = wmi::run_algorithm(a, p, opt);
      std::cout << "value " << wmi::to_string(r.value) << "\n"
                << "n_integrals " << r.n_integrals << "\n"
                << "n_assignments " << r.n_assignments << "\n";
      if (!log_json.empty()) write_file(log_json, wmi::result_to_json(r, a));
    } else if (*gen) {
      for (const auto& path : wmi::write_problems(cfg, count, out_dir)) std::cout << path << "\n";
    } else if (*det) {
      wmi::DetModel m = wmi::parse_det(read_file(det_file));
      wmi::Formula f;
      if (!query.empty()) {
        f = wmi::parse_formula(query, m.problem());
      } else if (h >= 0) {
        wmi::Rng rng(det_seed);
        f = wmi::gen_query(m, h, rng);
      } else {
        throw std::invalid_argument("give --query or --H");
      }
      wmi::Rational pr = wmi::det_query(m, f);
      std::cout << "query " << f.to_string() << "\n"
                << "probability " << wmi::to_string(pr) << "\n";
    } else if (*bench) {
      wmi::BenchOptions opt;
      opt.algorithms = parse_algorithms(algos);
      opt.timeout_s = timeout;
      opt.deterministic = deterministic;
      auto rows = wmi::run_bench(wmi::load_problem_dir(bench_dir), opt);
      for (const auto& r : rows)
        if (r.status == "error") std::cerr << r.problem << " [" << r.algorithm << "]: " << r.message << "\n";
      std::string text = wmi::bench_csv(rows, deterministic);
      if (csv.empty())
        std::cout << text;
      else
        write_file(csv, text);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
