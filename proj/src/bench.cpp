#include "wmi/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wmi/errors.hpp"
#include "wmi/problem_io.hpp"

namespace wmi {

std::vector<NamedProblem> load_problem_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".wmi") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedProblem> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw std::runtime_error("cannot read " + f.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      out.emplace_back(f.filename().string(), parse_problem(ss.str()));
    } catch (const ParseError& e) {
      throw std::runtime_error(f.string() + ":" + e.what());
    }
  }
  return out;
}

std::vector<BenchRow> run_bench(const std::vector<NamedProblem>& problems, const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  for (const auto& [name, problem] : problems) {
    for (Algorithm a : opt.algorithms) {
      BenchRow row{name, algorithm_name(a), "ok", 0, "", "", ""};
      WmiOptions wopt;
      if (opt.timeout_s > 0) wopt.deadline = Deadline::after(std::chrono::duration<double>(opt.timeout_s));
      auto start = std::chrono::steady_clock::now();
      try {
        WmiResult r = run_algorithm(a, problem, wopt);
        row.value = to_string(r.value);
        row.n_integrals = std::to_string(r.n_integrals);
      } catch (const Timeout&) {
        row.status = "timeout";
      } catch (const std::exception& e) {
        row.status = "error";
        row.message = e.what();
      }
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool deterministic) {
  std::string out = "problem,algorithm,status,seconds,value,n_integrals\n";
  for (const auto& r : rows) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.6f", deterministic ? 0.0 : r.seconds);
    out += r.problem + "," + r.algorithm + "," + r.status + "," + secs + "," + r.value + "," + r.n_integrals + "\n";
  }
  return out;
}

}  // namespace wmi
