#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wmi/engine.hpp"

namespace wmi {

struct BenchRow {
  std::string problem;
  std::string algorithm;
  std::string status;  // ok, timeout or error
  double seconds = 0;
  std::string value;   // exact rational, empty unless ok
  std::string n_integrals;
  std::string message;  // error text, not part of the CSV
};

struct BenchOptions {
  std::vector<Algorithm> algorithms = {Algorithm::PA, Algorithm::SA};
  double timeout_s = 1200;  // <= 0 disables the limit
  /// Write a constant in the seconds column so output is reproducible.
  bool deterministic = false;
};

using NamedProblem = std::pair<std::string, Problem>;

/// Every *.wmi file of `dir`, sorted by file name.
std::vector<NamedProblem> load_problem_dir(const std::string& dir);

/// One row per (problem, algorithm), problems outer, algorithms inner.
std::vector<BenchRow> run_bench(const std::vector<NamedProblem>& problems, const BenchOptions& opt);

std::string bench_csv(const std::vector<BenchRow>& rows, bool deterministic = false);

}  // namespace wmi
