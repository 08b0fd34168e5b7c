// Copyright 2026 The thermoclock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef THERMOCLOCK_RUNNER_HPP
#define THERMOCLOCK_RUNNER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thermoclock {

// Bad configuration: unknown experiment, missing or malformed parameter,
// unwritable output path.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Experiment {
  entropy_bounds,
  perturbation,
  clock_scaling,
  thm1_chain,
  thm2_bound,
  thm3_bound,
  nogo,
  momentum_delta,
  embezzle_formula,
};

std::string_view to_string(Experiment e);
std::optional<Experiment> experiment_from_string(std::string_view s);
const std::vector<Experiment>& all_experiments();

// Flat key=value configuration:
//   experiment=<name>
//   seed=<u64>            (optional, default 0)
//   output=<path>         (optional)
//   param.<name>=<value>  (sequences comma-separated)
// Blank lines and lines starting with '#' are ignored.
struct ExperimentConfig {
  Experiment experiment = Experiment::embezzle_formula;
  std::map<std::string, std::string> params;
  std::string output_path;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;  // set per sweep point

  static ExperimentConfig parse(std::string_view text);
  static ExperimentConfig load(const std::string& path);

  bool has(const std::string& name) const { return params.count(name) != 0; }
  double number(const std::string& name, std::optional<double> fallback = std::nullopt) const;
  int integer(const std::string& name, std::optional<int> fallback = std::nullopt) const;
  std::vector<double> numbers(const std::string& name,
                              std::optional<std::vector<double>> fallback = std::nullopt) const;

  // Canonical text (sorted parameters, no output path) and its FNV-1a hash.
  std::string canonical() const;
  std::uint64_t hash() const;
};

struct ResultRecord {
  std::size_t row = 0;
  std::vector<double> values;  // aligned with RunResult::columns
  bool is_bound = false;
  double lhs = 0.0, rhs = 0.0;
  bool pass = true;
  double margin() const { return rhs - lhs; }
};

struct RunResult {
  Experiment experiment{};
  std::uint64_t config_hash = 0;
  std::vector<std::string> columns;
  std::vector<ResultRecord> records;
  // set for merged sweeps
  std::optional<std::string> sweep_axis;
  std::vector<double> sweep_values;  // one per record

  int bounds_total() const;
  int bounds_passed() const;
  bool ok() const { return bounds_passed() == bounds_total(); }
  std::string summary_line() const;  // "PASS k/n"
  std::string to_csv() const;
};

// Fixed per-experiment columns, excluding the common prefix
// (experiment, config_hash, row) and suffix (is_bound, lhs, rhs, margin, pass).
const std::vector<std::string>& experiment_columns(Experiment e);

RunResult run(const ExperimentConfig& config);
RunResult sweep(const ExperimentConfig& base, const std::string& axis,
                const std::vector<std::string>& values, int threads = 1);

// --threads absent: THERMOCLOCK_THREADS, then 1.
int resolve_threads(std::optional<int> flag);

void write_text(const std::string& path, const std::string& text);

namespace experiments {
// Each appends records to `out` (columns already set).
void entropy_bounds(const ExperimentConfig& c, RunResult& out);
void perturbation(const ExperimentConfig& c, RunResult& out);
void clock_scaling(const ExperimentConfig& c, RunResult& out);
void thm1_chain(const ExperimentConfig& c, RunResult& out);
void thm2_bound(const ExperimentConfig& c, RunResult& out);
void thm3_bound(const ExperimentConfig& c, RunResult& out);
void nogo(const ExperimentConfig& c, RunResult& out);
void momentum_delta(const ExperimentConfig& c, RunResult& out);
void embezzle_formula(const ExperimentConfig& c, RunResult& out);
}  // namespace experiments

}  // namespace thermoclock

#endif  // THERMOCLOCK_RUNNER_HPP
