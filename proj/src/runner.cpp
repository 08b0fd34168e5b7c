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


#include "thermoclock/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

namespace thermoclock {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& name, const std::string& text) {
  const std::string t = trim(text);
  if (t == "pi") return 3.141592653589793;
  if (t == "-pi") return -3.141592653589793;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE)
    throw ConfigError("parameter '" + name + "': not a number: '" + t + "'");
  return v;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string hex64(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::entropy_bounds: return "entropy_bounds";
    case Experiment::perturbation: return "perturbation";
    case Experiment::clock_scaling: return "clock_scaling";
    case Experiment::thm1_chain: return "thm1_chain";
    case Experiment::thm2_bound: return "thm2_bound";
    case Experiment::thm3_bound: return "thm3_bound";
    case Experiment::nogo: return "nogo";
    case Experiment::momentum_delta: return "momentum_delta";
    case Experiment::embezzle_formula: return "embezzle_formula";
  }
  return "?";
}

const std::vector<Experiment>& all_experiments() {
  static const std::vector<Experiment> all = {
      Experiment::entropy_bounds, Experiment::perturbation,   Experiment::clock_scaling,
      Experiment::thm1_chain,     Experiment::thm2_bound,     Experiment::thm3_bound,
      Experiment::nogo,           Experiment::momentum_delta, Experiment::embezzle_formula};
  return all;
}

std::optional<Experiment> experiment_from_string(std::string_view s) {
  for (Experiment e : all_experiments())
    if (to_string(e) == s) return e;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
  ExperimentConfig c;
  bool have_experiment = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
    if (key == "experiment") {
      const auto e = experiment_from_string(value);
      if (!e) throw ConfigError("unknown experiment '" + value + "'");
      c.experiment = *e;
      have_experiment = true;
    } else if (key == "seed") {
      char* end = nullptr;
      c.seed = std::strtoull(value.c_str(), &end, 10);
      if (value.empty() || value[0] == '-' || end != value.c_str() + value.size())
        throw ConfigError("seed: not an unsigned integer: '" + value + "'");
    } else if (key == "output") {
      c.output_path = value;
    } else if (key.rfind("param.", 0) == 0 && key.size() > 6) {
      c.params[key.substr(6)] = value;
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_experiment) throw ConfigError("missing 'experiment=' line");
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

double ExperimentConfig::number(const std::string& name, std::optional<double> fallback) const {
  const auto it = params.find(name);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw ConfigError("missing parameter '" + name + "'");
  }
  return parse_double(name, it->second);
}

int ExperimentConfig::integer(const std::string& name, std::optional<int> fallback) const {
  const double v = number(name, fallback ? std::optional<double>(*fallback) : std::nullopt);
  if (v != static_cast<double>(static_cast<long long>(v)))
    throw ConfigError("parameter '" + name + "': expected an integer");
  return static_cast<int>(v);
}

std::vector<double> ExperimentConfig::numbers(const std::string& name,
                                              std::optional<std::vector<double>> fallback) const {
  const auto it = params.find(name);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw ConfigError("missing parameter '" + name + "'");
  }
  std::vector<double> out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(name, item));
  return out;
}

std::string ExperimentConfig::canonical() const {
  std::ostringstream os;
  os << "experiment=" << to_string(experiment) << "\n";
  os << "seed=" << seed << "\n";
  os << "stream=" << stream << "\n";
  for (const auto& [k, v] : params) os << "param." << k << "=" << v << "\n";
  return os.str();
}

std::uint64_t ExperimentConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------

int RunResult::bounds_total() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(),
                                        [](const ResultRecord& r) { return r.is_bound; }));
}

int RunResult::bounds_passed() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const ResultRecord& r) {
    return r.is_bound && r.pass;
  }));
}

std::string RunResult::summary_line() const {
  return "PASS " + std::to_string(bounds_passed()) + "/" + std::to_string(bounds_total());
}

std::string RunResult::to_csv() const {
  std::ostringstream os;
  os << "experiment,config_hash";
  if (sweep_axis) os << ",sweep_" << *sweep_axis;
  os << ",row";
  for (const auto& c : columns) os << "," << c;
  os << ",is_bound,lhs,rhs,margin,pass\n";
  const std::string exp(to_string(experiment)), hash = hex64(config_hash);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    os << exp << "," << hash;
    if (sweep_axis) os << "," << format_double(sweep_values[i]);
    os << "," << r.row;
    for (double v : r.values) os << "," << format_double(v);
    if (r.is_bound)
      os << ",1," << format_double(r.lhs) << "," << format_double(r.rhs) << ","
         << format_double(r.margin()) << "," << (r.pass ? 1 : 0) << "\n";
    else
      os << ",0,,,,\n";
  }
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot write output file '" + path + "'");
  f << text;
  if (!f) throw ConfigError("cannot write output file '" + path + "'");
}

// ---------------------------------------------------------------------------

RunResult run(const ExperimentConfig& config) {
  RunResult out;
  out.experiment = config.experiment;
  out.config_hash = config.hash();
  out.columns = experiment_columns(config.experiment);
  switch (config.experiment) {
    case Experiment::entropy_bounds: experiments::entropy_bounds(config, out); break;
    case Experiment::perturbation: experiments::perturbation(config, out); break;
    case Experiment::clock_scaling: experiments::clock_scaling(config, out); break;
    case Experiment::thm1_chain: experiments::thm1_chain(config, out); break;
    case Experiment::thm2_bound: experiments::thm2_bound(config, out); break;
    case Experiment::thm3_bound: experiments::thm3_bound(config, out); break;
    case Experiment::nogo: experiments::nogo(config, out); break;
    case Experiment::momentum_delta: experiments::momentum_delta(config, out); break;
    case Experiment::embezzle_formula: experiments::embezzle_formula(config, out); break;
  }
  for (std::size_t i = 0; i < out.records.size(); ++i) out.records[i].row = i;
  if (!config.output_path.empty()) write_text(config.output_path, out.to_csv());
  return out;
}

RunResult sweep(const ExperimentConfig& base, const std::string& axis,
                const std::vector<std::string>& values, int threads) {
  if (!base.has(axis)) throw ConfigError("sweep axis '" + axis + "' is not a parameter of the config");
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  std::vector<double> axis_values;
  for (const auto& v : values) axis_values.push_back(parse_double(axis, v));

  const std::size_t n = values.size();
  std::vector<RunResult> results(n);
  std::vector<std::string> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      ExperimentConfig c = base;
      c.params[axis] = values[i];
      c.stream = i;
      c.output_path.clear();
      try {
        results[i] = run(c);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const int nt = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (nt == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (!e.empty()) throw ConfigError(e);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return axis_values[a] < axis_values[b]; });

  RunResult merged;
  merged.experiment = base.experiment;
  merged.config_hash = base.hash();
  merged.columns = experiment_columns(base.experiment);
  merged.sweep_axis = axis;
  for (std::size_t i : order)
    for (const auto& r : results[i].records) {
      merged.records.push_back(r);
      merged.sweep_values.push_back(axis_values[i]);
    }
  if (!base.output_path.empty()) write_text(base.output_path, merged.to_csv());
  return merged;
}

int resolve_threads(std::optional<int> flag) {
  if (flag) return std::max(1, *flag);
  if (const char* env = std::getenv("THERMOCLOCK_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

}  // namespace thermoclock
