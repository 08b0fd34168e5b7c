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


#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thermoclock/runner.hpp"

namespace {

std::vector<std::string> split_values(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thermoclock: catalytic thermal operations with finite clocks"};
  app.require_subcommand(1);

  std::string config_path, out_path, axis, values;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;

  auto common = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "configuration file")->required();
    sub->add_option("--out", out_path, "CSV output path (overrides output= in the config)");
    sub->add_option("--seed", seed, "RNG seed (overrides seed= in the config)");
  };
  CLI::App* run_cmd = app.add_subcommand("run", "run one experiment");
  common(run_cmd);
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run one experiment over a parameter axis");
  common(sweep_cmd);
  sweep_cmd->add_option("--axis", axis, "parameter name")->required();
  sweep_cmd->add_option("--values", values, "comma-separated values")->required();
  sweep_cmd->add_option("--threads", threads, "worker threads (default THERMOCLOCK_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    thermoclock::ExperimentConfig cfg = thermoclock::ExperimentConfig::load(config_path);
    if (!out_path.empty()) cfg.output_path = out_path;
    if (seed) cfg.seed = *seed;
    const thermoclock::RunResult res =
        run_cmd->parsed()
            ? thermoclock::run(cfg)
            : thermoclock::sweep(cfg, axis, split_values(values),
                                 thermoclock::resolve_threads(threads));
    if (cfg.output_path.empty())
      std::cout << res.to_csv();
    else
      std::cout << "wrote " << cfg.output_path << "\n";
    std::cout << res.summary_line() << std::endl;
    return res.ok() ? 0 : 1;
  } catch (const thermoclock::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
