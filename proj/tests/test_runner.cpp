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


#include <doctest.h>

#include <algorithm>
#include <string>

#include "thermoclock/runner.hpp"

using namespace thermoclock;

namespace {

ExperimentConfig cfg(const std::string& text) { return ExperimentConfig::parse(text); }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("config parsing") {
  const ExperimentConfig c = cfg("# comment\nexperiment = nogo\nseed=5\n\nparam.d_cl = 8\nparam.t1=pi\n");
  CHECK(c.experiment == Experiment::nogo);
  CHECK(c.seed == 5);
  CHECK(c.integer("d_cl") == 8);
  CHECK(c.number("t1") == doctest::Approx(3.141592653589793));
  CHECK(c.number("absent", 2.5) == 2.5);
  CHECK(cfg("experiment=nogo\nparam.x=1,2,-pi").numbers("x").size() == 3);

  CHECK_THROWS_AS(cfg("seed=1\n"), ConfigError);
  CHECK_THROWS_AS(cfg("experiment=bogus\n"), ConfigError);
  CHECK_THROWS_AS(cfg("experiment=nogo\nwhatever=1\n"), ConfigError);
  CHECK_THROWS_AS(cfg("experiment=nogo\nseed=-1\n"), ConfigError);
  CHECK_THROWS_AS(cfg("experiment=nogo\nparam.x=abc").number("x"), ConfigError);
  CHECK_THROWS_AS(cfg("experiment=nogo\nparam.x=1.5").integer("x"), ConfigError);
  try {
    (void)c.number("gamma");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("gamma") != std::string::npos);
  }
  CHECK_THROWS_AS(ExperimentConfig::load("/nonexistent/x.cfg"), ConfigError);
  for (Experiment e : all_experiments()) CHECK(experiment_from_string(to_string(e)) == e);
}

TEST_CASE("config hash") {
  const ExperimentConfig a = cfg("experiment=nogo\nseed=1\nparam.a=1\nparam.b=2\n");
  const ExperimentConfig b = cfg("experiment=nogo\nparam.b=2\nseed=1\nparam.a=1\noutput=/tmp/x.csv\n");
  CHECK(a.hash() == b.hash());
  CHECK(a.hash() != cfg("experiment=nogo\nseed=2\nparam.a=1\nparam.b=2\n").hash());
  ExperimentConfig s = a;
  s.stream = 1;
  CHECK(s.hash() != a.hash());
}

TEST_CASE("run basics") {
  const RunResult r = run(cfg("experiment=embezzle_formula\nparam.d_S=2\nparam.d_Cat=4\n"));
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].values.back() == 2.0 / 3.0);
  CHECK(r.ok());
  CHECK(r.summary_line() == "PASS 1/1");
  const std::string csv = r.to_csv();
  CHECK(first_line(csv) == "experiment,config_hash,row,d_s,d_cat,value,is_bound,lhs,rhs,margin,pass");
  CHECK(csv.find("6.6666666666666663e-01") != std::string::npos);

  const RunResult empty = run(cfg("experiment=perturbation\nparam.trials=0\nparam.sigma_trials=0\n"));
  CHECK(empty.records.empty());
  CHECK(empty.ok());
  CHECK(empty.summary_line() == "PASS 0/0");

  ExperimentConfig bad = cfg("experiment=embezzle_formula\nparam.d_S=2\nparam.d_Cat=4\n");
  bad.output_path = "/nonexistent/dir/out.csv";
  CHECK_THROWS_AS(run(bad), ConfigError);
  CHECK_THROWS_AS(run(cfg("experiment=momentum_delta\nparam.times=1.5\n")), ConfigError);
}

TEST_CASE("reproducibility") {
  const ExperimentConfig c = cfg("experiment=clock_scaling\nseed=7\nparam.d_cl=8,16\n");
  CHECK(run(c).to_csv() == run(c).to_csv());
  const ExperimentConfig p = cfg("experiment=perturbation\nseed=2\nparam.trials=20\n");
  ExperimentConfig q = p;
  q.seed = 3;
  CHECK(run(p).to_csv() == run(p).to_csv());
  CHECK(run(p).to_csv() != run(q).to_csv());
}

TEST_CASE("sweeps") {
  const ExperimentConfig base = cfg("experiment=embezzle_formula\nparam.d_S=2\nparam.d_Cat=4\n");
  const RunResult one = sweep(base, "d_Cat", {"4"});
  const RunResult direct = run(base);
  REQUIRE(one.records.size() == 1);
  CHECK(one.records[0].values == direct.records[0].values);
  CHECK(first_line(one.to_csv()).find("sweep_d_Cat") != std::string::npos);

  const std::vector<std::string> vals = {"64", "4", "16", "8", "32"};
  const RunResult serial = sweep(base, "d_Cat", vals, 1);
  const RunResult parallel = sweep(base, "d_Cat", vals, 4);
  CHECK(serial.to_csv() == parallel.to_csv());
  REQUIRE(serial.records.size() == 5);
  CHECK(std::is_sorted(serial.sweep_values.begin(), serial.sweep_values.end()));
  for (std::size_t i = 1; i < serial.records.size(); ++i)
    CHECK(serial.records[i].values.back() < serial.records[i - 1].values.back());

  CHECK_THROWS_AS(sweep(base, "nope", {"1"}), ConfigError);
  CHECK_THROWS_AS(sweep(base, "d_Cat", {}), ConfigError);
  CHECK_THROWS_AS(sweep(base, "d_Cat", {"x"}), ConfigError);
}

TEST_CASE("thread resolution") {
  CHECK(resolve_threads(3) == 3);
  CHECK(resolve_threads(std::nullopt) >= 1);
}
