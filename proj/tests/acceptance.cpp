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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thermoclock/dynamics.hpp"
#include "thermoclock/prob_entropy.hpp"
#include "thermoclock/runner.hpp"

#ifndef THERMOCLOCK_CONFIG_DIR
#error "THERMOCLOCK_CONFIG_DIR must point at configs/"
#endif

using namespace thermoclock;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

ProbVec vec(std::vector<double> v) {
  return ProbVec(Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
}

void criterion(int n, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = s < limit_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s%s (%.2f s)\n", pass ? "PASS" : "FAIL", n, o.detail.c_str(),
              in_time ? "" : " [over time limit]", s);
  std::fflush(stdout);
}

std::string config_path(const std::string& name) {
  return std::string(THERMOCLOCK_CONFIG_DIR) + "/" + name + ".cfg";
}

ExperimentConfig load(const std::string& name) {
  ExperimentConfig c = ExperimentConfig::load(config_path(name));
  c.output_path.clear();
  return c;
}

std::size_t column(const RunResult& r, const std::string& name) {
  for (std::size_t i = 0; i < r.columns.size(); ++i)
    if (r.columns[i] == name) return i;
  throw std::runtime_error("no column " + name);
}

double worst_margin(const RunResult& r) {
  double m = INFINITY;
  for (const auto& rec : r.records)
    if (rec.is_bound) m = std::min(m, rec.margin());
  return m;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome from_run(const RunResult& r, const std::string& what) {
  return {r.ok() && r.bounds_total() > 0,
          what + " " + r.summary_line() + fmt(", worst margin %.3e", worst_margin(r))};
}

// High-precision evaluation of the resolution bound, same closed form.
using Big = boost::multiprecision::cpp_dec_float_50;

struct BigRes {
  Big value, c1, c2;
};

BigRes big_eps_res(const Big& eps, int d_S, long d_cat) {
  using boost::multiprecision::log;
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const Big D = Big(d_S) * Big(d_cat);
  const Big ds = d_S;
  const Big le = log(eps), lD = log(D);
  const Big t1 = (pow(ds, Big(5) / 3) + 4 * lD * log(ds)) / (-le);
  const Big t2 = D * pow(eps, Big(1) / 6);
  const Big r = eps / D;
  const Big t3 = 5 * pow(D * D * sqrt(r) * log(1 / r) / 2, Big(2) / 3);
  return {5 * sqrt(t1 + t2 + t3), 10 * lD / (-le), le * log(1 - 1 / ds) - lD * lD};
}

double rel(double x, const Big& ref) {
  const double r = ref.convert_to<double>();
  return std::abs(x - r) / std::max(std::abs(r), 1e-300);
}

}  // namespace

int main() {
  criterion(1, 30, [] { return from_run(run(load("entropy_bounds")), "entropy continuity"); });

  criterion(2, 20, [] { return from_run(run(load("perturbation")), "perturbation bounds"); });

  criterion(3, 60, [] {
    const AlphaGrid g = AlphaGrid::standard();
    int contradictions = 0, trumped = 0, catalysts = 0, pairs = 0;
    for (const auto& pr : oracle::trumping_corpus()) {
      ++pairs;
      const Verdict v = trumping_check(vec(pr.p), vec(pr.q), g);
      const bool cat = oracle::find_catalyst(pr.p, pr.q).has_value();
      catalysts += cat;
      trumped += v == Verdict::trumped;
      if (cat && v == Verdict::not_trumped) ++contradictions;
      if (!cat && v == Verdict::trumped) ++contradictions;
    }
    // the headline pair with its known catalyst
    const std::vector<double> r = {0.6, 0.4};
    const bool known = oracle::majorizes(oracle::kron({0.5, 0.25, 0.25, 0.0}, r),
                                         oracle::kron({0.4, 0.4, 0.1, 0.1}, r));
    return Outcome{contradictions == 0 && known && pairs == 20,
                   std::to_string(pairs) + " pairs, " + std::to_string(catalysts) + " with catalyst, " +
                       std::to_string(trumped) + " trumped, " + std::to_string(contradictions) +
                       " contradictions"};
  });

  criterion(4, 300, [] {
    const RunResult r = run(load("clock_scaling"));
    const std::size_t kind = column(r, "kind"), d = column(r, "d_cl"), e = column(r, "eps_cl");
    std::string eps;
    double ratio = NAN;
    for (const auto& rec : r.records) {
      if (rec.values[kind] == 1.0)
        eps += fmt(" d=%.0f:", rec.values[d]) + fmt("%.3e", rec.values[e]);
      if (rec.values[kind] == 3.0) ratio = rec.lhs;
    }
    Outcome o = from_run(r, "clock disturbance");
    o.detail += ";" + eps + fmt("; ratio %.3e", ratio);
    return o;
  });

  criterion(5, 180, [] { return from_run(run(load("thm2_bound")), "theorem-2 bound"); });

  criterion(6, 300, [] {
    const RunResult r = run(load("thm1_chain"));
    const std::size_t kind = column(r, "kind"), d = column(r, "d_cl"), emb = column(r, "eps_emb"),
                      dom = column(r, "in_domain"), c1 = column(r, "c1");
    bool any_in_domain = false;
    std::string gap;
    std::vector<std::pair<double, long>> points;
    for (const auto& rec : r.records) {
      if (rec.values[kind] != 0.0) continue;
      any_in_domain |= rec.values[dom] == 1.0;
      gap += fmt(" d=%.0f:", rec.values[d]) + fmt("eps_emb=%.2e", rec.values[emb]) +
             fmt(",c1=%.2f", rec.values[c1]);
      points.emplace_back(rec.values[emb], static_cast<long>(rec.values[d]));
    }
    if (any_in_domain) {
      Outcome o = from_run(r, "theorem-1 chain in domain");
      o.pass = r.ok() && r.bounds_total() > 0;
      return o;
    }
    for (double e : {1e-3, 1e-10, 1e-50, 1e-200, 1e-300})
      for (long dc : {1L, 4L, 64L}) points.emplace_back(e, dc);
    double worst = 0.0;
    for (const auto& [e, dc] : points)
      for (int ds : {2, 3}) {
        const EpsRes got = epsilon_res(e, ds, dc);
        const BigRes ref = big_eps_res(Big(e), ds, dc);
        worst = std::max({worst, rel(got.value, ref.value), rel(got.constraint1, ref.c1),
                          rel(got.constraint2, ref.c2)});
        const bool ref_dom = ref.c1 <= 1 && ref.c2 >= 0;
        if (ref_dom != got.in_domain) worst = INFINITY;
      }
    return Outcome{worst < 1e-12 && !points.empty(),
                   "domain unreachable, arithmetic certified (max rel err " + fmt("%.1e", worst) +
                       ");" + gap};
  });

  criterion(7, 180, [] { return from_run(run(load("thm3_bound")), "theorem-3 bounds"); });

  criterion(8, 10, [] { return from_run(run(load("momentum_delta")), "momentum clock delta"); });

  criterion(9, 10, [] {
    const RunResult r = run(load("nogo"));
    const std::size_t w = column(r, "witness");
    double lo = INFINITY;
    for (const auto& rec : r.records) lo = std::min(lo, rec.values[w]);
    Outcome o = from_run(r, "no-go witness");
    o.pass = o.pass && r.bounds_total() == 10;
    o.detail += fmt(", min witness %.3e", lo);
    return o;
  });

  criterion(10, 1, [] {
    ExperimentConfig c = load("embezzle_formula");
    std::string dcat;
    for (int k = 1; k <= 20; ++k) dcat += (k > 1 ? "," : "") + std::to_string(1L << k);
    c.params["d_Cat"] = dcat;
    const RunResult r = run(c);
    const bool exact = embezzle_distance(2, 4) == 2.0 / 3.0;
    Outcome o = from_run(r, "embezzlement distance monotone");
    o.pass = o.pass && exact && r.bounds_total() == 20;
    o.detail += exact ? ", (2,4) exactly 2/3" : ", (2,4) not exactly 2/3";
    return o;
  });

  criterion(11, 600, [] {
    int same = 0, total = 0;
    std::string diff;
    for (Experiment e : all_experiments()) {
      const ExperimentConfig c = load(std::string(to_string(e)));
      ++total;
      if (run(c).to_csv() == run(c).to_csv())
        ++same;
      else
        diff += " " + std::string(to_string(e));
    }
    return Outcome{same == total, std::to_string(same) + "/" + std::to_string(total) +
                                      " experiments byte-identical on rerun" + diff};
  });

  return failures == 0 ? 0 : 1;
}
