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


#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "thermoclock/clock.hpp"
#include "thermoclock/dynamics.hpp"
#include "thermoclock/prob_entropy.hpp"
#include "thermoclock/random.hpp"
#include "thermoclock/runner.hpp"
#include "thermoclock/setups.hpp"

namespace thermoclock {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoundTol = 1e-9;

void info(RunResult& out, std::vector<double> values) {
  ResultRecord r;
  r.values = std::move(values);
  out.records.push_back(std::move(r));
}

// lhs <= rhs up to the absolute tolerance
void bound(RunResult& out, std::vector<double> values, double lhs, double rhs) {
  ResultRecord r;
  r.values = std::move(values);
  r.is_bound = true;
  r.lhs = lhs;
  r.rhs = rhs;
  r.pass = lhs <= rhs + kBoundTol;
  out.records.push_back(std::move(r));
}

// lhs < rhs, no tolerance (monotonicity and threshold rows)
void strict(RunResult& out, std::vector<double> values, double lhs, double rhs) {
  ResultRecord r;
  r.values = std::move(values);
  r.is_bound = true;
  r.lhs = lhs;
  r.rhs = rhs;
  r.pass = lhs < rhs;
  out.records.push_back(std::move(r));
}

CounterRng base_rng(const ExperimentConfig& c) { return CounterRng(c.seed, c.stream); }

std::optional<double> optional_number(const ExperimentConfig& c, const std::string& name) {
  if (!c.has(name)) return std::nullopt;
  return c.number(name);
}

Theorem2Params theorem2_params(const ExperimentConfig& c, int d_cl) {
  Theorem2Params p;
  p.d_cl = d_cl;
  p.T0 = c.number("T0", 1.0);
  p.t1 = c.number("t1", 0.25 * p.T0);
  p.t2 = c.number("t2", 0.75 * p.T0);
  p.gamma = c.number("gamma", p.gamma);
  p.sigma = optional_number(c, "sigma");
  p.n0 = optional_number(c, "n0");
  return p;
}

std::vector<int> clock_dims(const ExperimentConfig& c, std::vector<double> fallback) {
  std::vector<int> out;
  for (double v : c.numbers("d_cl", fallback)) {
    if (v < 2 || v != std::floor(v)) throw ConfigError("parameter 'd_cl': integers >= 2 required");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

struct Theorem2Run {
  Setup setup;
  std::vector<double> times;
  Trajectory traj;
};

Theorem2Run run_theorem2(const Theorem2Params& p, int time_points) {
  Setup s = theorem2_setup(p);
  std::vector<double> times = admissible_times(s.spec, time_points);
  Trajectory traj = simulate(s.init, build_hamiltonian(s.spec), times);
  return {std::move(s), std::move(times), std::move(traj)};
}

// ---- entropy sampling ------------------------------------------------------

double sample_alpha(BoundKind k, CounterRng& rng) {
  const auto log_uniform = [&](double lo, double hi) {
    return std::exp(rng.uniform(std::log(lo), std::log(hi)));
  };
  const bool one = rng.uniform() < 0.05;
  switch (k) {
    case BoundKind::tsallis_raw: {
      double a = log_uniform(0.05, 10.0);
      while (std::abs(a - 1.0) < 1e-3) a = log_uniform(0.05, 10.0);
      return a;
    }
    case BoundKind::tsallis_low: return one ? 1.0 : log_uniform(0.05, 1.0);
    case BoundKind::tsallis_high: return one ? 1.0 : rng.uniform(1.0, 4.0);
    case BoundKind::renyi_neg: return one ? -1.0 : -log_uniform(1.0, 20.0);
    case BoundKind::renyi_low: return rng.uniform(0.05, 0.95);
    case BoundKind::renyi_high: return rng.uniform() < 0.1 ? kInf : log_uniform(1.05, 20.0);
    case BoundKind::renyi_mid_half1: return rng.uniform(0.5, 1.0);
    case BoundKind::renyi_mid_12: return one ? 1.0 : rng.uniform(1.0, 2.0);
    case BoundKind::lem_cont_half: return rng.uniform(0.05, 0.5);
    case BoundKind::lem_cont_mid: return one ? 1.0 : rng.uniform(0.5, 2.0);
    case BoundKind::lem_cont_geq2: return log_uniform(2.0, 20.0);
    case BoundKind::s_infty: return kInf;
  }
  return 2.0;
}

double entropy_of(BoundTarget t, const ProbVec& p, double alpha) {
  if (t == BoundTarget::tsallis) {
    if (alpha == kInf) return 0.0;
    return tsallis_entropy(p, alpha);
  }
  return renyi_entropy(p, alpha);
}

}  // namespace

const std::vector<std::string>& experiment_columns(Experiment e) {
  static const std::vector<std::vector<std::string>> cols = {
      {"regime", "d", "trials", "violations", "worst_ratio", "worst_alpha", "worst_delta"},
      {"kind", "trial", "dim", "norm"},
      {"kind", "d_cl", "time", "eps_cl", "eps_c", "eps_nu", "eps_lr", "clock_dist"},
      {"kind", "d_cl", "time", "eps_emb", "eps_res_app", "eps_res_main", "in_domain", "c1", "c2",
       "verdict"},
      {"time", "eps_emb", "eps_cl", "clock_dist", "eps_a_scaled"},
      {"kind", "time", "theta", "eps_sigma", "delta_max"},
      {"instance", "witness"},
      {"time", "theta", "max_dev"},
      {"d_s", "d_cat", "value"},
  };
  return cols.at(static_cast<std::size_t>(e));
}

namespace experiments {

// One row per (regime, d): trials random pairs inside the validity domain,
// bound row counts the violations (must be 0).
void entropy_bounds(const ExperimentConfig& c, RunResult& out) {
  const int trials = c.integer("trials", 1000);
  std::vector<int> dims;
  for (double v : c.numbers("dims", std::vector<double>{2, 4, 8, 16})) {
    if (v < 2 || v != std::floor(v)) throw ConfigError("parameter 'dims': integers >= 2 required");
    dims.push_back(static_cast<int>(v));
  }
  std::vector<BoundKind> kinds;
  if (c.has("regimes")) {
    std::stringstream ss(c.params.at("regimes"));
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
      const auto k = bound_kind_from_string(item);
      if (!k) throw ConfigError("parameter 'regimes': unknown regime '" + item + "'");
      kinds.push_back(*k);
    }
  } else {
    kinds.assign(std::begin(kAllBoundKinds), std::end(kAllBoundKinds));
  }

  const CounterRng root = base_rng(c);
  for (BoundKind k : kinds) {
    const BoundRegime regime{k};
    for (int d : dims) {
      CounterRng rng = root.split(static_cast<std::uint64_t>(k) * 1024 + d);
      int violations = 0;
      double worst = 0.0, worst_a = 0.0, worst_d = 0.0;
      for (int trial = 0; trial < trials; ++trial) {
        const double alpha = sample_alpha(k, rng);
        const double dmax = std::min(regime.delta_max(alpha, d), 2.0);
        // some sparse p when zeros are allowed
        Eigen::VectorXd pv = random_simplex(rng, d);
        if (k != BoundKind::renyi_neg && rng.uniform() < 0.2) {
          pv(rng.integer(0, d - 1)) = 0.0;
          if (pv.sum() <= 0.0) pv(0) = 1.0;
          pv /= pv.sum();
        }
        const Eigen::VectorXd qv = random_simplex(rng, d);
        const double dist = (qv - pv).lpNorm<1>();
        // small deltas are where most bounds are tight
        const double want = dmax * std::pow(rng.uniform(), 3.0);
        const double s = dist > 0.0 ? std::min(1.0, want / dist) : 0.0;
        const ProbVec p(pv), p2 = ProbVec::from_weights(pv + s * (qv - pv));
        double delta = l1_distance(p, p2);
        if (delta > dmax) continue;  // rounding at the edge; skip

        BoundContext ctx;
        if (k == BoundKind::renyi_neg) ctx.min_entry = std::min(p.min_entry(), p2.min_entry());
        if (k == BoundKind::renyi_low)
          ctx.renyi_alpha_of_p = std::min(renyi_entropy(p, alpha), renyi_entropy(p2, alpha));
        const double b = continuity_bound(regime, d, alpha, delta, ctx);
        const double diff = std::abs(entropy_of(regime.target(), p, alpha) -
                                     entropy_of(regime.target(), p2, alpha));
        if (diff > b + kBoundTol) ++violations;
        const double ratio = b > 0.0 ? diff / b : (diff > 0.0 ? kInf : 0.0);
        if (ratio > worst) {
          worst = ratio;
          worst_a = alpha;
          worst_d = delta;
        }
      }
      const std::vector<double> v = {static_cast<double>(k), static_cast<double>(d),
                                     static_cast<double>(trials), static_cast<double>(violations),
                                     worst, worst_a, worst_d};
      bound(out, v, violations, 0.0);
    }
  }
}

// kind 0: ||e^{i(H+V)} - e^{iH}|| <= ||V|| + ||V||^2/2
// kind 1: eps_sigma <= 2||delta|| + ||delta||^2 on random thermal setups
void perturbation(const ExperimentConfig& c, RunResult& out) {
  const int trials = c.integer("trials", 200);
  const int sigma_trials = c.integer("sigma_trials", trials / 2);
  const CounterRng root = base_rng(c);

  for (int i = 0; i < trials; ++i) {
    CounterRng rng = root.split(static_cast<std::uint64_t>(i));
    const int d = rng.integer(2, 8);
    const HermitianOp h0 = random_hermitian(rng, d), v0 = random_hermitian(rng, d);
    const HermitianOp h = h0 * (rng.uniform(0.0, 3.0) / operator_norm(h0.data()));
    const HermitianOp v = v0 * (rng.uniform(0.0, 2.0) / operator_norm(v0.data()));
    const double nv = operator_norm(v.data());
    const double lhs = operator_norm(unitary_of(h + v, 1.0).data() - unitary_of(h, 1.0).data());
    bound(out, {0.0, static_cast<double>(i), static_cast<double>(d), nv}, lhs,
          nv + 0.5 * nv * nv);
  }

  for (int i = 0; i < sigma_trials; ++i) {
    CounterRng rng = root.split(0x100000 + static_cast<std::uint64_t>(i));
    const int ds = rng.integer(2, 3), dc = rng.integer(1, 2), dg = rng.integer(2, 3);
    Eigen::VectorXd es(ds), eg(dg);
    for (int k = 0; k < ds; ++k) es(k) = rng.integer(0, 2);
    for (int k = 0; k < dg; ++k) eg(k) = rng.integer(0, 2);

    // energy-conserving interaction on S G, identity on Cat
    const int dsg = ds * dg;
    Mat m = random_hermitian(rng, dsg).data();
    for (int a = 0; a < dsg; ++a)
      for (int b = 0; b < dsg; ++b)
        if (es(a / dg) + eg(a % dg) != es(b / dg) + eg(b % dg)) m(a, b) = 0.0;
    m *= rng.uniform(0.1, kPi) / std::max(operator_norm(m), 1e-300);
    const Mat sg_cat = kron(m, Mat::Identity(dc, dc).eval());
    const Dims dims = {ds, dc, dg};
    const HermitianOp ideal(permute_factors(sg_cat, {ds, dg, dc}, {0, 2, 1}), dims);

    const HermitianOp d0 = random_hermitian(rng, ds * dc * dg);
    const HermitianOp delta(
        (d0 * (rng.uniform(0.0, 0.5) / operator_norm(d0.data()))).data(), dims);
    const double nd = operator_norm(delta.data());

    const DensityMatrix rho_s = random_density(rng, ds);
    const DensityMatrix rho_cat = random_density(rng, dc);
    const DensityMatrix tau = gibbs_state(HermitianOp::diagonal(eg), rng.uniform(0.0, 3.0));
    const DensityMatrix in = compose(compose(rho_s, rho_cat), tau);
    const DensityMatrix ref = reduce(conjugate(in, Spectral(ideal).propagator(1.0)), {0});
    const double eps = epsilon_sigma(rho_s, rho_cat, tau, ideal + delta, ref);
    bound(out, {1.0, static_cast<double>(i), static_cast<double>(ds * dc * dg), nd}, eps,
          2.0 * nd + nd * nd);
  }
}

// kind 0: clock disturbance vs its analytic bound at each admissible time
// kind 1: eps_Cl per d (info)
// kind 2: eps_Cl strictly decreasing between consecutive d
// kind 3: eps_Cl(d_last)/eps_Cl(d_prev) < 1/2
void clock_scaling(const ExperimentConfig& c, RunResult& out) {
  const std::vector<int> dims = clock_dims(c, std::vector<double>{16, 32, 64});
  const int points = c.integer("time_points", 65);
  std::vector<double> eps;
  for (int d : dims) {
    const Theorem2Params p = theorem2_params(c, d);
    const Theorem2Run r = run_theorem2(p, points);
    const ClockDisturbance cd = measure_clock_disturbance(r.setup.spec, r.setup.init, r.traj);
    const auto& inter = std::get<Theorem2Interaction>(r.setup.spec.interaction);
    const QuasiIdealClock& clock = r.setup.spec.clock;
    for (std::size_t i = 0; i < cd.times.size(); ++i) {
      const double t = cd.times[i];
      double ec = 0.0, en = 0.0;
      for (double om : inter.omegas) {
        const ClockErrors e = clock_error_norms(clock, inter.potential, om, t);
        ec = std::max(ec, e.eps_c);
        en = std::max(en, e.eps_nu);
      }
      const double lr = epsilon_LR(clock, p.gamma, t).value;
      const double b = disturbance_bound(inter.potential.tilde_eps_V(), lr, ec, en);
      bound(out, {0.0, double(d), t, cd.eps_cl, ec, en, lr, cd.clock[i]}, cd.clock[i], b);
    }
    info(out, {1.0, double(d), 0.0, cd.eps_cl, 0.0, 0.0, 0.0, 0.0});
    eps.push_back(cd.eps_cl);
  }
  for (std::size_t i = 1; i < eps.size(); ++i)
    strict(out, {2.0, double(dims[i]), 0.0, eps[i], 0.0, 0.0, 0.0, 0.0}, eps[i], eps[i - 1]);
  if (eps.size() >= 2) {
    const std::size_t n = eps.size();
    strict(out, {3.0, double(dims[n - 1]), 0.0, eps[n - 1], 0.0, 0.0, 0.0, 0.0},
           eps[n - 1] / eps[n - 2], 0.5);
  }
}

// kind 0 (info): max eps_emb and the eps_res domain check per d_Cl.
// When in domain: kind 1 rows ||sigma - rho_S(t)|| <= eps_res, kind 2 rows
// trumping verdict (0 = trumped).
void thm1_chain(const ExperimentConfig& c, RunResult& out) {
  const std::vector<int> dims = clock_dims(c, std::vector<double>{32, 64});
  const int points = c.integer("time_points", 65);
  for (int d : dims) {
    const Theorem2Params p = theorem2_params(c, d);
    const Theorem2Run r = run_theorem2(p, points);
    const auto reports = theorem2_report(r.setup.spec, r.setup.init, r.traj);
    double emb = 0.0;
    for (const auto& b : reports) emb = std::max(emb, b.lhs);
    const int ds = static_cast<int>(r.setup.spec.H_S.dim());
    const long dcat = static_cast<long>(r.setup.spec.H_Cat.dim()) * d;
    const double nan = std::nan("");
    if (!(emb > 0.0 && emb < 1.0)) {
      info(out, {0.0, double(d), 0.0, emb, nan, nan, 0.0, nan, nan, -1.0});
      continue;
    }
    const EpsRes app = epsilon_res(emb, ds, dcat, ResForm::appendix);
    const EpsRes main = epsilon_res(emb, ds, dcat, ResForm::main_text);
    info(out, {0.0, double(d), 0.0, emb, app.value, main.value, app.in_domain ? 1.0 : 0.0,
               app.constraint1, app.constraint2, -1.0});
    if (!app.in_domain) continue;
    const double er = std::min(app.value, 1.0);
    for (std::size_t i = 0; i < r.traj.times.size(); ++i) {
      const double t = r.traj.times[i];
      const DensityMatrix sigma = sigma_candidate(r.traj.S[i], er);
      const Verdict v = verify_tcno(r.setup.init.rho_S, sigma);
      const std::vector<double> row = {1.0, double(d), t, emb, app.value, main.value, 1.0,
                                       app.constraint1, app.constraint2,
                                       static_cast<double>(v)};
      bound(out, row, trace_distance(sigma, r.traj.S[i]), app.value);
      auto row2 = row;
      row2[0] = 2.0;
      bound(out, row2, v == Verdict::trumped ? 0.0 : 1.0, 0.0);
    }
  }
}

void thm2_bound(const ExperimentConfig& c, RunResult& out) {
  const Theorem2Params p = theorem2_params(c, c.integer("d_cl", 32));
  const Theorem2Run r = run_theorem2(p, c.integer("time_points", 65));
  const ClockDisturbance cd = measure_clock_disturbance(r.setup.spec, r.setup.init, r.traj);
  const auto reports = theorem2_report(r.setup.spec, r.setup.init, r.traj);
  for (std::size_t i = 0; i < reports.size(); ++i)
    bound(out, {reports[i].time, reports[i].lhs, cd.eps_cl, cd.clock[i], cd.eps_A_scaled[i]},
          reports[i].lhs, reports[i].rhs);
}

// kind 1: embezzlement bound, kind 2: distance to the target state
void thm3_bound(const ExperimentConfig& c, RunResult& out) {
  Theorem3Params p;
  p.d_cl = c.integer("d_cl", 32);
  p.T0 = c.number("T0", 1.0);
  p.t1 = c.number("t1", 0.25 * p.T0);
  p.t2 = c.number("t2", 0.75 * p.T0);
  p.t3 = c.number("t3", p.T0);
  p.gamma = c.number("gamma", p.gamma);
  p.beta = c.number("beta", p.beta);
  p.delta_norm = c.number("delta_norm", p.delta_norm);
  p.sigma = optional_number(c, "sigma");
  p.n0 = optional_number(c, "n0");
  const Theorem3Setup t3 = theorem3_setup(p, c.seed);
  const AutonomousSpec& spec = t3.setup.spec;
  const InitialState& init = t3.setup.init;

  const std::vector<double> times = admissible_times(spec, c.integer("time_points", 65));
  const Trajectory traj = simulate(init, build_hamiltonian(spec), times);
  const DeltaGrid grid(init.rho_Cl, spec.clock.hamiltonian(), spec.clock_interaction(),
                       c.integer("grid_n", 17));
  std::vector<double> dmax;
  for (double t : times) dmax.push_back(grid.max_deviation(spec.theta(t), t));
  const double es = epsilon_sigma(init.rho_S, init.rho_Cat, init.tau_G, spec.interaction_scatg(),
                                  t3.rho_S1_ref);
  const auto [r1, r2] = theorem3_report(spec, init, traj, dmax, es);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double th = spec.theta(times[i]);
    bound(out, {1.0, times[i], th, es, dmax[i]}, r1[i].lhs, r1[i].rhs);
    bound(out, {2.0, times[i], th, es, dmax[i]}, r2[i].lhs, r2[i].rhs);
  }
}

// witness must exceed `threshold` on every random finite clock
void nogo(const ExperimentConfig& c, RunResult& out) {
  const int instances = c.integer("instances", 10);
  const int d = c.integer("d_cl", 8);
  const double t1 = c.number("t1", 1.0);
  const double t_max = c.number("t_max", 2.0);
  const int points = c.integer("time_points", 41);
  const double threshold = c.number("threshold", 1e-6);
  const std::vector<double> omegas = c.numbers("omegas", std::vector<double>{0.0, kPi / 2.0});
  if (points < 2) throw ConfigError("parameter 'time_points': at least 2 required");
  std::vector<double> times;
  for (int i = 0; i < points; ++i) times.push_back(t_max * i / (points - 1));
  const CounterRng root = base_rng(c);
  for (int k = 0; k < instances; ++k) {
    CounterRng rng = root.split(static_cast<std::uint64_t>(k));
    std::vector<HermitianOp> blocks;
    for (std::size_t j = 0; j < omegas.size(); ++j) blocks.push_back(random_hermitian(rng, d));
    const DensityMatrix rho = DensityMatrix::pure(random_ket(rng, d));
    const double w = nogo_witness(blocks, omegas, rho, t1, times);
    strict(out, {double(k), w}, threshold, w);
  }
}

// Delta == 1 before the coupling region is reached and after it is passed.
void momentum_delta(const ExperimentConfig& c, RunResult& out) {
  const Interval psi{c.number("psi_lo", 0.0), c.number("psi_hi", 1.0)};
  const Interval g{c.number("g_lo", 2.0), c.number("g_hi", 3.0)};
  const int n = c.integer("grid_n", 17);
  const double tol = c.number("tolerance", 1e-8);
  if (n < 2) throw ConfigError("parameter 'grid_n': at least 2 required");
  const MomentumClockSpec spec = MomentumClockSpec::bumps(psi, g);
  for (double t : c.numbers("times", std::vector<double>{0.5, 3.5})) {
    double theta;
    if (psi.hi + t <= g.lo)
      theta = 0.0;
    else if (psi.hi <= g.lo && psi.lo + t >= g.hi)
      theta = 1.0;
    else
      throw ConfigError("momentum_delta: t = " + std::to_string(t) +
                        " is neither before nor after the coupling region");
    double dev = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double z = -kPi + 2.0 * kPi * i / (n - 1), y = -kPi + 2.0 * kPi * j / (n - 1);
        dev = std::max(dev, std::abs(momentum_delta(spec, t, z, y, theta, 1e-12) - 1.0));
      }
    strict(out, {t, theta, dev}, dev, tol);
  }
}

// value must decrease strictly along d_Cat, starting below d_S
void embezzle_formula(const ExperimentConfig& c, RunResult& out) {
  const int ds = c.integer("d_S");
  double prev = ds;
  for (double dc : c.numbers("d_Cat")) {
    const double v = embezzle_distance(ds, dc);
    strict(out, {double(ds), dc, v}, v, prev);
    prev = v;
  }
}

}  // namespace experiments

}  // namespace thermoclock
