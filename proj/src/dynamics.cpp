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

#include "thermoclock/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace thermoclock {

namespace {

constexpr double kPi = std::numbers::pi;

Mat exp_minus_i(const HermitianOp& h) { return Spectral(h).propagator(1.0); }

}  // namespace

// ---------------------------------------------------------------------------

Dims AutonomousSpec::dims() const {
  return {H_S.dim(), H_Cat.dim(), static_cast<Eigen::Index>(clock.d()), H_G.dim()};
}

Dims AutonomousSpec::scatg_dims() const { return {H_S.dim(), H_Cat.dim(), H_G.dim()}; }

HermitianOp AutonomousSpec::free_scatg() const {
  const Dims d = scatg_dims();
  return embed(H_S, d, 0) + embed(H_Cat, d, 1) + embed(H_G, d, 2);
}

HermitianOp AutonomousSpec::interaction_scatg() const {
  if (const auto* t3 = std::get_if<Theorem3Interaction>(&interaction)) return t3->h_int;
  const auto& t2 = std::get<Theorem2Interaction>(interaction);
  Eigen::VectorXd om = Eigen::Map<const Eigen::VectorXd>(t2.omegas.data(),
                                                         static_cast<Eigen::Index>(t2.omegas.size()));
  return HermitianOp(t2.basis * om.cast<cplx>().asDiagonal() * t2.basis.adjoint(), scatg_dims());
}

HermitianOp AutonomousSpec::clock_interaction() const {
  if (const auto* t3 = std::get_if<Theorem3Interaction>(&interaction)) return t3->h_cl_int;
  return potential_operator(std::get<Theorem2Interaction>(interaction).potential, clock);
}

bool AutonomousSpec::admissible(double t) const {
  const double eps = 1e-12 * clock.T0();
  return (t >= -eps && t <= t1 + eps) || (t >= t2 - eps && t <= t3 + eps);
}

double AutonomousSpec::theta(double t) const {
  if (!admissible(t))
    throw DomainError("time " + std::to_string(t) + " lies outside [0,t1] U [t2,t3]");
  return t <= t1 + 1e-12 * clock.T0() ? 0.0 : 1.0;
}

void AutonomousSpec::validate() const {
  if (!(0.0 < t1 && t1 < t2 && t2 < t3 && t3 <= clock.T0() * (1.0 + 1e-12)))
    throw DomainError("AutonomousSpec: 0 < t1 < t2 < t3 <= T0 required");
  const Eigen::Index da = H_S.dim() * H_Cat.dim() * H_G.dim();
  const HermitianOp h0 = free_scatg();
  if (const auto* t2i = std::get_if<Theorem2Interaction>(&interaction)) {
    if (static_cast<Eigen::Index>(t2i->omegas.size()) != da || t2i->basis.rows() != da ||
        t2i->basis.cols() != da)
      throw DomainError("AutonomousSpec: theorem2 needs one phase per S Cat G basis vector");
    for (double w : t2i->omegas)
      if (!(w >= -kPi && w < kPi)) throw DomainError("AutonomousSpec: phases Omega_n in [-pi, pi) required");
    UnitaryOp check(t2i->basis);
    (void)check;
  } else {
    const auto& t3i = std::get<Theorem3Interaction>(interaction);
    if (t3i.h_int.dim() != da) throw DomainError("AutonomousSpec: H_int must act on S Cat G");
    if (t3i.h_cl_int.dim() != clock.d()) throw DomainError("AutonomousSpec: H_Cl_int must act on the clock");
  }
  const HermitianOp hi = interaction_scatg();
  if (!commutes(hi, h0, 1e-9))
    throw DomainError("AutonomousSpec: interaction must commute with H_S + H_Cat + H_G");
  if (operator_norm(hi.data()) > kPi + 1e-12)
    throw DomainError("AutonomousSpec: interaction eigenvalues must be bounded by pi");
}

HermitianOp build_hamiltonian(const AutonomousSpec& spec) {
  spec.validate();
  const Dims dims = spec.dims();
  HermitianOp h = embed(spec.H_S, dims, kSystem) + embed(spec.H_Cat, dims, kCatalyst) +
                  embed(spec.clock.hamiltonian(), dims, kClock) + embed(spec.H_G, dims, kBath);
  // interaction built as (S Cat G) (x) Cl, then G and Cl swapped
  const Mat raw = kron(spec.interaction_scatg().data(), spec.clock_interaction().data());
  const Dims raw_dims = {dims[0], dims[1], dims[3], dims[2]};
  Mat inter = permute_factors(raw, raw_dims, {0, 1, 3, 2});
  return h + HermitianOp(std::move(inter), dims);
}

DensityMatrix InitialState::joint() const {
  return compose(compose(compose(rho_S, rho_Cat), rho_Cl), tau_G);
}

Trajectory simulate(const InitialState& init, const HermitianOp& h, std::span<const double> times) {
  const DensityMatrix rho0 = init.joint();
  if (rho0.dim() != h.dim()) throw DomainError("simulate: dimension mismatch");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw DomainError("simulate: times must be strictly increasing");
  const Spectral sp(h);
  Trajectory tr;
  tr.times.assign(times.begin(), times.end());
  for (double t : times) {
    DensityMatrix r = t == 0.0 ? rho0 : evolve(rho0, sp, t);
    tr.S.push_back(reduce(r, {kSystem}));
    tr.Cat.push_back(reduce(r, {kCatalyst}));
    tr.Cl.push_back(reduce(r, {kClock}));
    tr.SCatCl.push_back(reduce(r, {kSystem, kCatalyst, kClock}));
    tr.SCatG.push_back(reduce(r, {kSystem, kCatalyst, kBath}));
    tr.joint_states.push_back(std::move(r));
  }
  return tr;
}

std::vector<double> admissible_times(const AutonomousSpec& spec, int points) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) {
    const double t = spec.t3 * i / (points - 1);
    if (spec.admissible(t)) out.push_back(t);
  }
  return out;
}

std::vector<double> measure_embezzlement(const Trajectory& traj, const FreeReference& ref) {
  const Spectral hc(ref.H_Cat), hl(ref.H_Cl);
  std::vector<double> out;
  out.reserve(traj.times.size());
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double t = traj.times[i];
    const DensityMatrix prod = compose(compose(traj.S[i], evolve(ref.rho_Cat0, hc, t)),
                                       evolve(ref.rho_Cl0, hl, t));
    out.push_back(trace_distance(traj.SCatCl[i], prod));
  }
  return out;
}

DensityMatrix target_scatg(const AutonomousSpec& spec, const InitialState& init, double t) {
  DensityMatrix rho = compose(compose(init.rho_S, init.rho_Cat), init.tau_G);
  if (spec.theta(t) == 1.0) rho = conjugate(rho, exp_minus_i(spec.interaction_scatg()));
  return evolve(rho, spec.free_scatg(), t);
}

ClockDisturbance measure_clock_disturbance(const AutonomousSpec& spec, const InitialState& init,
                                           const Trajectory& traj) {
  ClockDisturbance out;
  const Spectral hl(spec.clock.hamiltonian());
  const double da = static_cast<double>(spec.H_S.dim() * spec.H_Cat.dim() * spec.H_G.dim());
  const double purity = init.rho_S.purity() * init.rho_Cat.purity() * init.tau_G.purity();
  const double scale = std::sqrt(da * purity);
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double t = traj.times[i];
    if (!spec.admissible(t)) continue;
    const double c = trace_distance(traj.Cl[i], evolve(init.rho_Cl, hl, t));
    const double ea = trace_distance(traj.SCatG[i], target_scatg(spec, init, t));
    out.times.push_back(t);
    out.clock.push_back(c);
    out.eps_A.push_back(ea);
    out.eps_A_scaled.push_back(ea / scale);
    out.eps_cl = std::max({out.eps_cl, c, ea / scale});
  }
  return out;
}

std::vector<BoundReport> theorem2_report(const AutonomousSpec& spec, const InitialState& init,
                                         const Trajectory& traj) {
  const ClockDisturbance cd = measure_clock_disturbance(spec, init, traj);
  const FreeReference ref{init.rho_Cat, spec.H_Cat, init.rho_Cl, spec.clock.hamiltonian()};
  const auto emb = measure_embezzlement(traj, ref);
  const double ds = spec.H_S.dim(), dc = spec.H_Cat.dim();
  const double rhs = (2.0 + 5.0 * std::pow(ds * dc, 0.25)) * std::sqrt(cd.eps_cl);
  std::vector<BoundReport> out;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    if (!spec.admissible(traj.times[i])) continue;
    out.push_back({traj.times[i], emb[i], rhs, "theorem2",
                   {{"eps_cl", cd.eps_cl}, {"d_S", ds}, {"d_Cat", dc},
                    {"d_Cl", static_cast<double>(spec.clock.d())}}});
  }
  return out;
}

EpsRes epsilon_res(double eps_emb, int d_S, long D_Cat, ResForm form) {
  if (!(eps_emb > 0.0 && eps_emb < 1.0)) throw DomainError("epsilon_res: eps_emb in (0, 1) required");
  if (d_S < 2 || D_Cat < 1) throw DomainError("epsilon_res: d_S >= 2 and D_Cat >= 1 required");
  const double D = static_cast<double>(d_S) * static_cast<double>(D_Cat);
  const double ds = d_S;
  const double le = std::log(eps_emb);
  const double lD = std::log(D);
  const double term1 = (std::pow(ds, 5.0 / 3.0) + 4.0 * lD * std::log(ds)) / (-le);
  const double term2 = D * std::pow(eps_emb, 1.0 / 6.0);
  const double r = eps_emb / D;
  const double term3 = 5.0 * std::pow(D * D * std::sqrt(r) * 0.5 * std::log(1.0 / r), 2.0 / 3.0);
  const double bracket = term1 + term2 + term3;
  const double value = form == ResForm::appendix ? 5.0 * std::sqrt(bracket) : 5.0 * bracket;
  const double c1 = 10.0 * lD / (-le);
  const double c2 = le * std::log(1.0 - 1.0 / ds) - lD * lD;
  return {value, c1 <= 1.0 && c2 >= 0.0, c1, c2};
}

DensityMatrix sigma_candidate(const DensityMatrix& rho_S_F, double eps_res) {
  if (!(eps_res > 0.0 && eps_res <= 1.0)) throw DomainError("sigma_candidate: eps_res in (0, 1] required");
  const DensityMatrix u = DensityMatrix::maximally_mixed(rho_S_F.factor_dims());
  if (trace_distance(rho_S_F, u) < eps_res) return u;
  return DensityMatrix::trusted((1.0 - eps_res) * rho_S_F.data() + eps_res * u.data(),
                                rho_S_F.factor_dims());
}

Verdict verify_tcno(const DensityMatrix& rho_S0, const DensityMatrix& sigma_S, const AlphaGrid& grid) {
  if (rho_S0.dim() != sigma_S.dim()) throw DomainError("verify_tcno: dimension mismatch");
  if (rho_S0.full_rank())
    throw DomainError("verify_tcno: rho_S0 must not be of full rank");
  const ProbVec p = rho_S0.spectrum(), q = sigma_S.spectrum();
  if ((p.sorted_descending() - q.sorted_descending()).cwiseAbs().maxCoeff() <= 1e-12)
    return Verdict::trumped;
  return trumping_check(p, q, grid);
}

double epsilon_sigma(const DensityMatrix& rho_S0, const DensityMatrix& rho_Cat0,
                     const DensityMatrix& tau_G, const HermitianOp& h_int,
                     const DensityMatrix& rho_S1_ref) {
  const DensityMatrix in = compose(compose(rho_S0, rho_Cat0), tau_G);
  if (h_int.dim() != in.dim()) throw DomainError("epsilon_sigma: dimension mismatch");
  if (rho_S1_ref.dim() != rho_S0.dim()) throw DomainError("epsilon_sigma: dimension mismatch");
  const DensityMatrix out = conjugate(in, exp_minus_i(h_int));
  const DensityMatrix sigma1 = reduce(out, {0, 1});
  return trace_distance(sigma1, compose(rho_S1_ref, rho_Cat0));
}

std::pair<std::vector<BoundReport>, std::vector<BoundReport>> theorem3_report(
    const AutonomousSpec& spec, const InitialState& init, const Trajectory& traj,
    std::span<const double> delta_max, double eps_sigma) {
  if (delta_max.size() != traj.times.size())
    throw DomainError("theorem3_report: one delta_max per trajectory time required");
  const FreeReference ref{init.rho_Cat, spec.H_Cat, init.rho_Cl, spec.clock.hamiltonian()};
  const auto emb = measure_embezzlement(traj, ref);
  const double ds = spec.H_S.dim(), dc = spec.H_Cat.dim(), dg = spec.H_G.dim();
  const double k = ds * init.rho_S.purity() * dc * dg * init.tau_G.purity();
  std::vector<BoundReport> r1, r2;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double t = traj.times[i];
    const double th = spec.theta(t);
    const double dm = delta_max[i];
    const std::vector<std::pair<std::string, double>> inputs = {
        {"theta", th}, {"eps_sigma", eps_sigma}, {"delta_max", dm}, {"purity_factor", k}};
    r1.push_back({t, emb[i], 2.0 * eps_sigma * th + 10.0 * std::pow(k * dm, 0.25), "theorem3_emb",
                  inputs});
    const DensityMatrix target_S = reduce(target_scatg(spec, init, t), {0});
    r2.push_back({t, trace_distance(traj.S[i], target_S), eps_sigma * th + std::sqrt(k) * dm,
                  "theorem3_target", inputs});
  }
  return {std::move(r1), std::move(r2)};
}

double nogo_witness(const std::vector<HermitianOp>& blocks, const std::vector<double>& omegas,
                    const DensityMatrix& rho_Cl, double t1, std::span<const double> times) {
  if (blocks.size() != omegas.size() || omegas.size() < 2)
    throw DomainError("nogo_witness: need one block per phase and at least two phases");
  for (std::size_t i = 0; i < omegas.size(); ++i)
    for (std::size_t j = i + 1; j < omegas.size(); ++j)
      if (omegas[i] == omegas[j]) throw DomainError("nogo_witness: phases Omega must be non-degenerate");
  for (const auto& b : blocks)
    if (b.dim() != rho_Cl.dim()) throw DomainError("nogo_witness: dimension mismatch");
  std::vector<Spectral> sp;
  sp.reserve(blocks.size());
  for (const auto& b : blocks) sp.emplace_back(b);
  double w = 0.0;
  for (double t : times) {
    const double step = t >= t1 ? 1.0 : 0.0;
    std::vector<Mat> u;
    for (const auto& s : sp) u.push_back(s.propagator(t));
    for (std::size_t l = 0; l < blocks.size(); ++l)
      for (std::size_t m = 0; m < blocks.size(); ++m) {
        if (l == m) continue;
        const cplx lhs = std::polar(1.0, -t * (omegas[m] - omegas[l]) * step);
        const cplx rhs = (u[l] * rho_Cl.data() * u[m].adjoint()).trace();
        w = std::max(w, std::abs(lhs - rhs));
      }
  }
  return w;
}

double embezzle_distance(int d_S, double d_Cat) {
  if (d_S < 2 || !(d_Cat >= 2.0)) throw DomainError("embezzle_distance: d_S, d_Cat >= 2 required");
  const double ds = d_S;
  return ds / (1.0 + (ds - 1.0) * std::log2(d_Cat) / std::log2(ds));
}

}  // namespace thermoclock
