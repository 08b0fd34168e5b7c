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

#ifndef THERMOCLOCK_DYNAMICS_HPP
#define THERMOCLOCK_DYNAMICS_HPP

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "thermoclock/clock.hpp"
#include "thermoclock/prob_entropy.hpp"
#include "thermoclock/quantum_state.hpp"

namespace thermoclock {

// Joint operators are ordered S (x) Cat (x) Cl (x) G.
enum Factor : int { kSystem = 0, kCatalyst = 1, kClock = 2, kBath = 3 };

// Sum_n Omega_n |E_n><E_n| (x) V_d, with |E_n> the columns of `basis`
// (an orthonormal energy eigenbasis of S Cat G).
struct Theorem2Interaction {
  std::vector<double> omegas;
  Mat basis;
  PotentialSpec potential;
};

// H_int (x) H_Cl_int with H_int on S Cat G.
struct Theorem3Interaction {
  HermitianOp h_int;
  HermitianOp h_cl_int;
};

struct AutonomousSpec {
  HermitianOp H_S, H_Cat, H_G;
  std::variant<Theorem2Interaction, Theorem3Interaction> interaction;
  QuasiIdealClock clock;
  double t1, t2, t3;

  void validate() const;
  Dims dims() const;
  Dims scatg_dims() const;
  HermitianOp free_scatg() const;         // H_S + H_Cat + H_G on S Cat G
  HermitianOp interaction_scatg() const;  // the S Cat G factor of the interaction
  HermitianOp clock_interaction() const;  // the Cl factor of the interaction
  // Step control: 0 on [0, t1], 1 on [t2, t3]; undefined in between.
  bool admissible(double t) const;
  double theta(double t) const;
  bool is_theorem2() const { return std::holds_alternative<Theorem2Interaction>(interaction); }
};

struct InitialState {
  DensityMatrix rho_S, rho_Cat, rho_Cl, tau_G;
  DensityMatrix joint() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> joint_states;
  std::vector<DensityMatrix> S, Cat, Cl, SCatCl, SCatG;
};

struct BoundReport {
  double time = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string theorem;
  std::vector<std::pair<std::string, double>> inputs;

  double margin() const { return rhs - lhs; }
  bool violated(double tol = 1e-9) const { return lhs > rhs + tol; }
};

HermitianOp build_hamiltonian(const AutonomousSpec& spec);

Trajectory simulate(const InitialState& init, const HermitianOp& h, std::span<const double> times);

// 65 uniform points on [0, t3] minus the open window (t1, t2) by default.
std::vector<double> admissible_times(const AutonomousSpec& spec, int points = 65);

struct FreeReference {
  DensityMatrix rho_Cat0;
  HermitianOp H_Cat;
  DensityMatrix rho_Cl0;
  HermitianOp H_Cl;
};

std::vector<double> measure_embezzlement(const Trajectory& traj, const FreeReference& ref);

// Target state of S Cat G: free evolution of the initial state, preceded by
// U = exp(-i H_int) once theta(t) = 1.
DensityMatrix target_scatg(const AutonomousSpec& spec, const InitialState& init, double t);

struct ClockDisturbance {
  std::vector<double> times;
  std::vector<double> clock;         // ||rho_Cl(t) - rho_Cl^0(t)||_1
  std::vector<double> eps_A;         // ||rho_SCatG(t) - target(t)||_1
  std::vector<double> eps_A_scaled;  // eps_A / sqrt(d_A tr rho_A^2)
  double eps_cl = 0.0;               // max over times of max(clock, eps_A_scaled)
};

ClockDisturbance measure_clock_disturbance(const AutonomousSpec& spec, const InitialState& init,
                                           const Trajectory& traj);

std::vector<BoundReport> theorem2_report(const AutonomousSpec& spec, const InitialState& init,
                                         const Trajectory& traj);

enum class ResForm { appendix, main_text };

struct EpsRes {
  double value;
  bool in_domain;
  double constraint1;  // 10 ln D / (-ln eps), must be <= 1
  double constraint2;  // ln eps ln(1 - 1/d_S) - ln^2 D, must be >= 0
};

EpsRes epsilon_res(double eps_emb, int d_S, long D_Cat, ResForm form = ResForm::appendix);

DensityMatrix sigma_candidate(const DensityMatrix& rho_S_F, double eps_res);

Verdict verify_tcno(const DensityMatrix& rho_S0, const DensityMatrix& sigma_S,
                    const AlphaGrid& grid = AlphaGrid::standard());

double epsilon_sigma(const DensityMatrix& rho_S0, const DensityMatrix& rho_Cat0,
                     const DensityMatrix& tau_G, const HermitianOp& h_int,
                     const DensityMatrix& rho_S1_ref);

// Reports on the admissible times of traj. delta_max[i] is the grid maximum
// of |1 - Delta^2| at traj.times[i].
std::pair<std::vector<BoundReport>, std::vector<BoundReport>> theorem3_report(
    const AutonomousSpec& spec, const InitialState& init, const Trajectory& traj,
    std::span<const double> delta_max, double eps_sigma);

double nogo_witness(const std::vector<HermitianOp>& blocks, const std::vector<double>& omegas,
                    const DensityMatrix& rho_Cl, double t1, std::span<const double> times);

double embezzle_distance(int d_S, double d_Cat);

}  // namespace thermoclock

#endif  // THERMOCLOCK_DYNAMICS_HPP
