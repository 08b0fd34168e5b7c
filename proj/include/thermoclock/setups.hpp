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


#ifndef THERMOCLOCK_SETUPS_HPP
#define THERMOCLOCK_SETUPS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "thermoclock/dynamics.hpp"

namespace thermoclock {

struct Setup {
  AutonomousSpec spec;
  InitialState init;
};

struct Theorem2Params {
  int d_cl = 32;
  double T0 = 1.0;
  double t1 = 0.25, t2 = 0.75;
  double gamma = 0.25;
  std::optional<double> sigma, n0;  // clock defaults when empty
  // phases on |00>, (|01>+|10>)/sqrt2, |11>, (|01>-|10>)/sqrt2
  std::vector<double> omegas = {0.0, 0.2, -0.2, -3.141592653589793};
};

// Qubit system and bath with H_S = H_G = 0, trivial catalyst, rho_S = |0><0|,
// tau_G = I/2, and a swap-like target unitary exp(-i sum_n Omega_n |E_n><E_n|).
Setup theorem2_setup(const Theorem2Params& p);

// Basis |00>, (|01>+|10>)/sqrt2, |11>, (|01>-|10>)/sqrt2 of two qubits.
Mat singlet_triplet_basis();

struct Theorem3Params {
  int d_cl = 32;
  double T0 = 1.0;
  double t1 = 0.25, t2 = 0.75, t3 = 1.0;
  double gamma = 0.25;
  std::optional<double> sigma, n0;
  double beta = 1.0;
  double delta_norm = 0.02;  // operator norm of the commuting imperfection
};

struct Theorem3Setup {
  Setup setup;
  HermitianOp ideal_int;  // on S Cat G
  HermitianOp delta_int;  // commuting imperfection, on S Cat G
  DensityMatrix rho_S1_ref;
};

// H_S = H_G = diag(0, 1), tau_G Gibbs at beta, rho_S = |1><1|, H_int a
// partial swap on the degenerate {|01>, |10>} block plus diagonal shifts.
Theorem3Setup theorem3_setup(const Theorem3Params& p, std::uint64_t seed = 1);

}  // namespace thermoclock

#endif  // THERMOCLOCK_SETUPS_HPP
