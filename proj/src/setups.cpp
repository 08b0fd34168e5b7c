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


#include "thermoclock/setups.hpp"

#include <cmath>
#include <numbers>

#include "thermoclock/random.hpp"

namespace thermoclock {

Mat singlet_triplet_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  Mat b = Mat::Zero(4, 4);
  b(0, 0) = 1.0;
  b(1, 1) = s;
  b(2, 1) = s;
  b(3, 2) = 1.0;
  b(1, 3) = s;
  b(2, 3) = -s;
  return b;
}

Setup theorem2_setup(const Theorem2Params& p) {
  QuasiIdealClock clock(p.d_cl, p.T0, p.sigma, p.n0);
  Theorem2Interaction inter{p.omegas, singlet_triplet_basis(),
                            PotentialSpec::matched(clock, p.t1, p.t2, p.gamma)};
  AutonomousSpec spec{HermitianOp::zero({2}), HermitianOp::zero({1}), HermitianOp::zero({2}),
                      std::move(inter), clock, p.t1, p.t2, p.T0};
  spec.validate();
  Vec ket0 = Vec::Zero(2);
  ket0(0) = 1.0;
  InitialState init{DensityMatrix::pure(ket0), DensityMatrix(Mat::Identity(1, 1)),
                    quasi_ideal_state(clock), DensityMatrix::maximally_mixed({2})};
  return {std::move(spec), std::move(init)};
}

Theorem3Setup theorem3_setup(const Theorem3Params& p, std::uint64_t seed) {
  QuasiIdealClock clock(p.d_cl, p.T0, p.sigma, p.n0);
  const HermitianOp hq = HermitianOp::diagonal(Eigen::Vector2d(0.0, 1.0));
  const Dims sg = {2, 1, 2};

  // basis |s g>: 0=|00>, 1=|01>, 2=|10>, 3=|11>
  Mat ideal = Mat::Zero(4, 4);
  ideal(1, 2) = ideal(2, 1) = std::numbers::pi / 2.0;
  ideal(0, 0) = 0.3;
  ideal(3, 3) = -0.2;

  // Random imperfection restricted to the energy blocks {0}, {1,2}, {3}.
  CounterRng rng(seed, 0x7468336b);
  Mat delta = Mat::Zero(4, 4);
  const Mat blk = random_hermitian(rng, 2).data();
  delta.block(1, 1, 2, 2) = blk;
  delta(0, 0) = rng.normal();
  delta(3, 3) = rng.normal();
  delta *= p.delta_norm / operator_norm(delta);

  HermitianOp ideal_op(ideal, sg), delta_op(delta, sg);
  const HermitianOp h_cl_int =
      potential_operator(PotentialSpec::matched(clock, p.t1, p.t2, p.gamma), clock);
  AutonomousSpec spec{hq, HermitianOp::zero({1}), hq,
                      Theorem3Interaction{ideal_op + delta_op, h_cl_int}, clock,
                      p.t1, p.t2, p.t3};
  spec.validate();

  Vec ket1 = Vec::Zero(2);
  ket1(1) = 1.0;
  const DensityMatrix rho_S = DensityMatrix::pure(ket1);
  const DensityMatrix rho_Cat(Mat::Identity(1, 1));
  const DensityMatrix tau = gibbs_state(hq, p.beta);
  const DensityMatrix after =
      conjugate(compose(compose(rho_S, rho_Cat), tau), Spectral(ideal_op).propagator(1.0));
  DensityMatrix ref = reduce(after, {0});

  InitialState init{rho_S, rho_Cat, quasi_ideal_state(clock), tau};
  return {{std::move(spec), std::move(init)}, ideal_op, delta_op, std::move(ref)};
}

}  // namespace thermoclock
