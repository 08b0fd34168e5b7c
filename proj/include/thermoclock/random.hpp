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


#ifndef THERMOCLOCK_RANDOM_HPP
#define THERMOCLOCK_RANDOM_HPP

#include <cstdint>
#include <limits>

#include "thermoclock/quantum_state.hpp"

namespace thermoclock {

// Counter-based generator: output i of stream s is a SplitMix64 finalizer
// applied to (key(seed, s) + i * golden). Streams are independent of the
// order in which they are consumed, so parallel sweeps stay deterministic.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  CounterRng split(std::uint64_t stream) const;
  std::uint64_t seed() const { return seed_; }

  double uniform();                     // [0, 1)
  double uniform(double lo, double hi);
  double normal();
  int integer(int lo, int hi);          // inclusive

 private:
  std::uint64_t seed_, key_, counter_ = 0;
};

Eigen::VectorXd random_simplex(CounterRng& rng, int d);
Vec random_ket(CounterRng& rng, int d);
Mat random_ginibre(CounterRng& rng, int rows, int cols);
DensityMatrix random_density(CounterRng& rng, int d, int rank = -1);
HermitianOp random_hermitian(CounterRng& rng, int d);
Mat random_unitary(CounterRng& rng, int d);

}  // namespace thermoclock

#endif  // THERMOCLOCK_RANDOM_HPP
