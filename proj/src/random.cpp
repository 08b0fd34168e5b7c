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


#include "thermoclock/random.hpp"

#include <cmath>
#include <numbers>

namespace thermoclock {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), key_(mix(seed ^ mix(stream + kGolden))) {}

CounterRng::result_type CounterRng::operator()() { return mix(key_ + (++counter_) * kGolden); }

CounterRng CounterRng::split(std::uint64_t stream) const {
  return CounterRng(mix(key_ ^ 0x5851f42d4c957f2dULL), stream);
}

double CounterRng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double CounterRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double CounterRng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

int CounterRng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>((*this)() % span);
}

Eigen::VectorXd random_simplex(CounterRng& rng, int d) {
  Eigen::VectorXd v(d);
  for (int i = 0; i < d; ++i) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    v(i) = -std::log(u);
  }
  return v / v.sum();
}

Mat random_ginibre(CounterRng& rng, int rows, int cols) {
  Mat g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = cplx(rng.normal(), rng.normal());
  return g;
}

Vec random_ket(CounterRng& rng, int d) {
  Vec v = random_ginibre(rng, d, 1).col(0);
  return v / v.norm();
}

DensityMatrix random_density(CounterRng& rng, int d, int rank) {
  if (rank < 0) rank = d;
  const Mat g = random_ginibre(rng, d, rank);
  Mat r = g * g.adjoint();
  r /= r.trace().real();
  return DensityMatrix(Mat(0.5 * (r + r.adjoint())));
}

HermitianOp random_hermitian(CounterRng& rng, int d) {
  const Mat g = random_ginibre(rng, d, d);
  return HermitianOp(Mat(0.5 * (g + g.adjoint())));
}

Mat random_unitary(CounterRng& rng, int d) {
  const Mat g = random_ginibre(rng, d, d);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR();
  for (int i = 0; i < d; ++i) {
    const cplx di = r(i, i);
    if (std::abs(di) > 0) q.col(i) *= di / std::abs(di);
  }
  return q;
}

}  // namespace thermoclock
