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


// Independent reference computations for the tests. Nothing here calls the
// library's own algorithms for the quantity being checked.

#ifndef THERMOCLOCK_TESTS_ORACLES_HPP
#define THERMOCLOCK_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "thermoclock/quantum_state.hpp"

namespace oracle {

using thermoclock::cplx;
using thermoclock::Mat;

inline std::vector<double> normalized(const std::vector<double>& w) {
  const double s = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<double> out(w);
  for (double& x : out) x /= s;
  return out;
}

// prefix sums of the descending sort
inline bool majorizes(std::vector<double> p, std::vector<double> q, double tol = 1e-12) {
  std::sort(p.rbegin(), p.rend());
  std::sort(q.rbegin(), q.rend());
  double a = 0, b = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    a += p[i];
    b += q[i];
    if (a < b - tol) return false;
  }
  return true;
}

inline std::vector<double> kron(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out;
  for (double x : a)
    for (double y : b) out.push_back(x * y);
  return out;
}

// Descending compositions of n into k positive parts, as probability vectors.
inline void compositions(int rem, int k, int mx, std::vector<int>& cur,
                         const std::function<bool(const std::vector<int>&)>& visit, bool& stop) {
  if (stop) return;
  if (k == 1) {
    if (rem >= 1 && rem <= mx) {
      cur.push_back(rem);
      stop = visit(cur);
      cur.pop_back();
    }
    return;
  }
  for (int a = std::min(rem - (k - 1), mx); a >= 1 && !stop; --a) {
    cur.push_back(a);
    compositions(rem - a, k - 1, a, cur, visit, stop);
    cur.pop_back();
  }
}

// Brute-force catalyst search: plain majorization, then catalysts of
// dimension 2, 3, 4 on rational grids with denominators 40, 30, 24.
inline std::optional<std::vector<double>> find_catalyst(const std::vector<double>& p,
                                                        const std::vector<double>& q) {
  if (majorizes(p, q)) return std::vector<double>{1.0};
  const std::pair<int, int> grids[] = {{2, 40}, {3, 30}, {4, 24}};
  for (auto [k, n] : grids) {
    std::optional<std::vector<double>> found;
    std::vector<int> cur;
    bool stop = false;
    compositions(n, k, n, cur,
                 [&](const std::vector<int>& c) {
                   std::vector<double> r;
                   for (int x : c) r.push_back(static_cast<double>(x) / n);
                   if (majorizes(kron(p, r), kron(q, r))) {
                     found = r;
                     return true;
                   }
                   return false;
                 },
                 stop);
    if (found) return found;
  }
  return std::nullopt;
}

struct TrumpingPair {
  std::vector<double> p, q;
};

// 20 pairs: the standard example, seven incomparable pairs with small
// catalysts, two plain cases and ten incomparable pairs with no small catalyst.
inline std::vector<TrumpingPair> trumping_corpus() {
  const std::vector<std::pair<std::vector<double>, std::vector<double>>> w = {
      {{0.5, 0.25, 0.25, 0.0}, {0.4, 0.4, 0.1, 0.1}},
      {{9, 2, 4, 5}, {4, 9, 3, 8}},
      {{1, 3, 3, 9}, {2, 9, 2, 4}},
      {{7, 1, 6, 6}, {7, 10, 9, 3}},
      {{1, 3, 3, 5}, {5, 6, 3, 2}},
      {{5, 4, 1, 9}, {4, 9, 2, 8}},
      {{2, 0, 1, 1}, {10, 3, 2, 7}},
      {{2, 2, 7, 0}, {2, 2, 9, 10}},
      {{1, 1}, {1, 0}},
      {{1, 0, 0}, {1, 1, 1}},
      {{3, 10, 2}, {8, 6, 0}},
      {{4, 10, 7, 4}, {9, 9, 5, 2}},
      {{2, 5, 5, 9}, {4, 4, 6, 1}},
      {{9, 10, 2}, {4, 8, 3}},
      {{7, 5, 10, 6}, {4, 6, 9, 6}},
      {{1, 7, 1, 10}, {8, 6, 10, 1}},
      {{0, 8, 1, 9}, {1, 10, 6, 2}},
      {{2, 10, 6, 2}, {2, 1, 7, 7}},
      {{9, 2, 2, 4}, {3, 2, 9, 8}},
      {{3, 4, 0, 4}, {7, 6, 3, 2}},
  };
  std::vector<TrumpingPair> out;
  for (const auto& [a, b] : w) out.push_back({normalized(a), normalized(b)});
  return out;
}

// Partial trace by explicit multi-index loops (row-major factor order).
inline Mat partial_trace_loops(const Mat& m, const std::vector<Eigen::Index>& dims,
                               const std::vector<int>& keep) {
  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(n, false);
  for (int k : keep) kept[k] = true;
  Eigen::Index dk = 1;
  for (int k : keep) dk *= dims[k];
  const Eigen::Index total = m.rows();
  Mat out = Mat::Zero(dk, dk);
  auto digits = [&](Eigen::Index idx) {
    std::vector<Eigen::Index> d(n);
    for (int f = n - 1; f >= 0; --f) {
      d[f] = idx % dims[f];
      idx /= dims[f];
    }
    return d;
  };
  for (Eigen::Index i = 0; i < total; ++i)
    for (Eigen::Index j = 0; j < total; ++j) {
      const auto a = digits(i), b = digits(j);
      bool diag = true;
      for (int f = 0; f < n; ++f)
        if (!kept[f] && a[f] != b[f]) diag = false;
      if (!diag) continue;
      Eigen::Index r = 0, c = 0;
      for (int f : keep) {
        r = r * dims[f] + a[f];
        c = c * dims[f] + b[f];
      }
      out(r, c) += m(i, j);
    }
  return out;
}

// e^{A} by Eigen's Pade/scaling-and-squaring (not the eigendecomposition path).
inline Mat expm(const Mat& a) { return a.exp(); }

// Schatten-1 norm via the complex (non-Hermitian) eigensolver of a Hermitian matrix.
inline double trace_norm_general(const Mat& a) {
  Eigen::ComplexEigenSolver<Mat> es(a);
  return es.eigenvalues().cwiseAbs().sum();
}

inline double operator_norm(const Mat& a) {
  Eigen::BDCSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

// Matrix square root of a PSD matrix through eigendecomposition.
inline Mat sqrtm_psd(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  Eigen::VectorXd l = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * l.asDiagonal() * es.eigenvectors().adjoint();
}

inline double uhlmann_fidelity(const Mat& rho, const Mat& sigma) {
  const Mat s = sqrtm_psd(rho);
  const Mat inner = s * sigma * s;
  return sqrtm_psd((inner + inner.adjoint()) / 2.0).trace().real();
}

}  // namespace oracle

#endif  // THERMOCLOCK_TESTS_ORACLES_HPP
