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

#ifndef THERMOCLOCK_QUADRATURE_HPP
#define THERMOCLOCK_QUADRATURE_HPP

#include <cmath>
#include <complex>

namespace thermoclock {

namespace detail {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }

template <typename T, typename F>
T simpson_step(F& f, double a, double b, T fa, T fm, T fb, T whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const T flm = f(lm), frm = f(rm);
  const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const T delta = left + right - whole;
  if (depth <= 0 || magnitude(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step<T>(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step<T>(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature of f over [a, b] with absolute tolerance tol.
// T is the value type of f (double or std::complex<double>). The interval is
// pre-split into `panels` pieces so that narrow features are not missed by
// the first coarse estimate.
template <typename T, typename F>
T adaptive_simpson(F&& f, double a, double b, double tol = 1e-10, int panels = 8,
                   int max_depth = 40) {
  if (a == b) return T(0);
  T total(0);
  const double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * h, hi = (i + 1 == panels) ? b : a + (i + 1) * h;
    const T flo = f(lo), fhi = f(hi), fmid = f(0.5 * (lo + hi));
    const T whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    total += detail::simpson_step<T>(f, lo, hi, flo, fmid, fhi, whole, tol / panels, max_depth);
  }
  return total;
}

}  // namespace thermoclock

#endif  // THERMOCLOCK_QUADRATURE_HPP
