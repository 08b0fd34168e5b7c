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

#ifndef THERMOCLOCK_CLOCK_HPP
#define THERMOCLOCK_CLOCK_HPP

#include <functional>
#include <optional>
#include <vector>

#include "thermoclock/quantum_state.hpp"

namespace thermoclock {

// Finite-dimensional quasi-ideal clock. Energy basis |n>, n = 0..d-1, with
// H = sum_n omega n |n><n|; the time basis is
// |theta_k> = d^{-1/2} sum_n e^{-2 pi i n k / d} |n>, so free evolution for
// time t moves |theta_k> to |theta_{k + t d / T0}>.
class QuasiIdealClock {
 public:
  explicit QuasiIdealClock(int d, double T0 = 1.0, std::optional<double> sigma = std::nullopt,
                           std::optional<double> n0 = std::nullopt, double k0 = 0.0);

  int d() const { return d_; }
  double T0() const { return T0_; }
  double sigma() const { return sigma_; }
  double n0() const { return n0_; }
  double k0() const { return k0_; }
  double omega() const { return omega_; }

  // Column k is |theta_k> in the energy basis.
  const Mat& theta_basis() const { return theta_; }
  const HermitianOp& hamiltonian() const { return h_; }

  // Integers k with -d/2 <= center - k < d/2.
  std::vector<int> window(double center) const;
  // A(sigma; center): normalisation of the Gaussian on window(center).
  double normalization(double center) const;
  // Gaussian amplitude psi(center; x) with normalisation A(sigma; center).
  cplx amplitude(double center, double x) const;
  // sum_{k in window(center)} phase(k) psi(center; k) |theta_{k mod d}>.
  Vec gaussian_ket(double center,
                   const std::function<cplx(int)>& phase = nullptr) const;
  // e^{-i t H} in the energy basis (diagonal).
  Vec free_phases(double t) const;

 private:
  int d_;
  double T0_, sigma_, n0_, k0_, omega_;
  Mat theta_;
  HermitianOp h_;
};

Vec quasi_ideal_ket(const QuasiIdealClock& clock);
DensityMatrix quasi_ideal_state(const QuasiIdealClock& clock);

// Admissible gamma values are (m - 2)/d with m of the same parity as d and
// 2 < m <= d + 2.
struct GammaSnap {
  double value;
  int m;
  bool snapped;  // true when the request was moved to the grid
};
GammaSnap snap_gamma(int d, double gamma);

// Smooth 2 pi-periodic bump V0 built from the mollifier exp(-1/(1-u^2)),
// u = (x - x0)/half_width, normalised to unit integral per period.
class PotentialSpec {
 public:
  PotentialSpec(double x0, double half_width, double x_vr);
  static PotentialSpec zero();
  // Peak at the middle of [t1, t2] with x_vr + pi gamma = (t2 - t1)/2 * 2 pi / T0
  // and support half-width x_vr, so that tilde_eps_V = 0.
  static PotentialSpec matched(const QuasiIdealClock& clock, double t1, double t2, double gamma);

  bool is_zero() const { return zero_; }
  double x0() const { return x0_; }
  double half_width() const { return w_; }
  double x_vr() const { return x_vr_; }
  double tilde_eps_V() const { return tilde_eps_v_; }
  std::optional<GammaSnap> gamma() const { return gamma_; }

  double V0(double x) const;
  // Integral of V0 over [a, b] for any real a <= b (periodic extension).
  double integral(double a, double b) const;
  // Integral of V0 over one period; 1 up to quadrature error.
  double period_integral() const { return zero_ ? 0.0 : period_integral_; }

 private:
  PotentialSpec() = default;
  double cumulative(double x) const;

  bool zero_ = false;
  double x0_ = 0.0, w_ = 1.0, x_vr_ = 0.0, tilde_eps_v_ = 0.0;
  double norm_ = 1.0, period_integral_ = 1.0;
  std::optional<GammaSnap> gamma_;
};

// (d/T0) sum_k V_d(k) |theta_k><theta_k| with V_d(x) = (2 pi/d) V0(2 pi x/d).
HermitianOp potential_operator(const PotentialSpec& spec, const QuasiIdealClock& clock);

struct ClockErrors {
  double eps_c;
  double eps_nu;
};
ClockErrors clock_error_norms(const QuasiIdealClock& clock, const PotentialSpec& spec,
                              double omega_n, double t);

struct LRValue {
  double value;
  double gamma_used;
  bool snapped;
  double k_bar;
};
LRValue epsilon_LR(const QuasiIdealClock& clock, double gamma, double t);

double disturbance_bound(double tilde_eps_V, double eps_LR, double eps_c, double eps_nu);

// <psi| Gamma^dagger(x,t) Gamma(y,t) |psi> with
// Gamma(x,t) = exp(-i t H_Cl + i x (theta - t H_int)).
cplx delta_quantity(const DensityMatrix& clock_state, const HermitianOp& h_cl,
                    const HermitianOp& h_cl_int, double theta, double t, double x, double y);

// Delta on a uniform n x n grid over [-pi, pi]^2. Keeps one eigendecomposition
// per grid abscissa so many times can be evaluated cheaply.
class DeltaGrid {
 public:
  DeltaGrid(const DensityMatrix& clock_state, const HermitianOp& h_cl,
            const HermitianOp& h_cl_int, int n = 17);
  int size() const { return static_cast<int>(xs_.size()); }
  double spacing() const;
  const std::vector<double>& abscissae() const { return xs_; }
  cplx value(double theta, double t, int i, int j) const;
  // max over the grid of |1 - Delta^2|
  double max_deviation(double theta, double t) const;

 private:
  std::vector<Vec> evolved(double t) const;
  Vec psi_;
  std::vector<double> xs_;
  std::vector<Spectral> gens_;
};

struct Interval {
  double lo, hi;
};

class MomentumClockSpec {
 public:
  using Profile = std::function<double(double)>;
  // psi is the (real) wavefunction on psi_support, g the coupling profile on
  // g_support. Both are zero outside their supports.
  MomentumClockSpec(Interval psi_support, Profile psi, Interval g_support, Profile g,
                    double tol = 1e-10);
  // Mollifier profiles on the given supports, normalised.
  static MomentumClockSpec bumps(Interval psi_support, Interval g_support);

  const Interval& psi_support() const { return psi_sup_; }
  const Interval& g_support() const { return g_sup_; }
  double density(double x) const;  // |psi(x)|^2
  double g(double x) const;
  // integral of g over [a, b]
  double g_integral(double a, double b) const;

 private:
  Interval psi_sup_, g_sup_;
  Profile psi_, g_;
  std::optional<double> g_total_;
};

cplx momentum_delta(const MomentumClockSpec& spec, double t, double z, double y, double theta,
                    double tol = 1e-10);

}  // namespace thermoclock

#endif  // THERMOCLOCK_CLOCK_HPP
