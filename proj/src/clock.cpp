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

#include "thermoclock/clock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "thermoclock/quadrature.hpp"

namespace thermoclock {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mollifier(double u) { return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0; }

// integral of the mollifier over [-1, 1]
double mollifier_mass() {
  static const double m = adaptive_simpson<double>(mollifier, -1.0, 1.0, 1e-15, 16);
  return m;
}

// Wrap into [-pi, pi).
double wrap(double y) {
  y = std::fmod(y + kPi, kTwoPi);
  if (y < 0) y += kTwoPi;
  return y - kPi;
}

Vec dominant_ket(const DensityMatrix& rho) {
  if (std::abs(rho.purity() - 1.0) > 1e-8) throw DomainError("clock state must be pure");
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.data());
  return es.eigenvectors().col(es.eigenvalues().size() - 1);
}

}  // namespace

// ---------------------------------------------------------------------------

QuasiIdealClock::QuasiIdealClock(int d, double T0, std::optional<double> sigma,
                                 std::optional<double> n0, double k0)
    : d_(d), T0_(T0), k0_(k0) {
  if (d < 4) throw DomainError("QuasiIdealClock: d >= 4 required");
  if (!(T0 > 0.0) || !std::isfinite(T0)) throw DomainError("QuasiIdealClock: T0 > 0 required");
  if (!std::isfinite(k0)) throw DomainError("QuasiIdealClock: k0 must be finite");
  sigma_ = sigma.value_or(std::sqrt(static_cast<double>(d)));
  n0_ = n0.value_or(d / 2.0);
  if (!(sigma_ > 0.0 && sigma_ < d)) throw DomainError("QuasiIdealClock: sigma in (0, d) required");
  if (!(n0_ > 0.0 && n0_ < d - 1)) throw DomainError("QuasiIdealClock: n0 in (0, d-1) required");
  omega_ = kTwoPi / T0;
  theta_.resize(d, d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int n = 0; n < d; ++n)
    for (int k = 0; k < d; ++k)
      theta_(n, k) = std::polar(s, -kTwoPi * static_cast<double>((static_cast<long>(n) * k) % d) / d);
  Eigen::VectorXd e(d);
  for (int n = 0; n < d; ++n) e(n) = omega_ * n;
  h_ = HermitianOp::diagonal(e);
}

std::vector<int> QuasiIdealClock::window(double center) const {
  const double half = d_ / 2.0;
  const int lo = static_cast<int>(std::floor(center - half)) + 1;
  std::vector<int> ks;
  ks.reserve(d_);
  for (int k = lo - 1; k <= lo + d_; ++k) {
    const double diff = center - k;
    if (diff >= -half && diff < half) ks.push_back(k);
  }
  return ks;
}

double QuasiIdealClock::normalization(double center) const {
  double s = 0.0;
  for (int k : window(center)) {
    const double x = k - center;
    s += std::exp(-kTwoPi * x * x / (sigma_ * sigma_));
  }
  return 1.0 / std::sqrt(s);
}

cplx QuasiIdealClock::amplitude(double center, double x) const {
  const double dx = x - center;
  return normalization(center) * std::exp(-kPi * dx * dx / (sigma_ * sigma_)) *
         std::polar(1.0, kTwoPi * n0_ * dx / d_);
}

Vec QuasiIdealClock::gaussian_ket(double center, const std::function<cplx(int)>& phase) const {
  Vec ket = Vec::Zero(d_);
  const double a = normalization(center);
  for (int k : window(center)) {
    const double dx = k - center;
    cplx amp = a * std::exp(-kPi * dx * dx / (sigma_ * sigma_)) *
               std::polar(1.0, kTwoPi * n0_ * dx / d_);
    if (phase) amp *= phase(k);
    const int col = ((k % d_) + d_) % d_;
    ket += amp * theta_.col(col);
  }
  return ket;
}

Vec QuasiIdealClock::free_phases(double t) const {
  Vec p(d_);
  for (int n = 0; n < d_; ++n) p(n) = std::polar(1.0, -t * omega_ * n);
  return p;
}

Vec quasi_ideal_ket(const QuasiIdealClock& clock) { return clock.gaussian_ket(clock.k0()); }

DensityMatrix quasi_ideal_state(const QuasiIdealClock& clock) {
  return DensityMatrix::pure(quasi_ideal_ket(clock));
}

GammaSnap snap_gamma(int d, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw DomainError("gamma_psi in (0, 1] required");
  const int m_lo = (d % 2 == 0) ? 4 : 3;
  int best = m_lo;
  double best_err = kInf;
  for (int m = m_lo; m <= d + 2; m += 2) {
    const double err = std::abs((m - 2.0) / d - gamma);
    if (err < best_err) {
      best_err = err;
      best = m;
    }
  }
  const double v = (best - 2.0) / d;
  return {v, best, std::abs(v - gamma) > 1e-12};
}

// ---------------------------------------------------------------------------

PotentialSpec::PotentialSpec(double x0, double half_width, double x_vr)
    : x0_(x0), w_(half_width), x_vr_(x_vr) {
  if (!std::isfinite(x0)) throw DomainError("PotentialSpec: x0 must be finite");
  if (!(half_width > 0.0 && half_width <= kPi))
    throw DomainError("PotentialSpec: half_width in (0, pi] required");
  if (!(x_vr > 0.0 && x_vr <= kPi)) throw DomainError("PotentialSpec: x_vr in (0, pi] required");
  norm_ = w_ * mollifier_mass();
  period_integral_ = adaptive_simpson<double>([this](double x) { return V0(x); }, x0_ - w_,
                                              x0_ + w_, 1e-13, 16);
  if (std::abs(period_integral_ - 1.0) > 1e-10)
    throw DomainError("PotentialSpec: V0 must integrate to 1 over one period");
  tilde_eps_v_ = x_vr_ >= w_ ? 0.0 : std::max(0.0, 1.0 - integral(x0_ - x_vr_, x0_ + x_vr_));
}

PotentialSpec PotentialSpec::zero() {
  PotentialSpec s;
  s.zero_ = true;
  return s;
}

PotentialSpec PotentialSpec::matched(const QuasiIdealClock& clock, double t1, double t2,
                                     double gamma) {
  if (!(0.0 <= t1 && t1 < t2 && t2 <= clock.T0()))
    throw DomainError("PotentialSpec::matched: 0 <= t1 < t2 <= T0 required");
  const GammaSnap g = snap_gamma(clock.d(), gamma);
  const double scale = kTwoPi / clock.T0();
  const double x0 = 0.5 * (t1 + t2) * scale;
  const double x_vr = 0.5 * (t2 - t1) * scale - kPi * g.value;
  if (!(x_vr > 0.0))
    throw DomainError("PotentialSpec::matched: window too short for gamma_psi (x_vr <= 0)");
  PotentialSpec s(x0, std::min(x_vr, kPi), std::min(x_vr, kPi));
  s.gamma_ = g;
  return s;
}

double PotentialSpec::V0(double x) const {
  if (zero_) return 0.0;
  return mollifier(wrap(x - x0_) / w_) / norm_;
}

double PotentialSpec::cumulative(double x) const {
  // x in [x0 - pi, x0 + pi)
  if (x <= x0_ - w_) return 0.0;
  if (x >= x0_ + w_) return period_integral_;
  return adaptive_simpson<double>([this](double y) { return V0(y); }, x0_ - w_, x, 1e-13, 8);
}

double PotentialSpec::integral(double a, double b) const {
  if (zero_ || a == b) return 0.0;
  auto full = [this](double x) {
    const double n = std::floor((x - (x0_ - kPi)) / kTwoPi);
    return n * period_integral_ + cumulative(x - n * kTwoPi);
  };
  return full(b) - full(a);
}

HermitianOp potential_operator(const PotentialSpec& spec, const QuasiIdealClock& clock) {
  const int d = clock.d();
  if (spec.is_zero()) return HermitianOp::zero({d});
  if (std::abs(spec.period_integral() - 1.0) > 1e-10)
    throw DomainError("potential_operator: spec is not normalised");
  Eigen::VectorXd diag(d);
  for (int k = 0; k < d; ++k)
    diag(k) = (d / clock.T0()) * (kTwoPi / d) * spec.V0(kTwoPi * k / d);
  const Mat& f = clock.theta_basis();
  return HermitianOp(f * diag.cast<cplx>().asDiagonal() * f.adjoint(), {d});
}

ClockErrors clock_error_norms(const QuasiIdealClock& clock, const PotentialSpec& spec,
                              double omega_n, double t) {
  if (!(t >= 0.0 && t <= clock.T0() * (1.0 + 1e-12)))
    throw DomainError("clock_error_norms: t in [0, T0] required");
  if (!(std::abs(omega_n) <= kPi)) throw DomainError("clock_error_norms: Omega in [-pi, pi] required");
  const int d = clock.d();
  const Vec psi = quasi_ideal_ket(clock);
  const double shift = t * d / clock.T0();
  const double center = clock.k0() + shift;

  const Vec free = clock.free_phases(t).cwiseProduct(psi);
  const Vec pred_free = clock.gaussian_ket(center);

  const HermitianOp gen = clock.hamiltonian() + potential_operator(spec, clock) * omega_n;
  const Vec gamma = Spectral(gen).propagator(t) * psi;
  const Vec pred_gamma = clock.gaussian_ket(center, [&](int k) {
    const double th = omega_n * spec.integral(kTwoPi * (k - shift) / d, kTwoPi * k / d);
    return std::polar(1.0, -th);
  });
  return {(free - pred_free).norm(), (gamma - pred_gamma).norm()};
}

LRValue epsilon_LR(const QuasiIdealClock& clock, double gamma, double t) {
  const GammaSnap g = snap_gamma(clock.d(), gamma);
  const double d = clock.d();
  const double s = t * d / clock.T0();
  const double kbar = std::floor(-d / 2.0 + clock.k0() + s + 1.0) + d / 2.0 - clock.k0() - s;
  const double a = clock.normalization(clock.k0());
  const double z = g.value * d / 2.0 - kbar;
  const double sig2 = clock.sigma() * clock.sigma();
  const double den = -std::expm1(-4.0 * kPi * std::abs(z) / sig2);
  const double v = den > 0.0 ? a * a * std::exp(-kTwoPi * z * z / sig2) / den : kInf;
  return {v, g.value, g.snapped, kbar};
}

double disturbance_bound(double tilde_eps_V, double eps_LR, double eps_c, double eps_nu) {
  if (tilde_eps_V < 0 || eps_LR < 0 || eps_c < 0 || eps_nu < 0)
    throw DomainError("disturbance_bound: inputs must be >= 0");
  const double pe = kPi * tilde_eps_V;
  return 2.0 * std::sqrt(4.0 * pe * pe + 16.0 * eps_LR + 10.0 * eps_LR * eps_LR +
                         4.0 * (eps_c + eps_nu + eps_c * eps_c * eps_nu) + 6.0 * eps_c * eps_nu);
}

cplx delta_quantity(const DensityMatrix& clock_state, const HermitianOp& h_cl,
                    const HermitianOp& h_cl_int, double theta, double t, double x, double y) {
  if (!(std::abs(x) <= kPi && std::abs(y) <= kPi))
    throw DomainError("delta_quantity: x, y in [-pi, pi] required");
  if (h_cl.dim() != clock_state.dim() || h_cl_int.dim() != clock_state.dim())
    throw DomainError("delta_quantity: dimension mismatch");
  const Vec psi = dominant_ket(clock_state);
  const Vec a = Spectral(h_cl + h_cl_int * x).propagator(t) * psi;
  const Vec b = Spectral(h_cl + h_cl_int * y).propagator(t) * psi;
  return std::polar(1.0, -(x - y) * theta) * a.dot(b);
}

DeltaGrid::DeltaGrid(const DensityMatrix& clock_state, const HermitianOp& h_cl,
                     const HermitianOp& h_cl_int, int n)
    : psi_(dominant_ket(clock_state)) {
  if (n < 2) throw DomainError("DeltaGrid: n >= 2 required");
  for (int i = 0; i < n; ++i) {
    const double x = -kPi + kTwoPi * i / (n - 1);
    xs_.push_back(x);
    gens_.emplace_back((h_cl + h_cl_int * x).data());
  }
}

double DeltaGrid::spacing() const { return kTwoPi / (size() - 1); }

std::vector<Vec> DeltaGrid::evolved(double t) const {
  std::vector<Vec> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.propagator(t) * psi_);
  return out;
}

cplx DeltaGrid::value(double theta, double t, int i, int j) const {
  const Vec a = gens_[i].propagator(t) * psi_;
  const Vec b = gens_[j].propagator(t) * psi_;
  return std::polar(1.0, -(xs_[i] - xs_[j]) * theta) * a.dot(b);
}

double DeltaGrid::max_deviation(double theta, double t) const {
  const auto v = evolved(t);
  double m = 0.0;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      const cplx delta = std::polar(1.0, -(xs_[i] - xs_[j]) * theta) * v[i].dot(v[j]);
      m = std::max(m, std::abs(1.0 - delta * delta));
    }
  return m;
}

// ---------------------------------------------------------------------------

MomentumClockSpec::MomentumClockSpec(Interval psi_support, Profile psi, Interval g_support,
                                     Profile g, double tol)
    : psi_sup_(psi_support), g_sup_(g_support), psi_(std::move(psi)), g_(std::move(g)) {
  if (!(psi_sup_.lo < psi_sup_.hi) || !(g_sup_.lo < g_sup_.hi) || !std::isfinite(psi_sup_.lo) ||
      !std::isfinite(psi_sup_.hi) || !std::isfinite(g_sup_.lo) || !std::isfinite(g_sup_.hi))
    throw DomainError("MomentumClockSpec: supports must be finite intervals");
  const double n_psi = adaptive_simpson<double>([this](double x) { return density(x); },
                                                psi_sup_.lo, psi_sup_.hi, 1e-13, 16);
  const double n_g = g_integral(g_sup_.lo, g_sup_.hi);
  g_total_ = n_g;
  if (std::abs(n_psi - 1.0) > tol) throw DomainError("MomentumClockSpec: psi must be normalised");
  if (std::abs(n_g - 1.0) > tol) throw DomainError("MomentumClockSpec: g must have unit integral");
}

MomentumClockSpec MomentumClockSpec::bumps(Interval psi_support, Interval g_support) {
  auto profile = [](Interval s, bool root) {
    const double c = 0.5 * (s.lo + s.hi), w = 0.5 * (s.hi - s.lo);
    const double mass = w * mollifier_mass();
    return [c, w, mass, root](double x) {
      const double v = mollifier((x - c) / w) / mass;
      return root ? std::sqrt(v) : v;
    };
  };
  return MomentumClockSpec(psi_support, profile(psi_support, true), g_support,
                           profile(g_support, false));
}

double MomentumClockSpec::density(double x) const {
  if (x < psi_sup_.lo || x > psi_sup_.hi) return 0.0;
  const double v = psi_(x);
  return v * v;
}

double MomentumClockSpec::g(double x) const {
  if (x < g_sup_.lo || x > g_sup_.hi) return 0.0;
  return g_(x);
}

double MomentumClockSpec::g_integral(double a, double b) const {
  const double lo = std::max(a, g_sup_.lo), hi = std::min(b, g_sup_.hi);
  if (!(lo < hi)) return 0.0;
  // windows covering the whole support are the common case; reuse the total
  if (g_total_ && lo == g_sup_.lo && hi == g_sup_.hi) return *g_total_;
  return adaptive_simpson<double>([this](double x) { return g(x); }, lo, hi, 1e-13, 8);
}

cplx momentum_delta(const MomentumClockSpec& spec, double t, double z, double y, double theta,
                    double tol) {
  const auto integrand = [&](double x) -> cplx {
    const double w = spec.density(x);
    if (w == 0.0) return cplx(0.0, 0.0);
    return w * std::polar(1.0, -(y - z) * spec.g_integral(x, x + t));
  };
  const cplx integral = adaptive_simpson<cplx>(integrand, spec.psi_support().lo,
                                               spec.psi_support().hi, tol, 16);
  return std::polar(1.0, -(z - y) * theta) * integral;
}

}  // namespace thermoclock
