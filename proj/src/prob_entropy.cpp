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

#include "thermoclock/prob_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace thermoclock {

namespace {

constexpr double kClamp = 1e-300;
const double kE = std::exp(1.0);

// ln sum_{p_i > 0} p_i^a, stable for large |a|.
double log_sum_pow(const Eigen::VectorXd& p, double a) {
  double m = -kInf;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) m = std::max(m, a * std::log(p[i]));
  if (m == -kInf) return -kInf;
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) s += std::exp(a * std::log(p[i]) - m);
  return m + std::log(s);
}

double sum_pow(const Eigen::VectorXd& p, double a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) s += std::pow(p[i], a);
  return s;
}

bool has_zero(const Eigen::VectorXd& p) { return (p.array() == 0.0).any(); }

// -x ln x with the 0 ln 0 = 0 convention.
double neg_xlogx(double x) { return x > 0.0 ? -x * std::log(x) : 0.0; }

void require_same_dim(const ProbVec& p, const ProbVec& q, const char* what) {
  if (p.dim() != q.dim())
    throw DomainError(std::string(what) + ": p and q must have the same dimension");
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

ProbVec::ProbVec(Eigen::VectorXd entries, double tol) : p_(std::move(entries)) {
  if (p_.size() < 2) throw DomainError("ProbVec: dim >= 2 required");
  for (Eigen::Index i = 0; i < p_.size(); ++i) {
    if (!std::isfinite(p_[i])) throw DomainError("ProbVec: entries must be finite");
    if (p_[i] < 0.0) throw DomainError("ProbVec: entries must be >= 0");
    if (p_[i] < kClamp) p_[i] = 0.0;
  }
  if (std::abs(p_.sum() - 1.0) > tol)
    throw DomainError("ProbVec: entries must sum to 1 (got " + fmt(p_.sum()) + ")");
}

ProbVec::ProbVec(std::initializer_list<double> entries)
    : ProbVec(Eigen::Map<const Eigen::VectorXd>(entries.begin(),
                                                 static_cast<Eigen::Index>(entries.size()))) {}

ProbVec ProbVec::uniform(Eigen::Index d) {
  return ProbVec(Eigen::VectorXd::Constant(d, 1.0 / static_cast<double>(d)));
}

ProbVec ProbVec::from_weights(const Eigen::VectorXd& w) {
  Eigen::VectorXd v = w.cwiseMax(0.0);
  const double s = v.sum();
  if (!(s > 0.0)) throw DomainError("ProbVec::from_weights: weights must have positive mass");
  return ProbVec(v / s);
}

Eigen::VectorXd ProbVec::sorted_descending() const {
  Eigen::VectorXd s = p_;
  std::sort(s.data(), s.data() + s.size(), std::greater<double>());
  return s;
}

double l1_distance(const ProbVec& p, const ProbVec& q) {
  require_same_dim(p, q, "l1_distance");
  return (p.entries() - q.entries()).cwiseAbs().sum();
}

double shannon_entropy(const ProbVec& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.dim(); ++i) s += neg_xlogx(p[i]);
  return s;
}

double renyi_entropy(const ProbVec& p, double alpha) {
  if (std::isnan(alpha)) throw DomainError("renyi_entropy: alpha is NaN");
  if (alpha == 1.0) return shannon_entropy(p);
  if (alpha == kInf) return -std::log(p.max_entry());
  if (alpha == -kInf) return has_zero(p.entries()) ? -kInf : std::log(p.min_entry());
  if (alpha == 0.0) return std::log(static_cast<double>(p.rank()));
  if (alpha > 0.0) return log_sum_pow(p.entries(), alpha) / (1.0 - alpha);
  // sgn(alpha) = -1; a zero entry makes the sum infinite.
  if (has_zero(p.entries())) return -kInf;
  return -log_sum_pow(p.entries(), alpha) / (1.0 - alpha);
}

double tsallis_entropy(const ProbVec& p, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("tsallis_entropy: alpha > 0 required");
  if (alpha == 1.0) return shannon_entropy(p);
  if (alpha == kInf) return 0.0;
  return (1.0 - sum_pow(p.entries(), alpha)) / (alpha - 1.0);
}

double kl_divergence(const ProbVec& p, const ProbVec& q) {
  require_same_dim(p, q, "kl_divergence");
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.dim(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return kInf;
    s += p[i] * std::log(p[i] / q[i]);
  }
  return s;
}

double hellinger_divergence(const ProbVec& p, const ProbVec& q, double alpha) {
  require_same_dim(p, q, "hellinger_divergence");
  if (std::isnan(alpha)) throw DomainError("hellinger_divergence: alpha is NaN");
  if (alpha == 1.0) return kl_divergence(p, q);
  if (std::isinf(alpha)) {
    if (alpha < 0) throw DomainError("hellinger_divergence: alpha = -inf not supported");
    return (p.entries() - q.entries()).cwiseAbs().maxCoeff() == 0.0 ? 0.0 : kInf;
  }
  const double sgn = alpha >= 0.0 ? 1.0 : -1.0;
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.dim(); ++i) {
    const double pi = p[i], qi = q[i];
    if (pi == 0.0 && qi == 0.0) continue;  // 0/0 = 0
    if (pi == 0.0) {
      if (alpha < 0.0) return sgn / (alpha - 1.0) * kInf;
      continue;  // 0^a = 0 for a > 0, and 0^0 = 0
    }
    if (qi == 0.0) {
      if (alpha > 1.0) return sgn / (alpha - 1.0) * kInf;
      continue;
    }
    s += std::exp(alpha * std::log(pi) + (1.0 - alpha) * std::log(qi));
  }
  return sgn / (alpha - 1.0) * (s - 1.0);
}

bool majorizes(const ProbVec& p, const ProbVec& q, double tol) {
  require_same_dim(p, q, "majorizes");
  const Eigen::VectorXd a = p.sorted_descending(), b = q.sorted_descending();
  double sa = 0.0, sb = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb - tol) return false;
  }
  return true;
}

AlphaGrid AlphaGrid::standard(int points, double lo, double hi) {
  AlphaGrid g;
  g.values.reserve(points);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < points; ++i) {
    const double a = std::exp(llo + (lhi - llo) * i / (points - 1));
    if (a != 1.0) g.values.push_back(a);
  }
  for (int i = 0; i < 100; ++i)
    g.nonpositive.push_back(-std::exp(lhi + (llo - lhi) * i / 99.0));
  return g;
}

void AlphaGrid::validate() const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i]))
      throw DomainError("AlphaGrid: values must be finite and > 0");
    if (values[i] == 1.0) throw DomainError("AlphaGrid: alpha = 1 belongs to the limit branch");
    if (i > 0 && !(values[i] > values[i - 1]))
      throw DomainError("AlphaGrid: values must be strictly increasing");
  }
  for (double a : nonpositive)
    if (!(a < 0.0) || !std::isfinite(a))
      throw DomainError("AlphaGrid: nonpositive entries must be finite and < 0");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::trumped: return "trumped";
    case Verdict::not_trumped: return "not_trumped";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

double trumping_monotone(const ProbVec& p, double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("trumping_monotone: alpha must be finite");
  const auto& v = p.entries();
  if (alpha > 1.0) return log_sum_pow(v, alpha);
  if (alpha == 1.0) return -shannon_entropy(p);
  if (alpha > 0.0) return -log_sum_pow(v, alpha);
  if (has_zero(v)) return kInf;
  if (alpha == 0.0) return -v.array().log().sum();
  return log_sum_pow(v, alpha);
}

Verdict trumping_check(const ProbVec& p_in, const ProbVec& q_in, const AlphaGrid& grid,
                       const TrumpingOptions& opt) {
  require_same_dim(p_in, q_in, "trumping_check");
  grid.validate();
  Eigen::VectorXd ps = p_in.sorted_descending(), qs = q_in.sorted_descending();
  if ((ps - qs).cwiseAbs().maxCoeff() <= 1e-12)
    throw DomainError("trumping_check: p and q must differ (up to permutation)");

  // Zeros shared by both vectors do not change any prefix sum; drop them so
  // that no component is simultaneously zero.
  const Eigen::Index zp = (ps.array() == 0.0).count(), zq = (qs.array() == 0.0).count();
  const Eigen::Index common = std::min(zp, zq);
  const Eigen::Index n = ps.size() - common;
  if (n < 2) return Verdict::not_trumped;
  const ProbVec p(ps.head(n), 1e-9), q(qs.head(n), 1e-9);

  if (majorizes(p, q)) return Verdict::trumped;
  if (p.rank() > q.rank()) return Verdict::not_trumped;   // alpha -> 0+
  if (p.max_entry() < q.max_entry()) return Verdict::not_trumped;  // alpha -> inf

  double min_rel = kInf;
  auto test = [&](double a) {
    const double fp = trumping_monotone(p, a), fq = trumping_monotone(q, a);
    if (fp == kInf && fq == kInf) return true;
    if (fq == kInf) return false;
    if (fp == kInf) return true;
    const double gap = fp - fq;
    const double scale = std::abs(fp) + std::abs(fq) + 1e-300;
    if (gap < -1e-12 * scale) return false;
    min_rel = std::min(min_rel, gap / scale);
    return true;
  };

  for (double a : grid.values)
    if (!test(a)) return Verdict::not_trumped;
  if (grid.include_one && !test(1.0)) return Verdict::not_trumped;
  // Non-positive alphas only enter when p has full rank.
  if (p.full_rank()) {
    if (grid.include_zero_limit && !test(0.0)) return Verdict::not_trumped;
    for (double a : grid.nonpositive)
      if (!test(a)) return Verdict::not_trumped;
  }
  if (grid.include_infinity && p.max_entry() == q.max_entry() &&
      (p.entries().array() == p.max_entry()).count() <=
          (q.entries().array() == q.max_entry()).count())
    return Verdict::inconclusive;
  return min_rel >= opt.margin ? Verdict::trumped : Verdict::inconclusive;
}

ProbVec smooth_toward_uniform(const ProbVec& q, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("smooth_toward_uniform: eps in (0,1] required");
  const ProbVec u = ProbVec::uniform(q.dim());
  if (l1_distance(q, u) < eps) return u;
  return ProbVec::from_weights((1.0 - eps) * q.entries() + eps * u.entries());
}

// ---------------------------------------------------------------------------
// Continuity bounds.

std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::tsallis_raw: return "tsallis_raw";
    case BoundKind::tsallis_low: return "tsallis_low";
    case BoundKind::tsallis_high: return "tsallis_high";
    case BoundKind::renyi_neg: return "renyi_neg";
    case BoundKind::renyi_low: return "renyi_low";
    case BoundKind::renyi_high: return "renyi_high";
    case BoundKind::renyi_mid_half1: return "renyi_mid_half1";
    case BoundKind::renyi_mid_12: return "renyi_mid_12";
    case BoundKind::lem_cont_half: return "lem_cont_half";
    case BoundKind::lem_cont_mid: return "lem_cont_mid";
    case BoundKind::lem_cont_geq2: return "lem_cont_geq2";
    case BoundKind::s_infty: return "s_infty";
  }
  return "?";
}

std::optional<BoundKind> bound_kind_from_string(std::string_view s) {
  for (BoundKind k : kAllBoundKinds)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

bool AlphaRange::contains(double a) const {
  const bool lo_ok = lo_closed ? a >= lo : a > lo;
  const bool hi_ok = hi_closed ? a <= hi : a < hi;
  return lo_ok && hi_ok;
}

BoundTarget BoundRegime::target() const {
  switch (kind) {
    case BoundKind::tsallis_raw:
    case BoundKind::tsallis_low:
    case BoundKind::tsallis_high:
    case BoundKind::lem_cont_half:
    case BoundKind::lem_cont_mid:
    case BoundKind::lem_cont_geq2:
      return BoundTarget::tsallis;
    default:
      return BoundTarget::renyi;
  }
}

AlphaRange BoundRegime::alpha_range() const {
  switch (kind) {
    case BoundKind::tsallis_raw: return {0.0, kInf, false, true};  // minus {1}
    case BoundKind::tsallis_low: return {0.0, 1.0, false, true};
    case BoundKind::tsallis_high: return {1.0, kInf, true, false};
    case BoundKind::renyi_neg: return {-kInf, -1.0, true, true};
    case BoundKind::renyi_low: return {0.0, 1.0, false, false};
    case BoundKind::renyi_high: return {1.0, kInf, false, true};
    case BoundKind::renyi_mid_half1: return {0.5, 1.0, true, false};
    case BoundKind::renyi_mid_12: return {1.0, 2.0, true, true};
    case BoundKind::lem_cont_half: return {0.0, 0.5, false, true};
    case BoundKind::lem_cont_mid: return {0.5, 2.0, true, true};
    case BoundKind::lem_cont_geq2: return {2.0, kInf, true, false};
    case BoundKind::s_infty: return {-kInf, kInf, true, true};
  }
  return {0, 0, false, false};
}

double BoundRegime::delta_max(double alpha, int d) const {
  const double dd = d;
  switch (kind) {
    case BoundKind::tsallis_low: return dd * std::pow(1.0 / (2.0 * kE * dd), 1.0 / alpha);
    case BoundKind::tsallis_high:
      return 1.0 / (2.0 * kE * std::ceil(alpha) * std::pow(dd, alpha));
    case BoundKind::renyi_mid_half1: return 1.0 / (16.0 * kE * kE * dd);
    case BoundKind::renyi_mid_12: return dd / (64.0 * kE * kE);
    case BoundKind::lem_cont_mid: return 1.0 / (32.0 * dd * dd);
    default: return 2.0;
  }
}

std::optional<std::string> BoundRegime::check(double alpha, double delta, int d) const {
  const std::string name(to_string(kind));
  if (d < 2) return name + ": requires d >= 2";
  if (!(delta >= 0.0 && delta <= 2.0)) return name + ": requires 0 <= delta <= 2";
  if (kind != BoundKind::s_infty) {
    if (std::isnan(alpha)) return name + ": alpha is NaN";
    const AlphaRange r = alpha_range();
    if (!r.contains(alpha) || (kind == BoundKind::tsallis_raw && alpha == 1.0)) {
      std::string lo = r.lo_closed ? "[" : "(";
      std::string hi = r.hi_closed ? "]" : ")";
      std::string extra = kind == BoundKind::tsallis_raw ? " minus {1}" : "";
      return name + ": requires alpha in " + lo + fmt(r.lo) + ", " + fmt(r.hi) + hi + extra;
    }
  }
  const double dm = delta_max(alpha, d);
  if (delta > dm) {
    switch (kind) {
      case BoundKind::tsallis_low: return name + ": requires delta <= d (1/(2 e d))^(1/alpha)";
      case BoundKind::tsallis_high:
        return name + ": requires delta <= 1/(2 e ceil(alpha) d^alpha)";
      case BoundKind::renyi_mid_half1: return name + ": requires delta <= 1/((4e)^2 d)";
      case BoundKind::renyi_mid_12: return name + ": requires delta <= d/(8e)^2";
      case BoundKind::lem_cont_mid: return name + ": requires delta <= 1/(32 d^2)";
      default: return name + ": delta out of range";
    }
  }
  return std::nullopt;
}

double continuity_bound(BoundRegime regime, int d, double alpha, double delta,
                        const BoundContext& ctx) {
  if (auto why = regime.check(alpha, delta, d)) throw DomainError(*why);
  const double dd = d;
  const double e = delta;
  switch (regime.kind) {
    case BoundKind::tsallis_raw: {
      if (alpha == kInf) return 2.0 * e;
      const double c = std::ceil(alpha);
      return 2.0 * c / std::abs(alpha - 1.0) * std::pow(dd, 1.0 - alpha / c) *
             std::pow(e, alpha / c);
    }
    case BoundKind::tsallis_low: {
      if (e == 0.0) return 0.0;
      const double ea = std::pow(e, alpha);
      return 4.0 * std::pow(dd, 1.0 - alpha) *
             ((1.5 / alpha + 1.0) * ea * std::log(dd) - ea * std::log(e));
    }
    case BoundKind::tsallis_high:
      return 8.0 * (e * std::log(std::pow(dd, 1.5) / 4.0) + neg_xlogx(e));
    case BoundKind::renyi_neg: {
      if (!ctx.min_entry || !(*ctx.min_entry > 0.0))
        throw DomainError("renyi_neg: requires min_entry > 0 over both vectors");
      const double c = alpha == -kInf ? 1.0 : std::abs(alpha) / (1.0 - alpha);
      return c * std::log1p(e / *ctx.min_entry);
    }
    case BoundKind::renyi_low: {
      const double f =
          ctx.renyi_alpha_of_p ? std::exp((alpha - 1.0) * *ctx.renyi_alpha_of_p) : 1.0;
      return f / (1.0 - alpha) * std::pow(dd, 1.0 - alpha) * std::pow(e, alpha);
    }
    case BoundKind::renyi_high: {
      const double c = alpha == kInf ? 1.0 : alpha / (alpha - 1.0);
      return c * std::log1p(e * dd);
    }
    case BoundKind::renyi_mid_half1: {
      const double s = std::sqrt(e);
      return 8.0 * dd * (6.0 * std::log(dd) - std::log(2.0)) * s + 4.0 * dd * neg_xlogx(s);
    }
    case BoundKind::renyi_mid_12: {
      const double s = std::sqrt(e);
      return 2.0 * std::sqrt(dd) *
             (e * std::log(dd) + s * 4.0 * dd * std::log(dd / 64.0) + 8.0 * dd * neg_xlogx(s));
    }
    case BoundKind::lem_cont_half: return 6.0 * dd * std::pow(e / dd, alpha);
    case BoundKind::lem_cont_mid: return 32.0 * dd * neg_xlogx(std::sqrt(e / dd));
    case BoundKind::lem_cont_geq2: return 6.0 * std::sqrt(dd * e);
    case BoundKind::s_infty: return dd * e;
  }
  return kInf;
}

double sum_diff_bound(int d, double alpha, double delta) {
  if (d < 1) throw DomainError("sum_diff_bound: requires d >= 1");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("sum_diff_bound: requires finite alpha > 0");
  if (!(delta >= 0.0 && delta <= 2.0)) throw DomainError("sum_diff_bound: requires 0 <= delta <= 2");
  const double c = std::ceil(alpha);
  return 2.0 * c * std::pow(static_cast<double>(d), 1.0 - alpha / c) * std::pow(delta, alpha / c);
}

}  // namespace thermoclock
