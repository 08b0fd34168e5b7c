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

#ifndef THERMOCLOCK_PROB_ENTROPY_HPP
#define THERMOCLOCK_PROB_ENTROPY_HPP

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace thermoclock {

// Raised when an argument falls outside the domain of an operation. The
// message names the precondition that failed.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// A normalised probability vector. Entries below 1e-300 are stored as exact
// zeros so the 0^0 / 0 ln 0 conventions apply cleanly.
class ProbVec {
 public:
  explicit ProbVec(Eigen::VectorXd entries, double tol = 1e-12);
  ProbVec(std::initializer_list<double> entries);

  static ProbVec uniform(Eigen::Index d);
  // Renormalises before validating; for vectors that are a probability vector
  // up to floating-point drift (e.g. eigenvalues of a density matrix).
  static ProbVec from_weights(const Eigen::VectorXd& w);

  const Eigen::VectorXd& entries() const { return p_; }
  Eigen::Index dim() const { return p_.size(); }
  double operator[](Eigen::Index i) const { return p_[i]; }

  Eigen::VectorXd sorted_descending() const;
  double max_entry() const { return p_.maxCoeff(); }
  double min_entry() const { return p_.minCoeff(); }
  Eigen::Index rank() const { return (p_.array() > 0.0).count(); }
  bool full_rank() const { return rank() == dim(); }

 private:
  Eigen::VectorXd p_;
};

// l1 distance, not halved.
double l1_distance(const ProbVec& p, const ProbVec& q);

// alpha may be any real, +inf or -inf; alpha == 1 takes the Shannon branch.
double renyi_entropy(const ProbVec& p, double alpha);
double shannon_entropy(const ProbVec& p);
// alpha > 0 (+inf allowed, giving 0).
double tsallis_entropy(const ProbVec& p, double alpha);
double kl_divergence(const ProbVec& p, const ProbVec& q);
double hellinger_divergence(const ProbVec& p, const ProbVec& q, double alpha);

bool majorizes(const ProbVec& p, const ProbVec& q, double tol = 1e-12);

struct AlphaGrid {
  std::vector<double> values;  // strictly increasing, none equal to 1
  bool include_zero_limit = true;   // alpha -> 0+
  bool include_one = true;          // Shannon branch
  bool include_infinity = true;     // alpha -> infinity (min-entropy)
  // Non-positive alphas are only used when p is full rank.
  std::vector<double> nonpositive;

  // 400 log-spaced points on [1e-3, 50] plus the three limits.
  static AlphaGrid standard(int points = 400, double lo = 1e-3, double hi = 50.0);
  void validate() const;
};

enum class Verdict { trumped, not_trumped, inconclusive };
std::string_view to_string(Verdict v);

// f_alpha oriented so that p trumps q iff f_alpha(p) > f_alpha(q) for all
// alpha: log sum p^a for a > 1 and a < 0, -log sum p^a on (0,1), -S at 1 and
// -sum ln p at 0. Returns +inf where the sum diverges.
double trumping_monotone(const ProbVec& p, double alpha);

struct TrumpingOptions {
  double margin = 1e-9;  // minimum relative gap for a positive verdict
};

Verdict trumping_check(const ProbVec& p, const ProbVec& q, const AlphaGrid& grid,
                       const TrumpingOptions& opt = {});

ProbVec smooth_toward_uniform(const ProbVec& q, double eps);

enum class BoundKind {
  tsallis_raw,
  tsallis_low,
  tsallis_high,
  renyi_neg,
  renyi_low,
  renyi_high,
  renyi_mid_half1,
  renyi_mid_12,
  lem_cont_half,
  lem_cont_mid,
  lem_cont_geq2,
  s_infty,
};

inline constexpr BoundKind kAllBoundKinds[] = {
    BoundKind::tsallis_raw,     BoundKind::tsallis_low,   BoundKind::tsallis_high,
    BoundKind::renyi_neg,       BoundKind::renyi_low,     BoundKind::renyi_high,
    BoundKind::renyi_mid_half1, BoundKind::renyi_mid_12,  BoundKind::lem_cont_half,
    BoundKind::lem_cont_mid,    BoundKind::lem_cont_geq2, BoundKind::s_infty,
};

std::string_view to_string(BoundKind k);
std::optional<BoundKind> bound_kind_from_string(std::string_view s);

// Which entropy family a regime bounds.
enum class BoundTarget { tsallis, renyi };

// Extra data some regimes need. renyi_low uses e^{(a-1) S_a(p)}, which is at
// most 1, so the default is the conservative factor. renyi_neg needs the
// smallest entry over both vectors.
struct BoundContext {
  std::optional<double> renyi_alpha_of_p;
  std::optional<double> min_entry;
};

struct AlphaRange {
  double lo, hi;
  bool lo_closed, hi_closed;
  bool contains(double a) const;
};

struct BoundRegime {
  BoundKind kind;

  BoundTarget target() const;
  AlphaRange alpha_range() const;
  // Largest admissible delta for (alpha, d); +inf when unconstrained.
  double delta_max(double alpha, int d) const;
  // Empty when (alpha, delta, d) is admissible, otherwise the failed precondition.
  std::optional<std::string> check(double alpha, double delta, int d) const;
  bool valid(double alpha, double delta, int d) const { return !check(alpha, delta, d); }
};

double continuity_bound(BoundRegime regime, int d, double alpha, double delta,
                        const BoundContext& ctx = {});

double sum_diff_bound(int d, double alpha, double delta);

}  // namespace thermoclock

#endif  // THERMOCLOCK_PROB_ENTROPY_HPP
