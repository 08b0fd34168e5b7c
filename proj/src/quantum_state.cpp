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

#include "thermoclock/quantum_state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace thermoclock {

namespace {

Dims resolve_dims(const Mat& m, Dims dims, const char* what) {
  if (m.rows() != m.cols()) throw DomainError(std::string(what) + ": matrix must be square");
  if (dims.empty()) dims = {m.rows()};
  for (auto d : dims)
    if (d < 1) throw DomainError(std::string(what) + ": factor dims must be positive");
  if (dims_product(dims) != m.rows())
    throw DomainError(std::string(what) + ": product of factor_dims must equal matrix dimension");
  return dims;
}

void validate_density(const Mat& m, double tol) {
  if (!m.allFinite()) throw DomainError("DensityMatrix: entries must be finite");
  if (hermiticity_error(m) > tol) throw DomainError("DensityMatrix: must be Hermitian");
  if (std::abs(m.trace() - cplx(1.0, 0.0)) > tol)
    throw DomainError("DensityMatrix: trace must be 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw DomainError("DensityMatrix: must be positive semidefinite");
}

// Row-major multi-index strides.
std::vector<Eigen::Index> strides_of(const Dims& dims) {
  std::vector<Eigen::Index> s(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) s[k] = s[k + 1] * dims[k + 1];
  return s;
}

}  // namespace

Eigen::Index dims_product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), Eigen::Index{1}, std::multiplies<>());
}

// ---------------------------------------------------------------------------

HermitianOp::HermitianOp(Mat data, Dims factor_dims, double tol)
    : m_(std::move(data)), dims_(resolve_dims(m_, std::move(factor_dims), "HermitianOp")) {
  if (!m_.allFinite()) throw DomainError("HermitianOp: entries must be finite");
  if (hermiticity_error(m_) > tol) throw DomainError("HermitianOp: must be Hermitian");
  m_ = (0.5 * (m_ + m_.adjoint())).eval();
}

HermitianOp::HermitianOp(Mat data) : HermitianOp(std::move(data), {}) {}

HermitianOp HermitianOp::zero(const Dims& dims) {
  const auto n = dims_product(dims);
  return HermitianOp(Mat::Zero(n, n), dims);
}

HermitianOp HermitianOp::identity(const Dims& dims) {
  const auto n = dims_product(dims);
  return HermitianOp(Mat::Identity(n, n), dims);
}

HermitianOp HermitianOp::diagonal(const Eigen::VectorXd& diag) {
  return HermitianOp(Mat(diag.cast<cplx>().asDiagonal()));
}

HermitianOp HermitianOp::operator+(const HermitianOp& o) const {
  if (dim() != o.dim()) throw DomainError("HermitianOp: dimension mismatch");
  return HermitianOp(m_ + o.m_, dims_);
}

HermitianOp HermitianOp::operator-(const HermitianOp& o) const {
  if (dim() != o.dim()) throw DomainError("HermitianOp: dimension mismatch");
  return HermitianOp(m_ - o.m_, dims_);
}

HermitianOp HermitianOp::operator*(double s) const { return HermitianOp(m_ * s, dims_); }

UnitaryOp::UnitaryOp(Mat data, double tol) : m_(std::move(data)) {
  if (m_.rows() != m_.cols()) throw DomainError("UnitaryOp: matrix must be square");
  const Mat e = m_.adjoint() * m_ - Mat::Identity(m_.rows(), m_.cols());
  if (operator_norm(e) > tol) throw DomainError("UnitaryOp: U^dagger U must equal identity");
}

DensityMatrix::DensityMatrix(Mat data, Dims factor_dims, double tol)
    : m_(std::move(data)), dims_(resolve_dims(m_, std::move(factor_dims), "DensityMatrix")) {
  validate_density(m_, tol);
  m_ = (0.5 * (m_ + m_.adjoint())).eval();
}

DensityMatrix::DensityMatrix(Mat data) : DensityMatrix(std::move(data), {}) {}

DensityMatrix DensityMatrix::trusted(Mat data, Dims factor_dims) {
  DensityMatrix r;
  r.dims_ = resolve_dims(data, std::move(factor_dims), "DensityMatrix");
#ifndef NDEBUG
  validate_density(data, 1e-9);
#endif
  r.m_ = std::move(data);
  return r;
}

DensityMatrix DensityMatrix::pure(const Vec& ket, Dims factor_dims) {
  const double n = ket.norm();
  if (!(n > 0.0)) throw DomainError("DensityMatrix::pure: ket must be nonzero");
  const Vec k = ket / n;
  return DensityMatrix(k * k.adjoint(), std::move(factor_dims));
}

DensityMatrix DensityMatrix::maximally_mixed(const Dims& dims) {
  const auto n = dims_product(dims);
  return DensityMatrix(Mat::Identity(n, n) / static_cast<double>(n), dims);
}

DensityMatrix DensityMatrix::diagonal(const ProbVec& p) {
  return DensityMatrix(Mat(p.entries().cast<cplx>().asDiagonal()));
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Mat> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

ProbVec DensityMatrix::spectrum() const {
  Eigen::VectorXd ev = eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev[i]) < 1e-14) ev[i] = 0.0;
  return ProbVec::from_weights(ev);
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

bool DensityMatrix::full_rank(double tol) const { return eigenvalues().minCoeff() > tol; }

// ---------------------------------------------------------------------------

DensityMatrix compose(const DensityMatrix& a, const DensityMatrix& b) {
  Dims d = a.factor_dims();
  d.insert(d.end(), b.factor_dims().begin(), b.factor_dims().end());
  return DensityMatrix::trusted(kron(a.data(), b.data()), d);
}

HermitianOp compose(const HermitianOp& a, const HermitianOp& b) {
  Dims d = a.factor_dims();
  d.insert(d.end(), b.factor_dims().begin(), b.factor_dims().end());
  return HermitianOp(kron(a.data(), b.data()), d);
}

Mat partial_trace(const Mat& m, const Dims& dims, const std::vector<int>& keep_in) {
  const int nf = static_cast<int>(dims.size());
  if (keep_in.empty()) throw DomainError("reduce: keep set must be non-empty");
  std::vector<int> keep = keep_in;
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw DomainError("reduce: keep set has duplicate indices");
  for (int k : keep)
    if (k < 0 || k >= nf) throw DomainError("reduce: keep index out of range");
  if (static_cast<int>(keep.size()) == nf) return m;

  std::vector<bool> kept(nf, false);
  for (int k : keep) kept[k] = true;
  Dims kd, td;
  for (int f = 0; f < nf; ++f) (kept[f] ? kd : td).push_back(dims[f]);
  const Eigen::Index nk = dims_product(kd), nt = dims_product(td);
  const auto full_s = strides_of(dims);
  const auto ks = strides_of(kd), ts = strides_of(td);

  // full index for every (kept, traced) pair
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(nk * nt));
  for (Eigen::Index a = 0; a < nk; ++a) {
    for (Eigen::Index t = 0; t < nt; ++t) {
      Eigen::Index full = 0;
      int ik = 0, it = 0;
      for (int f = 0; f < nf; ++f) {
        Eigen::Index digit;
        if (kept[f]) {
          digit = (a / ks[ik]) % kd[ik];
          ++ik;
        } else {
          digit = (t / ts[it]) % td[it];
          ++it;
        }
        full += digit * full_s[f];
      }
      idx[static_cast<std::size_t>(a * nt + t)] = full;
    }
  }
  Mat out = Mat::Zero(nk, nk);
  for (Eigen::Index a = 0; a < nk; ++a)
    for (Eigen::Index b = 0; b < nk; ++b) {
      cplx s = 0.0;
      for (Eigen::Index t = 0; t < nt; ++t)
        s += m(idx[static_cast<std::size_t>(a * nt + t)], idx[static_cast<std::size_t>(b * nt + t)]);
      out(a, b) = s;
    }
  return out;
}

DensityMatrix reduce(const DensityMatrix& rho, const std::vector<int>& keep) {
  Mat r = partial_trace(rho.data(), rho.factor_dims(), keep);
  std::vector<int> k = keep;
  std::sort(k.begin(), k.end());
  Dims d;
  for (int i : k) d.push_back(rho.factor_dims()[i]);
  return DensityMatrix::trusted(std::move(r), d);
}

Mat permute_factors(const Mat& m, const Dims& dims, const std::vector<int>& perm) {
  const int nf = static_cast<int>(dims.size());
  if (static_cast<int>(perm.size()) != nf) throw DomainError("permute_factors: bad permutation");
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < nf; ++i)
    if (check[i] != i) throw DomainError("permute_factors: bad permutation");
  Dims nd(nf);
  for (int i = 0; i < nf; ++i) nd[i] = dims[perm[i]];
  const auto s_old = strides_of(dims), s_new = strides_of(nd);
  const Eigen::Index n = m.rows();
  std::vector<Eigen::Index> map(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index j = 0;
    for (int k = 0; k < nf; ++k) {
      const Eigen::Index digit = (i / s_old[perm[k]]) % dims[perm[k]];
      j += digit * s_new[k];
    }
    map[static_cast<std::size_t>(i)] = j;
  }
  Mat out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]) = m(i, j);
  return out;
}

HermitianOp embed(const HermitianOp& a, const Dims& dims, int index) {
  if (index < 0 || index >= static_cast<int>(dims.size()))
    throw DomainError("embed: factor index out of range");
  if (a.dim() != dims[index]) throw DomainError("embed: operator dimension mismatch");
  Eigen::Index left = 1, right = 1;
  for (int i = 0; i < index; ++i) left *= dims[i];
  for (int i = index + 1; i < static_cast<int>(dims.size()); ++i) right *= dims[i];
  Mat m = kron(kron(Mat::Identity(left, left), a.data()), Mat::Identity(right, right));
  return HermitianOp(std::move(m), dims);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DomainError("trace_distance: dimension mismatch");
  return trace_norm_hermitian(rho.data() - sigma.data());
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DomainError("fidelity: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.data());
  const auto& ev = es.eigenvalues();
  // rank-1 shortcut: F = sqrt(<psi|sigma|psi>)
  if ((ev.array() > 1e-12).count() == 1) {
    Eigen::Index imax;
    ev.maxCoeff(&imax);
    const Vec psi = es.eigenvectors().col(imax);
    const double v = (psi.adjoint() * sigma.data() * psi)(0, 0).real();
    return std::min(1.0, std::sqrt(std::max(0.0, v)));
  }
  Vec sq(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) sq(i) = std::sqrt(std::max(0.0, ev(i)));
  const Mat s = es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().adjoint();
  const Mat inner = s * sigma.data() * s;
  Eigen::SelfAdjointEigenSolver<Mat> es2(Mat(0.5 * (inner + inner.adjoint())),
                                         Eigen::EigenvaluesOnly);
  double f = 0.0;
  for (Eigen::Index i = 0; i < es2.eigenvalues().size(); ++i)
    f += std::sqrt(std::max(0.0, es2.eigenvalues()(i)));
  return std::min(1.0, f);
}

DensityMatrix gibbs_state(const HermitianOp& h, double beta) {
  if (!std::isfinite(beta) || beta < 0.0) throw DomainError("gibbs_state: finite beta >= 0 required");
  Eigen::SelfAdjointEigenSolver<Mat> es(h.data());
  const auto& ev = es.eigenvalues();
  const double emin = ev.minCoeff();
  Eigen::VectorXd w = (-beta * (ev.array() - emin)).exp();
  w /= w.sum();
  Mat g = es.eigenvectors() * w.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
  return DensityMatrix(std::move(g), h.factor_dims());
}

Spectral::Spectral(const HermitianOp& h) : es_(h.data()) {}
Spectral::Spectral(const Mat& h) : es_(h) {}

Mat Spectral::propagator(double t) const {
  const auto& ev = es_.eigenvalues();
  Vec ph(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) ph(i) = std::polar(1.0, -t * ev(i));
  return es_.eigenvectors() * ph.asDiagonal() * es_.eigenvectors().adjoint();
}

DensityMatrix conjugate(const DensityMatrix& rho, const Mat& u) {
  if (u.rows() != rho.dim()) throw DomainError("conjugate: dimension mismatch");
  Mat r = u * rho.data() * u.adjoint();
  r = (0.5 * (r + r.adjoint())).eval();
  return DensityMatrix::trusted(std::move(r), rho.factor_dims());
}

DensityMatrix evolve(const DensityMatrix& rho, const Spectral& h, double t) {
  return conjugate(rho, h.propagator(t));
}

DensityMatrix evolve(const DensityMatrix& rho, const HermitianOp& h, double t) {
  if (h.dim() != rho.dim()) throw DomainError("evolve: dimension mismatch");
  if (t == 0.0) return rho;
  return evolve(rho, Spectral(h), t);
}

bool commutes(const Mat& a, const Mat& b, double tol) {
  if (a.rows() != b.rows()) throw DomainError("commutes: dimension mismatch");
  return (a * b - b * a).norm() <= tol;
}

UnitaryOp unitary_of(const HermitianOp& h, double scale) {
  return UnitaryOp(Spectral(h).propagator(-scale));
}

}  // namespace thermoclock
