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

#ifndef THERMOCLOCK_QUANTUM_STATE_HPP
#define THERMOCLOCK_QUANTUM_STATE_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "thermoclock/prob_entropy.hpp"

namespace thermoclock {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Dims = std::vector<Eigen::Index>;

// ---------------------------------------------------------------------------
// Expression-level helpers. These accept any Eigen dense expression.

template <typename DA, typename DB>
Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Out = Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Out r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

template <typename D>
typename D::RealScalar hermiticity_error(const Eigen::MatrixBase<D>& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

// Sum of absolute eigenvalues of a Hermitian matrix (unhalved trace norm).
template <typename D>
typename D::RealScalar trace_norm_hermitian(const Eigen::MatrixBase<D>& a) {
  using M = Eigen::Matrix<typename D::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::SelfAdjointEigenSolver<M> es(M(a), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

// Schatten-1 norm of an arbitrary matrix.
template <typename D>
typename D::RealScalar trace_norm(const Eigen::MatrixBase<D>& a) {
  using M = Eigen::Matrix<typename D::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::JacobiSVD<M> svd{M(a)};
  return svd.singularValues().sum();
}

// Largest singular value.
template <typename D>
typename D::RealScalar operator_norm(const Eigen::MatrixBase<D>& a) {
  using M = Eigen::Matrix<typename D::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::JacobiSVD<M> svd{M(a)};
  return svd.singularValues().size() ? svd.singularValues()(0) : 0;
}

// Hermitian matrix function f(A) = V f(L) V^dagger.
template <typename D, typename F>
Mat hermitian_function(const Eigen::MatrixBase<D>& a, F&& f) {
  Eigen::SelfAdjointEigenSolver<Mat> es{Mat(a)};
  const auto& v = es.eigenvectors();
  Vec fl(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < fl.size(); ++i) fl(i) = f(es.eigenvalues()(i));
  return v * fl.asDiagonal() * v.adjoint();
}

// ---------------------------------------------------------------------------
// Value types.

Eigen::Index dims_product(const Dims& dims);

class HermitianOp {
 public:
  HermitianOp() = default;
  HermitianOp(Mat data, Dims factor_dims, double tol = 1e-10);
  explicit HermitianOp(Mat data);

  static HermitianOp zero(const Dims& dims);
  static HermitianOp identity(const Dims& dims);
  static HermitianOp diagonal(const Eigen::VectorXd& diag);

  const Mat& data() const { return m_; }
  const Dims& factor_dims() const { return dims_; }
  Eigen::Index dim() const { return m_.rows(); }

  HermitianOp operator+(const HermitianOp& o) const;
  HermitianOp operator-(const HermitianOp& o) const;
  HermitianOp operator*(double s) const;

 private:
  Mat m_;
  Dims dims_;
};

class UnitaryOp {
 public:
  UnitaryOp() = default;
  explicit UnitaryOp(Mat data, double tol = 1e-9);
  const Mat& data() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Mat m_;
};

class DensityMatrix {
 public:
  DensityMatrix() = default;
  DensityMatrix(Mat data, Dims factor_dims, double tol = 1e-10);
  explicit DensityMatrix(Mat data);

  // Validation only in debug builds; for states produced by exact unitary
  // conjugation or partial traces of valid states.
  static DensityMatrix trusted(Mat data, Dims factor_dims);
  static DensityMatrix pure(const Vec& ket, Dims factor_dims = {});
  static DensityMatrix maximally_mixed(const Dims& dims);
  static DensityMatrix diagonal(const ProbVec& p);

  const Mat& data() const { return m_; }
  const Dims& factor_dims() const { return dims_; }
  Eigen::Index dim() const { return m_.rows(); }

  Eigen::VectorXd eigenvalues() const;  // ascending
  ProbVec spectrum() const;
  double purity() const;
  bool full_rank(double tol = 1e-12) const;

 private:
  Mat m_;
  Dims dims_;
};

DensityMatrix compose(const DensityMatrix& a, const DensityMatrix& b);
HermitianOp compose(const HermitianOp& a, const HermitianOp& b);

// Partial trace keeping the listed factors (in increasing index order).
DensityMatrix reduce(const DensityMatrix& rho, const std::vector<int>& keep);
Mat partial_trace(const Mat& m, const Dims& dims, const std::vector<int>& keep);

// Reorders tensor factors: factor perm[i] of the input becomes factor i.
Mat permute_factors(const Mat& m, const Dims& dims, const std::vector<int>& perm);

// Operator a acting on factor `index` of a space with the given dims.
HermitianOp embed(const HermitianOp& a, const Dims& dims, int index);

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

DensityMatrix gibbs_state(const HermitianOp& h, double beta);

// Cached eigendecomposition of a Hermitian operator for repeated propagation.
class Spectral {
 public:
  explicit Spectral(const HermitianOp& h);
  explicit Spectral(const Mat& h);
  // e^{-i t H}
  Mat propagator(double t) const;
  const Eigen::VectorXd& eigenvalues() const { return es_.eigenvalues(); }
  const Mat& eigenvectors() const { return es_.eigenvectors(); }

 private:
  Eigen::SelfAdjointEigenSolver<Mat> es_;
};

DensityMatrix evolve(const DensityMatrix& rho, const HermitianOp& h, double t);
DensityMatrix evolve(const DensityMatrix& rho, const Spectral& h, double t);
DensityMatrix conjugate(const DensityMatrix& rho, const Mat& u);

bool commutes(const Mat& a, const Mat& b, double tol);
inline bool commutes(const HermitianOp& a, const HermitianOp& b, double tol) {
  return commutes(a.data(), b.data(), tol);
}
inline bool commutes(const UnitaryOp& a, const UnitaryOp& b, double tol) {
  return commutes(a.data(), b.data(), tol);
}

// e^{i scale H}
UnitaryOp unitary_of(const HermitianOp& h, double scale);

}  // namespace thermoclock

#endif  // THERMOCLOCK_QUANTUM_STATE_HPP
