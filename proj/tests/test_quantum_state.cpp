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


#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "thermoclock/quantum_state.hpp"
#include "thermoclock/random.hpp"

using namespace thermoclock;

namespace {

Vec basis(int d, int k) {
  Vec v = Vec::Zero(d);
  v(k) = 1.0;
  return v;
}

Mat pauli_x() {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

Mat pauli_z() {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

}  // namespace

TEST_CASE("validation") {
  Mat bad = Mat::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix{bad}, DomainError);  // trace 2
  Mat nh = Mat::Zero(2, 2);
  nh(0, 0) = 1.0;
  nh(0, 1) = 0.3;
  CHECK_THROWS_AS(DensityMatrix{nh}, DomainError);
  Mat neg = Mat::Zero(2, 2);
  neg(0, 0) = 1.2;
  neg(1, 1) = -0.2;
  CHECK_THROWS_AS(DensityMatrix{neg}, DomainError);
  CHECK_THROWS_AS(DensityMatrix(Mat::Identity(4, 4) / 4.0, {2, 3}), DomainError);
  CHECK_THROWS_AS(UnitaryOp(2.0 * Mat::Identity(2, 2)), DomainError);
  CHECK_THROWS_AS(HermitianOp{nh}, DomainError);
}

TEST_CASE("compose") {
  const DensityMatrix m2 = DensityMatrix::maximally_mixed({2});
  const DensityMatrix c = compose(m2, m2);
  CHECK((c.data() - Mat::Identity(4, 4) / 4.0).norm() < 1e-15);
  CHECK(c.factor_dims() == Dims{2, 2});

  const DensityMatrix p = compose(DensityMatrix::pure(basis(2, 0)), DensityMatrix::pure(basis(2, 1)));
  CHECK(p.purity() == doctest::Approx(1.0));
  CHECK(std::abs(p.data()(1, 1) - 1.0) < 1e-15);

  CounterRng rng(1);
  const DensityMatrix a = random_density(rng, 2), b = random_density(rng, 3);
  CHECK(compose(a, b).purity() == doctest::Approx(a.purity() * b.purity()).epsilon(1e-12));
}

TEST_CASE("reduce") {
  CounterRng rng(2);
  const DensityMatrix a = random_density(rng, 2), b = random_density(rng, 3);
  CHECK((reduce(compose(a, b), {0}).data() - a.data()).norm() < 1e-13);
  CHECK((reduce(compose(a, b), {1}).data() - b.data()).norm() < 1e-13);

  Vec bell = Vec::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const DensityMatrix r = reduce(DensityMatrix::pure(bell, {2, 2}), {0});
  CHECK((r.data() - Mat::Identity(2, 2) / 2.0).norm() < 1e-15);

  for (int i = 0; i < 20; ++i) {
    const Dims dims = {rng.integer(1, 3), rng.integer(2, 3), rng.integer(2, 3)};
    const DensityMatrix rho(random_density(rng, static_cast<int>(dims_product(dims))).data(), dims);
    for (const std::vector<int>& keep :
         std::vector<std::vector<int>>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}}) {
      const DensityMatrix red = reduce(rho, keep);
      CHECK(std::abs(red.data().trace() - 1.0) < 1e-12);
      CHECK((red.data() - oracle::partial_trace_loops(rho.data(), dims, keep)).norm() < 1e-12);
    }
  }
  const DensityMatrix rho = DensityMatrix::maximally_mixed({2, 2});
  CHECK_THROWS_AS(reduce(rho, {}), DomainError);
  CHECK_THROWS_AS(reduce(rho, {2}), DomainError);
}

TEST_CASE("permute and embed") {
  CounterRng rng(3);
  const DensityMatrix a = random_density(rng, 2), b = random_density(rng, 3), c = random_density(rng, 2);
  const Mat abc = compose(compose(a, b), c).data();
  const Mat cab = compose(compose(c, a), b).data();
  CHECK((permute_factors(abc, {2, 3, 2}, {2, 0, 1}) - cab).norm() < 1e-14);
  const HermitianOp x(pauli_x());
  const HermitianOp e = embed(x, {3, 2, 2}, 1);
  CHECK((e.data() - kron(kron(Mat::Identity(3, 3).eval(), pauli_x()), Mat::Identity(2, 2).eval()))
            .norm() < 1e-15);
}

TEST_CASE("trace distance") {
  const DensityMatrix z0 = DensityMatrix::pure(basis(2, 0)), z1 = DensityMatrix::pure(basis(2, 1));
  CHECK(trace_distance(z0, z0) == doctest::Approx(0.0));
  CHECK(trace_distance(z0, z1) == doctest::Approx(2.0));
  CounterRng rng(4);
  for (int i = 0; i < 30; ++i) {
    const int d = rng.integer(2, 6);
    const DensityMatrix r = random_density(rng, d), s = random_density(rng, d);
    CHECK(trace_distance(r, s) ==
          doctest::Approx(oracle::trace_norm_general(r.data() - s.data())).epsilon(1e-10));
  }
  CHECK_THROWS_AS(trace_distance(z0, DensityMatrix::maximally_mixed({3})), DomainError);
}

TEST_CASE("fidelity") {
  const DensityMatrix z0 = DensityMatrix::pure(basis(2, 0)), z1 = DensityMatrix::pure(basis(2, 1));
  CHECK(fidelity(z0, z0) == doctest::Approx(1.0));
  CHECK(fidelity(z0, z1) == doctest::Approx(0.0));
  CounterRng rng(5);
  for (int i = 0; i < 40; ++i) {
    const int d = rng.integer(2, 5);
    const DensityMatrix r = random_density(rng, d, i % 2 ? 1 : -1), s = random_density(rng, d);
    const double f = fidelity(r, s);
    CHECK(f == doctest::Approx(oracle::uhlmann_fidelity(r.data(), s.data())).epsilon(1e-8));
    CHECK(trace_distance(r, s) / 2.0 <= std::sqrt(std::max(0.0, 1.0 - f * f)) + 1e-10);
  }
}

TEST_CASE("gibbs state") {
  const DensityMatrix g0 = gibbs_state(HermitianOp::diagonal(Eigen::Vector2d(0, 0)), 3.0);
  CHECK((g0.data() - Mat::Identity(2, 2) / 2.0).norm() < 1e-15);
  const DensityMatrix gi = gibbs_state(HermitianOp::diagonal(Eigen::Vector2d(0, 2.0)), 500.0);
  CHECK(std::abs(gi.data()(0, 0) - 1.0) < 1e-10);
  const DensityMatrix g1 = gibbs_state(HermitianOp::diagonal(Eigen::Vector2d(0, 1.0)), 1.0);
  const double e = std::exp(-1.0);
  CHECK(g1.data()(0, 0).real() == doctest::Approx(1.0 / (1.0 + e)).epsilon(1e-14));
  CHECK(g1.data()(1, 1).real() == doctest::Approx(e / (1.0 + e)).epsilon(1e-14));
  CHECK_THROWS_AS(gibbs_state(HermitianOp::diagonal(Eigen::Vector2d(0, 1.0)), kInf), DomainError);
  CHECK_THROWS_AS(gibbs_state(HermitianOp::diagonal(Eigen::Vector2d(0, 1.0)), -1.0), DomainError);
}

TEST_CASE("evolve") {
  CounterRng rng(6);
  for (int i = 0; i < 20; ++i) {
    const int d = rng.integer(2, 6);
    const DensityMatrix r = random_density(rng, d);
    const HermitianOp h = random_hermitian(rng, d);
    CHECK((evolve(r, h, 0.0).data() - r.data()).norm() < 1e-13);
    const double t = rng.uniform(-2.0, 2.0);
    const Mat u = oracle::expm(cplx(0, -t) * h.data());
    const DensityMatrix out = evolve(r, h, t);
    CHECK((out.data() - u * r.data() * u.adjoint()).norm() < 1e-10);
    CHECK((out.eigenvalues() - r.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
  }
  // stationary state
  const HermitianOp h = HermitianOp::diagonal(Eigen::Vector3d(0.0, 1.0, 2.5));
  const DensityMatrix g = gibbs_state(h, 0.7);
  CHECK((evolve(g, h, 3.3).data() - g.data()).norm() < 1e-13);
}

TEST_CASE("commutes and unitary_of") {
  const HermitianOp x(pauli_x()), z(pauli_z());
  CHECK(commutes(x, x, 1e-9));
  CHECK_FALSE(commutes(x, z, 1e-9));
  CHECK(commutes(HermitianOp::diagonal(Eigen::Vector2d(1, 2)),
                 HermitianOp::diagonal(Eigen::Vector2d(-3, 0.5)), 1e-9));
  CHECK((unitary_of(HermitianOp::zero({3}), 1.0).data() - Mat::Identity(3, 3)).norm() < 1e-15);
  CounterRng rng(7);
  const HermitianOp h = random_hermitian(rng, 4);
  CHECK((unitary_of(h, 0.0).data() - Mat::Identity(4, 4)).norm() < 1e-14);
  CHECK((unitary_of(h, 1.0).data() * unitary_of(h, -1.0).data() - Mat::Identity(4, 4)).norm() <
        1e-10);
  CHECK((unitary_of(h, 1.0).data() - oracle::expm(cplx(0, 1) * h.data())).norm() < 1e-10);
}

TEST_CASE("perturbation bound for exponentials") {
  CounterRng rng(8);
  for (int i = 0; i < 200; ++i) {
    const int d = rng.integer(2, 8);
    const HermitianOp h0 = random_hermitian(rng, d), v0 = random_hermitian(rng, d);
    const HermitianOp h = h0 * (rng.uniform(0, 4) / operator_norm(h0.data()));
    const HermitianOp v = v0 * (rng.uniform(0, 2) / operator_norm(v0.data()));
    const double nv = oracle::operator_norm(v.data());
    const double lhs = oracle::operator_norm(oracle::expm(cplx(0, 1) * (h + v).data()) -
                                             oracle::expm(cplx(0, 1) * h.data()));
    CHECK(lhs <= nv + 0.5 * nv * nv + 1e-10);
  }
}

TEST_CASE("norm inequalities on random operators") {
  CounterRng rng(9);
  for (int i = 0; i < 100; ++i) {
    const int d = rng.integer(2, 6);
    const Mat a = random_ginibre(rng, d, d), b = random_ginibre(rng, d, d);
    CHECK(trace_norm(a * b) <= trace_norm(a) * operator_norm(b) * (1 + 1e-12));
  }
  for (int i = 0; i < 60; ++i) {
    const int da = rng.integer(2, 3), db = rng.integer(2, 3);
    const Dims dims = {da, db};
    const DensityMatrix rab(random_density(rng, da * db).data(), dims);
    const DensityMatrix ea = random_density(rng, da), eb = random_density(rng, db);
    const DensityMatrix ra = reduce(rab, {0}), rb = reduce(rab, {1});
    const double base = trace_distance(rab, compose(ea, eb));
    CHECK(trace_distance(rab, compose(ra, eb)) <= 2.0 * base + 1e-12);
    CHECK(trace_distance(rab, compose(ra, rb)) <= 3.0 * base + 1e-12);

    // close to pure: make rho_B nearly pure with a mixing parameter
    const DensityMatrix psi = DensityMatrix::pure(random_ket(rng, db));
    const double lam = rng.uniform(0.0, 0.3);
    const DensityMatrix near = DensityMatrix(
        (1.0 - lam) * compose(random_density(rng, da), psi).data() + lam * rab.data(), dims);
    const double eb_dist = trace_distance(reduce(near, {1}), psi);
    CHECK(trace_distance(near, compose(reduce(near, {0}), psi)) <= 2.0 * std::sqrt(eb_dist) + 1e-12);
  }
}

TEST_CASE("reduction proposition in its proof-consistent form") {
  // ||rho_A - sigma_A|| = e1, ||rho_B - sigma_B|| = e2, ||sigma_B - psi_B|| = e3
  // ==> ||rho_AB - sigma_AB|| <= e1 + 2 sqrt(e2 + e3) + 2 sqrt(e3)
  CounterRng rng(10);
  for (int i = 0; i < 100; ++i) {
    const int da = 2, db = rng.integer(2, 3);
    const Dims dims = {da, db};
    const DensityMatrix psi = DensityMatrix::pure(random_ket(rng, db));
    auto near_product = [&](double lam) {
      return DensityMatrix((1.0 - lam) * compose(random_density(rng, da), psi).data() +
                               lam * random_density(rng, da * db).data(),
                           dims);
    };
    const DensityMatrix rho = near_product(rng.uniform(0, 0.2)), sigma = near_product(rng.uniform(0, 0.2));
    const double e1 = trace_distance(reduce(rho, {0}), reduce(sigma, {0}));
    const double e2 = trace_distance(reduce(rho, {1}), reduce(sigma, {1}));
    const double e3 = trace_distance(reduce(sigma, {1}), psi);
    CHECK(trace_distance(rho, sigma) <= e1 + 2.0 * std::sqrt(e2 + e3) + 2.0 * std::sqrt(e3) + 1e-12);
  }
}

TEST_CASE("spectrum of rho_A (x) I/d_B is majorized by that of rho_AB") {
  CounterRng rng(12);
  for (int i = 0; i < 100; ++i) {
    const int da = rng.integer(2, 3), db = rng.integer(2, 3);
    const DensityMatrix rab(random_density(rng, da * db, rng.integer(1, da * db)).data(), {da, db});
    const DensityMatrix mixed = compose(reduce(rab, {0}), DensityMatrix::maximally_mixed({db}));
    const Eigen::VectorXd a = rab.eigenvalues(), b = mixed.eigenvalues();
    CHECK(oracle::majorizes(std::vector<double>(a.begin(), a.end()),
                            std::vector<double>(b.begin(), b.end()), 1e-10));
  }
}
