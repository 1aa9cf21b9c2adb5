// Copyright 2026 The postdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "postdist/error.hpp"
#include "postdist/linalg.hpp"
#include "postdist/random.hpp"

namespace postdist {
namespace {

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  return (g + g.adjoint()) / 2.0;
}

TEST(TraceNorm, HandValues) {
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  EXPECT_NEAR(trace_norm(z), 2.0, 1e-12);
  EXPECT_NEAR(trace_norm(ComplexMatrix::Zero(3, 3)), 0.0, 1e-15);
  ComplexMatrix padded = ComplexMatrix::Zero(3, 3);
  padded(0, 0) = 1.0;
  padded(1, 1) = -1.0;
  EXPECT_NEAR(trace_norm(padded), 2.0, 1e-12);
  EXPECT_NEAR(trace_norm_hermitian(padded), 2.0, 1e-12);
}

TEST(TraceNorm, MatchesSvdOracle) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 5;
    const ComplexMatrix x = ginibre(r, c, rng);
    EXPECT_NEAR(trace_norm(x), oracle::trace_norm(x), 1e-9);
    EXPECT_NEAR(operator_norm(x), oracle::operator_norm(x), 1e-9);
  }
}

TEST(TraceNorm, DominatesAbsoluteTrace) {
  Rng rng(1);
  for (int t = 0; t < 500; ++t) {
    const ComplexMatrix x = ginibre(1 + t % 6, 1 + t % 6, rng);
    EXPECT_GE(trace_norm(x) + 1e-12, std::abs(x.trace()));
  }
}

TEST(TraceNorm, HolderWithOperatorNorm) {
  Rng rng(2);
  for (int t = 0; t < 500; ++t) {
    const std::size_t d = 1 + t % 6;
    const ComplexMatrix x = ginibre(d, d, rng);
    const ComplexMatrix o = ginibre(d, d, rng);
    EXPECT_LE(trace_norm(x * o), trace_norm(x) * operator_norm(o) + 1e-9);
  }
}

TEST(OperatorNorm, Identities) {
  EXPECT_NEAR(operator_norm(identity(4)), 1.0, 1e-12);
  EXPECT_NEAR(operator_norm(Complex(0.0, -2.5) * identity(3)), 2.5, 1e-12);
}

TEST(HermitianEig, HandValues) {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  RealVector ev = hermitian_eigenvalues(d);
  ASSERT_EQ(ev.size(), 2);
  EXPECT_NEAR(std::max(ev(0), ev(1)), 3.0, 1e-12);
  EXPECT_NEAR(std::min(ev(0), ev(1)), 1.0, 1e-12);

  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  const HermitianEigenSystem sys = hermitian_eig(x);
  for (int k = 0; k < 2; ++k) {
    const ComplexVector v = sys.eigenvectors.col(k);
    // |±⟩ have equal-magnitude entries.
    EXPECT_NEAR(std::abs(v(0)), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(std::abs(v(1)), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(std::abs(std::abs(sys.eigenvalues(k)) - 1.0), 0.0, 1e-12);
  }

  ComplexVector u(3);
  u << Complex(0.6, 0.0), Complex(0.0, 0.8), 0.0;
  const RealVector r1 = hermitian_eigenvalues(oracle::projector(u));
  EXPECT_NEAR(r1.maxCoeff(), 1.0, 1e-12);
  EXPECT_NEAR(r1.sum(), 1.0, 1e-12);
}

TEST(HermitianEig, ReconstructionProperty) {
  Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    const std::size_t d = 1 + t % 8;
    const ComplexMatrix h = random_hermitian(d, rng);
    const HermitianEigenSystem sys = hermitian_eig(h);
    const ComplexMatrix& v = sys.eigenvectors;
    const ComplexMatrix rec = v * sys.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
    EXPECT_LE((rec - h).norm(), 1e-10);
    EXPECT_LE((v.adjoint() * v - identity(d)).norm(), 1e-10);
  }
}

TEST(Tensor, HandValues) {
  Rng rng(4);
  const ComplexMatrix a = ginibre(2, 3, rng);
  EXPECT_EQ(tensor(a, identity(1)), a);
  EXPECT_EQ(tensor(identity(2), identity(3)), identity(6));
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  ComplexMatrix unit = ComplexMatrix::Zero(4, 4);
  unit(1, 1) = 1.0;
  EXPECT_EQ(tensor(p0, p1), unit);
}

TEST(Tensor, MatchesLoopOracle) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix a = ginibre(1 + t % 3, 1 + t % 4, rng);
    const ComplexMatrix b = ginibre(1 + t % 2, 2 + t % 3, rng);
    EXPECT_LE((tensor(a, b) - oracle::kron(a, b)).norm(), 1e-14);
  }
}

TEST(PartialTrace, HandValues) {
  Rng rng(6);
  const ComplexMatrix rho = random_density(2, rng);
  const ComplexMatrix sigma = random_density(3, rng);
  EXPECT_LE((partial_trace(tensor(rho, sigma), 2, 3, Keep::kFirst) - rho).norm(), 1e-12);
  EXPECT_LE((partial_trace(tensor(rho, sigma), 2, 3, Keep::kSecond) - sigma).norm(), 1e-12);

  for (std::size_t d : {2, 3}) {
    ComplexVector omega = ComplexVector::Zero(d * d);
    for (std::size_t i = 0; i < d; ++i) omega(i * d + i) = 1.0;
    const ComplexMatrix p = omega * omega.adjoint() / static_cast<double>(d);
    EXPECT_LE((partial_trace(p, d, d, Keep::kFirst) - identity(d) / double(d)).norm(), 1e-12);
  }
  EXPECT_LE((partial_trace(identity(4), 2, 2, Keep::kFirst) - 2.0 * identity(2)).norm(), 1e-14);
}

TEST(PartialTrace, ConsistentWithTensorAndOracle) {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const int d1 = 1 + t % 3, d2 = 1 + (t / 3) % 3;
    const ComplexMatrix a = ginibre(d1, d1, rng);
    const ComplexMatrix b = ginibre(d2, d2, rng);
    EXPECT_LE((partial_trace(tensor(a, b), d1, d2, Keep::kFirst) - a * b.trace()).norm(), 1e-10);
    const ComplexMatrix x = ginibre(d1 * d2, d1 * d2, rng);
    EXPECT_LE((partial_trace(x, d1, d2, Keep::kFirst) - oracle::trace_second(x, d1, d2)).norm(),
              1e-12);
    EXPECT_LE((partial_trace(x, d1, d2, Keep::kSecond) - oracle::trace_first(x, d1, d2)).norm(),
              1e-12);
  }
}

TEST(Guards, RejectsBadInput) {
  ComplexMatrix bad = identity(2);
  bad(0, 1) = std::nan("");
  EXPECT_FALSE(all_finite(bad));
  EXPECT_THROW(trace_norm(bad), InvalidInputError);
  EXPECT_THROW(check_dimension(5000), CapacityError);
  EXPECT_THROW(partial_trace(identity(4), 3, 2, Keep::kFirst), InvalidInputError);
  EXPECT_THROW(tensor(identity(70), identity(70)), CapacityError);
}

}  // namespace
}  // namespace postdist
