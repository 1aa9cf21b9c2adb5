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
#include "postdist/channel.hpp"
#include "postdist/error.hpp"
#include "postdist/gallery.hpp"
#include "postdist/optimizer.hpp"
#include "postdist/random.hpp"

namespace postdist {
namespace {

ComplexMatrix unit(std::size_t d, std::size_t i, std::size_t j) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

TEST(States, Validation) {
  ComplexVector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(PureState{v}, InvalidInputError);
  EXPECT_NEAR(PureState::normalized(v).amplitudes().norm(), 1.0, 1e-15);
  EXPECT_THROW(DensityMatrix(identity(2)), InvalidInputError);
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix{neg}, InvalidInputError);
  EXPECT_NO_THROW(DensityMatrix::maximally_mixed(3));
}

TEST(Validate, HandCases) {
  const ValidityReport u = validate(isometry_channel(pauli_z()), true);
  EXPECT_TRUE(u.trace_preserving);
  EXPECT_TRUE(u.postselection_valid);

  const auto [psi, phi] = nonconvexity_pair(0.25);
  const ValidityReport r = validate(psi, true);
  EXPECT_NEAR(r.effect_max, 0.75, 1e-12);
  EXPECT_NEAR(r.effect_min, 0.25, 1e-12);
  EXPECT_FALSE(r.trace_preserving);
  EXPECT_LE((psi.effect() - oracle::diag({0.75, 0.25})).norm(), 1e-12);

  const Channel proj(2, 2, {unit(2, 0, 0)}, "proj");
  EXPECT_THROW(validate(proj, true), InvalidPostselectionError);
  EXPECT_NO_THROW(validate(proj, false));
  const Channel big(2, 2, {std::sqrt(2.0) * identity(2)}, "big");
  EXPECT_THROW(validate(big, false), NotTraceNonincreasingError);
}

TEST(Apply, HandValues) {
  Rng rng(1);
  const ComplexMatrix rho = random_density(2, rng);
  EXPECT_LE((postdist::apply(identity_channel(2), rho) - rho).norm(), 1e-14);

  const double eps = 0.2;
  const auto [psi, phi] = nonconvexity_pair(eps);
  EXPECT_LE((postdist::apply(psi, unit(2, 0, 0)) - (1 - eps) * unit(2, 0, 0)).norm(), 1e-14);
  EXPECT_LE((postdist::apply(teleportation(2), rho) - rho / 4.0).norm(), 1e-14);
}

TEST(Apply, MatchesLoopOracle) {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const Channel ch = random_channel(2 + t % 2, 1 + t % 3, 3, rng.next(),
                                      t % 2 ? RandomKind::kCptp : RandomKind::kPostselection);
    const ComplexMatrix x = ginibre(ch.dim_in(), ch.dim_in(), rng);
    EXPECT_LE((postdist::apply(ch, x) - oracle::image(ch, x)).norm(), 1e-12);
  }
}

TEST(ApplyRenormalized, HandValues) {
  Rng rng(3);
  const DensityMatrix rho(random_density(2, rng));
  const RenormalizedOutput tel = apply_renormalized(teleportation(2), rho);
  EXPECT_NEAR(tel.probability, 0.25, 1e-14);
  EXPECT_LE((tel.state.matrix() - rho.matrix()).norm(), 1e-13);

  const Channel tp = random_channel(2, 3, 2, 9, RandomKind::kCptp);
  EXPECT_NEAR(apply_renormalized(tp, rho).probability, 1.0, 1e-12);

  const auto [psi, phi] = nonconvexity_pair(0.25);
  const RenormalizedOutput mid = apply_renormalized(psi, DensityMatrix::maximally_mixed(2));
  EXPECT_NEAR(mid.probability, 0.5, 1e-14);
  EXPECT_LE((mid.state.matrix() - oracle::diag({0.75, 0.25})).norm(), 1e-14);

  const Channel proj(2, 2, {unit(2, 0, 0)}, "proj");
  EXPECT_THROW(apply_renormalized(proj, DensityMatrix(unit(2, 1, 1))), NumericalDegeneracyError);
}

TEST(Choi, HandValues) {
  const ChoiMatrix j = kraus_to_choi(identity_channel(2));
  ComplexVector omega = ComplexVector::Zero(4);
  omega(0) = omega(3) = 1.0;
  EXPECT_LE((j.matrix() - omega * omega.adjoint()).norm(), 1e-14);
  EXPECT_NEAR(j.matrix().trace().real(), 2.0, 1e-14);

  // ρ ↦ I/2 tr ρ has Kraus operators |i⟩⟨j|/√2.
  std::vector<ComplexMatrix> dep;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) dep.push_back(unit(2, a, b) / std::sqrt(2.0));
  const Channel depol(2, 2, dep, "depolarizing");
  EXPECT_LE((kraus_to_choi(depol).matrix() - identity(4) / 2.0).norm(), 1e-14);

  const Channel ch = random_channel(2, 2, 2, 5, RandomKind::kCptp);
  EXPECT_LE((kraus_to_choi(scale(ch, 0.3)).matrix() - 0.3 * kraus_to_choi(ch).matrix()).norm(),
            1e-13);
}

TEST(Choi, RoundTrip) {
  const Channel back = choi_to_kraus(kraus_to_choi(identity_channel(3)));
  ASSERT_EQ(back.rank(), 1u);
  const ComplexMatrix& k = back.kraus()[0];
  EXPECT_NEAR(std::abs(k(0, 0)), 1.0, 1e-12);
  EXPECT_LE((k / k(0, 0) - identity(3)).norm(), 1e-12);

  const auto [psi, phi] = nonconvexity_pair(0.25);
  const Channel rec = choi_to_kraus(kraus_to_choi(psi));
  EXPECT_EQ(rec.rank(), 2u);
  EXPECT_LE((rec.effect() - psi.effect()).norm(), 1e-12);

  EXPECT_THROW(choi_to_kraus(ChoiMatrix(ComplexMatrix::Zero(4, 4), 2, 2)), EmptyChannelError);

  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    const std::size_t din = 1 + t % 3, dout = 1 + (t / 3) % 3;
    const Channel ch = random_channel(din, dout, 3 + t % 2, rng.next(), RandomKind::kCptp);
    const Channel r = choi_to_kraus(kraus_to_choi(ch));
    for (std::size_t i = 0; i < din; ++i)
      for (std::size_t j = 0; j < din; ++j)
        EXPECT_LE((postdist::apply(r, unit(din, i, j)) - postdist::apply(ch, unit(din, i, j))).norm(), 1e-9);
  }
}

TEST(Stinespring, HandValues) {
  Rng rng(5);
  const ComplexMatrix u = random_unitary(3, rng);
  const StinespringOp a = stinespring(isometry_channel(u));
  EXPECT_EQ(a.dim_env, 1u);
  EXPECT_LE((a.a - u).norm(), 1e-15);

  const auto [psi, phi] = nonconvexity_pair(0.3);
  EXPECT_NEAR(std::pow(oracle::operator_norm(stinespring(psi).a), 2), 0.7, 1e-12);
  EXPECT_NEAR(oracle::operator_norm(stinespring(random_channel(3, 2, 3, 1, RandomKind::kCptp)).a),
              1.0, 1e-12);
}

TEST(Stinespring, ReproducesChannel) {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const Channel ch = random_channel(2 + t % 2, 2 + (t / 2) % 2, 2 + t % 2, rng.next(),
                                      t % 3 ? RandomKind::kPostselection : RandomKind::kCptp);
    const StinespringOp a = stinespring(ch);
    const ComplexMatrix rho = random_density(ch.dim_in(), rng);
    const ComplexMatrix big = a.a * rho * a.a.adjoint();
    const ComplexMatrix out = oracle::trace_second(big, a.dim_out, a.dim_env);
    EXPECT_LE((out - postdist::apply(ch, rho)).norm(), 1e-10);
  }
}

TEST(Stinespring, NormEqualsMaxAcceptance) {
  // ||A||² against an independent maximization of tr Ψ(|v⟩⟨v|): 10^4 Haar
  // samples bound it from below, and ascent from sampled points reaches it.
  Rng rng(7);
  for (int t = 0; t < 6; ++t) {
    const std::size_t d = 2 + t % 2;
    const Channel ch = random_channel(d, d, 2, rng.next(), RandomKind::kPostselection);
    const double norm2 = std::pow(oracle::operator_norm(stinespring(ch).a), 2);
    double best = 0.0;
    for (int s = 0; s < 10000; ++s) {
      const ComplexVector v = random_unit_vector(d, rng);
      best = std::max(best, oracle::trace(oracle::image(ch, v * v.adjoint())).real());
    }
    EXPECT_LE(best, norm2 + 1e-12);
    EXPECT_GE(best, norm2 - 0.05);
    const Objective prob = [&](std::span<const double> x) {
      ComplexVector v(d);
      for (std::size_t i = 0; i < d; ++i) v(i) = Complex(x[2 * i], x[2 * i + 1]);
      return oracle::trace(oracle::image(ch, v * v.adjoint())).real() / v.squaredNorm();
    };
    OptimizerConfig cfg;
    cfg.restarts = 8;
    const MultiStartResult res = multi_start_maximize(prob, ParameterLayout{{2 * d}}, cfg);
    EXPECT_NEAR(res.value, norm2, 1e-6);
  }
}

TEST(TensorWithIdentity, Properties) {
  const Channel ch = random_channel(2, 3, 2, 3, RandomKind::kPostselection);
  const Channel same = tensor_with_identity(ch, 1);
  Rng rng(8);
  const ComplexMatrix x = ginibre(2, 2, rng);
  EXPECT_LE((postdist::apply(same, x) - postdist::apply(ch, x)).norm(), 1e-14);

  const Channel idid = tensor_with_identity(identity_channel(2), 3);
  const ComplexMatrix y = ginibre(6, 6, rng);
  EXPECT_LE((postdist::apply(idid, y) - y).norm(), 1e-13);

  const Channel ext = tensor_with_identity(ch, 2);
  EXPECT_NEAR(oracle::operator_norm(stinespring(ext).a), oracle::operator_norm(stinespring(ch).a),
              1e-12);
  const ComplexMatrix z = ginibre(4, 4, rng);
  EXPECT_LE((postdist::apply(ext, z) - oracle::apply_extended(ch, 2, z)).norm(), 1e-12);
  EXPECT_THROW(tensor_with_identity(ch, 0), ParameterError);
}

TEST(Compose, HandValues) {
  const Channel ch = random_channel(2, 2, 2, 4, RandomKind::kPostselection);
  Rng rng(9);
  const ComplexMatrix x = ginibre(2, 2, rng);
  EXPECT_LE((postdist::apply(compose(identity_channel(2), ch), x) - postdist::apply(ch, x)).norm(), 1e-14);

  const ContractivityTriple t = contractivity_triple(1.0 / 3.0);
  const Channel tpsi = compose(t.tau, t.psi);
  for (int s = 0; s < 5; ++s) {
    const ComplexMatrix rho = random_density(3, rng);
    EXPECT_LE((postdist::apply(tpsi, rho) - oracle::diag({1.0 / 6, 0.5, 0.0})).norm(), 1e-14);
  }

  const Channel a = random_channel(2, 2, 2, 10, RandomKind::kPostselection);
  const Channel b = random_channel(2, 2, 2, 11, RandomKind::kPostselection);
  const Channel ab = compose(a, b);
  EXPECT_GE(ab.effect_min() + 1e-12, a.effect_min() * b.effect_min());
  EXPECT_NO_THROW(validate(ab, true));
  EXPECT_THROW(compose(identity_channel(3), ch), InvalidInputError);
}

TEST(Scale, HandValues) {
  const Channel ch = random_channel(2, 2, 2, 12, RandomKind::kCptp);
  EXPECT_LE((scale(ch, 1.0).effect() - ch.effect()).norm(), 1e-15);
  const double eps = 0.2;
  const auto [psi, phi] = nonconvexity_pair(eps);
  const Channel s = scale(psi, 1.0 / (1.0 - eps));
  EXPECT_NEAR(s.effect_max(), 1.0, 1e-12);
  EXPECT_NEAR(s.effect_min(), eps / (1 - eps), 1e-12);
  for (std::size_t d : {2, 3}) {
    const Channel id = scale(teleportation(d), double(d * d));
    Rng rng(d);
    const ComplexMatrix x = ginibre(d, d, rng);
    EXPECT_LE((postdist::apply(id, x) - x).norm(), 1e-13);
  }
  EXPECT_THROW(scale(psi, 2.0, true), NotTraceNonincreasingError);
  EXPECT_THROW(scale(psi, -1.0), ParameterError);
}

TEST(RandomChannel, Contract) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Channel c = random_channel(2 + seed % 2, 2, 2 + seed % 2, seed, RandomKind::kCptp);
    EXPECT_TRUE(validate(c, false).trace_preserving);
    const Channel p = random_channel(2 + seed % 2, 3, 1 + seed % 3, seed,
                                     RandomKind::kPostselection);
    EXPECT_GE(p.effect_min(), 0.01 - 1e-12);
    EXPECT_LE(p.effect_max(), 1.0);
  }
  const Channel a = random_channel(3, 3, 2, 77, RandomKind::kPostselection);
  const Channel b = random_channel(3, 3, 2, 77, RandomKind::kPostselection);
  ASSERT_EQ(a.rank(), b.rank());
  for (std::size_t k = 0; k < a.rank(); ++k) EXPECT_TRUE(a.kraus()[k] == b.kraus()[k]);
}

TEST(Gallery, Entries) {
  const auto [psi, phi] = nonconvexity_pair(0.25);
  for (const Channel& c : {psi, phi}) {
    EXPECT_TRUE(validate(c, true).postselection_valid);
    EXPECT_FALSE(is_trace_preserving(c));
  }
  const ContractivityTriple t = contractivity_triple(0.5);
  EXPECT_TRUE(is_trace_preserving(t.psi));
  EXPECT_TRUE(is_trace_preserving(t.phi));
  EXPECT_TRUE(validate(t.tau, true).postselection_valid);
  EXPECT_FALSE(is_trace_preserving(t.tau));

  Rng rng(13);
  for (int s = 0; s < 20; ++s) {
    const ComplexMatrix rho = random_density(2, rng);
    EXPECT_NEAR(postdist::apply(teleportation(2), rho).trace().real(), 0.25, 1e-14);
  }
  EXPECT_THROW(nonconvexity_pair(0.5), ParameterError);
  EXPECT_THROW(contractivity_triple(1.0), ParameterError);
  EXPECT_THROW(gallery("nope", {}), ParameterError);
  EXPECT_EQ(gallery("contractivity_triple", {}).size(), 3u);
}

TEST(TraceNormContraction, ValidChannels) {
  Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 2 + t % 2;
    const Channel ch = random_channel(d, 1 + t % 3, 3, rng.next(),
                                      t % 2 ? RandomKind::kCptp : RandomKind::kPostselection);
    ComplexMatrix x = ginibre(d, d, rng);
    x /= oracle::trace_norm(x);
    EXPECT_LE(oracle::trace_norm(postdist::apply(ch, x)), 1.0 + 1e-9);
  }
}

}  // namespace
}  // namespace postdist
