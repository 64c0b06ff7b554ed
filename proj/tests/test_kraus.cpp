// Copyright 2026 The qclone Authors
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

#include <gtest/gtest.h>

#include <numbers>

#include "test_util.hpp"

namespace qclone {
namespace {

using targets::Family;

struct Solved {
  targets::TargetOperator target;
  states::SamplingSet set;
  sdp::SolveResult result;
};

Solved solve(Family f, int m, int n) {
  const auto sc = targets::make_scenario(f, m, n);
  Solved s{{}, targets::default_sampling(sc), {}};
  s.target = targets::omega_local(s.set, sc);
  s.result = sdp::solve(sdp::assemble_primal(s.target));
  return s;
}

TEST(Extract, RandomChannelRoundTrip) {
  states::Rng rng(31);
  for (int ops = 1; ops <= 4; ++ops) {
    const auto ch = testing::random_channel(rng, 2, 4, ops);
    const auto j = kraus::choi_from_kraus(ch, SubsystemShape{2, 2});
    const auto k = kraus::extract(j);
    EXPECT_EQ(k.size(), static_cast<std::size_t>(ops));
    EXPECT_LT(k.completeness_residual, 1e-10);
    EXPECT_LT((kraus::choi_from_kraus(k).matrix - j.matrix).norm(), 1e-10);
    // Kraus sets of one channel agree on every input
    const auto rho = testing::random_density(rng, 2);
    EXPECT_LT((kraus::apply(k, rho) - kraus::apply(ch, rho)).norm(), 1e-10);
  }
}

TEST(Extract, SolvedClonersAreValid) {
  for (auto [f, m, n] : {std::tuple{Family::Universal, 1, 2}, std::tuple{Family::Universal, 1, 4},
                         std::tuple{Family::Universal, 2, 3},
                         std::tuple{Family::PhaseCovariant, 1, 3}}) {
    const auto s = solve(f, m, n);
    const auto k = kraus::extract(s.result.choi);
    EXPECT_LE(k.completeness_residual, 1e-6);
    EXPECT_LE((kraus::choi_from_kraus(k, s.result.choi.output_shape).matrix -
               s.result.choi.matrix).norm(), 1e-8);
    EXPECT_NEAR(kraus::average_fidelity(k, s.target, s.set), s.result.certificate.primal_value,
                1e-8);
  }
}

TEST(Extract, ThresholdControlsCount) {
  const auto s = solve(Family::Universal, 1, 3);
  EXPECT_EQ(kraus::extract(s.result.choi).size(), 3u);
  EXPECT_EQ(kraus::extract(s.result.choi, 10.0).size(), 0u);
}

TEST(Extract, RejectsIndefiniteMatrix) {
  sdp::ChoiMatrix j;
  j.d_in = 2;
  j.output_shape = SubsystemShape{2};
  j.matrix = -identity(4);
  EXPECT_THROW(kraus::extract(j), InvalidArgument);
}

TEST(Compose, SerialMatchesSequentialApplication) {
  states::Rng rng(41);
  const auto k1 = testing::random_channel(rng, 2, 4, 2);
  const auto k2 = testing::random_channel(rng, 4, 3, 3);
  const auto k = kraus::compose_serial(k2, k1);
  EXPECT_EQ(k.size(), 6u);
  const auto rho = testing::random_density(rng, 2);
  EXPECT_LT((kraus::apply(k, rho) - kraus::apply(k2, kraus::apply(k1, rho))).norm(), 1e-12);
  EXPECT_THROW(kraus::compose_serial(k1, k1), DimensionError);
}

TEST(Compose, ExtensionActsOnOneFactor) {
  states::Rng rng(43);
  const auto n = testing::random_channel(rng, 2, 2, 3);
  const auto a = testing::random_density(rng, 2), b = testing::random_density(rng, 2);
  const auto ext = kraus::extend_on_subsystem(n, SubsystemShape{2, 2}, 1);
  EXPECT_LT((kraus::apply(ext, kron(a, b)) - kron(a, kraus::apply(n, b))).norm(), 1e-12);
  EXPECT_THROW(kraus::extend_on_subsystem(n, SubsystemShape{2, 2}, 2), DimensionError);
}

TEST(UnitaryCompletion, EmbedsIsometry) {
  const auto s = solve(Family::PhaseCovariant, 1, 3);
  const auto k = kraus::extract(s.result.choi);
  ASSERT_EQ(k.size(), 1u);
  const auto u = kraus::unitary_completion(k.operators.front());
  EXPECT_LT((u.adjoint() * u - identity(8)).norm(), 1e-8);
  for (Index i = 0; i < 2; ++i)
    EXPECT_LT((u.col(i * 4) - k.operators.front().col(i)).norm(), 1e-14);
  EXPECT_THROW(kraus::unitary_completion(ComplexMatrix::Identity(4, 2) * 2.0), InvalidArgument);
}

TEST(Diagnostics, PurityAndConcurrence) {
  ComplexVector bell(4);
  bell << 1, 0, 0, 1;
  bell /= std::sqrt(2.0);
  const ComplexMatrix pb = bell * bell.adjoint();
  EXPECT_NEAR(kraus::concurrence(pb), 1.0, 1e-10);
  EXPECT_NEAR(kraus::purity(pb), 1.0, 1e-12);
  EXPECT_NEAR(kraus::concurrence(identity(4) / 4.0), 0.0, 1e-12);
  states::Rng rng(5);
  const auto prod = kron(testing::random_density(rng, 2), testing::random_density(rng, 2));
  EXPECT_NEAR(kraus::concurrence(prod), 0.0, 1e-7);
  // Werner state p|Phi+><Phi+| + (1-p) I/4 has C = max(0, (3p - 1)/2)
  const double p = 0.8;
  EXPECT_NEAR(kraus::concurrence(p * pb + (1 - p) * identity(4) / 4.0), (3 * p - 1) / 2, 1e-10);
}

TEST(Diagnostics, GramMatrixOfExtractedOpsIsDiagonal) {
  const auto s = solve(Family::Universal, 1, 3);
  const auto g = kraus::hs_orthogonality(kraus::extract(s.result.choi));
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j)
      if (i != j) EXPECT_LT(std::abs(g(i, j)), 1e-8);
}

TEST(Entanglement, RealBellClonesHaveKnownPurityAndConcurrence) {
  const auto s = solve(Family::EntanglementReal, 1, 2);
  EXPECT_NEAR(s.result.certificate.primal_value, targets::analytic::entanglement_real(), 1e-6);
  const auto k = kraus::extract(s.result.choi);
  const SubsystemShape out{4, 4};
  for (const auto& psi : s.set.states) {
    const auto rho = kraus::apply(k, psi.projector());
    const auto clone = kraus::marginal(rho, out, 0);
    EXPECT_NEAR(kraus::purity(clone), 0.75, 1e-6);
    EXPECT_NEAR(kraus::concurrence(clone), 1.0 / std::sqrt(2.0), 1e-6);
  }
}

TEST(Render, ListsEveryOperator) {
  const auto k = kraus::extract(solve(Family::Universal, 1, 2).result.choi);
  const auto text = kraus::render_text(k, 4);
  EXPECT_NE(text.find("K1"), std::string::npos);
  EXPECT_NE(text.find("K2"), std::string::npos);
}

}  // namespace
}  // namespace qclone
