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

#include "test_util.hpp"

namespace qclone {
namespace {

using attacks::Family;
using attacks::Protocol;

TEST(Depolarizing, AffineClosedForm) {
  states::Rng rng(3);
  for (double mu : {0.0, 0.3, 0.75}) {
    const auto n = attacks::depolarizing_kraus(mu);
    EXPECT_EQ(n.size(), 4u);
    EXPECT_LT(n.completeness_residual, 1e-15);
    const auto rho = testing::random_density(rng, 2);
    const ComplexMatrix want = (1 - 4 * mu / 3) * rho + (2 * mu / 3) * identity(2);
    EXPECT_LT((kraus::apply(n, rho) - want).norm(), 1e-14);
  }
  const auto full = kraus::apply(attacks::depolarizing_kraus(0.75), testing::random_density(rng, 2));
  EXPECT_LT((full - identity(2) / 2.0).norm(), 1e-14);
  EXPECT_THROW(attacks::depolarizing_kraus(-0.1), InvalidArgument);
  EXPECT_THROW(attacks::depolarizing_kraus(0.8), InvalidArgument);
}

TEST(Qber, ProtocolFormulas) {
  EXPECT_NEAR(attacks::qber(0.85, Protocol::FourState), 0.15, 1e-15);
  EXPECT_NEAR(attacks::qber(1.0, Protocol::SixState), 0.0, 1e-15);
  EXPECT_NEAR(attacks::qber(0.832, Protocol::SixState), 0.126, 1e-12);
}

TEST(Qber, SecurityMargins) {
  attacks::AttackResult r;
  r.qber = 0.10;
  EXPECT_NEAR(attacks::security_margin(r, attacks::AttackModel::Individual15), 0.05, 1e-15);
  r.qber = 0.15;
  EXPECT_NEAR(attacks::security_margin(r, attacks::AttackModel::Individual15), 0.0, 1e-15);
  r.qber = 0.13;
  EXPECT_NEAR(attacks::security_margin(r, attacks::AttackModel::SixState126), -0.004, 1e-15);
  EXPECT_NEAR(attacks::security_margin(r, attacks::AttackModel::Collective11), -0.02, 1e-15);
}

class Sweep : public ::testing::TestWithParam<std::tuple<Family, Protocol>> {
 protected:
  static std::vector<double> lambdas() { return {0.0, 0.2, 0.4, 0.5, 0.6, 0.8, 1.0}; }
  static std::vector<double> mus() { return {0.0, 0.1, 0.3, 0.5, 0.75}; }
};

TEST_P(Sweep, Invariants) {
  const auto [family, protocol] = GetParam();
  attacks::ClonerCache cache;
  const auto rs = attacks::attack_sweep(family, protocol, lambdas(), mus(), {}, &cache);
  ASSERT_EQ(rs.size(), lambdas().size() * mus().size());
  EXPECT_EQ(cache.size(), lambdas().size());
  const std::size_t nm = mus().size();
  for (std::size_t li = 0; li < lambdas().size(); ++li) {
    const auto& base = rs[li * nm];
    ASSERT_TRUE(base.ok()) << base.error;
    for (std::size_t mi = 0; mi < nm; ++mi) {
      const auto& r = rs[li * nm + mi];
      const double mu = r.point.mu;
      EXPECT_NEAR(r.f_bob, (1 - 4 * mu / 3) * base.f_bob + 2 * mu / 3, 1e-9);
      EXPECT_NEAR(r.f_eve, base.f_eve, 1e-9);
      EXPECT_NEAR(r.qber, attacks::qber(r.f_bob, protocol), 1e-15);
      EXPECT_GE(r.f_bob, 0.0);
      EXPECT_LE(r.f_bob, 1.0 + 1e-12);
      if (mi > 0 && base.f_bob > 0.5 + 1e-9) EXPECT_LT(r.f_bob, rs[li * nm + mi - 1].f_bob);
    }
    EXPECT_NEAR(rs[li * nm + nm - 1].f_bob, 0.5, 1e-9);
  }
  // lambda <-> 1 - lambda swaps the copies
  const std::size_t nl = lambdas().size();
  for (std::size_t li = 0; li < nl; ++li) {
    EXPECT_NEAR(rs[li * nm].f_bob, rs[(nl - 1 - li) * nm].f_eve, 1e-6);
  }
}

INSTANTIATE_TEST_SUITE_P(All, Sweep,
                         ::testing::Combine(::testing::Values(Family::Universal,
                                                              Family::PhaseCovariant),
                                            ::testing::Values(Protocol::FourState,
                                                              Protocol::SixState)));

TEST(Sweep, SymmetricPointsMatchClosedForms) {
  const auto u = attacks::attack_sweep(Family::Universal, Protocol::SixState, {0.5}, {0.0});
  EXPECT_NEAR(u[0].f_bob, 5.0 / 6.0, 1e-6);
  const auto c = attacks::attack_sweep(Family::PhaseCovariant, Protocol::FourState, {0.5}, {0.0, 0.3});
  EXPECT_NEAR(c[0].f_bob, 0.8535533906, 1e-6);
  EXPECT_NEAR(c[1].f_bob, (1 - 0.4) * 0.8535533906 + 0.2, 1e-6);
}

TEST(Sweep, EntanglementBetweenBobAndEve) {
  const auto four = attacks::attack_sweep(Family::PhaseCovariant, Protocol::FourState,
                                          {0.0, 0.25, 0.5, 0.75, 1.0}, {0.0});
  for (const auto& r : four) EXPECT_LE(r.concurrence_bob_eve, 1e-6);
  const auto six = attacks::attack_sweep(Family::Universal, Protocol::SixState,
                                         {0.25, 0.5, 0.75}, {0.0, 0.1});
  double best = 0.0;
  for (const auto& r : six) best = std::max(best, r.concurrence_bob_eve);
  EXPECT_GT(best, 0.1);
}

TEST(Sweep, RejectsBadGrids) {
  EXPECT_THROW(attacks::attack_sweep(Family::Universal, Protocol::FourState, {}, {0.0}),
               InvalidArgument);
  EXPECT_THROW(attacks::attack_sweep(Family::Universal, Protocol::FourState, {0.5}, {0.9}),
               InvalidArgument);
}

TEST(Sweep, SolverFailureIsRecordedPerPoint) {
  attacks::SweepSettings s;
  s.solver.max_iterations = 1;
  const auto rs = attacks::attack_sweep(Family::Universal, Protocol::FourState, {0.3}, {0.0, 0.1}, s);
  ASSERT_EQ(rs.size(), 2u);
  for (const auto& r : rs) EXPECT_FALSE(r.ok());
}

TEST(Names, RoundTrip) {
  for (auto p : {Protocol::FourState, Protocol::SixState})
    EXPECT_EQ(attacks::protocol_from_string(attacks::to_string(p)), p);
  for (auto f : {Family::Universal, Family::PhaseCovariant})
    EXPECT_EQ(attacks::family_from_string(attacks::to_string(f)), f);
  EXPECT_THROW(attacks::protocol_from_string("e91"), InvalidArgument);
}

}  // namespace
}  // namespace qclone
