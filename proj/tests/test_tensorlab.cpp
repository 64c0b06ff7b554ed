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

using testing::random_density;
using testing::random_hermitian;
using testing::random_matrix;

TEST(Kron, MixedProductRule) {
  states::Rng rng(11);
  const auto a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 2);
  const auto c = random_matrix(rng, 3, 2), d = random_matrix(rng, 2, 4);
  EXPECT_LT((kron(a, b) * kron(c, d) - kron(ComplexMatrix(a * c), ComplexMatrix(b * d))).norm(), 1e-12);
}

TEST(Kron, PowerMatchesRepeatedProduct) {
  const auto x = pauli::X();
  EXPECT_LT((kron_power(x, 3) - kron(kron(x, x), x)).norm(), 1e-15);
  EXPECT_EQ(kron_power(x, 0).rows(), 1);
}

TEST(PartialTrace, ProductOperator) {
  states::Rng rng(3);
  const auto a = random_density(rng, 2), b = random_density(rng, 3);
  const auto c = random_density(rng, 2);
  const SubsystemShape s{2, 3, 2};
  const auto abc = kron(kron(a, b), c);
  EXPECT_LT((partial_trace(abc, s, {0}) - a).norm(), 1e-12);
  EXPECT_LT((partial_trace(abc, s, {1}) - b).norm(), 1e-12);
  EXPECT_LT((partial_trace(abc, s, {0, 2}) - kron(a, c)).norm(), 1e-12);
  EXPECT_LT((partial_trace(abc, s, {2, 0}) - kron(a, c)).norm(), 1e-12);
}

// Element-wise definition as oracle.
TEST(PartialTrace, MatchesExplicitSum) {
  states::Rng rng(5);
  const auto m = random_matrix(rng, 12, 12);
  const SubsystemShape s{2, 3, 2};
  const auto got = partial_trace(m, s, {1});
  ComplexMatrix want = ComplexMatrix::Zero(3, 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      for (Index a = 0; a < 2; ++a)
        for (Index c = 0; c < 2; ++c)
          want(i, j) += m(a * 6 + i * 2 + c, a * 6 + j * 2 + c);
  EXPECT_LT((got - want).norm(), 1e-12);
}

TEST(PartialTrace, LinearAndTracePreserving) {
  states::Rng rng(7);
  const SubsystemShape s{2, 2, 2};
  for (int t = 0; t < 20; ++t) {
    const auto x = random_matrix(rng, 8, 8), y = random_matrix(rng, 8, 8);
    const Complex k(0.3, -1.2);
    EXPECT_LT((partial_trace(x + k * y, s, {1}) -
               partial_trace(x, s, {1}) - k * partial_trace(y, s, {1}))
                  .norm(),
              1e-12);
    EXPECT_LT(std::abs(partial_trace(x, s, {0, 2}).trace() - x.trace()), 1e-12);
  }
}

TEST(PartialTrace, RejectsBadShape) {
  EXPECT_THROW(partial_trace(identity(4), SubsystemShape{2, 3}, {0}), DimensionError);
  EXPECT_THROW(partial_trace(identity(4), SubsystemShape{2, 2}, {2}), InvalidArgument);
}

TEST(Permutation, MovesFactors) {
  states::Rng rng(13);
  const auto a = random_matrix(rng, 2, 2), b = random_matrix(rng, 3, 3);
  const auto c = random_matrix(rng, 2, 2);
  const SubsystemShape s{2, 3, 2};
  // factor 0 -> slot 2, 1 -> 0, 2 -> 1
  const auto p = permutation_operator(s, {2, 0, 1});
  EXPECT_LT((p * kron(kron(a, b), c) * p.adjoint() - kron(kron(b, c), a)).norm(), 1e-12);
  EXPECT_LT((p.adjoint() * p - identity(12)).norm(), 1e-15);
}

TEST(Permutation, SwapIsInvolution) {
  const SubsystemShape s{2, 2};
  const auto swap = permutation_operator(s, {1, 0});
  EXPECT_LT((swap * swap - identity(4)).norm(), 1e-15);
  EXPECT_THROW(permutation_operator(s, {0, 0}), InvalidArgument);
}

TEST(HermEig, DescendingAndReconstructs) {
  states::Rng rng(17);
  const auto h = random_hermitian(rng, 6);
  const auto e = herm_eig(h);
  for (Index i = 1; i < 6; ++i) EXPECT_GE(e.eigenvalues(i - 1), e.eigenvalues(i));
  EXPECT_LT((e.reconstruct() - h).norm(), 1e-12);
  EXPECT_NEAR(max_eigenvalue(h), e.eigenvalues(0), 1e-12);
  EXPECT_NEAR(min_eigenvalue(h), e.eigenvalues(5), 1e-12);
}

TEST(HermEig, RejectsNonHermitian) {
  ComplexMatrix m = identity(2);
  m(0, 1) = 1.0;
  EXPECT_THROW(herm_eig(m), InvalidArgument);
}

TEST(Vec, LayoutAndRoundTrip) {
  states::Rng rng(19);
  const auto a = random_matrix(rng, 4, 2);
  const auto v = vec(a);
  for (Index i = 0; i < 2; ++i)
    for (Index o = 0; o < 4; ++o) EXPECT_EQ(v(i * 4 + o), a(o, i));
  EXPECT_EQ((unvec(v, 4, 2) - a).norm(), 0.0);
}

TEST(Vec, GammaVectorIsUnnormalizedBell) {
  const auto g = gamma_vector(2);
  EXPECT_NEAR(g.squaredNorm(), 2.0, 1e-15);
  EXPECT_EQ(g(0), Complex(1.0));
  EXPECT_EQ(g(3), Complex(1.0));
}

TEST(RealEmbedding, DoublesSpectrumAndInverts) {
  states::Rng rng(23);
  const auto h = random_hermitian(rng, 4);
  const RealMatrix r = real_embedding(h);
  EXPECT_LT((r - r.transpose()).norm(), 1e-14);
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(r);
  const auto e = herm_eig(h);
  for (Index i = 0; i < 4; ++i) {
    // ascending pairs in the embedding, descending in herm_eig
    EXPECT_NEAR(es.eigenvalues()(2 * i), e.eigenvalues(3 - i), 1e-12);
    EXPECT_NEAR(es.eigenvalues()(2 * i + 1), e.eigenvalues(3 - i), 1e-12);
  }
  EXPECT_LT((complex_from_embedding(r) - h).norm(), 1e-14);
  const auto k = random_hermitian(rng, 4);
  EXPECT_NEAR((real_embedding(h) * real_embedding(k)).trace(),
              2.0 * (h * k).trace().real(), 1e-12);
}

TEST(Ket, NormChecks) {
  ComplexVector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(Ket{v}, InvalidArgument);
  const auto k = Ket::normalized(v);
  EXPECT_NEAR(k.amplitudes().norm(), 1.0, 1e-15);
  EXPECT_THROW(Ket::normalized(ComplexVector::Zero(2)), InvalidArgument);
}

TEST(Pauli, Algebra) {
  const Complex i(0, 1);
  EXPECT_LT((pauli::X() * pauli::Y() - i * pauli::Z()).norm(), 1e-15);
  EXPECT_LT((pauli::Y() * pauli::Y() - pauli::I()).norm(), 1e-15);
}

}  // namespace
}  // namespace qclone
