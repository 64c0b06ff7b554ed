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

#pragma once

// Finite groups of basis permutations acting on Hermitian matrices by
// conjugation X -> G X G^dagger.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "qclone/tensorlab.hpp"

namespace qclone::sdp {

/// Permutation of basis vectors: the operator maps |j> to |map[j]>.
using IndexMap = std::vector<Index>;

inline IndexMap identity_map(Index n) {
  IndexMap m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), Index{0});
  return m;
}

/// Map of the product G H (apply H first).
inline IndexMap compose(const IndexMap& g, const IndexMap& h) {
  IndexMap out(h.size());
  for (std::size_t j = 0; j < h.size(); ++j)
    out[j] = g[static_cast<std::size_t>(h[j])];
  return out;
}

/// G X G^dagger for a permutation operator G.
inline ComplexMatrix conjugate(const ComplexMatrix& x, const IndexMap& g) {
  ComplexMatrix out(x.rows(), x.cols());
  for (Index a = 0; a < x.rows(); ++a) {
    const Index ga = g[static_cast<std::size_t>(a)];
    for (Index b = 0; b < x.cols(); ++b) out(ga, g[static_cast<std::size_t>(b)]) = x(a, b);
  }
  return out;
}

/// Elements of the group generated by a set of permutations, enumerated
/// breadth first. Each non-identity element u is g[letter[u]] * element
/// parent[u]; the identity is element 0.
struct PermutationGroup {
  std::vector<IndexMap> elements;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> letter;

  std::size_t order() const { return elements.size(); }
};

inline PermutationGroup generate_group(const std::vector<IndexMap>& generators,
                                       Index n, std::size_t max_order = 1000000) {
  PermutationGroup g;
  std::map<IndexMap, std::size_t> seen;
  g.elements.push_back(identity_map(n));
  g.parent.push_back(0);
  g.letter.push_back(0);
  seen.emplace(g.elements.front(), 0);
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      IndexMap next = compose(generators[k], g.elements[head]);
      if (seen.count(next)) continue;
      if (g.elements.size() >= max_order)
        throw InvalidArgument("generate_group: group order exceeds limit");
      seen.emplace(next, g.elements.size());
      g.elements.push_back(std::move(next));
      g.parent.push_back(head);
      g.letter.push_back(k);
    }
  }
  return g;
}

/// Projection onto the fixed-point subspace: (1/|H|) sum_h h X h^dagger.
inline ComplexMatrix group_average(const ComplexMatrix& x,
                                   const PermutationGroup& group) {
  ComplexMatrix acc = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const auto& h : group.elements) acc += conjugate(x, h);
  return acc / static_cast<double>(group.order());
}

/// Hermitian Z_g, one per generator, with
///   sum_g (Z_g - G_g Z_g G_g^dagger) = omega - group_average(omega).
/// Each h = g_{k1} ... g_{kL} telescopes omega - h omega h^dagger into
/// sum_l (W_l - g_{kl} W_l g_{kl}^dagger) with W_l the conjugation of omega by
/// the suffix g_{k(l+1)} ... g_{kL}; summed over the group this charges each
/// non-identity element u with its subtree size times parent(u) omega
/// parent(u)^dagger.
inline std::vector<ComplexMatrix> commutator_multipliers(
    const ComplexMatrix& omega, const std::vector<IndexMap>& generators,
    const PermutationGroup& group) {
  const std::size_t order = group.order();
  std::vector<double> subtree(order, 1.0);
  for (std::size_t u = order; u-- > 1;) subtree[group.parent[u]] += subtree[u];

  std::vector<ComplexMatrix> conj_by(order);
  conj_by[0] = omega;
  std::vector<ComplexMatrix> z(generators.size(),
                               ComplexMatrix::Zero(omega.rows(), omega.cols()));
  for (std::size_t u = 1; u < order; ++u) {
    const std::size_t p = group.parent[u];
    if (conj_by[p].size() == 0) conj_by[p] = conjugate(omega, group.elements[p]);
    z[group.letter[u]] += subtree[u] * conj_by[p];
  }
  for (auto& m : z) m /= static_cast<double>(order);
  return z;
}

/// max_g || X - G X G^dagger ||_F
inline double symmetry_residual(const ComplexMatrix& x,
                                const std::vector<IndexMap>& generators) {
  double r = 0.0;
  for (const auto& g : generators) r = std::max(r, (x - conjugate(x, g)).norm());
  return r;
}

}  // namespace qclone::sdp
