// Copyright 2026 The gskew Authors
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

// Enumeration of all simple graphs on n vertices up to isomorphism, by edge
// augmentation and canonical-form deduplication.
//
// A graph is a bitmask over vertex pairs (i < j), pair (i, j) at bit
// pair_bit(n, i, j). The canonical form is the minimum mask over the
// relabelings that sort vertices by degree.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "gskew/error.hpp"

namespace gskew {

inline constexpr int kAtlasMaxN = 8;

using GraphMask = std::uint64_t;

inline int pair_bit(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline Eigen::MatrixXd mask_to_adjacency(GraphMask m, int n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m >> pair_bit(n, i, j) & 1U) a(i, j) = a(j, i) = 1.0;
    }
  }
  return a;
}

inline GraphMask adjacency_to_mask(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  if (n > kAtlasMaxN + 3) throw SizeError("adjacency_to_mask: graph too large for a 64-bit mask");
  GraphMask m = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j) != 0.0) m |= GraphMask{1} << pair_bit(n, i, j);
    }
  }
  return m;
}

namespace detail {

inline GraphMask relabel_mask(GraphMask m, int n, const std::vector<int>& to) {
  GraphMask out = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m >> pair_bit(n, i, j) & 1U) out |= GraphMask{1} << pair_bit(n, to[i], to[j]);
    }
  }
  return out;
}

}  // namespace detail

// Minimum relabeled mask over all degree-sorting relabelings.
inline GraphMask canonical_form(GraphMask m, int n) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m >> pair_bit(n, i, j) & 1U) {
        ++deg[i];
        ++deg[j];
      }
    }
  }
  // Vertices with larger degree go to smaller labels; ties are permuted freely.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return deg[x] > deg[y]; });
  std::vector<std::pair<int, int>> classes;  // [begin, end) in order
  for (int s = 0; s < n;) {
    int e = s;
    while (e < n && deg[order[e]] == deg[order[s]]) ++e;
    classes.push_back({s, e});
    s = e;
  }
  GraphMask best = ~GraphMask{0};
  std::vector<int> to(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == classes.size()) {
      for (int p = 0; p < n; ++p) to[order[p]] = p;
      best = std::min(best, detail::relabel_mask(m, n, to));
      return;
    }
    auto [s, e] = classes[c];
    std::sort(order.begin() + s, order.begin() + e);
    do {
      self(self, c + 1);
    } while (std::next_permutation(order.begin() + s, order.begin() + e));
  };
  rec(rec, 0);
  return best;
}

// All isomorphism classes of simple graphs on n vertices, as canonical masks
// sorted by (edge count, mask).
inline std::vector<GraphMask> enumerate_graphs(int n) {
  if (n < 1 || n > kAtlasMaxN) throw DomainError("enumerate_graphs: n must lie in [1, 8]");
  std::vector<GraphMask> all;
  std::vector<GraphMask> level{0};
  const int pairs = pair_count(n);
  for (int edges = 0; edges <= pairs; ++edges) {
    all.insert(all.end(), level.begin(), level.end());
    std::set<GraphMask> next;
    for (GraphMask g : level) {
      for (int b = 0; b < pairs; ++b) {
        if (!(g >> b & 1U)) next.insert(canonical_form(g | GraphMask{1} << b, n));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return all;
}

}  // namespace gskew
