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

// Embeds a small molecule-like graph, a relabeled copy and a near miss, then
// prints how far apart the three embeddings are.

#include <cstdio>

#include "gskew/spectrum.hpp"

int main() {
  using namespace gskew;
  const int n = 6;

  // A 6-cycle with one chord; node features mark two "heavy" atoms.
  GraphInput g;
  g.adjacency = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) g.adjacency(i, (i + 1) % n) = g.adjacency((i + 1) % n, i) = 1.0;
  g.adjacency(0, 3) = g.adjacency(3, 0) = 1.0;
  g.node_features = Eigen::MatrixXd::Zero(n, 1);
  g.node_features(1, 0) = g.node_features(4, 0) = 1.0;

  const GraphInput relabeled = permute_input(g, Permutation::from_images({4, 6, 1, 3, 2, 5}));

  // Same bonds, one heavy atom moved next to the chord.
  GraphInput moved = g;
  moved.node_features(4, 0) = 0.0;
  moved.node_features(3, 0) = 1.0;

  const std::vector<int> ks{3, 4};
  auto embed = [&](const GraphInput& x) { return concat_spectra(build_orbits(x, OrbitRecipe::kNodeFeatures), ks); };
  const SpectrumEmbedding e0 = embed(g), e1 = embed(relabeled), e2 = embed(moved);

  std::printf("orbits d=%d, entries %zu (%zu non-zero)\n", e0.d, e0.size(), count_nonzeros(e0));
  for (const auto& seg : e0.segments) std::printf("  k=%d: offset %zu, length %zu\n", seg.k, seg.offset, seg.length);
  std::printf("relabeled copy: max scaled difference %.2e\n", scaled_max_difference(e0.entries, e1.entries));
  std::printf("moved feature:  max scaled difference %.2e\n", scaled_max_difference(e0.entries, e2.entries));

  std::size_t top = 0;
  for (std::size_t i = 1; i < e0.size(); ++i) {
    if (std::abs(e0.entries[i] - e2.entries[i]) > std::abs(e0.entries[top] - e2.entries[top])) top = i;
  }
  const EntryLabel lab = describe_entry(e0, top);
  std::printf("largest change at entry %zu: k=%d, irrep %s, generators {%s}\n", top, lab.k,
              lambda_n(n)[lab.irrep].to_string().c_str(), lab.combination.to_string().c_str());
  return 0;
}
