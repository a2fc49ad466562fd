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

#include "gskew/graph_fn.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace gskew {
namespace {

Eigen::MatrixXd fig2_matrix() {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 4);
  a(0, 1) = 1.3;
  a(1, 0) = 1.5;
  a(1, 2) = 0.3;
  a(1, 3) = 0.8;
  a(3, 0) = 1.0;
  a(3, 2) = 2.0;
  return a;
}

TEST(FromAdjacency, Fig2IdentityValue) {
  const OrbitFunction f = from_adjacency(fig2_matrix());
  EXPECT_EQ(f(Permutation(4)), 2.0);
  EXPECT_EQ(f.at(3, 4), 2.0);
  EXPECT_EQ(f.at(2, 1), 1.3);  // A[1][2]
  EXPECT_EQ(f.at(1, 2), 1.5);
}

TEST(FromAdjacency, ZeroAndDomain) {
  const OrbitFunction f = from_adjacency(Eigen::MatrixXd::Zero(5, 5));
  for (double v : f.values()) EXPECT_EQ(v, 0.0);
  EXPECT_THROW(from_adjacency(Eigen::MatrixXd::Zero(3, 3)), DomainError);
  EXPECT_THROW(from_adjacency(Eigen::MatrixXd::Zero(4, 5)), SizeError);
}

TEST(FromAdjacency, DirectDoubleIndex) {
  auto r = testing::rng(20);
  for (int t = 0; t < 50; ++t) {
    const int n = 4 + t % 6;
    const Eigen::MatrixXd a = testing::random_weighted(n, r);
    const OrbitFunction f = from_adjacency(a);
    const Permutation s = random_permutation(n, r);
    EXPECT_EQ(f(s), a(s(n) - 1, s(n - 1) - 1));
  }
}

TEST(FromAdjacency, RightInvariance) {
  auto r = testing::rng(21);
  for (int t = 0; t < 100; ++t) {
    const int n = 5 + t % 5;
    const OrbitFunction f = from_adjacency(testing::random_weighted(n, r));
    const Permutation s = random_permutation(n, r);
    const Permutation h = random_subgroup_element(n, n - 2, r);
    EXPECT_EQ(f(s * h), f(s));
  }
}

TEST(FromDiagonal, Examples) {
  const OrbitFunction one = from_diagonal(Eigen::MatrixXd::Identity(5, 5));
  for (double v : one.values()) EXPECT_EQ(v, 1.0);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(6, 6);
  for (int i = 0; i < 6; ++i) d(i, i) = i + 1;
  const OrbitFunction f = from_diagonal(d);
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      if (a != b) EXPECT_EQ(f.at(a, b), b);
    }
  }
}

TEST(FromNodeFeature, Examples) {
  const OrbitFunction c = from_node_feature(Eigen::VectorXd::Constant(5, 2.5));
  for (double v : c.values()) EXPECT_EQ(v, 2.5);
  Eigen::VectorXd hot = Eigen::VectorXd::Zero(5);
  hot(2) = 1.0;
  const OrbitFunction f = from_node_feature(hot);
  int nz = 0;
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      if (a == b) continue;
      if (f.at(a, b) != 0.0) {
        ++nz;
        EXPECT_EQ(b, 3);
      }
    }
  }
  EXPECT_EQ(nz, 4);
}

TEST(FromNodeFeature, RelabeledLabelsArePermutedTables) {
  // A 5-node labelled graph and a relabeling of it.
  GraphInput g;
  g.adjacency = Eigen::MatrixXd::Zero(5, 5);
  for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}) g.adjacency(i, j) = g.adjacency(j, i) = 1;
  g.node_features = Eigen::MatrixXd(5, 1);
  g.node_features << 1, 2, 3, 4, 5;
  const Permutation s = Permutation::from_images({3, 5, 1, 2, 4});
  const GraphInput h = permute_input(g, s);
  const OrbitFunction f1 = from_node_feature(g.node_features.col(0));
  const OrbitFunction f2 = from_node_feature(h.node_features.col(0));
  EXPECT_EQ(left_translate(f1, s), f2);
  std::vector<double> a(f1.values().begin(), f1.values().end());
  std::vector<double> b(f2.values().begin(), f2.values().end());
  EXPECT_NE(a, b);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(FromHypergraph, Examples) {
  const MultiOrbitFunction one = from_hypergraph_incidence(Eigen::MatrixXd::Ones(1, 5));
  ASSERT_EQ(one.d(), 1);
  for (double v : one[0].values()) EXPECT_EQ(v, 1.0);

  Eigen::MatrixXd h(2, 4);
  h << 1, 1, 0, 0, 0, 0, 1, 1;
  const MultiOrbitFunction two = from_hypergraph_incidence(h);
  ASSERT_EQ(two.d(), 2);
  for (std::size_t i = 0; i < two[0].values().size(); ++i) {
    EXPECT_EQ(two[0].values()[i] + two[1].values()[i], 1.0);
  }

  Eigen::MatrixXd tri(1, 4);
  tri << 1, 1, 1, 0;
  const MultiOrbitFunction t = from_hypergraph_incidence(tri);
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      if (a != b) EXPECT_EQ(t[0].at(a, b), b <= 3 ? 1.0 : 0.0);
    }
  }
  EXPECT_THROW(from_hypergraph_incidence(Eigen::MatrixXd(0, 4)), DomainError);
}

TEST(PermuteInput, IdentityAndInverse) {
  auto r = testing::rng(22);
  GraphInput g;
  g.adjacency = testing::random_weighted(6, r);
  g.node_features = Eigen::MatrixXd::Random(6, 2);
  g.layers = {testing::random_weighted(6, r)};
  g.hyper_incidence = Eigen::MatrixXd::Random(3, 6);
  const GraphInput same = permute_input(g, Permutation(6));
  EXPECT_EQ(same.adjacency, g.adjacency);
  EXPECT_EQ(same.node_features, g.node_features);
  const Permutation s = random_permutation(6, r);
  const GraphInput back = permute_input(permute_input(g, s), inverse(s));
  EXPECT_EQ(back.adjacency, g.adjacency);
  EXPECT_EQ(back.node_features, g.node_features);
  EXPECT_EQ(back.layers[0], g.layers[0]);
  EXPECT_EQ(back.hyper_incidence, g.hyper_incidence);
}

TEST(PermuteInput, AdjacencyIsLeftTranslate) {
  auto r = testing::rng(23);
  for (int t = 0; t < 30; ++t) {
    const int n = 5 + t % 5;
    GraphInput g;
    g.adjacency = testing::random_weighted(n, r);
    const Permutation s = random_permutation(n, r);
    const OrbitFunction f = from_adjacency(g.adjacency);
    const OrbitFunction fp = from_adjacency(permute_input(g, s).adjacency);
    EXPECT_EQ(fp, left_translate(f, s));
    const Permutation x = random_permutation(n, r);
    EXPECT_EQ(fp(x), f(inverse(s) * x));
  }
}

// Finds a relabeling of G2 onto G1's edges under which the labels disagree.
TEST(PermuteInput, EdgeAligningRelabelingBySearch) {
  Eigen::MatrixXd a1 = Eigen::MatrixXd::Zero(5, 5);
  for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}}) a1(i, j) = a1(j, i) = 1;
  const Permutation hidden = Permutation::from_images({2, 4, 1, 5, 3});
  GraphInput g2;
  g2.adjacency = a1;
  g2 = permute_input(g2, hidden);
  g2.node_features = Eigen::MatrixXd(5, 1);
  g2.node_features << 1, 0, 0, 0, 0;
  Eigen::MatrixXd labels1(5, 1);
  labels1 << 1, 0, 0, 0, 0;
  int aligning = 0;
  for (const Permutation& s : all_permutations(5)) {
    const GraphInput h = permute_input(g2, s);
    if (h.adjacency == a1) {
      ++aligning;
      EXPECT_NE(h.node_features, labels1);
    }
  }
  EXPECT_EQ(aligning, 2);  // the path P5 has two automorphisms
}

TEST(BuildOrbits, Recipes) {
  auto r = testing::rng(24);
  GraphInput g;
  g.adjacency = testing::random_weighted(5, r);
  g.adjacency(0, 0) = 3.0;
  g.node_features = Eigen::MatrixXd::Random(5, 3);
  EXPECT_EQ(build_orbits(g, OrbitRecipe::kAdjacency).d(), 1);
  EXPECT_EQ(build_orbits(g, OrbitRecipe::kSelfLoops).d(), 2);
  const MultiOrbitFunction nf = build_orbits(g, OrbitRecipe::kNodeFeatures);
  ASSERT_EQ(nf.d(), 4);
  EXPECT_EQ(nf[3], from_adjacency(g.adjacency));
  EXPECT_THROW(build_orbits(g, OrbitRecipe::kLayers), PreconditionError);
  EXPECT_EQ(parse_orbit_recipe("node-features"), OrbitRecipe::kNodeFeatures);
  EXPECT_FALSE(parse_orbit_recipe("bogus").has_value());
}

TEST(PadInput, AddsIsolatedNodes) {
  GraphInput g;
  g.adjacency = Eigen::MatrixXd::Ones(4, 4);
  const GraphInput p = pad_input(g, 6);
  ASSERT_EQ(p.n(), 6);
  EXPECT_EQ(p.adjacency.topLeftCorner(4, 4), g.adjacency);
  EXPECT_EQ(p.adjacency.row(5).sum(), 0.0);
}

}  // namespace
}  // namespace gskew
