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

#include <gtest/gtest.h>

#include <cmath>

#include "gskew/baselines.hpp"
#include "gskew/graph_fn.hpp"
#include "test_util.hpp"

namespace gskew {
namespace {

Eigen::MatrixXd cycles(const std::vector<int>& lengths) {
  int n = 0;
  for (int l : lengths) n += l;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  int base = 0;
  for (int l : lengths) {
    for (int i = 0; i < l; ++i) {
      const int u = base + i, v = base + (i + 1) % l;
      a(u, v) = a(v, u) = 1;
    }
    base += l;
  }
  return a;
}

TEST(Laplacian, K2) {
  Eigen::MatrixXd a(2, 2);
  a << 0, 1, 1, 0;
  const auto ev = laplacian_eigs(a);
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_NEAR(ev[0], 0.0, 1e-12);
  EXPECT_NEAR(ev[1], 2.0, 1e-12);
}

TEST(Laplacian, AscendingAndInvariant) {
  auto r = testing::rng(8);
  for (int t = 0; t < 10; ++t) {
    const Eigen::MatrixXd a = testing::random_simple_graph(7, r);
    const auto ev = laplacian_eigs(a);
    EXPECT_TRUE(std::is_sorted(ev.begin(), ev.end()));
    EXPECT_NEAR(ev[0], 0.0, 1e-10);
    const Permutation s = random_permutation(7, r);
    const auto ev2 = laplacian_eigs(permute_input(GraphInput{a}, s).adjacency);
    for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], ev2[i], 1e-10);
  }
}

TEST(Laplacian, DirectedRefused) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
  a(0, 1) = 1;
  EXPECT_THROW(laplacian_eigs(a), PreconditionError);
  EXPECT_THROW(wl1(a, 2), PreconditionError);
}

TEST(Wl1, TwoTrianglesVersusHexagon) {
  const Eigen::MatrixXd two_c3 = cycles({3, 3});
  const Eigen::MatrixXd c6 = cycles({6});
  for (int it = 0; it <= 6; ++it) EXPECT_EQ(wl1(two_c3, it), wl1(c6, it)) << "iters=" << it;
  const auto l1 = laplacian_eigs(two_c3), l2 = laplacian_eigs(c6);
  double diff = 0.0;
  for (std::size_t i = 0; i < l1.size(); ++i) diff = std::max(diff, std::abs(l1[i] - l2[i]));
  EXPECT_GT(diff, 0.5);
}

TEST(Wl1, SeparatesStarFromPath) {
  Eigen::MatrixXd star = Eigen::MatrixXd::Zero(4, 4), path = Eigen::MatrixXd::Zero(4, 4);
  for (int i = 1; i < 4; ++i) star(0, i) = star(i, 0) = 1;
  for (int i = 0; i < 3; ++i) path(i, i + 1) = path(i + 1, i) = 1;
  EXPECT_EQ(wl1(star, 0), wl1(path, 0));
  EXPECT_NE(wl1(star, 1), wl1(path, 1));
}

TEST(Wl1, InvariantUnderRelabeling) {
  auto r = testing::rng(9);
  for (int t = 0; t < 10; ++t) {
    const Eigen::MatrixXd a = testing::random_simple_graph(8, r);
    const Permutation s = random_permutation(8, r);
    EXPECT_EQ(wl1(a, 3), wl1(permute_input(GraphInput{a}, s).adjacency, 3));
  }
}

TEST(Eigenvalues, CollidingPairFromTheExample) {
  Eigen::MatrixXd a1(2, 2), a2(2, 2);
  a1 << 1, 1, 2, 2;
  a2 << 2, 1, 2, 1;
  for (const auto& a : {a1, a2}) {
    const auto ev = matrix_eigenvalues(a);
    EXPECT_NEAR(ev[0].real(), 0.0, 1e-12);
    EXPECT_NEAR(ev[1].real(), 3.0, 1e-12);
    EXPECT_NEAR(ev[0].imag(), 0.0, 1e-12);
    const auto sv = singular_values(a);
    EXPECT_NEAR(sv[0], std::sqrt(10.0), 1e-12);
    EXPECT_NEAR(sv[1], 0.0, 1e-12);
  }
}

}  // namespace
}  // namespace gskew
