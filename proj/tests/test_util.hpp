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

#pragma once

#include <Eigen/Dense>

#include <random>
#include <vector>

#include "gskew/graph_fn.hpp"
#include "gskew/perm.hpp"

namespace gskew::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline OrbitFunction random_orbit(int n, std::mt19937_64& g, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  OrbitFunction f(n);
  for (double& v : f.values()) v = u(g);
  return f;
}

inline MultiOrbitFunction random_multi(int n, int d, std::mt19937_64& g) {
  std::vector<OrbitFunction> o;
  for (int i = 0; i < d; ++i) o.push_back(random_orbit(n, g));
  return MultiOrbitFunction(std::move(o));
}

inline Eigen::MatrixXd random_weighted(int n, std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(0.1, 2.0);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = i == j ? 0.0 : u(g);
  }
  return a;
}

inline Eigen::MatrixXd random_simple_graph(int n, std::mt19937_64& g, double p = 0.5) {
  std::bernoulli_distribution b(p);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (b(g)) a(i, j) = a(j, i) = 1.0;
    }
  }
  return a;
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace gskew::testing
