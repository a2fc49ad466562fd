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

// Oracle-equivalence suite run by `gskew verify`. Each check reports the
// largest scaled deviation it saw against a tolerance.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "gskew/fourier.hpp"
#include "gskew/oracle.hpp"
#include "gskew/spectrum.hpp"

namespace gskew {

struct VerifyCheck {
  std::string name;
  double max_dev = 0.0;
  double tolerance = 1e-9;
  bool passed() const { return max_dev <= tolerance; }
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 5;
  // Flips the sign of one off-diagonal YOR entry in the tables under test.
  bool inject_fault = false;
};

// Tables for the fast path; with `fault`, the (k = n-1) generator of (n-1,1)
// gets one off-diagonal sign flipped.
inline IrrepTables tables_under_test(int n, bool fault) {
  IrrepTables t = make_irrep_tables(n);
  if (fault) {
    SparseGenerator& g = t.irreps[1].generators[static_cast<std::size_t>(n - 2)];
    for (int i = 0; i < g.dim(); ++i) {
      if (g.partner[i] >= 0) {
        g.off[i] = -g.off[i];
        break;
      }
    }
  }
  return t;
}

inline VerifyReport run_verification(const VerifyOptions& opt = {}) {
  VerifyReport rep;
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto random_orbit = [&](int n) {
    OrbitFunction f(n);
    for (double& v : f.values()) v = u(rng);
    return f;
  };
  auto random_multi = [&](int n, int d) {
    std::vector<OrbitFunction> o;
    for (int i = 0; i < d; ++i) o.push_back(random_orbit(n));
    return MultiOrbitFunction(std::move(o));
  };
  auto mat_dev = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return a.size() ? (a - b).cwiseAbs().maxCoeff() : 0.0;
  };

  const IrrepTables t4 = tables_under_test(4, opt.inject_fault);
  const IrrepTables t5 = tables_under_test(5, opt.inject_fault);

  {
    VerifyCheck c{"yor.homomorphism n=4 (exhaustive)"};
    const auto all = all_permutations(4);
    for (const IrrepTable& t : t4.irreps) {
      for (const auto& g : all) {
        for (const auto& h : all) c.max_dev = std::max(c.max_dev, mat_dev(yor_of(t, g * h), yor_of(t, g) * yor_of(t, h)));
      }
    }
    rep.checks.push_back(c);
  }
  {
    VerifyCheck c{"yor.orthogonality n=5"};
    for (const IrrepTable& t : t5.irreps) {
      for (int i = 0; i < 20; ++i) {
        const Eigen::MatrixXd m = yor_of(t, random_permutation(5, rng));
        c.max_dev = std::max(c.max_dev, mat_dev(m.transpose() * m, Eigen::MatrixXd::Identity(t.dim, t.dim)));
      }
    }
    rep.checks.push_back(c);
  }
  {
    VerifyCheck c{"yor.tau_vs_subgroup_average n=5"};
    for (std::size_t r = 0; r < kBandLimit; ++r) {
      const IrrepTable& t = t5.irreps[r];
      Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(t.dim, t.dim);
      const auto sub = subgroup_elements(5, 3);
      for (const auto& h : sub) avg += yor_of(t, h);
      avg /= static_cast<double>(sub.size());
      c.max_dev = std::max(c.max_dev, mat_dev(avg, t5.taus[r].dense()));
    }
    rep.checks.push_back(c);
  }
  {
    VerifyCheck c{"fourier.vs_full_group n=5"};
    for (int i = 0; i < opt.trials; ++i) {
      const OrbitFunction f = random_orbit(5);
      const FunctionSpectrum fast = fourier_transform(f, t5);
      const DenseGroupFunction dense = DenseGroupFunction::from_orbit(f);
      for (std::size_t r = 0; r < kBandLimit; ++r) {
        c.max_dev = std::max(c.max_dev, mat_dev(fast.components[r].dense(), naive_fourier(dense, fast.components[r].partition)));
      }
    }
    rep.checks.push_back(c);
  }
  {
    VerifyCheck c{"spectrum.precompute_vs_naive_average n=5"};
    const auto gens = double_coset_generators(5);
    for (int k : {3, 4}) {
      const OrbitFunction f = random_orbit(5);
      const PrecomputeTables pre = precompute_s(f, k);
      const DenseGroupFunction dense = DenseGroupFunction::from_orbit(f);
      for (std::size_t comb = 0; comb < pre.combinations.size(); ++comb) {
        std::vector<Permutation> G;
        for (int g : pre.combinations[comb].indices) G.push_back(gens[static_cast<std::size_t>(g)]);
        const std::vector<DenseGroupFunction> factors(G.size(), dense);
        const DenseGroupFunction s = naive_s(dense, factors, G);
        const auto table = pre.s_table(comb, 0);
        for (int y = 0; y < coset_count(5); ++y) {
          c.max_dev = std::max(c.max_dev, std::abs(table[y] - s(coset_at(5, y).canonical_perm())));
        }
      }
    }
    rep.checks.push_back(c);
  }
  for (int k : {3, 4}) {
    for (int d : {1, 2}) {
      VerifyCheck c{"spectrum.fast_vs_bruteforce n=5 k=" + std::to_string(k) + " d=" + std::to_string(d)};
      for (int i = 0; i < std::max(1, opt.trials / 2); ++i) {
        const MultiOrbitFunction f = random_multi(5, d);
        c.max_dev = std::max(c.max_dev, scaled_max_difference(doubly_reduced_k_spectrum(f, k, t5).entries,
                                                              brute_force_doubly_reduced(f, k).entries));
      }
      rep.checks.push_back(c);
    }
  }
  {
    VerifyCheck c{"spectrum.relabeling_invariance n=5..7"};
    for (int n = 5; n <= 7; ++n) {
      const IrrepTables t = n == 5 ? t5 : tables_under_test(n, opt.inject_fault);
      for (int i = 0; i < opt.trials; ++i) {
        const MultiOrbitFunction f = random_multi(n, 2);
        const Permutation s = random_permutation(n, rng);
        const MultiOrbitFunction g(std::vector<OrbitFunction>{left_translate(f[0], s), left_translate(f[1], s)});
        c.max_dev = std::max(c.max_dev, scaled_max_difference(doubly_reduced_k_spectrum(f, 3 + i % 3, t).entries,
                                                              doubly_reduced_k_spectrum(g, 3 + i % 3, t).entries));
      }
    }
    rep.checks.push_back(c);
  }
  {
    VerifyCheck c{"spectrum.zero_function n=5"};
    for (int k = kMinOrder; k <= kMaxOrder; ++k) {
      for (double v : doubly_reduced_k_spectrum(OrbitFunction(5), k, t5).entries) c.max_dev = std::max(c.max_dev, std::abs(v));
    }
    rep.checks.push_back(c);
  }
  {
    VerifyCheck c{"oracle.element_properties n=5", 0.0, 1e-12};
    std::bernoulli_distribution coin(0.5);
    OrbitFunction f(5);
    for (int a = 1; a <= 5; ++a) {
      for (int b = a + 1; b <= 5; ++b) f.at(a, b) = f.at(b, a) = coin(rng) ? 1.0 : 0.0;
    }
    const ElementPropertyReport e = element_property_checks(f);
    c.max_dev = std::max(e.distinctness_max_dev, e.ordering_max_dev);
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace gskew
