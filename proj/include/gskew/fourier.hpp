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

// Band-limited Fourier transform of functions on S_n/S_{n-2}:
//
//   fhat(rho) = 1/(n(n-1)) * sum_y f(y) rho(y) tau(rho),    rho in Lambda_n,
//
// with tau the 0/1 diagonal projector onto trivial S_{n-2} blocks. Only the
// tau-selected columns of fhat(rho) can be non-zero, so only those columns
// are stored.
//
// The cosets are visited along a depth-first walk of the coset graph whose
// edges are left multiplications by adjacent transpositions. Each step costs
// one sparse generator application per stored column, O(dim). A transform
// is therefore O(n^2 * dim) = O(n^4) per irrep.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <memory>
#include <mutex>
#include <map>
#include <span>
#include <vector>

#include "gskew/error.hpp"
#include "gskew/graph_fn.hpp"
#include "gskew/perm.hpp"
#include "gskew/yor.hpp"

namespace gskew {

inline constexpr std::size_t kBandLimit = 4;

// Left multiplication by (k, k+1) followed by an optional first visit.
struct WalkStep {
  int k = 0;       // 0 only for the starting coset (the identity)
  int visit = -1;  // coset index on its first visit, else -1
};

// Depth-first tour over all n(n-1) cosets starting at the identity coset
// (n-1, n). Backtracking re-applies the same transposition.
inline std::vector<WalkStep> coset_walk(int n) {
  const int count = coset_count(n);
  std::vector<char> seen(static_cast<std::size_t>(count), 0);
  std::vector<WalkStep> steps;
  steps.reserve(static_cast<std::size_t>(2 * count));

  struct Frame {
    int a, b;
    int next_k;
    int via;  // transposition that led here
  };
  std::vector<Frame> stack;
  const int start = coset_index(n, n - 1, n);
  seen[start] = 1;
  steps.push_back({0, start});
  stack.push_back({n - 1, n, 1, 0});
  auto swap_val = [](int v, int k) { return v == k ? k + 1 : (v == k + 1 ? k : v); };
  while (!stack.empty()) {
    Frame& top = stack.back();
    bool descended = false;
    while (top.next_k < n) {
      const int k = top.next_k++;
      const int a2 = swap_val(top.a, k);
      const int b2 = swap_val(top.b, k);
      if (a2 == top.a && b2 == top.b) continue;
      const int idx = coset_index(n, a2, b2);
      if (seen[idx]) continue;
      seen[idx] = 1;
      steps.push_back({k, idx});
      stack.push_back({a2, b2, 1, k});
      descended = true;
      break;
    }
    if (!descended) {
      const int via = stack.back().via;
      stack.pop_back();
      if (via != 0) steps.push_back({via, -1});
    }
  }
  return steps;
}

// Irreps of Lambda_n, their tau projectors and the coset walk, fixed per n.
struct IrrepTables {
  int n = 0;
  std::array<IrrepTable, kBandLimit> irreps;
  std::array<TauProjector, kBandLimit> taus;
  std::array<std::vector<int>, kBandLimit> selected;  // tau-selected columns
  std::vector<WalkStep> walk;

  int dim(std::size_t r) const { return irreps[r].dim; }
  int block(std::size_t r) const { return static_cast<int>(selected[r].size()); }
};

inline IrrepTables make_irrep_tables(int n) {
  if (n < 4) throw DomainError("make_irrep_tables: n must be >= 4");
  IrrepTables t;
  t.n = n;
  const std::vector<Partition> parts = lambda_n(n);
  for (std::size_t r = 0; r < kBandLimit; ++r) {
    t.irreps[r] = build_irrep_table(parts[r]);
    t.taus[r] = tau_projector(t.irreps[r]);
    t.selected[r] = t.taus[r].selected();
  }
  t.walk = coset_walk(n);
  return t;
}

// Process-wide cache; tables are immutable once built.
inline std::shared_ptr<const IrrepTables> shared_irrep_tables(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const IrrepTables>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const IrrepTables>(make_irrep_tables(n));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(built)).first->second;
}

struct FourierComponent {
  Partition partition;
  int dim = 0;
  std::vector<int> nonzero_columns;
  Eigen::MatrixXd columns;  // dim x |nonzero_columns|

  Eigen::MatrixXd dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t c = 0; c < nonzero_columns.size(); ++c) {
      m.col(nonzero_columns[c]) = columns.col(static_cast<Eigen::Index>(c));
    }
    return m;
  }
};

struct FunctionSpectrum {
  std::array<FourierComponent, kBandLimit> components;
};

// Transforms every table in `functions` (n(n-1) values each, coset order) in
// one pass over the coset walk.
inline std::vector<FunctionSpectrum> fourier_transform_batch(
    std::span<const std::span<const double>> functions, const IrrepTables& tables) {
  const int n = tables.n;
  const int count = coset_count(n);
  for (const auto& f : functions) {
    if (f.size() != static_cast<std::size_t>(count)) {
      throw SizeError("fourier_transform: function table has wrong length for n=" + std::to_string(n));
    }
  }
  std::vector<FunctionSpectrum> out(functions.size());
  const double scale = 1.0 / static_cast<double>(count);
  for (std::size_t r = 0; r < kBandLimit; ++r) {
    const IrrepTable& irrep = tables.irreps[r];
    const auto& sel = tables.selected[r];
    const Eigen::Index dim = irrep.dim;
    const Eigen::Index c = static_cast<Eigen::Index>(sel.size());

    // Columns of rho(y) tau for the current walk position y.
    Eigen::MatrixXd cur = Eigen::MatrixXd::Zero(dim, c);
    for (Eigen::Index j = 0; j < c; ++j) cur(sel[j], j) = 1.0;

    std::vector<Eigen::MatrixXd> acc(functions.size(), Eigen::MatrixXd::Zero(dim, c));
    for (const WalkStep& step : tables.walk) {
      if (step.k != 0) irrep.generator(step.k).apply_inplace(cur);
      if (step.visit < 0) continue;
      for (std::size_t m = 0; m < functions.size(); ++m) {
        const double v = functions[m][static_cast<std::size_t>(step.visit)];
        if (v != 0.0) acc[m].noalias() += v * cur;
      }
    }
    for (std::size_t m = 0; m < functions.size(); ++m) {
      FourierComponent& comp = out[m].components[r];
      comp.partition = irrep.partition;
      comp.dim = irrep.dim;
      comp.nonzero_columns = sel;
      comp.columns = acc[m] * scale;
    }
  }
  return out;
}

inline FunctionSpectrum fourier_transform(const OrbitFunction& f, const IrrepTables& tables) {
  if (f.n() != tables.n) throw SizeError("fourier_transform: n mismatch between function and tables");
  const std::span<const double> view = f.values();
  return fourier_transform_batch(std::span<const std::span<const double>>(&view, 1), tables).front();
}

inline FunctionSpectrum fourier_transform(const OrbitFunction& f) {
  return fourier_transform(f, *shared_irrep_tables(f.n()));
}

struct SparsityEntry {
  Partition partition;
  int dim = 0;
  int nonzero_columns = 0;
};

inline std::vector<SparsityEntry> sparsity_profile(int n) {
  const auto tables = shared_irrep_tables(n);
  std::vector<SparsityEntry> out;
  for (std::size_t r = 0; r < kBandLimit; ++r) {
    out.push_back({tables->irreps[r].partition, tables->irreps[r].dim, tables->block(r)});
  }
  return out;
}

}  // namespace gskew
