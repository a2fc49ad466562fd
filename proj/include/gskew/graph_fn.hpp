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

// Graph data as right-S_{n-2}-invariant functions on S_n.
//
// An OrbitFunction stores one value per coset (a, b) = (sigma(n-1), sigma(n)).
// The adjacency encoding is f(sigma) = A[sigma(n)][sigma(n-1)]: b indexes the
// row and a the column.

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gskew/error.hpp"
#include "gskew/perm.hpp"

namespace gskew {

class OrbitFunction {
 public:
  OrbitFunction() = default;
  explicit OrbitFunction(int n)
      : n_(n), values_(static_cast<std::size_t>(n >= 2 ? coset_count(n) : 0), 0.0) {
    if (n < 2) throw DomainError("OrbitFunction: n must be >= 2");
  }
  OrbitFunction(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    if (n < 2) throw DomainError("OrbitFunction: n must be >= 2");
    if (values_.size() != static_cast<std::size_t>(coset_count(n))) {
      throw SizeError("OrbitFunction: expected " + std::to_string(coset_count(n)) +
                      " coset values, got " + std::to_string(values_.size()));
    }
  }

  int n() const { return n_; }

  // Value on the coset (a, b), a != b, 1-based.
  double at(int a, int b) const { return values_[static_cast<std::size_t>(coset_index(n_, a, b))]; }
  double& at(int a, int b) { return values_[static_cast<std::size_t>(coset_index(n_, a, b))]; }

  double operator()(const Permutation& sigma) const {
    if (sigma.size() != n_) throw SizeError("OrbitFunction: permutation degree mismatch");
    return at(sigma(n_ - 1), sigma(n_));
  }

  // Values in coset_transversal order.
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  friend bool operator==(const OrbitFunction&, const OrbitFunction&) = default;

 private:
  int n_ = 0;
  std::vector<double> values_;
};

// f: S_n/S_{n-2} -> R^d as d real orbit functions over one n.
class MultiOrbitFunction {
 public:
  MultiOrbitFunction() = default;
  explicit MultiOrbitFunction(std::vector<OrbitFunction> orbits) : orbits_(std::move(orbits)) {
    if (orbits_.empty()) throw DomainError("MultiOrbitFunction: at least one orbit required");
    for (const auto& o : orbits_) {
      if (o.n() != orbits_.front().n()) {
        throw SizeError("MultiOrbitFunction: orbits disagree on n");
      }
    }
  }
  MultiOrbitFunction(OrbitFunction single)  // NOLINT(google-explicit-constructor)
      : MultiOrbitFunction(std::vector<OrbitFunction>{std::move(single)}) {}

  int n() const { return orbits_.front().n(); }
  int d() const { return static_cast<int>(orbits_.size()); }
  const OrbitFunction& operator[](std::size_t i) const { return orbits_[i]; }
  OrbitFunction& operator[](std::size_t i) { return orbits_[i]; }
  const std::vector<OrbitFunction>& orbits() const { return orbits_; }

 private:
  std::vector<OrbitFunction> orbits_;
};

// Node-indexed graph data. Every structure is relabeled together by
// permute_input. Missing optional parts are empty.
struct GraphInput {
  Eigen::MatrixXd adjacency;            // n x n
  Eigen::MatrixXd node_features;        // n x p, p may be 0
  std::vector<Eigen::MatrixXd> edge_features;  // d_e slices, each n x n
  std::vector<Eigen::MatrixXd> layers;  // each n x n
  Eigen::MatrixXd hyper_incidence;      // m x n, m may be 0

  int n() const { return static_cast<int>(adjacency.rows()); }

  void validate() const {
    const Eigen::Index n = adjacency.rows();
    if (adjacency.cols() != n) throw SizeError("GraphInput: adjacency is not square");
    if (node_features.size() > 0 && node_features.rows() != n) {
      throw SizeError("GraphInput: node_features must have n rows");
    }
    for (const auto& m : edge_features) {
      if (m.rows() != n || m.cols() != n) throw SizeError("GraphInput: edge feature slice is not n x n");
    }
    for (const auto& m : layers) {
      if (m.rows() != n || m.cols() != n) throw SizeError("GraphInput: layer is not n x n");
    }
    if (hyper_incidence.size() > 0 && hyper_incidence.cols() != n) {
      throw SizeError("GraphInput: hyper_incidence must have n columns");
    }
  }
};

namespace detail {

inline void require_square(const Eigen::MatrixXd& a, const char* what) {
  if (a.rows() != a.cols()) throw SizeError(std::string(what) + ": matrix is not square");
  if (a.rows() < 4) throw DomainError(std::string(what) + ": n must be >= 4");
}

}  // namespace detail

// values[(a, b)] = A[b][a].
inline OrbitFunction from_adjacency(const Eigen::MatrixXd& a) {
  detail::require_square(a, "from_adjacency");
  const int n = static_cast<int>(a.rows());
  OrbitFunction f(n);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (x != y) f.at(x, y) = a(y - 1, x - 1);
    }
  }
  return f;
}

// Self-loop orbit: values[(a, b)] = A[b][b].
inline OrbitFunction from_diagonal(const Eigen::MatrixXd& a) {
  detail::require_square(a, "from_diagonal");
  const int n = static_cast<int>(a.rows());
  OrbitFunction f(n);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (x != y) f.at(x, y) = a(y - 1, y - 1);
    }
  }
  return f;
}

// values[(a, b)] = x[b].
inline OrbitFunction from_node_feature(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  if (n < 4) throw DomainError("from_node_feature: n must be >= 4");
  OrbitFunction f(n);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a != b) f.at(a, b) = x(b - 1);
    }
  }
  return f;
}

inline OrbitFunction from_edge_feature_layer(const Eigen::MatrixXd& layer) {
  return from_adjacency(layer);
}

// One node-feature orbit per hyperedge (row of H).
inline MultiOrbitFunction from_hypergraph_incidence(const Eigen::MatrixXd& h) {
  if (h.rows() < 1) throw DomainError("from_hypergraph_incidence: at least one hyperedge required");
  std::vector<OrbitFunction> orbits;
  orbits.reserve(static_cast<std::size_t>(h.rows()));
  for (Eigen::Index e = 0; e < h.rows(); ++e) orbits.push_back(from_node_feature(h.row(e).transpose()));
  return MultiOrbitFunction(std::move(orbits));
}

// Relabels node i as sigma(i) in every structure: A'[sigma(i)][sigma(j)] = A[i][j].
// The adjacency orbit then transforms as f'(g) = f(sigma^{-1} g).
inline GraphInput permute_input(const GraphInput& g, const Permutation& sigma) {
  g.validate();
  const int n = g.n();
  if (sigma.size() != n) throw SizeError("permute_input: permutation degree mismatch");
  auto conj = [&](const Eigen::MatrixXd& m) {
    Eigen::MatrixXd out(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) out(sigma.images0()[i], sigma.images0()[j]) = m(i, j);
    }
    return out;
  };
  GraphInput out;
  out.adjacency = conj(g.adjacency);
  if (g.node_features.size() > 0) {
    out.node_features.resize(n, g.node_features.cols());
    for (int i = 0; i < n; ++i) out.node_features.row(sigma.images0()[i]) = g.node_features.row(i);
  }
  for (const auto& m : g.edge_features) out.edge_features.push_back(conj(m));
  for (const auto& m : g.layers) out.layers.push_back(conj(m));
  if (g.hyper_incidence.size() > 0) {
    out.hyper_incidence.resize(g.hyper_incidence.rows(), n);
    for (int i = 0; i < n; ++i) out.hyper_incidence.col(sigma.images0()[i]) = g.hyper_incidence.col(i);
  }
  return out;
}

// y -> f(sigma^{-1} y), as a table.
inline OrbitFunction left_translate(const OrbitFunction& f, const Permutation& sigma) {
  const int n = f.n();
  if (sigma.size() != n) throw SizeError("left_translate: permutation degree mismatch");
  const Permutation inv = inverse(sigma);
  OrbitFunction out(n);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a != b) out.at(a, b) = f.at(inv(a), inv(b));
    }
  }
  return out;
}

// How a GraphInput is split into orbits.
enum class OrbitRecipe {
  kAdjacency,     // off-diagonal adjacency only
  kSelfLoops,     // off-diagonal, then diagonal
  kNodeFeatures,  // one orbit per feature column, then adjacency
  kEdgeFeatures,  // one orbit per edge-feature slice
  kLayers,        // one orbit per layer
  kHypergraph,    // one orbit per hyperedge
};

inline std::optional<OrbitRecipe> parse_orbit_recipe(std::string_view s) {
  if (s == "adjacency") return OrbitRecipe::kAdjacency;
  if (s == "selfloops") return OrbitRecipe::kSelfLoops;
  if (s == "node-features") return OrbitRecipe::kNodeFeatures;
  if (s == "edge-features") return OrbitRecipe::kEdgeFeatures;
  if (s == "layers") return OrbitRecipe::kLayers;
  if (s == "hypergraph") return OrbitRecipe::kHypergraph;
  return std::nullopt;
}

inline MultiOrbitFunction build_orbits(const GraphInput& g, OrbitRecipe recipe) {
  g.validate();
  std::vector<OrbitFunction> orbits;
  switch (recipe) {
    case OrbitRecipe::kAdjacency:
      orbits.push_back(from_adjacency(g.adjacency));
      break;
    case OrbitRecipe::kSelfLoops:
      orbits.push_back(from_adjacency(g.adjacency));
      orbits.push_back(from_diagonal(g.adjacency));
      break;
    case OrbitRecipe::kNodeFeatures:
      for (Eigen::Index c = 0; c < g.node_features.cols(); ++c) {
        orbits.push_back(from_node_feature(g.node_features.col(c)));
      }
      orbits.push_back(from_adjacency(g.adjacency));
      break;
    case OrbitRecipe::kEdgeFeatures:
      if (g.edge_features.empty()) throw PreconditionError("build_orbits: graph has no edge features");
      for (const auto& m : g.edge_features) orbits.push_back(from_edge_feature_layer(m));
      break;
    case OrbitRecipe::kLayers:
      if (g.layers.empty()) throw PreconditionError("build_orbits: graph has no layers");
      for (const auto& m : g.layers) orbits.push_back(from_edge_feature_layer(m));
      break;
    case OrbitRecipe::kHypergraph:
      if (g.hyper_incidence.rows() == 0) throw PreconditionError("build_orbits: graph has no hyperedges");
      return from_hypergraph_incidence(g.hyper_incidence);
  }
  return MultiOrbitFunction(std::move(orbits));
}

// Embeds the graph into n_target >= n nodes; the new nodes are isolated and
// carry zero features.
inline GraphInput pad_input(const GraphInput& g, int n_target) {
  g.validate();
  const int n = g.n();
  if (n_target <= n) return g;
  auto pad = [&](const Eigen::MatrixXd& m) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n_target, n_target);
    out.topLeftCorner(n, n) = m;
    return out;
  };
  GraphInput out;
  out.adjacency = pad(g.adjacency);
  if (g.node_features.size() > 0) {
    out.node_features = Eigen::MatrixXd::Zero(n_target, g.node_features.cols());
    out.node_features.topRows(n) = g.node_features;
  }
  for (const auto& m : g.edge_features) out.edge_features.push_back(pad(m));
  for (const auto& m : g.layers) out.layers.push_back(pad(m));
  if (g.hyper_incidence.size() > 0) {
    out.hyper_incidence = Eigen::MatrixXd::Zero(g.hyper_incidence.rows(), n_target);
    out.hyper_incidence.leftCols(n) = g.hyper_incidence;
  }
  return out;
}

}  // namespace gskew
