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

// Baseline graph invariants for collision experiments: Laplacian spectrum,
// plain eigenvalues, and 1-WL color refinement.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gskew/error.hpp"

namespace gskew {

inline bool is_symmetric(const Eigen::MatrixXd& a) { return a.rows() == a.cols() && a == a.transpose(); }

inline void require_undirected(const Eigen::MatrixXd& a, const char* what) {
  if (!is_symmetric(a)) throw PreconditionError(std::string(what) + ": directed input is not supported");
}

// Eigenvalues of D - A, ascending. Diagonal entries of A are ignored.
inline std::vector<double> laplacian_eigs(const Eigen::MatrixXd& a) {
  require_undirected(a, "laplacian_eigs");
  Eigen::MatrixXd off = a;
  off.diagonal().setZero();
  Eigen::MatrixXd lap = -off;
  lap.diagonal() = off.rowwise().sum();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Eigenvalues of an arbitrary square matrix, sorted by (real, imag).
inline std::vector<std::complex<double>> matrix_eigenvalues(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw SizeError("matrix_eigenvalues: matrix is not square");
  const Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  const Eigen::VectorXcd ev = es.eigenvalues();
  std::vector<std::complex<double>> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](auto x, auto y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

inline std::vector<double> singular_values(const Eigen::MatrixXd& a) {
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const Eigen::VectorXd s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

// Node colors after `iters` rounds of 1-WL refinement. Colors are hashes of
// (own color, sorted neighbor colors), so they are comparable across graphs.
inline std::vector<std::uint64_t> wl1_colors(const Eigen::MatrixXd& a, int iters) {
  require_undirected(a, "wl1");
  if (iters < 0) throw DomainError("wl1: iteration count must be >= 0");
  const Eigen::Index n = a.rows();
  std::vector<std::uint64_t> color(static_cast<std::size_t>(n), detail::mix64(0));
  std::vector<std::uint64_t> next(color.size());
  std::vector<std::uint64_t> nb;
  for (int it = 0; it < iters; ++it) {
    for (Eigen::Index v = 0; v < n; ++v) {
      nb.clear();
      for (Eigen::Index u = 0; u < n; ++u) {
        if (u != v && a(v, u) != 0.0) nb.push_back(color[u]);
      }
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = detail::mix64(color[v] ^ 0x51ed270b27c3a9f1ULL);
      for (std::uint64_t c : nb) h = detail::mix64(h ^ c);
      next[v] = detail::mix64(h + nb.size());
    }
    color.swap(next);
  }
  return color;
}

// Order-independent signature: the sorted color multiset.
inline std::vector<std::uint64_t> wl1_histogram(const Eigen::MatrixXd& a, int iters) {
  std::vector<std::uint64_t> c = wl1_colors(a, iters);
  std::sort(c.begin(), c.end());
  return c;
}

inline std::uint64_t wl1(const Eigen::MatrixXd& a, int iters) {
  std::uint64_t h = detail::mix64(static_cast<std::uint64_t>(a.rows()));
  for (std::uint64_t c : wl1_histogram(a, iters)) h = detail::mix64(h ^ c);
  return h;
}

}  // namespace gskew
