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

// Reference implementations by enumeration of the whole group. Every
// function here is the literal formula; none of them is fast.
//
// Group elements are enumerated lexicographically on image arrays.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "gskew/error.hpp"
#include "gskew/fourier.hpp"
#include "gskew/graph_fn.hpp"
#include "gskew/perm.hpp"
#include "gskew/spectrum.hpp"
#include "gskew/yor.hpp"

namespace gskew {

inline constexpr int kOracleMaxN = 8;

inline void oracle_guard(int n, int limit, const char* what) {
  if (n > limit) {
    throw SizeError(std::string(what) + ": n=" + std::to_string(n) + " exceeds the oracle limit " +
                    std::to_string(limit));
  }
}

// S_n in lexicographic order, shared per n.
inline std::shared_ptr<const std::vector<Permutation>> group_elements(int n) {
  oracle_guard(n, kOracleMaxN, "group_elements");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::vector<Permutation>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const std::vector<Permutation>>(all_permutations(n));
  return slot;
}

// f: S_n -> R as a table over all n! elements.
class DenseGroupFunction {
 public:
  DenseGroupFunction() = default;
  DenseGroupFunction(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    oracle_guard(n, kOracleMaxN, "DenseGroupFunction");
    if (values_.size() != factorial(n)) throw SizeError("DenseGroupFunction: expected n! values");
  }

  static DenseGroupFunction zero(int n) { return {n, std::vector<double>(factorial(n), 0.0)}; }

  template <class F>
  static DenseGroupFunction from_callable(int n, F&& fn) {
    const auto elems = group_elements(n);
    std::vector<double> v;
    v.reserve(elems->size());
    for (const Permutation& g : *elems) v.push_back(fn(g));
    return {n, std::move(v)};
  }

  // g -> f(g(n-1), g(n)).
  static DenseGroupFunction from_orbit(const OrbitFunction& f) {
    return from_callable(f.n(), [&](const Permutation& g) { return f(g); });
  }

  int n() const { return n_; }
  std::span<const double> values() const { return values_; }
  double at_rank(std::size_t r) const { return values_[r]; }
  double operator()(const Permutation& g) const { return values_[lex_rank(g)]; }

 private:
  int n_ = 0;
  std::vector<double> values_;
};

// (1/n!) sum_g f(g) rho(g).
inline Eigen::MatrixXd naive_fourier(const DenseGroupFunction& f, const IrrepTable& rho) {
  if (rho.n != f.n()) throw SizeError("naive_fourier: irrep degree differs from n");
  const auto elems = group_elements(f.n());
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(rho.dim, rho.dim);
  for (std::size_t r = 0; r < elems->size(); ++r) {
    const double v = f.at_rank(r);
    if (v != 0.0) acc += v * yor_of(rho, (*elems)[r]);
  }
  return acc / static_cast<double>(elems->size());
}

inline Eigen::MatrixXd naive_fourier(const DenseGroupFunction& f, const Partition& p) {
  return naive_fourier(f, build_irrep_table(p));
}

// naive_fourier for several functions sharing one pass over S_n.
inline std::vector<Eigen::MatrixXd> naive_fourier_batch(std::span<const DenseGroupFunction> fs,
                                                        const IrrepTable& rho) {
  std::vector<Eigen::MatrixXd> acc(fs.size(), Eigen::MatrixXd::Zero(rho.dim, rho.dim));
  if (fs.empty()) return acc;
  const int n = fs[0].n();
  if (rho.n != n) throw SizeError("naive_fourier_batch: irrep degree differs from n");
  const auto elems = group_elements(n);
  for (std::size_t r = 0; r < elems->size(); ++r) {
    const Eigen::MatrixXd m = yor_of(rho, (*elems)[r]);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const double v = fs[i].at_rank(r);
      if (v != 0.0) acc[i] += v * m;
    }
  }
  for (auto& a : acc) a /= static_cast<double>(elems->size());
  return acc;
}

// (1/(n-2)!) sum_{h in S_{n-2}} rho(h).
inline Eigen::MatrixXd naive_tau(const Partition& p, int n) {
  oracle_guard(n, 7, "naive_tau");
  if (p.size() != n) throw SizeError("naive_tau: partition is not of n");
  const IrrepTable rho = build_irrep_table(p);
  const std::vector<Permutation> sub = subgroup_elements(n, n - 2);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(rho.dim, rho.dim);
  for (const Permutation& h : sub) acc += yor_of(rho, h);
  return acc / static_cast<double>(sub.size());
}

// (1/n!) sum_g fs[0](g) prod_l fs[l](g G[l-1]). fs[0] is the anchor.
inline double naive_k_correlation(std::span<const DenseGroupFunction> fs, std::span<const Permutation> G) {
  if (fs.size() != G.size() + 1) throw SizeError("naive_k_correlation: need |G| + 1 functions");
  const int n = fs[0].n();
  oracle_guard(n, 6, "naive_k_correlation");
  const auto elems = group_elements(n);
  double acc = 0.0;
  for (std::size_t r = 0; r < elems->size(); ++r) {
    double term = fs[0].at_rank(r);
    for (std::size_t l = 0; l < G.size() && term != 0.0; ++l) term *= fs[l + 1]((*elems)[r] * G[l]);
    acc += term;
  }
  return acc / static_cast<double>(elems->size());
}

// All d^k entries of the multi-orbit k-correlation, k = |G| + 1, packed base
// d with the anchor index most significant.
inline std::vector<double> naive_k_correlation_tensor(std::span<const DenseGroupFunction> orbits,
                                                      std::span<const Permutation> G) {
  const std::size_t d = orbits.size();
  const int k = static_cast<int>(G.size()) + 1;
  std::vector<double> out(ipow(d, k));
  std::vector<DenseGroupFunction> pick(static_cast<std::size_t>(k));
  for (std::size_t packed = 0; packed < out.size(); ++packed) {
    std::size_t rem = packed;
    for (int l = k - 1; l >= 0; --l) {
      pick[l] = orbits[rem % d];
      rem /= d;
    }
    out[packed] = naive_k_correlation(pick, G);
  }
  return out;
}

// r(g) = anchor(g) prod_l factors[l](g G[l]).
inline DenseGroupFunction naive_r(const DenseGroupFunction& anchor, std::span<const DenseGroupFunction> factors,
                                  std::span<const Permutation> G) {
  if (factors.size() != G.size()) throw SizeError("naive_r: one factor per generator");
  return DenseGroupFunction::from_callable(anchor.n(), [&](const Permutation& g) {
    double v = anchor(g);
    for (std::size_t l = 0; l < G.size() && v != 0.0; ++l) v *= factors[l](g * G[l]);
    return v;
  });
}

// s(g) = anchor(g) / (n-2)! * sum_{h in S_{n-2}} prod_l factors[l](g h G[l]).
inline DenseGroupFunction naive_s(const DenseGroupFunction& anchor, std::span<const DenseGroupFunction> factors,
                                  std::span<const Permutation> G) {
  if (factors.size() != G.size()) throw SizeError("naive_s: one factor per generator");
  const int n = anchor.n();
  oracle_guard(n, 6, "naive_s");
  const std::vector<Permutation> sub = subgroup_elements(n, n - 2);
  return DenseGroupFunction::from_callable(n, [&](const Permutation& g) {
    const double a = anchor(g);
    if (a == 0.0) return 0.0;
    double acc = 0.0;
    for (const Permutation& h : sub) {
      double term = 1.0;
      const Permutation gh = g * h;
      for (std::size_t l = 0; l < G.size() && term != 0.0; ++l) term *= factors[l](gh * G[l]);
      acc += term;
    }
    return a * acc / static_cast<double>(sub.size());
  });
}

// One k-spectrum entry r_hat^T f_hat for orbit choices (anchor, factors, last).
// With `reduced`, r_hat is replaced by s_hat = r_hat tau.
inline Eigen::MatrixXd naive_k_spectrum(const DenseGroupFunction& anchor,
                                        std::span<const DenseGroupFunction> factors,
                                        std::span<const Permutation> G, const DenseGroupFunction& last,
                                        const Partition& p, bool reduced) {
  oracle_guard(anchor.n(), 5, "naive_k_spectrum");
  const IrrepTable rho = build_irrep_table(p);
  Eigen::MatrixXd r_hat = naive_fourier(naive_r(anchor, factors, G), rho);
  if (reduced) r_hat = r_hat * naive_tau(p, anchor.n());
  return r_hat.transpose() * naive_fourier(last, rho);
}

// sum_{g, g2} f(g) f(g g1) f(g2) / (n!)^2 rho(g)^T rho(g2), with no factoring.
inline Eigen::MatrixXd skew_spectrum_double_sum(const DenseGroupFunction& f, const Permutation& g1,
                                                const Partition& p) {
  oracle_guard(f.n(), 5, "skew_spectrum_double_sum");
  const IrrepTable rho = build_irrep_table(p);
  const auto elems = group_elements(f.n());
  std::vector<Eigen::MatrixXd> mats;
  mats.reserve(elems->size());
  for (const Permutation& g : *elems) mats.push_back(yor_of(rho, g));
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(rho.dim, rho.dim);
  for (std::size_t a = 0; a < elems->size(); ++a) {
    const double left = f.at_rank(a) * f((*elems)[a] * g1);
    if (left == 0.0) continue;
    for (std::size_t b = 0; b < elems->size(); ++b) {
      const double w = left * f.at_rank(b);
      if (w != 0.0) acc += w * mats[a].transpose() * mats[b];
    }
  }
  const double m = static_cast<double>(elems->size());
  return acc / (m * m);
}

namespace detail {

inline std::vector<int> naive_tau_support(const Partition& p, int n) {
  const Eigen::MatrixXd t = naive_tau(p, n);
  std::vector<int> sel;
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    if (t(i, i) > 0.5) sel.push_back(static_cast<int>(i));
  }
  return sel;
}

}  // namespace detail

// The doubly-reduced k-spectrum with every ingredient enumerated: s by the
// S_{n-2} average, transforms over all of S_n, tau by averaging rho(h).
// Same layout as doubly_reduced_k_spectrum.
inline SpectrumEmbedding brute_force_doubly_reduced(const MultiOrbitFunction& f, int k) {
  const int n = f.n();
  oracle_guard(n, 6, "brute_force_doubly_reduced");
  if (n < 4) throw DomainError("brute_force_doubly_reduced: n must be >= 4");
  if (k < kMinOrder || k > kMaxOrder) throw DomainError("brute_force_doubly_reduced: k outside [3, 9]");
  const int d = f.d();
  const std::vector<Partition> parts = lambda_n(n);
  const DoubleCosetGenerators gens = double_coset_generators(n);
  const std::vector<GeneratorCombination> combos = generator_combinations(k - 2);

  std::vector<DenseGroupFunction> dense;
  for (const auto& o : f.orbits()) dense.push_back(DenseGroupFunction::from_orbit(o));

  SpectrumEmbedding out;
  out.n = n;
  out.d = d;
  std::array<std::vector<int>, kBandLimit> sel;
  std::array<IrrepTable, kBandLimit> rho;
  std::array<Eigen::MatrixXd, kBandLimit> tau;
  std::vector<std::array<Eigen::MatrixXd, kBandLimit>> f_hat(static_cast<std::size_t>(d));
  for (std::size_t r = 0; r < kBandLimit; ++r) {
    sel[r] = detail::naive_tau_support(parts[r], n);
    out.blocks[r] = static_cast<int>(sel[r].size());
    rho[r] = build_irrep_table(parts[r]);
    tau[r] = naive_tau(parts[r], n);
    for (int i = 0; i < d; ++i) f_hat[i][r] = naive_fourier(dense[i], rho[r]);
  }

  // s_hat per (combination, I_{k-1}), reused across irreps via the array.
  const std::size_t per_s = ipow(static_cast<std::size_t>(d), k - 1);
  std::vector<std::array<Eigen::MatrixXd, kBandLimit>> s_hat(combos.size() * per_s);
  std::vector<Permutation> G;
  std::vector<DenseGroupFunction> factors;
  for (std::size_t c = 0; c < combos.size(); ++c) {
    G.clear();
    for (int g : combos[c].indices) G.push_back(gens[static_cast<std::size_t>(g)]);
    for (std::size_t packed = 0; packed < per_s; ++packed) {
      std::vector<int> idx(static_cast<std::size_t>(k - 1));
      std::size_t rem = packed;
      for (int l = k - 2; l >= 0; --l) {
        idx[l] = static_cast<int>(rem % static_cast<std::size_t>(d));
        rem /= static_cast<std::size_t>(d);
      }
      factors.clear();
      for (int l = 0; l < k - 2; ++l) factors.push_back(dense[idx[l]]);
      const DenseGroupFunction s = naive_s(dense[idx[k - 2]], factors, G);
      for (std::size_t r = 0; r < kBandLimit; ++r) {
        s_hat[c * per_s + packed][r] = naive_fourier(s, rho[r]) * tau[r];
      }
    }
  }

  EmbeddingSegment seg{k, 0, 0};
  for (std::size_t r = 0; r < kBandLimit; ++r) {
    for (std::size_t c = 0; c < combos.size(); ++c) {
      for (std::size_t packed = 0; packed < per_s * static_cast<std::size_t>(d); ++packed) {
        const Eigen::MatrixXd full = s_hat[c * per_s + packed / static_cast<std::size_t>(d)][r].transpose() *
                                     f_hat[packed % static_cast<std::size_t>(d)][r];
        for (int p : sel[r]) {
          for (int q : sel[r]) out.entries.push_back(full(p, q));
        }
      }
    }
  }
  seg.length = out.entries.size();
  out.segments.push_back(seg);
  return out;
}

// tau x tau blocks of (r_hat tau)^T f_hat for an ordered generator tuple,
// concatenated over Lambda_n. Single orbit.
inline std::vector<double> oracle_tuple_spectrum(const OrbitFunction& f, std::span<const Permutation> G) {
  const int n = f.n();
  oracle_guard(n, 5, "oracle_tuple_spectrum");
  const DenseGroupFunction dense = DenseGroupFunction::from_orbit(f);
  const std::vector<DenseGroupFunction> factors(G.size(), dense);
  const DenseGroupFunction r = naive_r(dense, factors, G);
  std::vector<double> out;
  for (const Partition& p : lambda_n(n)) {
    const IrrepTable rho = build_irrep_table(p);
    const Eigen::MatrixXd tau = naive_tau(p, n);
    const Eigen::MatrixXd full = (naive_fourier(r, rho) * tau).transpose() * naive_fourier(dense, rho);
    const std::vector<int> sel = detail::naive_tau_support(p, n);
    for (int a : sel) {
      for (int b : sel) out.push_back(full(a, b));
    }
  }
  return out;
}

struct ElementPropertyReport {
  double distinctness_max_dev = 0.0;  // repeated generator vs shorter tuple
  double ordering_max_dev = 0.0;      // permuted tuple vs original
  int distinctness_cases = 0;
  int ordering_cases = 0;

  bool passed(double tol = 1e-12) const { return distinctness_max_dev <= tol && ordering_max_dev <= tol; }
};

// For binary f: a repeated generator adds nothing, and the order within the
// tuple does not matter.
inline ElementPropertyReport element_property_checks(const OrbitFunction& f) {
  for (double v : f.values()) {
    if (v != 0.0 && v != 1.0) throw PreconditionError("element_property_checks: f must be 0/1 valued");
  }
  oracle_guard(f.n(), 5, "element_property_checks");
  const int n = f.n();
  const DoubleCosetGenerators g = double_coset_generators(n);
  ElementPropertyReport rep;
  auto dev = [](const std::vector<double>& x, const std::vector<double>& y) {
    return scaled_max_difference(x, y);
  };

  for (std::size_t a = 1; a < 7; ++a) {
    const std::vector<Permutation> shorter{g[a]};
    const std::vector<Permutation> doubled{g[a], g[a]};
    rep.distinctness_max_dev =
        std::max(rep.distinctness_max_dev, dev(oracle_tuple_spectrum(f, shorter), oracle_tuple_spectrum(f, doubled)));
    ++rep.distinctness_cases;
  }
  {
    const std::vector<Permutation> shorter{g[1], g[2]};
    const std::vector<Permutation> longer{g[1], g[2], g[2]};
    rep.distinctness_max_dev =
        std::max(rep.distinctness_max_dev, dev(oracle_tuple_spectrum(f, shorter), oracle_tuple_spectrum(f, longer)));
    ++rep.distinctness_cases;
  }

  std::vector<int> order{1, 2, 3};
  const std::vector<double> base = oracle_tuple_spectrum(f, std::vector<Permutation>{g[1], g[2], g[3]});
  while (std::next_permutation(order.begin(), order.end())) {
    const std::vector<Permutation> G{g[order[0]], g[order[1]], g[order[2]]};
    rep.ordering_max_dev = std::max(rep.ordering_max_dev, dev(base, oracle_tuple_spectrum(f, G)));
    ++rep.ordering_cases;
  }
  return rep;
}

}  // namespace gskew
