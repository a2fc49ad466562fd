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

// Doubly-reduced k-spectrum of a multi-orbit function f = (f_1, ..., f_d).
//
// For a set G = {g_l} of k-2 distinct double coset generators and an orbit
// multi-index I_{k-1} = (i_1, ..., i_{k-2}, i_{k-1}):
//
//   s_I(G, sigma) = f_{i_{k-1}}(sigma) / (n-2)! * sum_{h in S_{n-2}} prod_l f_{i_l}(sigma h g_l)
//
// is right-S_{n-2}-invariant, and every embedding entry is a tau x tau block
// of shat_I(G, rho)^T fhat_{i_k}(rho).
//
// The S_{n-2} average is split into n-2 partial sums over j = h(n-2). With
// f(a, b) the value on coset (a, b) and sigma(j) the j-th smallest node
// outside {a, b}, the per-generator factors are
//
//   g1 ()                  f(a, b)
//   g2 (n-1,n)             f(b, a)
//   g3 (n-2,n-1)           f(sigma(j), b)
//   g4 (n-2,n)             f(a, sigma(j))
//   g5 (n-2,n-1,n)         f(b, sigma(j))
//   g6 (n-2,n,n-1)         f(sigma(j), a)
//   g7 (n-3,n-1)(n-2,n)    (F(sigma(j)) - g4 - g5) / (n-3),  F(y) = sum_{x != y} f(x, y)
//
// The g7 factor averages f(x, sigma(j)) over the n-3 remaining nodes x, since
// h(n-2) = j lands in the sigma(n) slot.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "gskew/error.hpp"
#include "gskew/fourier.hpp"
#include "gskew/graph_fn.hpp"
#include "gskew/perm.hpp"

namespace gskew {

inline constexpr int kMinOrder = 3;
inline constexpr int kMaxOrder = 9;
inline constexpr int kMinSpectrumNodes = 5;
inline constexpr int kGeneratorCount = 7;

// Sorted, repetition-free indices (0-based) into the seven generators.
struct GeneratorCombination {
  std::vector<int> indices;

  std::size_t size() const { return indices.size(); }
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << 'g' << indices[i] + 1;
    return os.str();
  }
  friend bool operator==(const GeneratorCombination&, const GeneratorCombination&) = default;
};

// All C(7, size) combinations, lexicographically ascending.
inline std::vector<GeneratorCombination> generator_combinations(int size) {
  std::vector<GeneratorCombination> out;
  if (size < 0 || size > kGeneratorCount) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back({cur});
      return;
    }
    for (int g = start; g < kGeneratorCount; ++g) {
      cur.push_back(g);
      self(self, g + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

inline std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Upper bound on non-zero entries: C(7, k-2) * 7 * d^k.
inline std::size_t nonzero_budget(int k, int d) {
  return binomial(kGeneratorCount, k - 2) * 7 * ipow(static_cast<std::size_t>(d), k);
}

inline void check_spectrum_args(int n, int k) {
  if (k < kMinOrder || k > kMaxOrder) {
    throw DomainError("k-spectrum: k must lie in [3, 9], got " + std::to_string(k));
  }
  if (n < kMinSpectrumNodes) {
    throw DomainError("k-spectrum: n must be >= 5 (pad smaller graphs with isolated nodes), got " +
                      std::to_string(n));
  }
}

// Tables of the s^(k) precompute. Orbit multi-indices are packed base d with
// the first index most significant, so packed order is lexicographic.
struct PrecomputeTables {
  int n = 0;
  int d = 0;
  int k = 0;
  std::vector<GeneratorCombination> combinations;
  std::vector<double> F;  // [i][y-1]
  std::vector<double> P;  // [i][g][coset][j-1]
  std::vector<double> Q;  // [combination][I_{k-2}][coset]
  std::vector<double> s;  // [combination][I_{k-1}][coset]

  int cosets() const { return coset_count(n); }

  double p(int i, int g, int coset, int j) const {
    const std::size_t idx =
        ((static_cast<std::size_t>(i) * kGeneratorCount + static_cast<std::size_t>(g)) * cosets() +
         static_cast<std::size_t>(coset)) * static_cast<std::size_t>(n - 2) + static_cast<std::size_t>(j - 1);
    return P[idx];
  }

  std::span<const double> q_table(std::size_t comb, std::size_t packed) const {
    const std::size_t per = ipow(static_cast<std::size_t>(d), k - 2);
    return std::span<const double>(Q).subspan((comb * per + packed) * cosets(), cosets());
  }

  std::span<const double> s_table(std::size_t comb, std::size_t packed) const {
    const std::size_t per = ipow(static_cast<std::size_t>(d), k - 1);
    return std::span<const double>(s).subspan((comb * per + packed) * cosets(), cosets());
  }
};

inline PrecomputeTables precompute_s(const MultiOrbitFunction& f, int k) {
  const int n = f.n();
  check_spectrum_args(n, k);
  const int d = f.d();
  const int cosets = coset_count(n);
  const int m = n - 2;

  PrecomputeTables t;
  t.n = n;
  t.d = d;
  t.k = k;
  t.combinations = generator_combinations(k - 2);

  t.F.assign(static_cast<std::size_t>(d) * n, 0.0);
  for (int i = 0; i < d; ++i) {
    for (int y = 1; y <= n; ++y) {
      double acc = 0.0;
      for (int x = 1; x <= n; ++x) {
        if (x != y) acc += f[i].at(x, y);
      }
      t.F[static_cast<std::size_t>(i) * n + (y - 1)] = acc;
    }
  }

  t.P.assign(static_cast<std::size_t>(d) * kGeneratorCount * cosets * m, 0.0);
  std::vector<int> rest(static_cast<std::size_t>(m));
  for (int c = 0; c < cosets; ++c) {
    const CosetRep rep = coset_at(n, c);
    const int a = rep.a;
    const int b = rep.b;
    for (int v = 1, j = 0; v <= n; ++v) {
      if (v != a && v != b) rest[j++] = v;
    }
    for (int i = 0; i < d; ++i) {
      const OrbitFunction& fi = f[i];
      const double* Fi = &t.F[static_cast<std::size_t>(i) * n];
      const double fab = fi.at(a, b);
      const double fba = fi.at(b, a);
      double* base = &t.P[((static_cast<std::size_t>(i) * kGeneratorCount) * cosets + c) * m];
      const std::size_t g_stride = static_cast<std::size_t>(cosets) * m;
      for (int j = 0; j < m; ++j) {
        const int sj = rest[j];
        const double p4 = fi.at(a, sj);
        const double p5 = fi.at(b, sj);
        base[0 * g_stride + j] = fab;
        base[1 * g_stride + j] = fba;
        base[2 * g_stride + j] = fi.at(sj, b);
        base[3 * g_stride + j] = p4;
        base[4 * g_stride + j] = p5;
        base[5 * g_stride + j] = fi.at(sj, a);
        base[6 * g_stride + j] = (Fi[sj - 1] - p4 - p5) / static_cast<double>(n - 3);
      }
    }
  }

  const int len = k - 2;
  const std::size_t per_q = ipow(static_cast<std::size_t>(d), len);
  const std::size_t per_s = per_q * static_cast<std::size_t>(d);
  t.Q.assign(t.combinations.size() * per_q * cosets, 0.0);
  t.s.assign(t.combinations.size() * per_s * cosets, 0.0);
  std::vector<int> digits(static_cast<std::size_t>(len));
  std::vector<double> prod(static_cast<std::size_t>(m));
  for (std::size_t comb = 0; comb < t.combinations.size(); ++comb) {
    const auto& gens = t.combinations[comb].indices;
    for (std::size_t packed = 0; packed < per_q; ++packed) {
      std::size_t rem = packed;
      for (int l = len - 1; l >= 0; --l) {
        digits[l] = static_cast<int>(rem % static_cast<std::size_t>(d));
        rem /= static_cast<std::size_t>(d);
      }
      for (int c = 0; c < cosets; ++c) {
        std::fill(prod.begin(), prod.end(), 1.0);
        for (int l = 0; l < len; ++l) {
          const double* row =
              &t.P[((static_cast<std::size_t>(digits[l]) * kGeneratorCount + gens[l]) * cosets + c) * m];
          for (int j = 0; j < m; ++j) prod[j] *= row[j];
        }
        double q = 0.0;
        for (int j = 0; j < m; ++j) q += prod[j];
        t.Q[(comb * per_q + packed) * cosets + c] = q;
        for (int i = 0; i < d; ++i) {
          const std::size_t sp = packed * static_cast<std::size_t>(d) + static_cast<std::size_t>(i);
          t.s[(comb * per_s + sp) * cosets + c] = f[i].values()[c] * q / static_cast<double>(m);
        }
      }
    }
  }
  return t;
}

inline constexpr const char* kEmbeddingSchema =
    "gskew-embedding/1 order=irrep>combination>orbit-index>block";

struct EmbeddingSegment {
  int k = 0;
  std::size_t offset = 0;
  std::size_t length = 0;
};

struct SpectrumEmbedding {
  int n = 0;
  int d = 0;
  std::array<int, kBandLimit> blocks{};  // tau rank per irrep
  std::vector<EmbeddingSegment> segments;
  std::vector<double> entries;

  std::size_t size() const { return entries.size(); }
  int k() const { return segments.size() == 1 ? segments.front().k : 0; }
};

inline std::size_t segment_length(const std::array<int, kBandLimit>& blocks, int k, int d) {
  std::size_t per = 0;
  for (int b : blocks) per += static_cast<std::size_t>(b) * static_cast<std::size_t>(b);
  return per * binomial(kGeneratorCount, k - 2) * ipow(static_cast<std::size_t>(d), k);
}

// Position of one entry in the canonical order.
struct EntryLabel {
  int k = 0;
  int irrep = 0;  // index into lambda_n
  GeneratorCombination combination;
  std::vector<int> orbit_index;  // I_k, 0-based; the last index belongs to fhat
  int row = 0;                   // within the tau x tau block
  int col = 0;
};

inline EntryLabel describe_entry(const SpectrumEmbedding& e, std::size_t index) {
  for (const EmbeddingSegment& seg : e.segments) {
    if (index < seg.offset || index >= seg.offset + seg.length) continue;
    std::size_t local = index - seg.offset;
    const std::size_t combos = binomial(kGeneratorCount, seg.k - 2);
    const std::size_t multi = ipow(static_cast<std::size_t>(e.d), seg.k);
    EntryLabel lab;
    lab.k = seg.k;
    for (std::size_t r = 0; r < kBandLimit; ++r) {
      const std::size_t bsq = static_cast<std::size_t>(e.blocks[r]) * e.blocks[r];
      const std::size_t span = bsq * combos * multi;
      if (local >= span) {
        local -= span;
        continue;
      }
      lab.irrep = static_cast<int>(r);
      const std::size_t comb = local / (bsq * multi);
      local %= bsq * multi;
      std::size_t packed = local / bsq;
      local %= bsq;
      lab.combination = generator_combinations(seg.k - 2)[comb];
      lab.orbit_index.assign(static_cast<std::size_t>(seg.k), 0);
      for (int l = seg.k - 1; l >= 0; --l) {
        lab.orbit_index[l] = static_cast<int>(packed % static_cast<std::size_t>(e.d));
        packed /= static_cast<std::size_t>(e.d);
      }
      lab.row = static_cast<int>(local) / e.blocks[r];
      lab.col = static_cast<int>(local) % e.blocks[r];
      return lab;
    }
  }
  throw DomainError("describe_entry: index " + std::to_string(index) + " out of range");
}

namespace detail {

// Appends the order-k segment. `orbit_hats[i]` is fhat_i; `s_hats` is laid out
// [combination][I_{k-1}] like PrecomputeTables::s.
inline void append_segment(SpectrumEmbedding& out, int k, std::span<const FunctionSpectrum> orbit_hats,
                           std::span<const FunctionSpectrum> s_hats) {
  const int d = out.d;
  const std::size_t combos = binomial(kGeneratorCount, k - 2);
  const std::size_t per_s = ipow(static_cast<std::size_t>(d), k - 1);
  EmbeddingSegment seg{k, out.entries.size(), segment_length(out.blocks, k, d)};
  out.entries.reserve(seg.offset + seg.length);
  for (std::size_t r = 0; r < kBandLimit; ++r) {
    for (std::size_t comb = 0; comb < combos; ++comb) {
      for (std::size_t packed = 0; packed < per_s * static_cast<std::size_t>(d); ++packed) {
        const std::size_t s_idx = comb * per_s + packed / static_cast<std::size_t>(d);
        const std::size_t f_idx = packed % static_cast<std::size_t>(d);
        const Eigen::MatrixXd block = s_hats[s_idx].components[r].columns.transpose() *
                                      orbit_hats[f_idx].components[r].columns;
        for (Eigen::Index p = 0; p < block.rows(); ++p) {
          for (Eigen::Index q = 0; q < block.cols(); ++q) out.entries.push_back(block(p, q));
        }
      }
    }
  }
  out.segments.push_back(seg);
}

inline SpectrumEmbedding empty_embedding(const MultiOrbitFunction& f, const IrrepTables& tables) {
  SpectrumEmbedding e;
  e.n = f.n();
  e.d = f.d();
  for (std::size_t r = 0; r < kBandLimit; ++r) e.blocks[r] = tables.block(r);
  return e;
}

inline std::vector<FunctionSpectrum> transform_orbits(const MultiOrbitFunction& f, const IrrepTables& tables) {
  std::vector<std::span<const double>> views;
  for (const auto& o : f.orbits()) views.push_back(o.values());
  return fourier_transform_batch(views, tables);
}

inline void append_order(SpectrumEmbedding& out, const MultiOrbitFunction& f, int k,
                         std::span<const FunctionSpectrum> orbit_hats, const IrrepTables& tables) {
  const PrecomputeTables pre = precompute_s(f, k);
  const std::size_t per_s = ipow(static_cast<std::size_t>(f.d()), k - 1);
  std::vector<std::span<const double>> views;
  views.reserve(pre.combinations.size() * per_s);
  for (std::size_t comb = 0; comb < pre.combinations.size(); ++comb) {
    for (std::size_t packed = 0; packed < per_s; ++packed) views.push_back(pre.s_table(comb, packed));
  }
  const std::vector<FunctionSpectrum> s_hats = fourier_transform_batch(views, tables);
  append_segment(out, k, orbit_hats, s_hats);
}

}  // namespace detail

inline SpectrumEmbedding doubly_reduced_k_spectrum(const MultiOrbitFunction& f, int k,
                                                   const IrrepTables& tables) {
  check_spectrum_args(f.n(), k);
  if (tables.n != f.n()) throw SizeError("doubly_reduced_k_spectrum: tables built for another n");
  SpectrumEmbedding out = detail::empty_embedding(f, tables);
  const std::vector<FunctionSpectrum> orbit_hats = detail::transform_orbits(f, tables);
  detail::append_order(out, f, k, orbit_hats, tables);
  return out;
}

inline SpectrumEmbedding doubly_reduced_k_spectrum(const MultiOrbitFunction& f, int k) {
  check_spectrum_args(f.n(), k);
  return doubly_reduced_k_spectrum(f, k, *shared_irrep_tables(f.n()));
}

// k = 3: the seven single generators, with cross-orbit blocks for d > 1.
inline SpectrumEmbedding reduced_multi_orbit_skew_spectrum(const MultiOrbitFunction& f) {
  return doubly_reduced_k_spectrum(f, 3);
}

// Segments in ascending k; repeated orders appear once.
inline SpectrumEmbedding concat_spectra(const MultiOrbitFunction& f, std::span<const int> ks,
                                        const IrrepTables& tables) {
  std::vector<int> order(ks.begin(), ks.end());
  if (order.empty()) throw DomainError("concat_spectra: empty order list");
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  for (int k : order) check_spectrum_args(f.n(), k);
  if (tables.n != f.n()) throw SizeError("concat_spectra: tables built for another n");
  SpectrumEmbedding out = detail::empty_embedding(f, tables);
  const std::vector<FunctionSpectrum> orbit_hats = detail::transform_orbits(f, tables);
  for (int k : order) detail::append_order(out, f, k, orbit_hats, tables);
  return out;
}

inline SpectrumEmbedding concat_spectra(const MultiOrbitFunction& f, std::span<const int> ks) {
  if (f.n() < kMinSpectrumNodes) check_spectrum_args(f.n(), kMinOrder);
  return concat_spectra(f, ks, *shared_irrep_tables(f.n()));
}

// Entries with |x| > tol * max(1, max|x|).
inline std::size_t count_nonzeros(std::span<const double> entries, double tol = 1e-12) {
  double scale = 1.0;
  for (double x : entries) scale = std::max(scale, std::abs(x));
  std::size_t c = 0;
  for (double x : entries) c += std::abs(x) > tol * scale ? 1 : 0;
  return c;
}

inline std::size_t count_nonzeros(const SpectrumEmbedding& e, double tol = 1e-12) {
  return count_nonzeros(e.entries, tol);
}

// max |x - y| / max(1, max|x|, max|y|); infinity on length mismatch.
inline double scaled_max_difference(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) return INFINITY;
  double scale = 1.0;
  double diff = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    scale = std::max({scale, std::abs(x[i]), std::abs(y[i])});
    diff = std::max(diff, std::abs(x[i] - y[i]));
  }
  return diff / scale;
}

}  // namespace gskew
