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

// Permutations of [n] = {1..n}, the left coset transversal S_n/S_{n-2} and
// the seven double coset representatives of S_{n-2}\S_n/S_{n-2}.
//
// Conventions:
//  * node indices are 1-based in every public function;
//  * (g*h)(x) = g(h(x)), i.e. the right factor acts first;
//  * S_k sits inside S_n as the permutations fixing k+1..n.

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "gskew/error.hpp"

namespace gskew {

class Permutation {
 public:
  Permutation() = default;

  // Identity of S_n.
  explicit Permutation(int n) : img_(static_cast<std::size_t>(n)) {
    if (n < 0) throw DomainError("Permutation: negative degree");
    std::iota(img_.begin(), img_.end(), 0);
  }

  // From the image array [g(1), ..., g(n)] (1-based values).
  static Permutation from_images(std::span<const int> images) {
    Permutation p;
    p.img_.resize(images.size());
    std::vector<char> seen(images.size(), 0);
    const int n = static_cast<int>(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int v = images[i];
      if (v < 1 || v > n || seen[v - 1]) {
        throw DomainError("Permutation: image array is not a bijection of [1.." +
                          std::to_string(n) + "]");
      }
      seen[v - 1] = 1;
      p.img_[i] = v - 1;
    }
    return p;
  }
  static Permutation from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }

  // Product of cycles in S_n, e.g. from_cycles(4, {{1, 4, 3}}) maps 1->4->3->1.
  // Cycles are composed right to left like any other product.
  static Permutation from_cycles(int n,
                                 std::initializer_list<std::vector<int>> cycles) {
    Permutation result(n);
    for (auto it = cycles.end(); it != cycles.begin();) {
      --it;
      result = cycle(n, *it) * result;
    }
    return result;
  }

  static Permutation cycle(int n, std::span<const int> c) {
    Permutation p(n);
    std::vector<char> used(static_cast<std::size_t>(std::max(n, 0)), 0);
    for (int v : c) {
      if (v < 1 || v > n) throw DomainError("Permutation: cycle entry outside [1..n]");
      if (used[v - 1]) throw DomainError("Permutation: cycle repeats an entry");
      used[v - 1] = 1;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int from = c[i];
      const int to = c[(i + 1) % c.size()];
      p.img_[from - 1] = to - 1;
    }
    return p;
  }
  static Permutation cycle(int n, const std::vector<int>& c) {
    return cycle(n, std::span<const int>(c));
  }

  static Permutation transposition(int n, int i, int j) {
    Permutation p(n);
    if (i < 1 || i > n || j < 1 || j > n) {
      throw DomainError("Permutation: transposition index outside [1..n]");
    }
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }

  // g(i), 1-based in and out.
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; }

  // 0-based image array, img[i] = g(i+1) - 1.
  std::span<const int> images0() const { return img_; }

  std::vector<int> images() const {
    std::vector<int> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] != static_cast<int>(i)) return false;
    }
    return true;
  }

  // Cycle notation, fixed points omitted; identity prints as "()".
  std::string to_string() const {
    std::ostringstream os;
    std::vector<char> done(img_.size(), 0);
    bool any = false;
    for (std::size_t s = 0; s < img_.size(); ++s) {
      if (done[s] || img_[s] == static_cast<int>(s)) continue;
      any = true;
      os << '(';
      std::size_t x = s;
      bool first = true;
      while (!done[x]) {
        done[x] = 1;
        if (!first) os << ',';
        os << x + 1;
        first = false;
        x = static_cast<std::size_t>(img_[x]);
      }
      os << ')';
    }
    if (!any) os << "()";
    return os.str();
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  friend Permutation operator*(const Permutation& g, const Permutation& h) {
    if (g.size() != h.size()) {
      throw SizeError("compose: permutations of degree " + std::to_string(g.size()) +
                      " and " + std::to_string(h.size()));
    }
    Permutation r;
    r.img_.resize(g.img_.size());
    for (std::size_t x = 0; x < h.img_.size(); ++x) {
      r.img_[x] = g.img_[static_cast<std::size_t>(h.img_[x])];
    }
    return r;
  }

 private:
  std::vector<int> img_;
};

inline Permutation compose(const Permutation& g, const Permutation& h) { return g * h; }

inline Permutation inverse(const Permutation& g) {
  std::vector<int> inv(static_cast<std::size_t>(g.size()));
  for (int i = 1; i <= g.size(); ++i) inv[g(i) - 1] = i;
  return Permutation::from_images(inv);
}

// One left coset y*S_{n-2}, identified by the images a = y(n-1), b = y(n).
struct CosetRep {
  int n = 0;
  int a = 0;
  int b = 0;

  // The representative sending n-1 -> a, n -> b and 1..n-2 onto
  // [n] \ {a, b} in increasing order.
  Permutation canonical_perm() const {
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
      if (v != a && v != b) img.push_back(v);
    }
    img.push_back(a);
    img.push_back(b);
    return Permutation::from_images(img);
  }

  friend auto operator<=>(const CosetRep&, const CosetRep&) = default;
  friend bool operator==(const CosetRep&, const CosetRep&) = default;
};

inline int coset_count(int n) { return n * (n - 1); }

// Position of (a, b) in the lexicographic transversal order.
inline int coset_index(int n, int a, int b) {
  return (a - 1) * (n - 1) + (b - 1) - (b > a ? 1 : 0);
}

inline CosetRep coset_at(int n, int index) {
  const int a = index / (n - 1) + 1;
  int b = index % (n - 1) + 1;
  if (b >= a) ++b;
  return CosetRep{n, a, b};
}

inline std::vector<CosetRep> coset_transversal(int n) {
  if (n < 3) throw DomainError("coset_transversal: n must be >= 3");
  std::vector<CosetRep> reps;
  reps.reserve(static_cast<std::size_t>(coset_count(n)));
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a != b) reps.push_back(CosetRep{n, a, b});
    }
  }
  return reps;
}

inline CosetRep coset_of(const Permutation& g) {
  const int n = g.size();
  if (n < 2) throw DomainError("coset_of: n must be >= 2");
  return CosetRep{n, g(n - 1), g(n)};
}

// g_1..g_7 of S_{n-2}\S_n/S_{n-2}, in the order the s^(k) precompute uses.
struct DoubleCosetGenerators {
  std::array<Permutation, 7> g;

  const Permutation& operator[](std::size_t i) const { return g[i]; }
  static constexpr std::size_t size() { return 7; }
};

inline DoubleCosetGenerators double_coset_generators(int n) {
  if (n < 4) throw DomainError("double_coset_generators: n must be >= 4");
  using P = Permutation;
  return DoubleCosetGenerators{{
      P(n),
      P::from_cycles(n, {{n - 1, n}}),
      P::from_cycles(n, {{n - 2, n - 1}}),
      P::from_cycles(n, {{n - 2, n}}),
      P::from_cycles(n, {{n - 2, n - 1, n}}),
      P::from_cycles(n, {{n - 2, n, n - 1}}),
      P::from_cycles(n, {{n - 3, n - 1}, {n - 2, n}}),
  }};
}

// Returns k_1..k_m with g = (k_1,k_1+1) * ... * (k_m,k_m+1); m is the
// inversion count of g, at most n(n-1)/2.
inline std::vector<int> adjacent_transposition_decomposition(const Permutation& g) {
  std::vector<int> img(g.images0().begin(), g.images0().end());
  std::vector<int> swaps;
  // Bubble sort by right multiplication: g * s_w swaps positions w, w+1.
  const int n = g.size();
  for (int pass = 0; pass < n; ++pass) {
    bool moved = false;
    for (int w = 0; w + 1 < n; ++w) {
      if (img[w] > img[w + 1]) {
        std::swap(img[w], img[w + 1]);
        swaps.push_back(w + 1);
        moved = true;
      }
    }
    if (!moved) break;
  }
  // g * s_{w1} * ... * s_{wm} = e, so g = s_{wm} * ... * s_{w1}.
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

template <class URBG>
Permutation random_permutation(int n, URBG& rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

// Uniform element of S_m embedded in S_n (fixes m+1..n).
template <class URBG>
Permutation random_subgroup_element(int n, int m, URBG& rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.begin() + m, rng);
  return Permutation::from_images(img);
}

// All of S_m embedded in S_n, lexicographic on image arrays.
inline std::vector<Permutation> subgroup_elements(int n, int m) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.begin() + m));
  return out;
}

inline std::vector<Permutation> all_permutations(int n) { return subgroup_elements(n, n); }

// Rank of g in the lexicographic order of S_n (Lehmer code).
inline std::uint64_t lex_rank(const Permutation& g) {
  const int n = g.size();
  std::uint64_t rank = 0;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const int v = g.images0()[i];
    int smaller = 0;
    for (int u = 0; u < v; ++u) smaller += used[u] ? 0 : 1;
    used[v] = 1;
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  return rank;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace gskew
