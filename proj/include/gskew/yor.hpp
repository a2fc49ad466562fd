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

// Young's orthogonal form of the irreducible representations of S_n.
//
// Basis vectors are standard Young tableaux in last-letter order: grouped by
// the row holding n, then by the row holding n-1, and so on. Restricting to
// S_{n-1} (resp. S_{n-2}) is then block diagonal with contiguous blocks.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gskew/error.hpp"
#include "gskew/perm.hpp"

namespace gskew {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DomainError("Partition: no parts");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw DomainError("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw DomainError("Partition: parts must be weakly decreasing");
      }
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// The band limit of functions on S_n/S_{n-2}: (n), (n-1,1), (n-2,2), (n-2,1,1).
inline std::vector<Partition> lambda_n(int n) {
  if (n < 4) throw DomainError("lambda_n: n must be >= 4");
  return {Partition{n}, Partition{n - 1, 1}, Partition{n - 2, 2}, Partition{n - 2, 1, 1}};
}

// All partitions of n, in reverse lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(rec, n, n);
  return out;
}

// Number of standard tableaux of shape p, by the hook length formula.
inline std::int64_t irrep_dim(const Partition& p) {
  const int n = p.size();
  std::vector<int> col_len(static_cast<std::size_t>(p[0]), 0);
  for (int r = 0; r < p.rows(); ++r) {
    for (int c = 0; c < p[r]; ++c) ++col_len[c];
  }
  // n! / prod(hooks), accumulated in long double; exact for the sizes we use.
  long double value = 1.0L;
  std::vector<int> hooks;
  for (int r = 0; r < p.rows(); ++r) {
    for (int c = 0; c < p[r]; ++c) hooks.push_back((p[r] - c - 1) + (col_len[c] - r - 1) + 1);
  }
  std::sort(hooks.begin(), hooks.end());
  for (int i = 1; i <= n; ++i) value *= i;
  for (int h : hooks) value /= h;
  return static_cast<std::int64_t>(std::llround(value));
}

// row[v-1], col[v-1]: 0-based cell of value v.
struct Tableau {
  std::vector<int> row;
  std::vector<int> col;

  int content(int v) const { return col[v - 1] - row[v - 1]; }
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

// Standard tableaux of shape p in last-letter order.
inline std::vector<Tableau> standard_tableaux(const Partition& p) {
  const int n = p.size();
  std::vector<Tableau> out;
  std::vector<int> shape = p.parts();
  Tableau cur{std::vector<int>(static_cast<std::size_t>(n)),
              std::vector<int>(static_cast<std::size_t>(n))};
  auto rec = [&](auto&& self, int v) -> void {
    if (v == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      const bool removable =
          shape[r] > 0 && (r + 1 == shape.size() || shape[r + 1] < shape[r]);
      if (!removable) continue;
      --shape[r];
      cur.row[v - 1] = static_cast<int>(r);
      cur.col[v - 1] = shape[r];
      self(self, v - 1);
      ++shape[r];
    }
  };
  rec(rec, n);
  return out;
}

// Orthogonal involution with at most two non-zeros per row:
//   (M v)[t] = diag[t] * v[t] + off[t] * v[partner[t]]   (partner < 0: none).
struct SparseGenerator {
  std::vector<double> diag;
  std::vector<int> partner;
  std::vector<double> off;

  int dim() const { return static_cast<int>(diag.size()); }

  // v <- M v for a contiguous vector of length dim().
  void apply_inplace(double* v) const {
    const int d = dim();
    for (int t = 0; t < d; ++t) {
      const int u = partner[t];
      if (u < 0) {
        v[t] *= diag[t];
      } else if (u > t) {
        const double x = v[t];
        const double y = v[u];
        v[t] = diag[t] * x + off[t] * y;
        v[u] = off[u] * x + diag[u] * y;
      }
    }
  }

  // Left-multiplies every column of m.
  void apply_inplace(Eigen::MatrixXd& m) const {
    for (Eigen::Index c = 0; c < m.cols(); ++c) apply_inplace(m.col(c).data());
  }

  Eigen::MatrixXd dense() const {
    const int d = dim();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int t = 0; t < d; ++t) {
      m(t, t) = diag[t];
      if (partner[t] >= 0) m(t, partner[t]) = off[t];
    }
    return m;
  }
};

struct IrrepTable {
  Partition partition;
  int n = 0;
  int dim = 0;
  std::vector<Tableau> tableaux;
  // generators[k-1] represents the adjacent transposition (k, k+1).
  std::vector<SparseGenerator> generators;

  const SparseGenerator& generator(int k) const { return generators[static_cast<std::size_t>(k - 1)]; }
};

namespace detail {

inline std::string row_word(const Tableau& t) {
  std::string s(t.row.size(), '\0');
  for (std::size_t i = 0; i < t.row.size(); ++i) s[i] = static_cast<char>(t.row[i]);
  return s;
}

}  // namespace detail

// Axial-distance construction: with r = c(k+1) - c(k) (contents of the cells
// of k+1 and k in T), rho(s_k) e_T = (1/r) e_T + sqrt(1 - 1/r^2) e_{s_k T}.
inline IrrepTable build_irrep_table(const Partition& p) {
  IrrepTable table;
  table.partition = p;
  table.n = p.size();
  table.tableaux = standard_tableaux(p);
  table.dim = static_cast<int>(table.tableaux.size());

  std::unordered_map<std::string, int> index;
  index.reserve(table.tableaux.size() * 2);
  for (int i = 0; i < table.dim; ++i) index.emplace(detail::row_word(table.tableaux[i]), i);

  for (int k = 1; k < table.n; ++k) {
    SparseGenerator gen;
    gen.diag.resize(table.dim);
    gen.partner.assign(table.dim, -1);
    gen.off.assign(table.dim, 0.0);
    for (int t = 0; t < table.dim; ++t) {
      const Tableau& tab = table.tableaux[t];
      const int r = tab.content(k + 1) - tab.content(k);
      gen.diag[t] = 1.0 / r;
      if (r == 1 || r == -1) continue;  // same row / same column
      Tableau swapped = tab;
      std::swap(swapped.row[k - 1], swapped.row[k]);
      std::swap(swapped.col[k - 1], swapped.col[k]);
      gen.partner[t] = index.at(detail::row_word(swapped));
      gen.off[t] = std::sqrt(1.0 - 1.0 / (static_cast<double>(r) * r));
    }
    table.generators.push_back(std::move(gen));
  }
  return table;
}

// Dense rho(g), multiplied out along an adjacent-transposition word.
inline Eigen::MatrixXd yor_of(const IrrepTable& t, const Permutation& g) {
  if (g.size() != t.n) {
    throw SizeError("yor_of: permutation of degree " + std::to_string(g.size()) +
                    " for an irrep of S_" + std::to_string(t.n));
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(t.dim, t.dim);
  const std::vector<int> word = adjacent_transposition_decomposition(g);
  for (auto it = word.rbegin(); it != word.rend(); ++it) t.generator(*it).apply_inplace(m);
  return m;
}

// Diagonal 0/1 projector onto the copies of the trivial irrep of S_{n-2}.
struct TauProjector {
  Partition partition;
  std::vector<std::uint8_t> indicator;

  // Indices with indicator 1, ascending: the non-zero Fourier columns.
  std::vector<int> selected() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < indicator.size(); ++i) {
      if (indicator[i]) s.push_back(static_cast<int>(i));
    }
    return s;
  }
  int rank() const { return static_cast<int>(selected().size()); }

  Eigen::MatrixXd dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(indicator.size()),
                                              static_cast<Eigen::Index>(indicator.size()));
    for (std::size_t i = 0; i < indicator.size(); ++i) m(i, i) = indicator[i];
    return m;
  }
};

// A basis tableau spans a trivial S_{n-2} block iff 1..n-2 all sit in the
// first row, i.e. its restriction path passes through the shape (n-2).
inline TauProjector tau_projector(const IrrepTable& t) {
  TauProjector tau{t.partition, std::vector<std::uint8_t>(static_cast<std::size_t>(t.dim), 0)};
  for (int i = 0; i < t.dim; ++i) {
    bool first_row = true;
    for (int v = 1; v <= t.n - 2 && first_row; ++v) first_row = t.tableaux[i].row[v - 1] == 0;
    tau.indicator[i] = first_row ? 1 : 0;
  }
  return tau;
}

}  // namespace gskew
