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

// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance_test [--allow-fail AC3,AC4]
//
// A criterion listed in --allow-fail still fails the run unless its failure
// is exactly the (n-2,1,1) structural zero. AC10 is a benchmark and never
// affects the exit status.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gskew/commands.hpp"
#include "gskew/oracle.hpp"
#include "gskew/spectrum.hpp"
#include "test_util.hpp"

namespace {

using namespace gskew;
namespace t = gskew::testing;

struct Outcome {
  bool pass = false;
  std::string detail;
  bool structural_zero_only = false;  // failure fully explained by the (n-2,1,1) zeros
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome ac1_oracle_equivalence() {
  auto r = t::rng(101);
  double worst = 0.0;
  int cases = 0;
  for (int k : {3, 4}) {
    for (int d : {1, 2}) {
      for (int i = 0; i < 20; ++i, ++cases) {
        const MultiOrbitFunction f = t::random_multi(5, d, r);
        const auto fast = doubly_reduced_k_spectrum(f, k);
        const auto slow = brute_force_doubly_reduced(f, k);
        if (fast.size() != slow.size()) return {false, "layout mismatch"};
        for (std::size_t e = 0; e < fast.size(); ++e) {
          worst = std::max(worst, std::abs(fast.entries[e] - slow.entries[e]));
        }
      }
    }
  }
  return {worst <= 1e-9, std::to_string(cases) + " inputs, max |fast - brute| = " + fmt("%.3e", worst)};
}

Outcome ac2_invariance() {
  auto r = t::rng(102);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 5 + i % 8;
    const int k = 3 + i % 3;
    GraphInput g;
    g.adjacency = t::random_weighted(n, r);
    OrbitRecipe recipe = OrbitRecipe::kAdjacency;
    if (i % 2) {
      g.node_features = Eigen::MatrixXd::Random(n, 1);
      recipe = OrbitRecipe::kNodeFeatures;
    }
    const Permutation s = random_permutation(n, r);
    const auto e1 = doubly_reduced_k_spectrum(build_orbits(g, recipe), k);
    const auto e2 = doubly_reduced_k_spectrum(build_orbits(permute_input(g, s), recipe), k);
    worst = std::max(worst, scaled_max_difference(e1.entries, e2.entries));
  }
  return {worst <= 1e-9, "100 pairs, n 5..12, k 3..5, max relative difference " + fmt("%.3e", worst)};
}

Outcome ac3_count() {
  auto r = t::rng(103);
  std::ostringstream os;
  bool pass = true, explained = true;
  for (int n : {6, 10}) {
    const auto e = doubly_reduced_k_spectrum(from_adjacency(t::random_weighted(n, r)), 3);
    const std::size_t nz = count_nonzeros(e);
    pass = pass && e.size() == 49 && nz == 49;
    explained = explained && e.size() == 49 && nz == 48;
    os << "n=" << n << ": " << nz << "/" << e.size() << " non-zero";
    double scale = 1.0;
    for (double v : e.entries) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (std::abs(e.entries[i]) > 1e-12 * scale) continue;
      const EntryLabel lab = describe_entry(e, i);
      explained = explained && lab.irrep == 3 && lab.combination.to_string() == "g2";
      os << " (zero at entry " << i << ": irrep " << lambda_n(n)[lab.irrep].to_string() << ", {"
         << lab.combination.to_string() << "})";
    }
    os << "; ";
  }
  return {pass, os.str() + "a function symmetric in the last two positions has no (n-2,1,1) part", explained};
}

Outcome ac4_budget() {
  auto r = t::rng(104);
  bool within = true;
  std::size_t eq_count = 0;
  std::ostringstream os;
  for (int d : {1, 2}) {
    os << "d=" << d << ":";
    for (int k = kMinOrder; k <= kMaxOrder; ++k) {
      const auto e = doubly_reduced_k_spectrum(t::random_multi(6, d, r), k);
      const std::size_t nz = count_nonzeros(e);
      within = within && nz <= nonzero_budget(k, d) && e.size() == nonzero_budget(k, d);
      if (k == 3 && d == 1) eq_count = nz;
      os << " k" << k << "=" << nz << "/" << nonzero_budget(k, d);
    }
    os << "; ";
  }
  const bool equal = eq_count == nonzero_budget(3, 1);
  os << "budget " << (within ? "respected" : "EXCEEDED") << ", equality at k=3,d=1 " << (equal ? "holds" : "fails");
  return {within && equal, os.str(), within && eq_count + 1 == nonzero_budget(3, 1)};
}

Outcome ac5_eigen_collision() {
  Eigen::MatrixXd a1(2, 2), a2(2, 2);
  a1 << 1, 1, 2, 2;
  a2 << 2, 1, 2, 1;
  bool exact = true;
  for (const auto& a : {a1, a2}) {
    // Integer characteristic polynomial x^2 - 3x + 0.
    exact = exact && a.trace() == 3.0 && a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) == 0.0;
    const auto ev = matrix_eigenvalues(a);
    exact = exact && std::abs(ev[0] - 0.0) < 1e-12 && std::abs(ev[1] - 3.0) < 1e-12;
  }
  auto embed = [](const Eigen::MatrixXd& a) {
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(5, 5);
    p.topLeftCorner(2, 2) = a;
    return reduced_multi_orbit_skew_spectrum(MultiOrbitFunction({from_adjacency(p), from_diagonal(p)}));
  };
  const auto e1 = embed(a1), e2 = embed(a2);
  double diff = 0.0;
  for (std::size_t i = 0; i < e1.size(); ++i) diff = std::max(diff, std::abs(e1.entries[i] - e2.entries[i]));
  return {exact && diff > 1e-6, std::string("eigenvalues {3,0} for both: ") + (exact ? "yes" : "no") +
                                    ", max spectrum difference " + fmt("%.3e", diff)};
}

Outcome ac6_atlas() {
  ExperimentConfig cfg;
  cfg.atlas = 7;
  cfg.ks = {3, 4, 5, 6, 7, 8, 9};
  cfg.baselines = {"laplacian", "wl1:1", "wl1:2", "wl1:3"};
  const auto t0 = std::chrono::steady_clock::now();
  const CollisionReport rep = compute_collisions(load_corpus(cfg), cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << rep.graphs << " graphs;";
  for (const auto& m : rep.methods) os << ' ' << m.method << '=' << m.collisions;
  os << "; prefixes";
  for (const auto& p : rep.prefixes) os << ' ' << p.collisions;
  os << "; " << fmt("%.1fs", secs);
  const bool pass = rep.graphs == 1044 && rep.find("C")->collisions == 0 && rep.find("k=3")->collisions > 0 &&
                    rep.monotone;
  return {pass, os.str()};
}

Outcome ac7_sparsity() {
  auto r = t::rng(107);
  double worst = 0.0;
  for (int n : {5, 8}) {
    std::vector<DenseGroupFunction> dense;
    for (int i = 0; i < 50; ++i) dense.push_back(DenseGroupFunction::from_orbit(t::random_orbit(n, r)));
    const auto tables = shared_irrep_tables(n);
    for (std::size_t c = 0; c < kBandLimit; ++c) {
      const auto ref = naive_fourier_batch(dense, tables->irreps[c]);
      const auto& sel = tables->selected[c];
      for (const auto& m : ref) {
        for (Eigen::Index col = 0; col < m.cols(); ++col) {
          if (std::find(sel.begin(), sel.end(), col) != sel.end()) continue;
          worst = std::max(worst, m.col(col).cwiseAbs().maxCoeff());
        }
      }
    }
  }
  // Every function on S_4/S_2 is a combination of the 12 coset indicators.
  double outside = 0.0;
  const int n = 4;
  const IrrepTable sign = build_irrep_table(Partition{1, 1, 1, 1});
  for (int c = 0; c < coset_count(n); ++c) {
    OrbitFunction f(n);
    f.values()[static_cast<std::size_t>(c)] = 1.0;
    outside = std::max(outside, naive_fourier(DenseGroupFunction::from_orbit(f), sign).cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-14 && outside <= 1e-14,
          "n=5,8: max |entry| outside tau columns " + fmt("%.1e", worst) + "; n=4 (1,1,1,1) max " +
              fmt("%.1e", outside)};
}

Outcome ac8_element_properties() {
  auto r = t::rng(108);
  double dist = 0.0, ord = 0.0;
  bool pass = true;
  for (int i = 0; i < 10; ++i) {
    const auto rep = element_property_checks(from_adjacency(t::random_simple_graph(5, r)));
    dist = std::max(dist, rep.distinctness_max_dev);
    ord = std::max(ord, rep.ordering_max_dev);
    pass = pass && rep.passed(1e-12);
  }
  return {pass, "10 graphs, distinctness dev " + fmt("%.1e", dist) + ", ordering dev " + fmt("%.1e", ord)};
}

Outcome ac9_substructures() {
  bool pass = true;
  std::ostringstream os;
  for (int n : {5, 6}) {
    auto r = t::rng(109 + n);
    const auto gens = double_coset_generators(n);
    const std::vector<Permutation> G{gens[3], gens[2]};
    double ratio = -1.0, spread = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Eigen::MatrixXd a = t::random_simple_graph(n, r, 0.6);
      const auto f = DenseGroupFunction::from_orbit(from_adjacency(a));
      const double m = a.sum() / 2;
      pass = pass && naive_k_correlation(std::vector<DenseGroupFunction>{f}, std::vector<Permutation>{}) ==
                         2 * m / (n * (n - 1));
      const double triangles = (a * a * a).trace() / 6;
      const double s3 = naive_k_correlation(std::vector<DenseGroupFunction>(3, f), G);
      if (triangles == 0) {
        pass = pass && s3 == 0.0;
        continue;
      }
      if (ratio < 0) ratio = s3 / triangles;
      spread = std::max(spread, std::abs(s3 / triangles - ratio));
    }
    pass = pass && ratio > 0 && spread <= 1e-12;
    os << "n=" << n << ": S3/triangles = " << fmt("%.12g", ratio) << " (spread " << fmt("%.1e", spread) << "); ";
  }
  return {pass, os.str() + "S1 == 2m/(n(n-1)) exactly"};
}

Outcome ac10_complexity() {
  const std::vector<int> ns{16, 24, 32, 48};
  std::vector<double> xs, ys;
  std::ostringstream os;
  auto r = t::rng(110);
  for (int n : ns) {
    const OrbitFunction f = from_adjacency(t::random_weighted(n, r));
    (void)shared_irrep_tables(n);
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto e = doubly_reduced_k_spectrum(f, 3);
      best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      if (e.size() != 49) return {false, "unexpected size"};
    }
    xs.push_back(std::log(n));
    ys.push_back(std::log(best));
    os << "n=" << n << ' ' << fmt("%.4fs", best) << "; ";
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = num / den;
  return {slope >= 2.5 && slope <= 4.5, os.str() + "log-log slope " + fmt("%.2f", slope) + " (benchmark)"};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> allowed;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--allow-fail" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string id; std::getline(ss, id, ',');) allowed.insert(id);
    } else {
      std::fprintf(stderr, "usage: acceptance_test [--allow-fail AC3,AC4]\n");
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1", ac1_oracle_equivalence}, {"AC2", ac2_invariance},        {"AC3", ac3_count},
      {"AC4", ac4_budget},             {"AC5", ac5_eigen_collision},   {"AC6", ac6_atlas},
      {"AC7", ac7_sparsity},           {"AC8", ac8_element_properties}, {"AC9", ac9_substructures},
      {"AC10", ac10_complexity},
  };
  int blocking = 0;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const bool gate = id != "AC10";
    std::string tag;
    const bool excused = allowed.count(id) && o.structural_zero_only;
    if (!o.pass) tag = excused ? " [known deviation]" : (gate ? "" : " [benchmark only]");
    std::printf("%s %s %s%s\n", id.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str(), tag.c_str());
    std::fflush(stdout);
    if (!o.pass && gate && !excused) ++blocking;
  }
  return blocking == 0 ? 0 : 1;
}
