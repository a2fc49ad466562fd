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

// The four batch verbs behind the gskew tool. Each takes an
// ExperimentConfig, writes its primary output to `out` and diagnostics to
// `err`, and returns a process exit code.

#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gskew/atlas.hpp"
#include "gskew/baselines.hpp"
#include "gskew/collisions.hpp"
#include "gskew/graph_fn.hpp"
#include "gskew/io.hpp"
#include "gskew/parallel.hpp"
#include "gskew/spectrum.hpp"
#include "gskew/verify.hpp"

namespace gskew {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct Baseline {
  enum Kind { kLaplacian, kWl1, kEigenvalues } kind = kLaplacian;
  int iters = 0;

  std::string label() const {
    switch (kind) {
      case kLaplacian:
        return "L";
      case kWl1:
        return "WL1:" + std::to_string(iters);
      case kEigenvalues:
        return "EIG";
    }
    return "?";
  }
};

// "laplacian", "eigenvalues", "wl1:<iters>" or "none" (empty list).
inline std::vector<Baseline> parse_baselines(const std::vector<std::string>& specs) {
  std::vector<Baseline> out;
  for (const std::string& s : specs) {
    if (s == "none") continue;
    if (s == "laplacian") {
      out.push_back({Baseline::kLaplacian, 0});
    } else if (s == "eigenvalues") {
      out.push_back({Baseline::kEigenvalues, 0});
    } else if (s.rfind("wl1:", 0) == 0) {
      int it = -1;
      try {
        it = std::stoi(s.substr(4));
      } catch (const std::exception&) {
      }
      if (it < 0) throw DomainError("baseline '" + s + "': iteration count must be a non-negative integer");
      out.push_back({Baseline::kWl1, it});
    } else {
      throw DomainError("unknown baseline '" + s + "' (laplacian | eigenvalues | wl1:<iters> | none)");
    }
  }
  return out;
}

struct ExperimentConfig {
  std::vector<std::string> inputs;
  GraphFormat format = GraphFormat::kGraph6;
  int atlas = 0;  // > 0: generate all graphs on this many vertices instead of reading inputs
  std::vector<int> ks{3};
  bool concat = false;
  OrbitRecipe recipe = OrbitRecipe::kAdjacency;
  bool pad = false;
  int round_digits = kDefaultRoundDigits;
  int threads = 1;
  std::vector<std::string> baselines;
  std::string out;  // report path for collisions/verify; empty: none
  std::uint64_t seed = 1;
  bool inject_fault = false;

  void validate() const {
    if (ks.empty()) throw DomainError("at least one k is required");
    for (int k : ks) {
      if (k < kMinOrder || k > kMaxOrder) throw DomainError("k=" + std::to_string(k) + " outside [3, 9]");
    }
    if (round_digits < kMinRoundDigits || round_digits > kMaxRoundDigits) {
      throw DomainError("--round must lie in [6, 12]");
    }
    if (threads < 0) throw DomainError("--threads must be >= 0");
    if (atlas < 0 || atlas > kAtlasMaxN) throw DomainError("--atlas must lie in [1, 8]");
  }

  std::vector<int> sorted_ks() const {
    std::vector<int> s = ks;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }
};

inline std::vector<GraphRecord> load_corpus(const ExperimentConfig& cfg) {
  std::vector<GraphRecord> out;
  if (cfg.atlas > 0) {
    const auto masks = enumerate_graphs(cfg.atlas);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      GraphRecord r;
      r.id = "atlas" + std::to_string(cfg.atlas) + "-" + std::to_string(i);
      r.input.adjacency = mask_to_adjacency(masks[i], cfg.atlas);
      out.push_back(std::move(r));
    }
  }
  for (const std::string& path : cfg.inputs) {
    auto recs = read_graph_file(path, cfg.format);
    if (cfg.inputs.size() + (cfg.atlas > 0 ? 1 : 0) > 1) {
      const std::string stem = std::filesystem::path(path).filename().string();
      for (auto& r : recs) r.id = stem + ":" + r.id;
    }
    for (auto& r : recs) out.push_back(std::move(r));
  }
  return out;
}

// The input the spectrum sees: padded to n = 5 when allowed, refused otherwise.
inline GraphInput prepare_input(const GraphRecord& rec, bool pad) {
  const int n = rec.input.n();
  if (n >= kMinSpectrumNodes) return rec.input;
  if (!pad) {
    throw DomainError("graph '" + rec.id + "': n=" + std::to_string(n) +
                      " < 5; the spectrum needs at least 5 nodes. Rerun with --pad to add isolated nodes.");
  }
  return pad_input(rec.input, kMinSpectrumNodes);
}

inline SpectrumEmbedding embed_record(const GraphRecord& rec, const ExperimentConfig& cfg) {
  const MultiOrbitFunction f = build_orbits(prepare_input(rec, cfg.pad), cfg.recipe);
  const std::vector<int> ks = cfg.sorted_ks();
  return concat_spectra(f, ks);
}

inline std::string k_label(const std::vector<int>& ks) {
  std::string s;
  for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "+" : "") + std::to_string(ks[i]);
  return s;
}

inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Header, then one row per graph (or per graph and k without --concat):
//   graph_id,n,d,k,v0,v1,...
inline int embed_command(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<GraphRecord> corpus;
  std::vector<SpectrumEmbedding> emb;
  try {
    cfg.validate();
    corpus = load_corpus(cfg);
    emb = parallel_map(corpus.size(), cfg.threads, [&](std::size_t i) { return embed_record(corpus[i], cfg); });
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  const std::vector<int> ks = cfg.sorted_ks();
  out << "# " << kEmbeddingSchema << '\n';
  out << "graph_id,n,d,k,values\n";
  std::string row;
  for (std::size_t g = 0; g < corpus.size(); ++g) {
    const SpectrumEmbedding& e = emb[g];
    auto emit = [&](const std::string& klabel, std::size_t begin, std::size_t end) {
      row = corpus[g].id + "," + std::to_string(e.n) + "," + std::to_string(e.d) + "," + klabel;
      for (std::size_t i = begin; i < end; ++i) row += "," + format_real(e.entries[i]);
      out << row << '\n';
    };
    if (cfg.concat) {
      emit(k_label(ks), 0, e.size());
    } else {
      for (const auto& seg : e.segments) emit(std::to_string(seg.k), seg.offset, seg.offset + seg.length);
    }
  }
  return kExitOk;
}

struct MethodCollisions {
  std::string method;
  std::vector<int> ks;  // spectrum methods only
  std::size_t collisions = 0;
};

struct CollisionReport {
  std::size_t graphs = 0;
  int round_digits = kDefaultRoundDigits;
  std::vector<MethodCollisions> methods;   // each k, then "C", then baselines
  std::vector<MethodCollisions> prefixes;  // concatenations of the first j orders
  bool monotone = true;

  const MethodCollisions* find(const std::string& m) const {
    for (const auto& x : methods) {
      if (x.method == m) return &x;
    }
    return nullptr;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["schema"] = "gskew-collisions/1";
    j["graphs"] = graphs;
    j["round_digits"] = round_digits;
    auto encode = [](const std::vector<MethodCollisions>& v) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& m : v) {
        nlohmann::json e{{"method", m.method}, {"collisions", m.collisions}};
        if (!m.ks.empty()) e["ks"] = m.ks;
        a.push_back(e);
      }
      return a;
    };
    j["methods"] = encode(methods);
    j["prefix_concatenation"] = encode(prefixes);
    j["monotone"] = monotone;
    return j;
  }
};

inline std::string baseline_key(const Eigen::MatrixXd& a, const Baseline& b, int digits) {
  switch (b.kind) {
    case Baseline::kLaplacian:
      return rounded_key(laplacian_eigs(a), digits);
    case Baseline::kEigenvalues: {
      std::vector<double> flat;
      for (auto z : matrix_eigenvalues(a)) {
        flat.push_back(z.real());
        flat.push_back(z.imag());
      }
      return rounded_key(flat, digits);
    }
    case Baseline::kWl1: {
      std::ostringstream os;
      os << a.rows();
      for (auto c : wl1_histogram(a, b.iters)) os << ',' << std::hex << c;
      return os.str();
    }
  }
  return {};
}

inline CollisionReport compute_collisions(const std::vector<GraphRecord>& corpus, const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<Baseline> baselines = parse_baselines(cfg.baselines);
  const std::vector<int> ks = cfg.sorted_ks();
  const int digits = cfg.round_digits;

  struct Keys {
    std::vector<std::string> per_k;    // one per order
    std::vector<std::string> prefix;   // one per prefix length
    std::vector<std::string> base;     // one per baseline
  };
  const std::vector<Keys> keys = parallel_map(corpus.size(), cfg.threads, [&](std::size_t i) {
    const SpectrumEmbedding e = embed_record(corpus[i], cfg);
    Keys k;
    std::string acc;
    for (std::size_t s = 0; s < e.segments.size(); ++s) {
      const auto& seg = e.segments[s];
      const std::string part =
          rounded_key(std::span<const double>(e.entries).subspan(seg.offset, seg.length), digits);
      k.per_k.push_back(part);
      acc += (s ? "|" : "") + part;
      k.prefix.push_back(acc);
    }
    for (const Baseline& b : baselines) k.base.push_back(baseline_key(corpus[i].input.adjacency, b, digits));
    return k;
  });

  auto column = [&](auto member, std::size_t idx) {
    std::vector<std::string> c;
    c.reserve(keys.size());
    for (const auto& k : keys) c.push_back((k.*member)[idx]);
    return count_collisions(c);
  };

  CollisionReport rep;
  rep.graphs = corpus.size();
  rep.round_digits = digits;
  std::size_t min_single = corpus.size();
  for (std::size_t s = 0; s < ks.size(); ++s) {
    const std::size_t c = column(&Keys::per_k, s);
    min_single = std::min(min_single, c);
    rep.methods.push_back({"k=" + std::to_string(ks[s]), {ks[s]}, c});
  }
  for (std::size_t s = 0; s < ks.size(); ++s) {
    const std::vector<int> pre(ks.begin(), ks.begin() + static_cast<std::ptrdiff_t>(s + 1));
    rep.prefixes.push_back({k_label(pre), pre, column(&Keys::prefix, s)});
    if (s > 0 && rep.prefixes[s].collisions > rep.prefixes[s - 1].collisions) rep.monotone = false;
  }
  rep.methods.push_back({"C", ks, rep.prefixes.back().collisions});
  if (rep.prefixes.back().collisions > min_single) rep.monotone = false;
  for (std::size_t b = 0; b < baselines.size(); ++b) {
    rep.methods.push_back({baselines[b].label(), {}, column(&Keys::base, b)});
  }
  return rep;
}

inline void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream f(path);
  if (!f) throw ParseError(path, 0, "cannot open report for writing");
  f << j.dump(2) << '\n';
}

inline int collisions_command(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  CollisionReport rep;
  try {
    rep = compute_collisions(load_corpus(cfg), cfg);
    if (!cfg.out.empty()) write_json(cfg.out, rep.to_json());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  out << "graphs " << rep.graphs << "  round " << rep.round_digits << '\n';
  out << std::left << std::setw(24) << "method" << "collisions\n";
  for (const auto& m : rep.methods) {
    out << std::setw(24) << (m.method == "C" ? "C(" + k_label(m.ks) + ")" : m.method) << m.collisions << '\n';
  }
  out << "prefix concatenation:";
  for (const auto& p : rep.prefixes) out << ' ' << p.method << '=' << p.collisions;
  out << "\nmonotone " << (rep.monotone ? "yes" : "NO") << '\n';
  return rep.monotone ? kExitOk : kExitCheckFailed;
}

inline nlohmann::json verify_json(const VerifyReport& rep) {
  nlohmann::json j;
  j["schema"] = "gskew-verify/1";
  j["passed"] = rep.passed();
  for (const auto& c : rep.checks) {
    j["checks"].push_back({{"name", c.name}, {"max_dev", c.max_dev}, {"tolerance", c.tolerance}, {"passed", c.passed()}});
  }
  return j;
}

inline int verify_command(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyReport rep;
  try {
    rep = run_verification({cfg.seed, 5, cfg.inject_fault});
    if (!cfg.out.empty()) write_json(cfg.out, verify_json(rep));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  char buf[64];
  for (const auto& c : rep.checks) {
    std::snprintf(buf, sizeof buf, "%.3e / %.0e", c.max_dev, c.tolerance);
    out << (c.passed() ? "PASS  " : "FAIL  ") << std::left << std::setw(48) << c.name << buf << '\n';
  }
  out << (rep.passed() ? "verify: all checks passed\n" : "verify: FAILED\n");
  return rep.passed() ? kExitOk : kExitCheckFailed;
}

// One row per (graph, baseline): graph_id,method,values
inline int baselines_command(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> rows;
  try {
    cfg.validate();
    const std::vector<Baseline> bs = parse_baselines(cfg.baselines.empty() ? std::vector<std::string>{"laplacian"}
                                                                           : cfg.baselines);
    const std::vector<GraphRecord> corpus = load_corpus(cfg);
    const auto per_graph = parallel_map(corpus.size(), cfg.threads, [&](std::size_t i) {
      std::string lines;
      const Eigen::MatrixXd& a = corpus[i].input.adjacency;
      for (const Baseline& b : bs) {
        std::string v;
        if (b.kind == Baseline::kWl1) {
          char buf[24];
          std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(wl1(a, b.iters)));
          v = buf;
        } else {
          v = baseline_key(a, b, cfg.round_digits);
        }
        lines += corpus[i].id + "," + b.label() + "," + v + "\n";
      }
      return lines;
    });
    rows.assign(per_graph.begin(), per_graph.end());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  out << "graph_id,method,values\n";
  for (const auto& r : rows) out << r;
  return kExitOk;
}

}  // namespace gskew
