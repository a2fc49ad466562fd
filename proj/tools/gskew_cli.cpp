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

// gskew: graph skew spectra from the command line.
//
//   gskew embed      --format g6 --k 3,4 graphs.g6
//   gskew collisions --atlas 7 --k 3,4,5,6,7,8,9 --baselines laplacian,wl1:3
//   gskew verify
//   gskew baselines  --baselines laplacian,wl1:2 graphs.g6

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gskew/commands.hpp"

namespace {

struct Flags {
  std::vector<std::string> inputs;
  std::string format = "g6";
  std::vector<int> ks;
  bool concat = false;
  std::string orbits = "adjacency";
  bool pad = false;
  int round = gskew::kDefaultRoundDigits;
  int threads = 1;
  std::string out;
  int atlas = 0;
  std::vector<std::string> baselines;
  std::uint64_t seed = 1;
  bool inject_fault = false;
};

void add_corpus_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("inputs", f.inputs, "graph files");
  cmd->add_option("--format", f.format, "g6 | edgelist | attr")->check(CLI::IsMember({"g6", "graph6", "edgelist", "attr"}));
  cmd->add_option("--atlas", f.atlas, "also use every graph on N vertices")->check(CLI::Range(1, gskew::kAtlasMaxN));
  cmd->add_option("--threads", f.threads, "worker threads (0: hardware)")->check(CLI::NonNegativeNumber);
}

void add_spectrum_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--k", f.ks, "orders, comma separated")->delimiter(',')->check(CLI::Range(3, 9));
  cmd->add_option("--orbits", f.orbits, "adjacency | selfloops | node-features | edge-features | layers | hypergraph");
  cmd->add_flag("--pad", f.pad, "pad graphs with fewer than 5 nodes by isolated nodes");
  cmd->add_option("--round", f.round, "decimal digits for collision keys")->check(CLI::Range(6, 12));
}

gskew::ExperimentConfig to_config(const Flags& f, std::vector<int> default_ks) {
  gskew::ExperimentConfig c;
  c.inputs = f.inputs;
  c.format = *gskew::parse_graph_format(f.format);
  c.atlas = f.atlas;
  c.ks = f.ks.empty() ? std::move(default_ks) : f.ks;
  c.concat = f.concat;
  const auto recipe = gskew::parse_orbit_recipe(f.orbits);
  if (!recipe) throw CLI::ValidationError("--orbits", "unknown recipe '" + f.orbits + "'");
  c.recipe = *recipe;
  c.pad = f.pad;
  c.round_digits = f.round;
  c.threads = f.threads;
  c.out = f.out;
  c.baselines = f.baselines;
  c.seed = f.seed;
  c.inject_fault = f.inject_fault;
  return c;
}

// Writes to --out when given, stdout otherwise.
template <class Fn>
int with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) return fn(std::cout);
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return gskew::kExitInputError;
  }
  return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph skew spectra"};
  app.set_config("--config", "", "read flags from a TOML/INI file");
  app.require_subcommand(1);
  Flags f;

  auto* embed = app.add_subcommand("embed", "write one embedding row per graph (and k)");
  add_corpus_flags(embed, f);
  add_spectrum_flags(embed, f);
  embed->add_flag("--concat", f.concat, "one row per graph with all orders concatenated");
  embed->add_option("--out", f.out, "CSV path (default stdout)");

  auto* coll = app.add_subcommand("collisions", "count graphs that share a rounded embedding");
  add_corpus_flags(coll, f);
  add_spectrum_flags(coll, f);
  coll->add_option("--baselines", f.baselines, "laplacian | eigenvalues | wl1:<iters> | none")->delimiter(',');
  coll->add_option("--out", f.out, "JSON report path");

  auto* verify = app.add_subcommand("verify", "check the fast path against the brute-force oracle");
  verify->add_option("--seed", f.seed, "random seed");
  verify->add_flag("--inject-fault", f.inject_fault, "corrupt one representation entry (self-test)");
  verify->add_option("--out", f.out, "JSON report path");

  auto* base = app.add_subcommand("baselines", "Laplacian spectrum, eigenvalues and 1-WL hashes per graph");
  add_corpus_flags(base, f);
  base->add_option("--baselines", f.baselines, "laplacian | eigenvalues | wl1:<iters>")->delimiter(',');
  base->add_option("--round", f.round, "decimal digits")->check(CLI::Range(6, 12));
  base->add_option("--out", f.out, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (embed->parsed()) {
      const auto cfg = to_config(f, {3});
      return with_output(f.out, [&](std::ostream& os) { return gskew::embed_command(cfg, os, std::cerr); });
    }
    if (coll->parsed()) {
      auto cfg = to_config(f, {3, 4, 5, 6, 7, 8, 9});
      if (f.baselines.empty()) cfg.baselines = {"laplacian", "wl1:1", "wl1:2", "wl1:3"};
      return gskew::collisions_command(cfg, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      return gskew::verify_command(to_config(f, {3}), std::cout, std::cerr);
    }
    const auto cfg = to_config(f, {3});
    return with_output(f.out, [&](std::ostream& os) { return gskew::baselines_command(cfg, os, std::cerr); });
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }
}
