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

// Runs the vertex-7 atlas collision experiment in-process and prints the
// per-method counts.

#include <cstdio>

#include "gskew/commands.hpp"

int main(int argc, char** argv) {
  using namespace gskew;
  ExperimentConfig cfg;
  cfg.atlas = argc > 1 ? std::atoi(argv[1]) : 7;
  cfg.ks = {3, 4, 5, 6, 7, 8, 9};
  cfg.baselines = {"laplacian", "wl1:1", "wl1:2", "wl1:3"};
  cfg.threads = 0;
  try {
    const CollisionReport rep = compute_collisions(load_corpus(cfg), cfg);
    std::printf("%zu graphs on %d vertices\n", rep.graphs, cfg.atlas);
    for (const auto& m : rep.methods) std::printf("  %-8s %zu\n", m.method.c_str(), m.collisions);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
