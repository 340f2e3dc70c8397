// Copyright 2026 The Micosa Authors
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

// Timing comparison between the pruned (OpenMP-parallel) analysis kernels
// and the naive serial reference they are tested against.

#include <chrono>
#include <cstdio>

#include "micosa/golden.hpp"
#include "micosa/reference.hpp"

using namespace micosa;

namespace {

template <typename F>
double msec(F&& fn, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

volatile std::size_t sink;

}  // namespace

int main() {
  const auto& catalog = exceptionalCatalog();
  const auto& t2 = catalog[ExceptionalType::T2];

  std::printf("%-44s %12s %12s\n", "workload", "engine [ms]", "reference [ms]");

  for (int k = 4; k <= 6; ++k) {
    double fast = msec([&] { sink = scanKSubsets(t2, k).size(); }, 5);
    double ref = msec([&] { sink = reference::scanKSubsets(t2, k).size(); }, 5);
    std::printf("singular scan, %d-tone harmonies %13s %12.3f %12.3f\n", k, "", fast, ref);
  }

  // All 3- and 4-tone harmonies, full decomposition enumeration.
  auto allSmall = [&](auto&& covers) {
    std::size_t n = 0;
    for (PcSet m = 0; m < 4096; ++m) {
      int c = pcCount(m);
      if (c == 3 || c == 4) n += covers(t2, m).size();
    }
    return n;
  };
  double fast = msec(
      [&] {
        sink = allSmall([](const GoldenStructure& s, PcSet h) { return goldenDecompositions(s, h); });
      },
      3);
  double ref = msec(
      [&] {
        sink = allSmall(
            [](const GoldenStructure& s, PcSet h) { return reference::minimumCovers(s, h); });
      },
      3);
  std::printf("%-44s %12.3f %12.3f\n", "decompositions of all 3/4-tone harmonies", fast, ref);

  double mystic = msec([&] { sink = goldenDecompositions(t2, kMysticChord).size(); }, 200);
  double mysticRef = msec([&] { sink = reference::minimumCovers(t2, kMysticChord).size(); }, 200);
  std::printf("%-44s %12.3f %12.3f\n", "mystic chord decomposition", mystic, mysticRef);

  // All 135 figures are candidates here; the reference walks every triple
  // of them while the engine prunes on the lowest uncovered tone.
  double full = msec([&] { sink = goldenDecompositions(t2, kFullPcSet).size(); }, 20);
  double fullRef = msec([&] { sink = reference::minimumCovers(t2, kFullPcSet).size(); }, 3);
  std::printf("%-44s %12.3f %12.3f\n", "decomposition of the full 12-tone set", full, fullRef);

  return 0;
}
