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

#include "micosa/reference.hpp"

#include <algorithm>
#include <functional>

namespace micosa::reference {

namespace {

bool partLess(const GoldenBase& x, const GoldenBase& y) {
  if (x.pcs != y.pcs) return pcLexLess(x.pcs, y.pcs);
  return x.kind < y.kind;
}

bool decompositionLess(const GoldenDecomposition& a, const GoldenDecomposition& b) {
  for (std::size_t i = 0; i < a.parts.size() && i < b.parts.size(); ++i) {
    if (!(a.parts[i] == b.parts[i])) return partLess(a.parts[i], b.parts[i]);
  }
  return a.parts.size() < b.parts.size();
}

std::vector<GoldenBase> candidateFigures(const GoldenStructure& structure, PcSet harmony) {
  std::vector<GoldenBase> out;
  for (PcSet f : structure.triangles) {
    if ((f & ~harmony) == 0) out.push_back({f, FigureKind::Triangle});
  }
  for (PcSet f : structure.gnomons) {
    if ((f & ~harmony) == 0) out.push_back({f, FigureKind::Gnomon});
  }
  for (PcSet f : structure.rectangles) {
    if ((f & ~harmony) == 0) out.push_back({f, FigureKind::Rectangle});
  }
  return out;
}

// All m-element index combinations of 0..n-1, in lexicographic order.
void forEachCombination(std::size_t n, std::size_t m,
                        const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (m > n) return;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<GoldenDecomposition> minimumCovers(const GoldenStructure& structure, PcSet harmony) {
  auto figures = candidateFigures(structure, harmony);
  std::vector<GoldenDecomposition> covers;
  for (std::size_t size = 1; size <= figures.size(); ++size) {
    forEachCombination(figures.size(), size, [&](const std::vector<std::size_t>& idx) {
      PcSet u = 0;
      for (std::size_t i : idx) u |= figures[i].pcs;
      if (u == harmony) {
        GoldenDecomposition d;
        for (std::size_t i : idx) d.parts.push_back(figures[i]);
        std::sort(d.parts.begin(), d.parts.end(), partLess);
        covers.push_back(std::move(d));
      }
    });
    if (!covers.empty()) break;
  }
  std::sort(covers.begin(), covers.end(), decompositionLess);
  return covers;
}

bool isSingular(const GoldenStructure& structure, PcSet harmony) {
  return minimumCovers(structure, harmony).empty();
}

std::vector<PcSet> scanKSubsets(const GoldenStructure& structure, int k) {
  std::vector<PcSet> out;
  for (PcSet m = 0; m < 4096; ++m) {
    if (pcCount(m) != k) continue;
    if (isSingular(structure, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), pcLexLess);
  return out;
}

}  // namespace micosa::reference
