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

#include "micosa/golden.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <numeric>
#include <set>
#include <stdexcept>

namespace micosa {

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

}  // namespace

std::string CombinationShape::name() const {
  struct Piece {
    const char* tag;
    int count;
  };
  std::array<Piece, 3> pieces = {{{"gr", rectangles}, {"gt", triangles}, {"gg", gnomons}}};
  // Match the conventional spellings: homogeneous pairs are gt2/gg2, mixed
  // combinations join with '&', rectangles lead.
  std::string out;
  for (const auto& p : pieces) {
    if (p.count == 0) continue;
    if (!out.empty()) out += "&";
    out += p.tag;
    if (p.count > 1) out += std::to_string(p.count);
  }
  return out.empty() ? "none" : out;
}

int CombinationShape::rank() const {
  static const std::array<CombinationShape, 8> canon = {{
      {1, 0, 0},  // gt
      {0, 1, 0},  // gg
      {2, 0, 0},  // gt2
      {0, 2, 0},  // gg2
      {1, 1, 0},  // gt&gg
      {0, 0, 1},  // gr
      {1, 0, 1},  // gr&gt
      {0, 1, 1},  // gr&gg
  }};
  for (std::size_t i = 0; i < canon.size(); ++i) {
    if (canon[i] == *this) return static_cast<int>(i);
  }
  return 8;
}

bool operator<(const CombinationShape& a, const CombinationShape& b) {
  int ra = a.rank(), rb = b.rank();
  if (ra != rb) return ra < rb;
  int sa = a.triangles + a.gnomons + a.rectangles;
  int sb = b.triangles + b.gnomons + b.rectangles;
  if (sa != sb) return sa < sb;
  if (a.rectangles != b.rectangles) return a.rectangles < b.rectangles;
  if (a.gnomons != b.gnomons) return a.gnomons < b.gnomons;
  return a.triangles < b.triangles;
}

CombinationShape GoldenDecomposition::shape() const {
  CombinationShape s;
  for (const auto& p : parts) {
    switch (p.kind) {
      case FigureKind::Triangle: ++s.triangles; break;
      case FigureKind::Gnomon: ++s.gnomons; break;
      case FigureKind::Rectangle: ++s.rectangles; break;
    }
  }
  return s;
}

std::vector<GoldenBase> figuresWithin(const GoldenStructure& structure, PcSet harmony) {
  if (pcCount(harmony) < 3) {
    throw std::invalid_argument("golden analysis needs at least three tones");
  }
  std::vector<GoldenBase> out;
  auto collect = [&](const std::vector<PcSet>& list, FigureKind kind) {
    for (PcSet f : list) {
      if ((f & ~harmony) == 0) out.push_back({f, kind});
    }
  };
  collect(structure.triangles, FigureKind::Triangle);
  collect(structure.gnomons, FigureKind::Gnomon);
  collect(structure.rectangles, FigureKind::Rectangle);
  std::sort(out.begin(), out.end(), partLess);
  return out;
}

std::vector<GoldenDecomposition> goldenDecompositions(const GoldenStructure& structure,
                                                      PcSet harmony) {
  auto figures = figuresWithin(structure, harmony);
  PcSet reachable = 0;
  for (const auto& f : figures) reachable |= f.pcs;
  if ((harmony & ~reachable) != 0) return {};  // golden singular

  // Exact minimum set cover by iterative deepening: find the minimum
  // cardinality first, then collect every cover of that size. Branching is
  // always on the lowest uncovered tone.
  auto exists = [&](auto&& self, PcSet covered, std::size_t used, std::size_t limit) -> bool {
    if ((harmony & ~covered) == 0) return true;
    if (used == limit) return false;
    PcSet missing = static_cast<PcSet>(harmony & ~covered);
    PitchClass lowest = std::countr_zero(static_cast<unsigned>(missing));
    for (const auto& f : figures) {
      if ((f.pcs & pcBit(lowest)) == 0) continue;
      if (self(self, static_cast<PcSet>(covered | f.pcs), used + 1, limit)) return true;
    }
    return false;
  };
  std::size_t minSize = 1;
  while (!exists(exists, 0, 0, minSize)) ++minSize;

  std::vector<GoldenDecomposition> best;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> chosen;
  auto collect = [&](auto&& self, PcSet covered) -> void {
    if ((harmony & ~covered) == 0) {
      std::vector<std::size_t> key = chosen;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) {
        GoldenDecomposition d;
        for (std::size_t idx : key) d.parts.push_back(figures[idx]);
        std::sort(d.parts.begin(), d.parts.end(), partLess);
        best.push_back(std::move(d));
      }
      return;
    }
    if (chosen.size() == minSize) return;
    PcSet missing = static_cast<PcSet>(harmony & ~covered);
    PitchClass lowest = std::countr_zero(static_cast<unsigned>(missing));
    for (std::size_t i = 0; i < figures.size(); ++i) {
      if ((figures[i].pcs & pcBit(lowest)) == 0) continue;
      if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
      chosen.push_back(i);
      self(self, static_cast<PcSet>(covered | figures[i].pcs));
      chosen.pop_back();
    }
  };
  collect(collect, 0);
  std::sort(best.begin(), best.end(), decompositionLess);
  return best;
}

bool isGoldenSingular(const GoldenStructure& structure, PcSet harmony) {
  if (pcCount(harmony) < 3) {
    throw std::invalid_argument("golden analysis needs at least three tones");
  }
  PcSet covered = 0;
  for (const auto* list : {&structure.triangles, &structure.gnomons, &structure.rectangles}) {
    for (PcSet f : *list) {
      if ((f & ~harmony) == 0) covered |= f;
    }
  }
  return (harmony & ~covered) != 0;
}

namespace {

// k-subsets of 0..11 unranked in lexicographic member order, so the scan
// parallelizes with a deterministic result.
long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

PcSet unrankSubset(long long rank, int k) {
  PcSet s = 0;
  int n = 12;
  int next = 0;
  for (int slot = k; slot >= 1; --slot) {
    for (int v = next; v < n; ++v) {
      long long block = binom(n - 1 - v, slot - 1);
      if (rank < block) {
        s |= pcBit(v);
        next = v + 1;
        break;
      }
      rank -= block;
    }
  }
  return s;
}

}  // namespace

std::vector<PcSet> scanKSubsets(const GoldenStructure& structure, int k) {
  if (k < 3 || k > 12) throw std::invalid_argument("subset size must be between 3 and 12");
  long long total = binom(12, k);
  std::vector<std::uint8_t> singular(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < total; ++i) {
    singular[static_cast<std::size_t>(i)] =
        isGoldenSingular(structure, unrankSubset(i, k)) ? 1 : 0;
  }
  std::vector<PcSet> out;
  for (long long i = 0; i < total; ++i) {
    if (singular[static_cast<std::size_t>(i)]) out.push_back(unrankSubset(i, k));
  }
  return out;
}

const std::array<SeventhChord, 7>& tertianSevenths() {
  static const std::array<SeventhChord, 7> chords = {{
      {"maj7", pcSetOf({0, 4, 7, 11})},
      {"min7", pcSetOf({0, 3, 7, 10})},
      {"dom7", pcSetOf({0, 4, 7, 10})},
      {"dim7", pcSetOf({0, 3, 6, 9})},
      {"halfdim7", pcSetOf({0, 3, 6, 10})},
      {"minMaj7", pcSetOf({0, 3, 7, 11})},
      {"augMaj7", pcSetOf({0, 4, 8, 11})},
  }};
  return chords;
}

std::vector<SeventhChordCell> seventhChordTable() {
  std::vector<SeventhChordCell> table;
  const auto& catalog = exceptionalCatalog();
  for (ExceptionalType t : kAllTypes) {
    for (const auto& chord : tertianSevenths()) {
      table.push_back({t, chord.name, chord.pcs, goldenDecompositions(catalog[t], chord.pcs)});
    }
  }
  return table;
}

std::array<MysticReport, 4> mysticChordAnalysis() {
  std::array<MysticReport, 4> out{};
  const auto& catalog = exceptionalCatalog();
  for (std::size_t i = 0; i < 4; ++i) {
    ExceptionalType t = kAllTypes[i];
    out[i] = {t, goldenDecompositions(catalog[t], kMysticChord)};
  }
  return out;
}

bool generalizedDualCheck(const std::vector<PitchClass>& a, const std::vector<PitchClass>& b,
                          const GoldenStructure& structureA, const GoldenStructure& structureB) {
  if (a.size() != b.size()) throw std::invalid_argument("harmonies must have equal length");
  std::size_t n = a.size();
  if (n < 3) throw std::invalid_argument("golden analysis needs at least three tones");
  if (pcCount(pcSetOf(a)) != static_cast<int>(n) || pcCount(pcSetOf(b)) != static_cast<int>(n)) {
    throw std::invalid_argument("harmonies must not repeat tones");
  }

  // Golden bases of `a` as position-index triples.
  struct PositionBase {
    std::array<std::size_t, 3> idx;
    FigureKind kind;
  };
  std::vector<PositionBase> bases;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        PcSet f = pcSetOf({a[i], a[j], a[k]});
        auto kind = structureA.kindOfMask(f);
        if (kind == FigureKind::Triangle || kind == FigureKind::Gnomon) {
          bases.push_back({{i, j, k}, *kind});
        }
      }
    }
  }

  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::sort(sigma.begin(), sigma.end());
  do {
    for (int m = 0; m < 12; ++m) {
      int altered = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != (b[sigma[i]] + m) % 12) ++altered;
      }
      if (altered > 1) continue;
      bool ok = true;
      for (const auto& base : bases) {
        PcSet g = pcSetOf({b[sigma[base.idx[0]]], b[sigma[base.idx[1]]], b[sigma[base.idx[2]]]});
        auto kind = structureB.kindOfMask(g);
        FigureKind opposite =
            base.kind == FigureKind::Triangle ? FigureKind::Gnomon : FigureKind::Triangle;
        if (kind != opposite) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

std::ostream& operator<<(std::ostream& os, const CombinationShape& s) { return os << s.name(); }

}  // namespace micosa
