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

#include "micosa/neo.hpp"

#include <algorithm>
#include <array>
#include <ostream>

namespace micosa {

PcSet Triad::pcs() const {
  int third = quality == Quality::Major ? 4 : 3;
  return static_cast<PcSet>(pcBit(root % 12) | pcBit((root + third) % 12) |
                            pcBit((root + 7) % 12));
}

std::string Triad::name() const {
  return toneName(root) + std::string(quality == Quality::Major ? " major" : " minor");
}

Triad applyTransform(const Triad& t, TransformKind k) {
  bool major = t.quality == Quality::Major;
  switch (k) {
    case TransformKind::P:
      return {t.root, major ? Quality::Minor : Quality::Major};
    case TransformKind::R:
      return major ? Triad{(t.root + 9) % 12, Quality::Minor}
                   : Triad{(t.root + 3) % 12, Quality::Major};
    case TransformKind::L:
      return major ? Triad{(t.root + 4) % 12, Quality::Minor}
                   : Triad{(t.root + 8) % 12, Quality::Major};
    case TransformKind::D:
      return {(t.root + 5) % 12, major ? Quality::Minor : Quality::Major};
  }
  throw std::invalid_argument("unknown transform");
}

namespace {

/// Triad with the given pitch-class set, if any.
std::optional<Triad> triadOf(PcSet pcs) {
  for (PitchClass root = 0; root < 12; ++root) {
    if (Triad{root, Quality::Major}.pcs() == pcs) return Triad{root, Quality::Major};
    if (Triad{root, Quality::Minor}.pcs() == pcs) return Triad{root, Quality::Minor};
  }
  return std::nullopt;
}

constexpr std::array<NeighborhoodMode, 3> kModes = {
    NeighborhoodMode::ApexShared, NeighborhoodMode::SEdgePentagon,
    NeighborhoodMode::LEdgePentagon};

}  // namespace

TransformRealization realizeTransformViaNeighborhood(ExceptionalType type, const Triad& t,
                                                     TransformKind k) {
  if (k != TransformKind::P && k != TransformKind::R) {
    throw std::invalid_argument("only P and R are realized through golden neighborhoods");
  }
  const auto& topo = icosahedron();
  const auto& structure = exceptionalCatalog()[type];
  const auto& assignment = structure.representative;

  Triad target = applyTransform(t, k);
  PcSet targetPcs = target.pcs();
  const GoldenFigure& sourceFigure = topo.figureOfMask(assignment.vertexSetOf(t.pcs()));

  TransformRealization found{};
  int hits = 0;
  for (NeighborhoodMode mode : kModes) {
    auto pair = topo.goldenNeighborhood(sourceFigure, mode);
    std::array<PcSet, 2> pcs = {assignment.pcSetOf(pair[0].vertices),
                                assignment.pcSetOf(pair[1].vertices)};
    for (int i = 0; i < 2; ++i) {
      if (pcs[static_cast<std::size_t>(i)] != targetPcs) continue;
      PcSet other = pcs[static_cast<std::size_t>(1 - i)];
      found = {t,
               target,
               k,
               mode,
               {t.pcs(), sourceFigure.kind},
               {targetPcs, pair[static_cast<std::size_t>(i)].kind},
               other,
               triadOf(other).has_value()};
      ++hits;
    }
  }
  if (hits == 0) {
    throw realization_error("no golden neighborhood mode realizes " + t.name() + " -> " +
                            target.name() + " on type " + nameOf(type));
  }
  if (hits > 1) {
    throw realization_error("ambiguous realization of " + t.name() + " on type " +
                            nameOf(type));
  }
  if (found.companionIsTriad) {
    throw realization_error("realizing pair for " + t.name() +
                            " contains a second major/minor triad");
  }
  return found;
}

bool verifyLViaRotation(ExceptionalType type, const Triad& t) {
  const auto& topo = icosahedron();
  const auto& assignment = exceptionalCatalog()[type].representative;
  VertexSet after = assignment.vertexSetOf(applyTransform(t, TransformKind::P).pcs());
  VertexSet want = assignment.vertexSetOf(applyTransform(t, TransformKind::L).pcs());
  for (const auto& op : topo.rotationsOfOrder3()) {
    if (op.apply(after) == want) return true;
  }
  return false;
}

ReachabilityReport triadReachabilityGraph(ExceptionalType type) {
  auto nodeId = [](const Triad& t) {
    return t.root * 2 + (t.quality == Quality::Minor ? 1 : 0);
  };
  std::array<std::vector<int>, 24> adj{};
  int edges = 0;
  auto link = [&](int a, int b) {
    if (std::find(adj[static_cast<std::size_t>(a)].begin(), adj[static_cast<std::size_t>(a)].end(), b) !=
        adj[static_cast<std::size_t>(a)].end()) {
      return;
    }
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
    ++edges;
  };
  for (PitchClass root = 0; root < 12; ++root) {
    for (Quality q : {Quality::Major, Quality::Minor}) {
      Triad t{root, q};
      for (TransformKind k : {TransformKind::P, TransformKind::R}) {
        link(nodeId(t), nodeId(realizeTransformViaNeighborhood(type, t, k).result));
      }
      link(nodeId(t), nodeId(Triad{(root + 2) % 12, q}));
    }
  }
  std::array<bool, 24> seen{};
  std::vector<int> stack = {0};
  seen[0] = true;
  int visited = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++visited;
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        stack.push_back(y);
      }
    }
  }
  return {24, edges, visited == 24};
}

std::vector<RealizationTableRow> realizationTable(ExceptionalType type) {
  std::vector<RealizationTableRow> rows;
  for (int parity = 0; parity < 2; ++parity) {
    for (Quality q : {Quality::Major, Quality::Minor}) {
      for (TransformKind k : {TransformKind::P, TransformKind::R}) {
        Triad example{parity, q};
        auto real = realizeTransformViaNeighborhood(type, example, k);
        // The mode is a function of parity alone inside one type; checked
        // across all roots by the tests.
        rows.push_back({parity, q, k, real.mode, example, real.result});
      }
    }
  }
  return rows;
}

std::string nameOf(TransformKind k) {
  switch (k) {
    case TransformKind::P: return "P";
    case TransformKind::R: return "R";
    case TransformKind::L: return "L";
    case TransformKind::D: return "D";
  }
  return "?";
}

std::string nameOf(Quality q) { return q == Quality::Major ? "major" : "minor"; }

std::ostream& operator<<(std::ostream& os, TransformKind k) { return os << nameOf(k); }
std::ostream& operator<<(std::ostream& os, Quality q) { return os << nameOf(q); }

}  // namespace micosa
