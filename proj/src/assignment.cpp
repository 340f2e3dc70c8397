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

#include "micosa/assignment.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <set>

namespace micosa {

namespace {

PcSet majorTriad(PitchClass root) {
  return static_cast<PcSet>(pcBit(root % 12) | pcBit((root + 4) % 12) | pcBit((root + 7) % 12));
}
PcSet minorTriad(PitchClass root) {
  return static_cast<PcSet>(pcBit(root % 12) | pcBit((root + 3) % 12) | pcBit((root + 7) % 12));
}

constexpr PcSet kDominantSeventh = 0x0491;      // C,E,G,Bb
constexpr PcSet kHalfDiminishedSeventh = 0x0449;  // C,Eb,Gb,Bb

/// A harmony has a golden cover iff each of its tones lies in some golden
/// figure contained in it.
bool coverable(const GoldenStructure& s, PcSet h) {
  PcSet covered = 0;
  for (const auto* list : {&s.triangles, &s.gnomons, &s.rectangles}) {
    for (PcSet f : *list) {
      if ((f & ~h) == 0) covered |= f;
    }
  }
  return (h & ~covered) == 0;
}

}  // namespace

MusicalIcosahedron MusicalIcosahedron::fromMapping(const std::array<std::uint8_t, 12>& toVertex) {
  MusicalIcosahedron a;
  a.toVertex = toVertex;
  std::array<bool, 12> seen{};
  for (PitchClass pc = 0; pc < 12; ++pc) {
    std::uint8_t v = toVertex[static_cast<std::size_t>(pc)];
    if (v >= 12 || seen[v]) throw std::invalid_argument("assignment is not a bijection");
    seen[v] = true;
    a.fromVertex[v] = static_cast<std::uint8_t>(pc);
  }
  return a;
}

VertexSet MusicalIcosahedron::vertexSetOf(PcSet pcs) const {
  VertexSet out = 0;
  for (PitchClass pc = 0; pc < 12; ++pc) {
    if (pcs & pcBit(pc)) out |= vBit(toVertex[static_cast<std::size_t>(pc)]);
  }
  return out;
}

PcSet MusicalIcosahedron::pcSetOf(VertexSet vertices) const {
  PcSet out = 0;
  for (VertexId v = 0; v < 12; ++v) {
    if (vertices & vBit(v)) out |= pcBit(fromVertex[static_cast<std::size_t>(v)]);
  }
  return out;
}

VertexPermutation inducedPermutation(const MusicalIcosahedron& assignment, int interval) {
  int k = ((interval % 12) + 12) % 12;
  VertexPermutation p{};
  for (VertexId v = 0; v < 12; ++v) {
    PitchClass pc = assignment.fromVertex[static_cast<std::size_t>(v)];
    p[static_cast<std::size_t>(v)] = assignment.toVertex[static_cast<std::size_t>((pc + k) % 12)];
  }
  return p;
}

bool hasHexagonSymmetry(const MusicalIcosahedron& assignment) {
  return icosahedron().isSymmetry(inducedPermutation(assignment, 2));
}

bool isGoldenSelfDual(const MusicalIcosahedron& assignment) {
  const auto& topo = icosahedron();
  for (PitchClass root = 0; root < 12; ++root) {
    for (PcSet triad : {majorTriad(root), minorTriad(root)}) {
      TripleShape s = topo.classifyTriple(assignment.vertexSetOf(triad));
      if (s != TripleShape::GoldenTriangle && s != TripleShape::GoldenGnomon) return false;
    }
  }
  return true;
}

std::string nameOf(ExceptionalType t) {
  switch (t) {
    case ExceptionalType::T1: return "1*";
    case ExceptionalType::T2: return "2*";
    case ExceptionalType::T3: return "3*";
    case ExceptionalType::T4: return "4*";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, ExceptionalType t) { return os << nameOf(t); }

ExceptionalType typeFromString(const std::string& s) {
  if (s == "1" || s == "1*" || s == "T1") return ExceptionalType::T1;
  if (s == "2" || s == "2*" || s == "T2") return ExceptionalType::T2;
  if (s == "3" || s == "3*" || s == "T3") return ExceptionalType::T3;
  if (s == "4" || s == "4*" || s == "T4") return ExceptionalType::T4;
  throw std::invalid_argument("unknown exceptional type: '" + s + "'");
}

GoldenStructure makeStructure(ExceptionalType type, const MusicalIcosahedron& rep) {
  const auto& topo = icosahedron();
  GoldenStructure s;
  s.type = type;
  s.representative = rep;
  s.kindTable_.fill(0);
  for (PcSet m = 0; m < 4096; ++m) {
    int n = std::popcount(static_cast<unsigned>(m));
    if (n != 3 && n != 4) continue;
    auto kind = topo.figureKindOfMask(rep.vertexSetOf(m));
    if (!kind) continue;
    s.kindTable_[m] = static_cast<std::uint8_t>(*kind) + 1;
    switch (*kind) {
      case FigureKind::Triangle: s.triangles.push_back(m); break;
      case FigureKind::Gnomon: s.gnomons.push_back(m); break;
      case FigureKind::Rectangle: s.rectangles.push_back(m); break;
    }
  }
  for (auto* list : {&s.triangles, &s.gnomons, &s.rectangles}) {
    std::sort(list->begin(), list->end(), pcLexLess);
  }
  return s;
}

std::optional<FigureKind> GoldenStructure::kindOfMask(PcSet pcs) const {
  std::uint8_t k = kindTable_[pcs & kFullPcSet];
  if (k == 0) return std::nullopt;
  return static_cast<FigureKind>(k - 1);
}

std::optional<FigureKind> GoldenStructure::figureKind(PcSet pcs) const {
  int n = pcCount(pcs);
  if (n != 3 && n != 4) throw std::invalid_argument("figure kind needs a 3- or 4-tone harmony");
  return kindOfMask(pcs);
}

bool GoldenStructure::swappedEquals(const GoldenStructure& other) const {
  return triangles == other.gnomons && gnomons == other.triangles &&
         rectangles == other.rectangles;
}

std::optional<FigureKind> chordFigureKind(const GoldenStructure& structure, PcSet pcs) {
  return structure.figureKind(pcs);
}

namespace {

std::vector<MusicalIcosahedron> enumerateHexagonSymmetric() {
  const auto& topo = icosahedron();
  std::vector<MusicalIcosahedron> out;
  out.reserve(1440);
  for (const auto& op : topo.orderSixTwoCycleOps()) {
    // The two 6-cycles, each started at its smallest vertex.
    std::array<std::array<VertexId, 6>, 2> cycles{};
    std::array<bool, 12> visited{};
    int nc = 0;
    for (VertexId v = 0; v < 12; ++v) {
      if (visited[static_cast<std::size_t>(v)]) continue;
      VertexId w = v;
      for (int i = 0; i < 6; ++i) {
        cycles[static_cast<std::size_t>(nc)][static_cast<std::size_t>(i)] = w;
        visited[static_cast<std::size_t>(w)] = true;
        w = op(w);
      }
      ++nc;
    }
    for (int flip = 0; flip < 2; ++flip) {
      const auto& evens = cycles[static_cast<std::size_t>(flip)];
      const auto& odds = cycles[static_cast<std::size_t>(1 - flip)];
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
          std::array<std::uint8_t, 12> toVertex{};
          for (int k = 0; k < 6; ++k) {
            toVertex[static_cast<std::size_t>(2 * k)] =
                static_cast<std::uint8_t>(evens[static_cast<std::size_t>((i + k) % 6)]);
            toVertex[static_cast<std::size_t>(2 * k + 1)] =
                static_cast<std::uint8_t>(odds[static_cast<std::size_t>((j + k) % 6)]);
          }
          out.push_back(MusicalIcosahedron::fromMapping(toVertex));
        }
      }
    }
  }
  return out;
}

std::vector<MusicalIcosahedron> selfDualSurvivors() {
  auto candidates = enumerateHexagonSymmetric();
  std::vector<std::uint8_t> keep(candidates.size(), 0);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(candidates.size()); ++i) {
    keep[static_cast<std::size_t>(i)] = isGoldenSelfDual(candidates[static_cast<std::size_t>(i)]) ? 1 : 0;
  }
  std::vector<MusicalIcosahedron> survivors;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) survivors.push_back(candidates[i]);
  }
  std::sort(survivors.begin(), survivors.end());
  survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());
  return survivors;
}

template <typename Ops>
std::vector<std::vector<MusicalIcosahedron>> groupByOrbits(
    const std::vector<MusicalIcosahedron>& survivors, const Ops& ops) {
  std::set<std::array<std::uint8_t, 12>> pool;
  for (const auto& a : survivors) pool.insert(a.toVertex);
  std::vector<std::vector<MusicalIcosahedron>> classes;
  for (const auto& a : survivors) {
    if (pool.find(a.toVertex) == pool.end()) continue;
    std::vector<MusicalIcosahedron> members;
    for (const auto& op : ops) {
      std::array<std::uint8_t, 12> mapped{};
      for (std::size_t pc = 0; pc < 12; ++pc) mapped[pc] = static_cast<std::uint8_t>(op(a.toVertex[pc]));
      auto it = pool.find(mapped);
      if (it != pool.end()) {
        members.push_back(MusicalIcosahedron::fromMapping(mapped));
        pool.erase(it);
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

}  // namespace

std::vector<ExceptionalClass> searchExceptional() {
  auto survivors = selfDualSurvivors();
  auto orbits = groupByOrbits(survivors, icosahedron().symmetryGroup());
  std::vector<ExceptionalClass> classes;
  classes.reserve(orbits.size());
  for (auto& members : orbits) {
    ExceptionalClass c;
    c.structure = makeStructure(ExceptionalType::T1, members.front());
    c.members = std::move(members);
    classes.push_back(std::move(c));
  }
  return classes;
}

std::size_t countHexagonSymmetricAssignments() {
  auto all = enumerateHexagonSymmetric();
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all.size();
}

std::size_t countRotationOnlyClasses() {
  auto survivors = selfDualSurvivors();
  std::vector<SymmetryOperation> rotations;
  for (const auto& op : icosahedron().symmetryGroup()) {
    if (op.properRotation) rotations.push_back(op);
  }
  return groupByOrbits(survivors, rotations).size();
}

ExceptionalCatalog labelTypes(const std::vector<ExceptionalClass>& classes) {
  ExceptionalCatalog catalog;
  catalog.classCount = classes.size();
  if (classes.size() < 4) {
    throw labeling_error("expected 4 exceptional classes, found " + std::to_string(classes.size()));
  }

  const PcSet cMajor = majorTriad(0), cMinor = minorTriad(0);
  const PcSet csMajor = majorTriad(1), csMinor = minorTriad(1);
  std::array<int, 4> found = {-1, -1, -1, -1};
  std::string surplus;

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& s = classes[i].structure;
    auto isTri = [&](PcSet h) { return s.kindOfMask(h) == FigureKind::Triangle; };
    auto isGno = [&](PcSet h) { return s.kindOfMask(h) == FigureKind::Gnomon; };
    bool anchored = isTri(cMajor) && isGno(cMinor) && isGno(csMajor) && isTri(csMinor);
    bool dom7Singular = !coverable(s, kDominantSeventh);
    bool halfDimSingular = !coverable(s, kHalfDiminishedSeventh);

    int label = -1;
    if (anchored && dom7Singular && !halfDimSingular) label = 0;        // T1
    else if (anchored && !dom7Singular && halfDimSingular) label = 1;   // T2
    else if (!anchored && !dom7Singular && halfDimSingular) label = 2;  // T3
    else if (!anchored && dom7Singular && !halfDimSingular) label = 3;  // T4
    if (label < 0 || found[static_cast<std::size_t>(label)] >= 0) {
      surplus += std::string(surplus.empty() ? "" : ", ") + "class " + std::to_string(i);
      continue;
    }
    found[static_cast<std::size_t>(label)] = static_cast<int>(i);
  }
  if (!surplus.empty()) {
    throw labeling_error("classes beyond the four labeled types: " + surplus);
  }
  for (int t = 0; t < 4; ++t) {
    if (found[static_cast<std::size_t>(t)] < 0) {
      throw labeling_error(std::string("no class matches type ") +
                           nameOf(static_cast<ExceptionalType>(t)));
    }
  }

  for (int t = 0; t < 4; ++t) {
    const auto& cls = classes[static_cast<std::size_t>(found[static_cast<std::size_t>(t)])];
    catalog.byType[static_cast<std::size_t>(t)] =
        makeStructure(static_cast<ExceptionalType>(t), cls.members.front());
  }

  // T4 and T3 must be the triangle/gnomon swaps of T1 and T2; the seventh
  // chord singularities above already separated the pairs.
  if (!catalog[ExceptionalType::T4].swappedEquals(catalog[ExceptionalType::T1]) ||
      !catalog[ExceptionalType::T3].swappedEquals(catalog[ExceptionalType::T2])) {
    throw labeling_error("swap relations between the labeled types do not hold");
  }
  return catalog;
}

const ExceptionalCatalog& exceptionalCatalog() {
  static const ExceptionalCatalog catalog = [] {
    auto classes = searchExceptional();
    ExceptionalCatalog c = labelTypes(classes);
    c.candidateCount = countHexagonSymmetricAssignments();
    c.survivorCount = 0;
    for (const auto& cls : classes) c.survivorCount += cls.members.size();
    c.classCount = classes.size();
    return c;
  }();
  return catalog;
}

}  // namespace micosa
