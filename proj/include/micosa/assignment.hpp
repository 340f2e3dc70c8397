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

#ifndef MICOSA_ASSIGNMENT_HPP_
#define MICOSA_ASSIGNMENT_HPP_

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "micosa/icosahedron.hpp"
#include "micosa/pitch.hpp"

namespace micosa {

/// A bijection of the 12 pitch classes onto the 12 vertices.
struct MusicalIcosahedron {
  std::array<std::uint8_t, 12> toVertex{};
  std::array<std::uint8_t, 12> fromVertex{};

  static MusicalIcosahedron fromMapping(const std::array<std::uint8_t, 12>& toVertex);

  VertexId vertexOf(PitchClass pc) const { return toVertex[static_cast<std::size_t>(pc)]; }
  PitchClass pitchOf(VertexId v) const { return fromVertex[static_cast<std::size_t>(v)]; }

  VertexSet vertexSetOf(PcSet pcs) const;
  PcSet pcSetOf(VertexSet vertices) const;

  friend bool operator==(const MusicalIcosahedron& a, const MusicalIcosahedron& b) {
    return a.toVertex == b.toVertex;
  }
  friend bool operator<(const MusicalIcosahedron& a, const MusicalIcosahedron& b) {
    return a.toVertex < b.toVertex;
  }
};

/// Vertex permutation induced by transposition: v -> vertex(pitch(v) + interval).
VertexPermutation inducedPermutation(const MusicalIcosahedron& assignment, int interval);

/// True iff transposition by two semitones acts as an icosahedral symmetry.
bool hasHexagonSymmetry(const MusicalIcosahedron& assignment);

/// True iff every major and minor triad maps onto a golden triangle or gnomon.
bool isGoldenSelfDual(const MusicalIcosahedron& assignment);

/// The four exceptional assignment families.
enum class ExceptionalType : std::uint8_t { T1, T2, T3, T4 };

constexpr std::array<ExceptionalType, 4> kAllTypes = {ExceptionalType::T1, ExceptionalType::T2,
                                                      ExceptionalType::T3, ExceptionalType::T4};

std::string nameOf(ExceptionalType t);
std::ostream& operator<<(std::ostream& os, ExceptionalType t);
ExceptionalType typeFromString(const std::string& s);

/// The pitch-class-level view of one exceptional family: which triples map
/// to golden triangles/gnomons and which quadruples to golden rectangles.
/// Identical for every representative of the family.
struct GoldenStructure {
  ExceptionalType type;
  std::vector<PcSet> triangles;   // 60, pc-lex sorted
  std::vector<PcSet> gnomons;     // 60
  std::vector<PcSet> rectangles;  // 15
  MusicalIcosahedron representative;

  /// Figure kind for a 3- or 4-tone harmony, nullopt when it is none.
  /// Throws std::invalid_argument for other sizes.
  std::optional<FigureKind> figureKind(PcSet pcs) const;

  /// Kind lookup without the arity guard; any mask, nullopt when not golden.
  std::optional<FigureKind> kindOfMask(PcSet pcs) const;

  bool swappedEquals(const GoldenStructure& other) const;

 private:
  friend GoldenStructure makeStructure(ExceptionalType, const MusicalIcosahedron&);
  std::array<std::uint8_t, 4096> kindTable_{};  // 0 none, else FigureKind+1
};

GoldenStructure makeStructure(ExceptionalType type, const MusicalIcosahedron& representative);

/// One symmetry-equivalence class of exceptional assignments.
struct ExceptionalClass {
  std::vector<MusicalIcosahedron> members;  // sorted; members.front() is canonical
  GoldenStructure structure;                // type tag is meaningless until labeled
};

/// Enumerates every hexagon-symmetric assignment (1,440 of them: each
/// order-6 two-6-cycle symmetry carries the even pitch classes around one
/// cycle and the odd ones around the other), keeps the golden self-dual
/// ones, and groups them by the 120-element symmetry group. Deterministic:
/// classes are ordered by their smallest member.
std::vector<ExceptionalClass> searchExceptional();

/// Same survivors grouped by proper rotations only (informational).
std::size_t countRotationOnlyClasses();

/// Number of hexagon-symmetric assignments the search enumerates.
std::size_t countHexagonSymmetricAssignments();

class labeling_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExceptionalCatalog {
  std::array<GoldenStructure, 4> byType;  // indexed by ExceptionalType
  std::size_t candidateCount = 0;
  std::size_t survivorCount = 0;
  std::size_t classCount = 0;

  const GoldenStructure& operator[](ExceptionalType t) const {
    return byType[static_cast<std::size_t>(t)];
  }
};

/// Labels the classes from searchExceptional:
///   T1/T2: the C major triad is a golden triangle, the C minor triad a
///          golden gnomon; T1 is the one where the dominant seventh chord
///          has no golden cover, T2 the one where the half-diminished does
///          not. T4 and T3 are the triangle/gnomon swaps of T1 and T2.
/// Throws labeling_error when the classes do not fit this scheme; surplus
/// classes beyond the four labeled ones are reported in the message.
ExceptionalCatalog labelTypes(const std::vector<ExceptionalClass>& classes);

/// Cached derive-once catalog (search + labeling).
const ExceptionalCatalog& exceptionalCatalog();

std::optional<FigureKind> chordFigureKind(const GoldenStructure& structure, PcSet pcs);

}  // namespace micosa

#endif  // MICOSA_ASSIGNMENT_HPP_
