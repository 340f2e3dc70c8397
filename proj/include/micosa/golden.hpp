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

#ifndef MICOSA_GOLDEN_HPP_
#define MICOSA_GOLDEN_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "micosa/assignment.hpp"
#include "micosa/pitch.hpp"

namespace micosa {

/// A sub-harmony that is a golden figure in some structure.
struct GoldenBase {
  PcSet pcs;
  FigureKind kind;

  friend bool operator==(const GoldenBase& a, const GoldenBase& b) {
    return a.pcs == b.pcs && a.kind == b.kind;
  }
};

/// The multiset of figure kinds in a decomposition, e.g. two gnomons, or
/// a rectangle plus a triangle.
struct CombinationShape {
  std::uint8_t triangles = 0;
  std::uint8_t gnomons = 0;
  std::uint8_t rectangles = 0;

  friend bool operator==(const CombinationShape&, const CombinationShape&) = default;

  /// gt, gg, gt2, gg2, gt&gg, gr, gr&gt, gr&gg, and size-ordered beyond.
  std::string name() const;

  /// Canonical total order: gt < gg < gt2 < gg2 < gt&gg < gr < gr&gt < gr&gg,
  /// then all remaining shapes by (size, rectangles, triangles) descending
  /// triangle preference.
  int rank() const;
  friend bool operator<(const CombinationShape& a, const CombinationShape& b);

  CombinationShape swapped() const { return {gnomons, triangles, rectangles}; }
};

/// A minimum-cardinality cover of a harmony by golden-base harmonies.
/// Parts are pc-lex sorted; sets of parts, never sequences.
struct GoldenDecomposition {
  std::vector<GoldenBase> parts;

  CombinationShape shape() const;
  friend bool operator==(const GoldenDecomposition& a, const GoldenDecomposition& b) {
    return a.parts == b.parts;
  }
};

/// All golden figures of the structure whose tones lie inside `harmony`.
/// Throws std::invalid_argument when the harmony has fewer than 3 tones.
std::vector<GoldenBase> figuresWithin(const GoldenStructure& structure, PcSet harmony);

/// Every minimum-cardinality cover of the harmony by figures within it,
/// deduplicated and pc-lex ordered. Empty result = golden singular.
/// A harmony that is itself a figure decomposes as that single figure.
std::vector<GoldenDecomposition> goldenDecompositions(const GoldenStructure& structure,
                                                      PcSet harmony);

bool isGoldenSingular(const GoldenStructure& structure, PcSet harmony);

/// Exhaustive scan of all k-tone harmonies; returns the golden-singular
/// ones in pc-lex order. Parallelized over the subsets.
std::vector<PcSet> scanKSubsets(const GoldenStructure& structure, int k);

/// The seven tertian seventh chords rooted at C.
struct SeventhChord {
  const char* name;
  PcSet pcs;
};
const std::array<SeventhChord, 7>& tertianSevenths();

struct SeventhChordCell {
  ExceptionalType type;
  const char* chord;
  PcSet pcs;
  std::vector<GoldenDecomposition> decompositions;  // empty = singular
};

/// Decompositions of every tertian seventh chord on every type.
std::vector<SeventhChordCell> seventhChordTable();

constexpr PcSet kMysticChord = 0x0655;  // C,D,E,F#,A,Bb

struct MysticReport {
  ExceptionalType type;
  std::vector<GoldenDecomposition> decompositions;
};
std::array<MysticReport, 4> mysticChordAnalysis();

/// Generalized major-minor duality test on ordered harmonies.
/// True iff some whole-harmony transposition plus a position permutation
/// turns b into a with at most one tone altered, and under that positional
/// correspondence every golden-base harmony of `a` (in structureA) lands on
/// a golden-base harmony of `b` (in structureB) of the opposite kind.
/// Throws std::invalid_argument on length mismatch or duplicate tones.
bool generalizedDualCheck(const std::vector<PitchClass>& a, const std::vector<PitchClass>& b,
                          const GoldenStructure& structureA, const GoldenStructure& structureB);

std::ostream& operator<<(std::ostream& os, const CombinationShape& s);

}  // namespace micosa

#endif  // MICOSA_GOLDEN_HPP_
