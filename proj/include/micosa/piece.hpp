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

#ifndef MICOSA_PIECE_HPP_
#define MICOSA_PIECE_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "micosa/golden.hpp"

namespace micosa {

struct Measure {
  int number;
  PcSet pcs;
};

struct Piece {
  std::string title;
  std::vector<Measure> measures;
};

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class analysis_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a corpus document. Plain text: one measure per line in the form
/// "<number>: <tone> <tone> ...", '#' starts a comment ("# title: ..."
/// names the piece). A document whose first character is '{' is read as
/// JSON: {"title": ..., "measures": [{"measure": n, "tones": [...]}]}.
/// Measure numbers must be strictly increasing, measures need at least
/// three distinct tones; violations raise parse_error with the line.
Piece loadPiece(const std::string& document);

/// The measure-by-measure harmonies of BWV 846 (Bach, Prelude in C major).
/// 34 measures; measure 30 has no catalogued harmony and is absent.
const Piece& bwv846Corpus();

struct MeasureAnalysis {
  int measureNumber;
  PcSet pcs;
  GoldenDecomposition chosen;
  CombinationShape shape;
  int alternatives;  // number of minimum decompositions of this measure
};

struct PieceSummary {
  std::vector<std::pair<CombinationShape, int>> histogram;  // shape-rank order
  int distinctShapes = 0;
};

/// Per-measure golden analysis on one type. Every measure gets one of its
/// minimum decompositions, chosen so the number of distinct combination
/// shapes across the piece is globally minimum (exact search over shape
/// subsets in increasing size; ties broken by the canonical shape order,
/// then per measure by the first decomposition in enumeration order).
/// Throws analysis_error naming the first singular measure.
std::pair<std::vector<MeasureAnalysis>, PieceSummary> analyzePiece(const Piece& piece,
                                                                   ExceptionalType type);

struct MeasureDuality {
  int measureNumber;
  bool swapConsistent;  // T3 choice equals the T2 choice with kinds swapped
};

struct DualityReport {
  std::vector<MeasureDuality> measures;
  bool allConsistent = false;
};

/// Compares the analyses of the piece on types 2* and 3* measure by
/// measure: the chosen decompositions must coincide up to the
/// triangle/gnomon swap (rectangles fixed).
DualityReport dualityReport(const Piece& piece);

}  // namespace micosa

#endif  // MICOSA_PIECE_HPP_
