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

#include "micosa/piece.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace micosa {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Piece parseText(const std::string& document) {
  Piece piece;
  piece.title = "untitled";
  std::istringstream in(document);
  std::string line;
  int lineNo = 0;
  int lastMeasure = -1;
  while (std::getline(in, line)) {
    ++lineNo;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string body = trim(t.substr(1));
      if (body.rfind("title:", 0) == 0) piece.title = trim(body.substr(6));
      continue;
    }
    std::size_t colon = t.find(':');
    if (colon == std::string::npos) {
      throw parse_error("line " + std::to_string(lineNo) + ": expected '<measure>: <tones>'");
    }
    int number = 0;
    try {
      std::size_t used = 0;
      number = std::stoi(t.substr(0, colon), &used);
      if (trim(t.substr(0, colon)).size() != used) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw parse_error("line " + std::to_string(lineNo) + ": bad measure number '" +
                        t.substr(0, colon) + "'");
    }
    if (number <= lastMeasure) {
      throw parse_error("line " + std::to_string(lineNo) + ": measure " + std::to_string(number) +
                        " is not strictly increasing");
    }
    lastMeasure = number;
    PcSet pcs = 0;
    std::istringstream tones(t.substr(colon + 1));
    std::string tone;
    while (tones >> tone) {
      PitchClass pc;
      try {
        pc = parseToneName(tone);
      } catch (const std::exception&) {
        throw parse_error("line " + std::to_string(lineNo) + " (measure " +
                          std::to_string(number) + "): unknown tone name '" + tone + "'");
      }
      if (pcs & pcBit(pc)) {
        throw parse_error("line " + std::to_string(lineNo) + " (measure " +
                          std::to_string(number) + "): duplicate tone '" + tone + "'");
      }
      pcs |= pcBit(pc);
    }
    if (pcCount(pcs) < 3) {
      throw parse_error("line " + std::to_string(lineNo) + " (measure " + std::to_string(number) +
                        "): a measure needs at least three distinct tones");
    }
    piece.measures.push_back({number, pcs});
  }
  if (piece.measures.empty()) throw parse_error("document has no measures");
  return piece;
}

Piece parseJson(const std::string& document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad JSON corpus: ") + e.what());
  }
  Piece piece;
  piece.title = doc.value("title", "untitled");
  if (!doc.contains("measures") || !doc["measures"].is_array()) {
    throw parse_error("JSON corpus needs a 'measures' array");
  }
  int lastMeasure = -1;
  for (const auto& m : doc["measures"]) {
    int number = m.value("measure", -1);
    if (number <= lastMeasure) {
      throw parse_error("measure " + std::to_string(number) + " is not strictly increasing");
    }
    lastMeasure = number;
    PcSet pcs = 0;
    for (const auto& tone : m.value("tones", nlohmann::json::array())) {
      PitchClass pc = parseToneName(tone.get<std::string>());
      if (pcs & pcBit(pc)) {
        throw parse_error("measure " + std::to_string(number) + ": duplicate tone '" +
                          tone.get<std::string>() + "'");
      }
      pcs |= pcBit(pc);
    }
    if (pcCount(pcs) < 3) {
      throw parse_error("measure " + std::to_string(number) +
                        ": a measure needs at least three distinct tones");
    }
    piece.measures.push_back({number, pcs});
  }
  if (piece.measures.empty()) throw parse_error("document has no measures");
  return piece;
}

constexpr const char* kBwv846 = R"(# title: J.S. Bach, Prelude in C major, BWV 846
# One harmony per measure; measure 30 is not catalogued.
1: C E G
2: D F A C
3: G B D F
4: C E G
5: A C E
6: D F# A C
7: G B D F
8: C E G B
9: C E G A
10: D F# A C
11: G B D
12: C# E G Bb
13: D F A
14: D F Ab B
15: C E G
16: F A C E
17: D F A C
18: G B D F
19: C E G
20: C E G Bb
21: F A C E
22: C Eb F# A
23: D F Ab B C
24: G B D F
25: C E G
26: C D F G
27: G B D F
28: C Eb F# G A
29: C E G
31: G B D F
32: C E G Bb
33: D F A C
34: C D E F G B
35: C E G
)";

}  // namespace

Piece loadPiece(const std::string& document) {
  std::string t = trim(document);
  if (t.empty()) throw parse_error("document is empty");
  return t[0] == '{' ? parseJson(document) : parseText(document);
}

const Piece& bwv846Corpus() {
  static const Piece piece = loadPiece(kBwv846);
  return piece;
}

std::pair<std::vector<MeasureAnalysis>, PieceSummary> analyzePiece(const Piece& piece,
                                                                   ExceptionalType type) {
  const auto& structure = exceptionalCatalog()[type];

  struct MeasureOptions {
    int number;
    PcSet pcs;
    std::vector<GoldenDecomposition> optima;
    std::vector<CombinationShape> shapes;  // aligned with optima
  };
  std::vector<MeasureOptions> options(piece.measures.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(piece.measures.size()); ++i) {
    const Measure& m = piece.measures[static_cast<std::size_t>(i)];
    auto& opt = options[static_cast<std::size_t>(i)];
    opt.number = m.number;
    opt.pcs = m.pcs;
    opt.optima = goldenDecompositions(structure, m.pcs);
    for (const auto& d : opt.optima) opt.shapes.push_back(d.shape());
  }
  for (const auto& opt : options) {
    if (opt.optima.empty()) {
      throw analysis_error("measure " + std::to_string(opt.number) + " (" + pcSetName(opt.pcs) +
                           ") is golden singular on type " + nameOf(type) +
                           "; the golden analysis does not apply");
    }
  }

  // Shape universe across all optima, in canonical shape order.
  std::set<CombinationShape> universeSet;
  for (const auto& opt : options) universeSet.insert(opt.shapes.begin(), opt.shapes.end());
  std::vector<CombinationShape> universe(universeSet.begin(), universeSet.end());

  auto feasible = [&](const std::vector<CombinationShape>& allowed) {
    for (const auto& opt : options) {
      bool any = false;
      for (const auto& s : opt.shapes) {
        if (std::find(allowed.begin(), allowed.end(), s) != allowed.end()) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
    return true;
  };

  // Smallest feasible shape subset; subsets of one size are visited in
  // lexicographic order over the canonical ordering, so the first hit is
  // the canonical tie-break winner.
  std::vector<CombinationShape> chosenShapes;
  for (std::size_t size = 1; size <= universe.size() && chosenShapes.empty(); ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<CombinationShape> sub;
      for (std::size_t i : idx) sub.push_back(universe[i]);
      if (feasible(sub)) {
        chosenShapes = sub;
        break;
      }
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == universe.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::vector<MeasureAnalysis> rows;
  std::map<CombinationShape, int> hist;
  for (const auto& opt : options) {
    std::size_t pick = 0;
    while (std::find(chosenShapes.begin(), chosenShapes.end(), opt.shapes[pick]) ==
           chosenShapes.end()) {
      ++pick;
    }
    rows.push_back({opt.number, opt.pcs, opt.optima[pick], opt.shapes[pick],
                    static_cast<int>(opt.optima.size())});
    ++hist[opt.shapes[pick]];
  }
  PieceSummary summary;
  for (const auto& [shape, count] : hist) summary.histogram.emplace_back(shape, count);
  summary.distinctShapes = static_cast<int>(summary.histogram.size());
  return {std::move(rows), summary};
}

DualityReport dualityReport(const Piece& piece) {
  auto [rows2, sum2] = analyzePiece(piece, ExceptionalType::T2);
  auto [rows3, sum3] = analyzePiece(piece, ExceptionalType::T3);
  DualityReport report;
  report.allConsistent = true;
  for (std::size_t i = 0; i < rows2.size(); ++i) {
    GoldenDecomposition swapped = rows2[i].chosen;
    for (auto& part : swapped.parts) {
      if (part.kind == FigureKind::Triangle) {
        part.kind = FigureKind::Gnomon;
      } else if (part.kind == FigureKind::Gnomon) {
        part.kind = FigureKind::Triangle;
      }
    }
    bool ok = swapped == rows3[i].chosen;
    report.measures.push_back({rows2[i].measureNumber, ok});
    report.allConsistent = report.allConsistent && ok;
  }
  return report;
}

}  // namespace micosa
