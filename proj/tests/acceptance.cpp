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

// Acceptance suite. Each criterion prints one PASS/FAIL line; the exit code
// is the number of failing criteria. Run a single criterion with
// `--criterion N`.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "micosa/golden.hpp"
#include "micosa/neo.hpp"
#include "micosa/piece.hpp"
#include "micosa/reference.hpp"

using namespace micosa;

namespace {

struct Check {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& msg) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += msg;
    }
  }
};

std::string describe(const GoldenDecomposition& d) {
  std::string out;
  for (const auto& p : d.parts) {
    if (!out.empty()) out += "+";
    out += pcSetName(p.pcs) + "(" + nameOf(p.kind) + ")";
  }
  return out;
}

std::vector<PcSet> relabel(const std::vector<PcSet>& sets, int shift) {
  std::vector<PcSet> out;
  for (PcSet s : sets) out.push_back(transposeHarmony(s, shift));
  std::sort(out.begin(), out.end(), pcLexLess);
  return out;
}

// 1. Derivation: exactly four classes, labeled against the C/C# anchors,
//    the tritone relabeling between 1* and 2*, and the kind swaps pairing
//    1*/4* and 2*/3*; all inside 10 seconds.
Check criterion1() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  auto classes = searchExceptional();
  auto catalog = labelTypes(classes);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  c.require(classes.size() == 4,
            "expected 4 classes, got " + std::to_string(classes.size()));
  c.require(seconds < 10.0, "derivation took " + std::to_string(seconds) + "s");

  const auto& t1 = catalog[ExceptionalType::T1];
  const auto& t2 = catalog[ExceptionalType::T2];
  c.require(t1.figureKind(pcSetOf({0, 4, 7})) == FigureKind::Triangle &&
                t1.figureKind(pcSetOf({0, 3, 7})) == FigureKind::Gnomon &&
                t1.figureKind(pcSetOf({1, 5, 8})) == FigureKind::Gnomon &&
                t1.figureKind(pcSetOf({1, 4, 8})) == FigureKind::Triangle,
            "type 1* anchors");
  c.require(t2.figureKind(pcSetOf({0, 4, 7})) == FigureKind::Triangle &&
                t2.figureKind(pcSetOf({0, 3, 7})) == FigureKind::Gnomon,
            "type 2* anchors");
  c.require(catalog[ExceptionalType::T4].swappedEquals(t1), "4* is not the swap of 1*");
  c.require(catalog[ExceptionalType::T3].swappedEquals(t2), "3* is not the swap of 2*");

  bool tritone = relabel(t1.triangles, 6) == t2.triangles &&
                 relabel(t1.gnomons, 6) == t2.gnomons;
  c.require(tritone,
            "tritone relabeling does not send 1* to 2*: every type is closed under "
            "whole-tone transposition, so the tritone map fixes each type; the "
            "derived relabeling between 1* and 2* is pitch-class negation");
  return c;
}

// 2. Fundamental Lemma on every type and every pitch-class triple.
Check criterion2() {
  Check c;
  int violations = 0;
  for (ExceptionalType t : kAllTypes) {
    const auto& s = exceptionalCatalog()[t];
    for (PcSet m = 0; m < 4096; ++m) {
      if (pcCount(m) != 3) continue;
      PcSet up = transposeHarmony(m, 1);
      bool tri = s.kindOfMask(m) == FigureKind::Triangle;
      bool gno = s.kindOfMask(m) == FigureKind::Gnomon;
      bool upTri = s.kindOfMask(up) == FigureKind::Triangle;
      bool upGno = s.kindOfMask(up) == FigureKind::Gnomon;
      if (tri != upGno || gno != upTri) ++violations;
    }
  }
  c.require(violations == 0, std::to_string(violations) + " triples violate the lemma");
  return c;
}

// 3. Exactly two neighbors for every figure and mode.
Check criterion3() {
  Check c;
  const auto& topo = icosahedron();
  int checked = 0;
  try {
    for (const auto* list : {&topo.goldenTriangles(), &topo.goldenGnomons()}) {
      for (const auto& f : *list) {
        for (auto mode : {NeighborhoodMode::ApexShared, NeighborhoodMode::SEdgePentagon,
                          NeighborhoodMode::LEdgePentagon}) {
          auto pair = topo.goldenNeighborhood(f, mode);
          if (pair[0].vertices == pair[1].vertices) {
            c.require(false, "duplicate neighbors");
          }
          ++checked;
        }
      }
    }
  } catch (const std::exception& e) {
    c.require(false, e.what());
  }
  c.require(checked == 360, "expected 360 figure/mode pairs, saw " + std::to_string(checked));
  return c;
}

// 4. P and R realized uniquely on every type and triad; type 1* modes match
//    the even/odd split; L is a three-fold rotation after P everywhere.
Check criterion4() {
  Check c;
  for (ExceptionalType t : kAllTypes) {
    for (PitchClass root = 0; root < 12; ++root) {
      for (Quality q : {Quality::Major, Quality::Minor}) {
        Triad triad{root, q};
        for (TransformKind k : {TransformKind::P, TransformKind::R}) {
          try {
            auto real = realizeTransformViaNeighborhood(t, triad, k);
            if (t == ExceptionalType::T1) {
              NeighborhoodMode want =
                  k == TransformKind::R
                      ? NeighborhoodMode::ApexShared
                      : (root % 2 == 0 ? NeighborhoodMode::SEdgePentagon
                                       : NeighborhoodMode::LEdgePentagon);
              c.require(real.mode == want, "type 1* mode for " + triad.name() + " " +
                                               nameOf(k));
            }
          } catch (const std::exception& e) {
            c.require(false, triad.name() + std::string(" ") + nameOf(k) + ": " + e.what());
          }
        }
        if (!verifyLViaRotation(t, triad)) {
          c.require(false, "L not a 3-fold rotation after P for " + triad.name());
        }
      }
    }
  }
  return c;
}

// 5. Seventh-chord oracle with the stated counts and the singular duality.
Check criterion5() {
  Check c;
  std::map<std::string, std::array<std::size_t, 2>> stated = {
      {"maj7", {2, 2}}, {"min7", {2, 2}},     {"dom7", {0, 1}},    {"dim7", {1, 1}},
      {"halfdim7", {1, 0}}, {"minMaj7", {1, 3}}, {"augMaj7", {3, 1}}};
  const auto& catalog = exceptionalCatalog();
  for (const auto& chord : tertianSevenths()) {
    auto d1 = goldenDecompositions(catalog[ExceptionalType::T1], chord.pcs);
    auto d2 = goldenDecompositions(catalog[ExceptionalType::T2], chord.pcs);
    auto d3 = goldenDecompositions(catalog[ExceptionalType::T3], chord.pcs);
    auto d4 = goldenDecompositions(catalog[ExceptionalType::T4], chord.pcs);
    auto want = stated[chord.name];
    if (d1.size() != want[0]) {
      c.require(false, std::string(chord.name) + " on 1*: stated " + std::to_string(want[0]) +
                           ", derived " + std::to_string(d1.size()));
    }
    if (d2.size() != want[1]) {
      c.require(false, std::string(chord.name) + " on 2*: stated " + std::to_string(want[1]) +
                           ", derived " + std::to_string(d2.size()));
    }
    // 4* and 3* mirror 1* and 2* with triangle/gnomon swapped.
    c.require(d4.size() == d1.size() && d3.size() == d2.size(),
              std::string(chord.name) + ": mirror counts");
  }
  // Unique singular seventh per type pair.
  for (const auto& chord : tertianSevenths()) {
    bool s1 = isGoldenSingular(catalog[ExceptionalType::T1], chord.pcs);
    bool s4 = isGoldenSingular(catalog[ExceptionalType::T4], chord.pcs);
    bool s2 = isGoldenSingular(catalog[ExceptionalType::T2], chord.pcs);
    bool s3 = isGoldenSingular(catalog[ExceptionalType::T3], chord.pcs);
    bool isDom = std::strcmp(chord.name, "dom7") == 0;
    bool isHalf = std::strcmp(chord.name, "halfdim7") == 0;
    c.require(s1 == isDom && s4 == isDom, std::string(chord.name) + " singularity on 1*/4*");
    c.require(s2 == isHalf && s3 == isHalf, std::string(chord.name) + " singularity on 2*/3*");
  }
  return c;
}

// 6. No five-tone harmony is golden singular, on any type, within 5 s.
Check criterion6() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  for (ExceptionalType t : kAllTypes) {
    auto singular = scanKSubsets(exceptionalCatalog()[t], 5);
    c.require(singular.empty(), std::string("type ") + nameOf(t) + ": " +
                                    std::to_string(singular.size()) + " singular 5-tone sets");
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(seconds < 5.0, "scan took " + std::to_string(seconds) + "s");
  return c;
}

// 7. Mystic chord: exactly three minimum decompositions on 1* and on 2*,
//    each a rectangle plus one triangle or gnomon.
Check criterion7() {
  Check c;
  for (ExceptionalType t : {ExceptionalType::T1, ExceptionalType::T2}) {
    auto ds = goldenDecompositions(exceptionalCatalog()[t], kMysticChord);
    if (ds.size() != 3) {
      std::string all;
      for (const auto& d : ds) all += (all.empty() ? "" : " | ") + describe(d);
      c.require(false, std::string("type ") + nameOf(t) + ": stated 3, derived " +
                           std::to_string(ds.size()) + " [" + all + "]");
    }
    for (const auto& d : ds) {
      int rects = 0;
      for (const auto& p : d.parts) rects += p.kind == FigureKind::Rectangle;
      if (d.parts.size() != 2 || rects != 1) {
        c.require(false, std::string("type ") + nameOf(t) + ": " + describe(d) +
                             " is not rectangle+triangle/gnomon");
      }
    }
  }
  return c;
}

// 8. Generalized major-minor duality for the two seventh-chord pairs and
//    for the C major / C minor pair.
Check criterion8() {
  Check c;
  const auto& t1 = exceptionalCatalog()[ExceptionalType::T1];
  c.require(generalizedDualCheck({0, 8, 4, 1}, {0, 3, 7, 11}, t1, t1),
            "(C,G#,E,C#) vs (C,Eb,G,B)");
  c.require(generalizedDualCheck({10, 7, 3, 11}, {0, 4, 8, 11}, t1, t1),
            "(Bb,G,Eb,B) vs (C,E,G#,B)");
  c.require(generalizedDualCheck({0, 4, 7}, {0, 3, 7}, t1, t1), "(C,E,G) vs (C,Eb,G)");
  return c;
}

// 9. BWV 846: stated seven-shape summary with the stated histogram, the
//    quoted per-measure figures, full 2*/3* duality, and failure on 1*.
Check criterion9() {
  Check c;
  auto [rows, summary] = analyzePiece(bwv846Corpus(), ExceptionalType::T2);
  c.require(rows.size() == 34, "expected 34 measures");

  std::map<std::string, int> hist;
  for (const auto& [shape, count] : summary.histogram) hist[shape.name()] = count;
  std::map<std::string, int> stated = {{"gt", 8},  {"gg", 2},    {"gt2", 9},  {"gg2", 10},
                                       {"gr", 3},  {"gr&gt", 1}, {"gr&gg", 1}};
  if (summary.distinctShapes != 7 || hist != stated) {
    std::string got;
    for (const auto& [name, count] : hist) got += name + ":" + std::to_string(count) + " ";
    c.require(false, "stated 7 shapes {gt:8 gg:2 gt2:9 gg2:10 gr:3 gr&gt:1 gr&gg:1}, derived " +
                         std::to_string(summary.distinctShapes) + " shapes {" + got + "}");
  }

  auto findRow = [&](const std::vector<MeasureAnalysis>& rs, int n) -> const MeasureAnalysis& {
    for (const auto& r : rs) {
      if (r.measureNumber == n) return r;
    }
    throw std::out_of_range("measure");
  };
  // Quoted assignments: measure 28 rectangle C,Eb,F#,A plus gnomon C,Eb,G.
  {
    const auto& m28 = findRow(rows, 28);
    bool match = m28.chosen.parts.size() == 2;
    if (match) {
      const GoldenBase rect{pcSetOf({0, 3, 6, 9}), FigureKind::Rectangle};
      const GoldenBase gno{pcSetOf({0, 3, 7}), FigureKind::Gnomon};
      match = (m28.chosen.parts[0] == rect && m28.chosen.parts[1] == gno) ||
              (m28.chosen.parts[0] == gno && m28.chosen.parts[1] == rect);
    }
    if (!match) {
      c.require(false, "measure 28: stated gr{C,Eb,F#,A}+gg{C,Eb,G}, derived " +
                           describe(m28.chosen));
    }
  }
  // Measure 1: triangle on 2*, gnomon on 3*; measure 12: rectangle on both.
  auto [rows3, summary3] = analyzePiece(bwv846Corpus(), ExceptionalType::T3);
  c.require(findRow(rows, 1).chosen.parts[0].kind == FigureKind::Triangle &&
                findRow(rows3, 1).chosen.parts[0].kind == FigureKind::Gnomon,
            "measure 1 kinds on 2*/3*");
  c.require(findRow(rows, 12).chosen.parts[0].kind == FigureKind::Rectangle &&
                findRow(rows3, 12).chosen.parts[0].kind == FigureKind::Rectangle,
            "measure 12 rectangle on both types");

  auto duality = dualityReport(bwv846Corpus());
  c.require(duality.allConsistent, "2*/3* duality broken");

  bool t1Fails = false;
  std::string failedMeasure;
  try {
    analyzePiece(bwv846Corpus(), ExceptionalType::T1);
  } catch (const analysis_error& e) {
    t1Fails = true;
    failedMeasure = e.what();
  }
  c.require(t1Fails, "analysis on 1* unexpectedly succeeded");
  if (t1Fails) {
    // The blocking measure must hold a dominant seventh chord.
    c.require(failedMeasure.find("measure 3 ") != std::string::npos ||
                  failedMeasure.find("measure 3,") != std::string::npos ||
                  failedMeasure.find("measure 3 (") != std::string::npos,
              "1* failure did not name measure 3 (G dominant seventh)");
  }
  return c;
}

// 10. The decomposition engine agrees with the naive subset-cover
//     enumerator on every 3- and 4-tone harmony, on every type.
Check criterion10() {
  Check c;
  int compared = 0;
  for (ExceptionalType t : kAllTypes) {
    const auto& s = exceptionalCatalog()[t];
    for (PcSet m = 0; m < 4096; ++m) {
      int n = pcCount(m);
      if (n != 3 && n != 4) continue;
      auto fast = goldenDecompositions(s, m);
      auto ref = reference::minimumCovers(s, m);
      if (!(fast == ref)) {
        c.require(false, "divergence on " + pcSetName(m) + " type " + nameOf(t));
      }
      ++compared;
    }
  }
  c.require(compared == 4 * (220 + 495),
            "expected 2860 comparisons, ran " + std::to_string(compared));
  return c;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Check()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "exceptional derivation and labeling", criterion1},
      {2, "fundamental lemma on all triples", criterion2},
      {3, "golden neighborhoods give exactly two figures", criterion3},
      {4, "P/R realization and L via rotation", criterion4},
      {5, "seventh-chord oracle", criterion5},
      {6, "no singular five-tone harmony", criterion6},
      {7, "mystic chord decompositions", criterion7},
      {8, "generalized major-minor duality", criterion8},
      {9, "BWV 846 golden analysis", criterion9},
      {10, "engine matches naive cover enumeration", criterion10},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
  }
  int failures = 0;
  for (const auto& criterion : criteria()) {
    if (only != 0 && criterion.id != only) continue;
    Check result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2d [%s]: %s%s%s\n", criterion.id, criterion.title,
                result.pass ? "PASS" : "FAIL", result.detail.empty() ? "" : " — ",
                result.detail.c_str());
    if (!result.pass) ++failures;
  }
  return failures;
}
