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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "micosa/json_io.hpp"
#include "micosa/render.hpp"

namespace {

using namespace micosa;

// Exit codes: 0 success, 1 domain-negative result (golden singular, no
// figure), 2 usage/parse/internal error.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

PcSet parseTones(const std::vector<std::string>& names) {
  PcSet s = 0;
  for (const auto& name : names) {
    PitchClass pc = parseToneName(name);
    if (s & pcBit(pc)) throw std::invalid_argument("duplicate tone '" + name + "'");
    s |= pcBit(pc);
  }
  return s;
}

void writeOutput(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(outPath, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + outPath + "'");
  out << text;
}

std::string describeDecomposition(const GoldenDecomposition& d) {
  std::string line;
  for (const auto& p : d.parts) {
    if (!line.empty()) line += " + ";
    line += pcSetName(p.pcs) + " (" + nameOf(p.kind) + ")";
  }
  return line + "   [" + d.shape().name() + "]";
}

int runDerive(bool jsonOut, const std::string& outPath) {
  const auto& catalog = exceptionalCatalog();
  if (jsonOut || !outPath.empty()) {
    writeOutput(catalogToJson().dump(2) + "\n", outPath);
  } else {
    std::cout << "exceptional musical icosahedra: " << catalog.classCount << " classes from "
              << catalog.survivorCount << " self-dual assignments (" << catalog.candidateCount
              << " hexagon-symmetric candidates; " << countRotationOnlyClasses()
              << " classes under proper rotations only)\n";
    for (ExceptionalType t : kAllTypes) {
      const auto& s = catalog[t];
      std::cout << "\ntype " << nameOf(t) << "  (vertex assignment";
      for (PitchClass pc = 0; pc < 12; ++pc) {
        std::cout << (pc ? "," : " ") << static_cast<int>(s.representative.toVertex[pc]);
      }
      std::cout << ")\n";
      std::cout << "  C major -> " << nameOf(*s.figureKind(Triad{0, Quality::Major}.pcs()))
                << ", C minor -> " << nameOf(*s.figureKind(Triad{0, Quality::Minor}.pcs()))
                << "\n";
      std::cout << "  triangles " << s.triangles.size() << ", gnomons " << s.gnomons.size()
                << ", rectangles " << s.rectangles.size() << "\n";
    }
  }
  return kOk;
}

int runClassify(const std::string& type, const std::vector<std::string>& tones, bool jsonOut) {
  const auto& structure = exceptionalCatalog()[typeFromString(type)];
  PcSet pcs = parseTones(tones);
  auto kind = chordFigureKind(structure, pcs);
  if (jsonOut) {
    nlohmann::json out = {{"type", nameOf(structure.type)},
                          {"tones", pcSetName(pcs)},
                          {"pcs", pcSetToJson(pcs)},
                          {"figure", kind ? nameOf(*kind) : "none"}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << pcSetName(pcs) << " on type " << nameOf(structure.type) << ": "
              << (kind ? nameOf(*kind) : "none") << "\n";
  }
  return kind ? kOk : kNegative;
}

int runDecompose(const std::string& type, const std::vector<std::string>& tones, bool jsonOut,
                 const std::string& outPath) {
  const auto& structure = exceptionalCatalog()[typeFromString(type)];
  PcSet pcs = parseTones(tones);
  auto ds = goldenDecompositions(structure, pcs);
  if (jsonOut || !outPath.empty()) {
    writeOutput(decompositionsToJson(structure, pcs, ds).dump(2) + "\n", outPath);
  } else if (ds.empty()) {
    std::cout << pcSetName(pcs) << " is golden singular on type " << nameOf(structure.type)
              << "\n";
  } else {
    std::cout << pcSetName(pcs) << " on type " << nameOf(structure.type) << ": " << ds.size()
              << " golden decomposition" << (ds.size() == 1 ? "" : "s") << "\n";
    for (const auto& d : ds) std::cout << "  " << describeDecomposition(d) << "\n";
  }
  return ds.empty() ? kNegative : kOk;
}

int runSevenths(bool jsonOut, const std::string& outPath) {
  if (jsonOut || !outPath.empty()) {
    writeOutput(seventhTableToJson().dump(2) + "\n", outPath);
    return kOk;
  }
  const auto& catalog = exceptionalCatalog();
  std::printf("%-10s %-12s %8s %8s %8s %8s\n", "chord", "tones", "1*", "2*", "3*", "4*");
  for (const auto& chord : tertianSevenths()) {
    std::printf("%-10s %-12s", chord.name, pcSetName(chord.pcs).c_str());
    for (ExceptionalType t : kAllTypes) {
      auto ds = goldenDecompositions(catalog[t], chord.pcs);
      std::printf(" %8s", ds.empty() ? "singular" : std::to_string(ds.size()).c_str());
    }
    std::printf("\n");
  }
  std::printf("\n");
  for (ExceptionalType t : kAllTypes) {
    std::cout << "type " << nameOf(t) << "\n";
    for (const auto& chord : tertianSevenths()) {
      auto ds = goldenDecompositions(catalog[t], chord.pcs);
      std::cout << "  " << chord.name << " (" << pcSetName(chord.pcs) << "): ";
      if (ds.empty()) {
        std::cout << "golden singular\n";
        continue;
      }
      std::cout << ds.size() << "\n";
      for (const auto& d : ds) std::cout << "    " << describeDecomposition(d) << "\n";
    }
  }
  return kOk;
}

int runScan(const std::string& type, int k, bool jsonOut, const std::string& outPath) {
  const auto& structure = exceptionalCatalog()[typeFromString(type)];
  auto singular = scanKSubsets(structure, k);
  if (jsonOut || !outPath.empty()) {
    writeOutput(scanToJson(structure.type, k, singular).dump(2) + "\n", outPath);
  } else {
    std::cout << "type " << nameOf(structure.type) << ", " << k << "-tone harmonies: "
              << singular.size() << " golden singular\n";
    for (PcSet s : singular) std::cout << "  " << pcSetName(s) << "\n";
  }
  return kOk;
}

int runNeoRiemann(const std::string& type, bool jsonOut, const std::string& outPath) {
  ExceptionalType t = typeFromString(type);
  if (jsonOut || !outPath.empty()) {
    writeOutput(realizationTableToJson(t).dump(2) + "\n", outPath);
    return kOk;
  }
  std::cout << "type " << nameOf(t)
            << ": neighborhood modes realizing P and R (root parity decides)\n";
  for (const auto& row : realizationTable(t)) {
    std::cout << "  " << (row.rootParity == 0 ? "even" : "odd ") << " root, "
              << nameOf(row.quality) << ", " << nameOf(row.transform) << ": "
              << nameOf(row.mode) << "   (" << row.example.name() << " -> "
              << row.exampleResult.name() << ")\n";
  }
  return kOk;
}

int runAnalyze(const std::string& type, const std::string& corpusPath, bool useBwv, bool jsonOut,
               const std::string& outPath) {
  ExceptionalType t = typeFromString(type);
  Piece piece;
  if (useBwv) {
    piece = bwv846Corpus();
  } else {
    std::ifstream in(corpusPath, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + corpusPath + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    piece = loadPiece(buf.str());
  }
  std::vector<MeasureAnalysis> rows;
  PieceSummary summary;
  try {
    std::tie(rows, summary) = analyzePiece(piece, t);
  } catch (const analysis_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }
  if (jsonOut || !outPath.empty()) {
    writeOutput(analysisToJson(piece, t, rows, summary).dump(2) + "\n", outPath);
    return kOk;
  }
  std::cout << piece.title << " on type " << nameOf(t) << "\n";
  for (const auto& row : rows) {
    std::cout << "  m" << row.measureNumber << "  " << pcSetName(row.pcs) << "  ->  "
              << describeDecomposition(row.chosen);
    if (row.alternatives > 1) std::cout << "  (" << row.alternatives << " optima)";
    std::cout << "\n";
  }
  std::cout << "summary: " << summary.distinctShapes << " distinct shapes:";
  for (const auto& [shape, count] : summary.histogram) {
    std::cout << "  " << shape.name() << ":" << count;
  }
  std::cout << "\n";
  return kOk;
}

int runRender(const std::string& type, const std::vector<std::string>& tones,
              const std::string& outPath) {
  const auto& structure = exceptionalCatalog()[typeFromString(type)];
  PcSet pcs = parseTones(tones);
  auto ds = goldenDecompositions(structure, pcs);
  if (ds.empty()) {
    std::cerr << "error: " << pcSetName(pcs) << " is golden singular on type "
              << nameOf(structure.type) << "; nothing to render\n";
    return kNegative;
  }
  writeOutput(renderDecompositionSvg(structure, pcs, ds.front()), outPath);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"golden analysis of harmonies on the exceptional musical icosahedra"};
  app.require_subcommand(1);

  std::string type = "2";
  std::string outPath;
  std::string corpusPath;
  std::vector<std::string> tones;
  bool jsonOut = false;
  bool useBwv = false;
  int k = 5;

  auto addType = [&](CLI::App* cmd) {
    cmd->add_option("--type", type, "exceptional type (1, 2, 3 or 4)")->required();
  };

  auto* derive = app.add_subcommand("derive", "derive and label the four exceptional types");
  derive->add_flag("--json", jsonOut);
  derive->add_option("--out,-o", outPath, "write JSON to a file");

  auto* classify = app.add_subcommand("classify", "figure kind of a 3- or 4-tone harmony");
  addType(classify);
  classify->add_option("tones", tones)->required()->expected(-1);
  classify->add_flag("--json", jsonOut);

  auto* decompose = app.add_subcommand("decompose", "all minimum golden decompositions");
  addType(decompose);
  decompose->add_option("tones", tones)->required()->expected(-1);
  decompose->add_flag("--json", jsonOut);
  decompose->add_option("--out,-o", outPath);

  auto* sevenths = app.add_subcommand("sevenths", "tertian seventh chord table, all types");
  sevenths->add_flag("--json", jsonOut);
  sevenths->add_option("--out,-o", outPath);

  auto* scan = app.add_subcommand("scan", "list golden-singular k-tone harmonies");
  addType(scan);
  scan->add_option("--k,-k", k, "harmony size (3..12)")->required();
  scan->add_flag("--json", jsonOut);
  scan->add_option("--out,-o", outPath);

  auto* neo = app.add_subcommand("neoriemann", "P/R realization table via golden neighborhoods");
  addType(neo);
  neo->add_flag("--json", jsonOut);
  neo->add_option("--out,-o", outPath);

  auto* analyze = app.add_subcommand("analyze", "measure-by-measure golden analysis of a piece");
  addType(analyze);
  analyze->add_option("corpus", corpusPath, "corpus file (text or JSON)");
  analyze->add_flag("--bwv846", useBwv, "use the embedded BWV 846 corpus");
  analyze->add_flag("--json", jsonOut);
  analyze->add_option("--out,-o", outPath);

  auto* render = app.add_subcommand("render", "SVG diagram of a harmony's decomposition");
  addType(render);
  render->add_option("tones", tones)->required()->expected(-1);
  render->add_option("--out,-o", outPath, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kError;
  }

  try {
    if (derive->parsed()) return runDerive(jsonOut, outPath);
    if (classify->parsed()) return runClassify(type, tones, jsonOut);
    if (decompose->parsed()) return runDecompose(type, tones, jsonOut, outPath);
    if (sevenths->parsed()) return runSevenths(jsonOut, outPath);
    if (scan->parsed()) return runScan(type, k, jsonOut, outPath);
    if (neo->parsed()) return runNeoRiemann(type, jsonOut, outPath);
    if (analyze->parsed()) {
      if (!useBwv && corpusPath.empty()) {
        std::cerr << "error: give a corpus file or --bwv846\n";
        return kError;
      }
      return runAnalyze(type, corpusPath, useBwv, jsonOut, outPath);
    }
    if (render->parsed()) return runRender(type, tones, outPath);
  } catch (const labeling_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
