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

#include "micosa/json_io.hpp"

namespace micosa {

using nlohmann::json;

json pcSetToJson(PcSet s) {
  json arr = json::array();
  for (PitchClass pc : pcList(s)) arr.push_back(pc);
  return arr;
}

json structureToJson(const GoldenStructure& s) {
  json out;
  out["type"] = nameOf(s.type);
  auto dump = [](const std::vector<PcSet>& list) {
    json arr = json::array();
    for (PcSet f : list) arr.push_back(pcSetToJson(f));
    return arr;
  };
  out["triangles"] = dump(s.triangles);
  out["gnomons"] = dump(s.gnomons);
  out["rectangles"] = dump(s.rectangles);
  return out;
}

json decompositionToJson(const GoldenDecomposition& d) {
  json parts = json::array();
  for (const auto& p : d.parts) {
    parts.push_back({{"kind", nameOf(p.kind)},
                     {"pcs", pcSetToJson(p.pcs)},
                     {"tones", pcSetName(p.pcs)}});
  }
  return {{"parts", parts}, {"shape", d.shape().name()}};
}

json decompositionsToJson(const GoldenStructure& s, PcSet harmony,
                          const std::vector<GoldenDecomposition>& ds) {
  json list = json::array();
  for (const auto& d : ds) list.push_back(decompositionToJson(d));
  return {{"type", nameOf(s.type)},
          {"harmony", pcSetToJson(harmony)},
          {"tones", pcSetName(harmony)},
          {"singular", ds.empty()},
          {"decompositions", list}};
}

json seventhTableToJson() {
  const auto& catalog = exceptionalCatalog();
  json out = json::array();
  for (const auto& cell : seventhChordTable()) {
    json entry = decompositionsToJson(catalog[cell.type], cell.pcs, cell.decompositions);
    entry["chord"] = cell.chord;
    out.push_back(entry);
  }
  return out;
}

json scanToJson(ExceptionalType type, int k, const std::vector<PcSet>& singular) {
  json sets = json::array();
  for (PcSet s : singular) sets.push_back(pcSetToJson(s));
  return {{"type", nameOf(type)},
          {"k", k},
          {"count", singular.size()},
          {"singular", sets}};
}

json realizationTableToJson(ExceptionalType type) {
  json rows = json::array();
  for (const auto& row : realizationTable(type)) {
    rows.push_back({{"rootParity", row.rootParity},
                    {"quality", nameOf(row.quality)},
                    {"transform", nameOf(row.transform)},
                    {"mode", nameOf(row.mode)},
                    {"example", row.example.name()},
                    {"result", row.exampleResult.name()}});
  }
  return {{"type", nameOf(type)}, {"rows", rows}};
}

json analysisToJson(const Piece& piece, ExceptionalType type,
                    const std::vector<MeasureAnalysis>& rows, const PieceSummary& summary) {
  json measures = json::array();
  for (const auto& row : rows) {
    json figures = json::array();
    for (const auto& p : row.chosen.parts) {
      figures.push_back({{"kind", nameOf(p.kind)}, {"pcs", pcSetToJson(p.pcs)}});
    }
    measures.push_back({{"measure", row.measureNumber},
                        {"pcs", pcSetToJson(row.pcs)},
                        {"figures", figures},
                        {"shape", row.shape.name()},
                        {"alternatives", row.alternatives}});
  }
  json hist;
  for (const auto& [shape, count] : summary.histogram) hist[shape.name()] = count;
  return {{"title", piece.title},
          {"type", nameOf(type)},
          {"measures", measures},
          {"summary", {{"histogram", hist}, {"distinctShapes", summary.distinctShapes}}}};
}

json catalogToJson() {
  const auto& catalog = exceptionalCatalog();
  json types = json::array();
  for (ExceptionalType t : kAllTypes) types.push_back(structureToJson(catalog[t]));
  return {{"candidates", catalog.candidateCount},
          {"survivors", catalog.survivorCount},
          {"classes", catalog.classCount},
          {"rotationClasses", countRotationOnlyClasses()},
          {"types", types}};
}

}  // namespace micosa
