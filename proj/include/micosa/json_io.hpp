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

#ifndef MICOSA_JSON_IO_HPP_
#define MICOSA_JSON_IO_HPP_

#include <json.hpp>

#include "micosa/golden.hpp"
#include "micosa/neo.hpp"
#include "micosa/piece.hpp"

namespace micosa {

// All exports use nlohmann::json with its sorted keys, so every document
// is schema-stable and diffable.

nlohmann::json pcSetToJson(PcSet s);
nlohmann::json structureToJson(const GoldenStructure& s);
nlohmann::json decompositionToJson(const GoldenDecomposition& d);
nlohmann::json decompositionsToJson(const GoldenStructure& s, PcSet harmony,
                                    const std::vector<GoldenDecomposition>& ds);
nlohmann::json seventhTableToJson();
nlohmann::json scanToJson(ExceptionalType type, int k, const std::vector<PcSet>& singular);
nlohmann::json realizationTableToJson(ExceptionalType type);
nlohmann::json analysisToJson(const Piece& piece, ExceptionalType type,
                              const std::vector<MeasureAnalysis>& rows,
                              const PieceSummary& summary);
nlohmann::json catalogToJson();

}  // namespace micosa

#endif  // MICOSA_JSON_IO_HPP_
