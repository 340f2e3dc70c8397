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

#ifndef MICOSA_RENDER_HPP_
#define MICOSA_RENDER_HPP_

#include <string>

#include "micosa/golden.hpp"

namespace micosa {

/// SVG 1.1 diagram of the icosahedron flattened to a fixed front view
/// (integer pixel table below), labeled with the tones of the structure's
/// representative assignment. The harmony's tones are emphasized and every
/// part of the decomposition is drawn as a translucent colored polygon.
/// Output bytes depend only on the inputs.
///
/// Vertex positions (x, y):
///   v0 (300,60)   v1 (300,204)  v2 (79,204)   v3 (163,204)
///   v4 (437,204)  v5 (521,204)  v6 (437,436)  v7 (163,436)
///   v8 (79,436)   v9 (300,436)  v10 (521,436) v11 (300,580)
std::string renderDecompositionSvg(const GoldenStructure& structure, PcSet harmony,
                                   const GoldenDecomposition& decomposition);

}  // namespace micosa

#endif  // MICOSA_RENDER_HPP_
