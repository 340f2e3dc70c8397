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

#ifndef MICOSA_REFERENCE_HPP_
#define MICOSA_REFERENCE_HPP_

#include <vector>

#include "micosa/golden.hpp"

namespace micosa::reference {

/// Serial reference for the decomposition engine: enumerates every subset
/// of the figures inside the harmony, size by size, and keeps the covers of
/// the first size that has any. No pruning, no branching heuristics; kept
/// deliberately naive so it can arbitrate the optimized path.
std::vector<GoldenDecomposition> minimumCovers(const GoldenStructure& structure, PcSet harmony);

/// Reference singularity check via minimumCovers.
bool isSingular(const GoldenStructure& structure, PcSet harmony);

/// Serial scan over all k-tone harmonies using the reference cover search.
std::vector<PcSet> scanKSubsets(const GoldenStructure& structure, int k);

}  // namespace micosa::reference

#endif  // MICOSA_REFERENCE_HPP_
