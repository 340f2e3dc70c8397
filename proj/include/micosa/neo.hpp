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

#ifndef MICOSA_NEO_HPP_
#define MICOSA_NEO_HPP_

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "micosa/assignment.hpp"
#include "micosa/golden.hpp"

namespace micosa {

enum class Quality : std::uint8_t { Major, Minor };

struct Triad {
  PitchClass root;
  Quality quality;

  PcSet pcs() const;
  std::string name() const;
  friend bool operator==(const Triad& a, const Triad& b) {
    return a.root == b.root && a.quality == b.quality;
  }
};

/// P (parallel), R (relative), L (leading-tone exchange) and the fourth
/// transformation D, which sends the X major/minor triad to the X+5
/// minor/major triad. P, R, L are involutions; D is not.
enum class TransformKind : std::uint8_t { P, R, L, D };

Triad applyTransform(const Triad& t, TransformKind k);

class realization_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How one neighborhood mode relates a triad's figure to its transform.
struct TransformRealization {
  Triad source;
  Triad result;
  TransformKind transform;
  NeighborhoodMode mode;      // the unique realizing mode
  GoldenBase sourceFigure;    // figure of `source` in the structure
  GoldenBase resultFigure;    // the neighbor equal to the transformed triad
  PcSet companion;            // the other neighbor in the realizing pair
  bool companionIsTriad;      // whether the companion is a major/minor triad
};

/// Finds the neighborhood mode whose two figures contain exactly the
/// transformed triad; requires k in {P, R}. Throws realization_error when
/// no mode (or more than one) realizes the transform, and when the
/// companion inside the realizing pair is itself a major/minor triad.
TransformRealization realizeTransformViaNeighborhood(ExceptionalType type, const Triad& t,
                                                     TransformKind k);

/// True iff an order-3 rotation carries the figure of P(t) onto the figure
/// of L(t).
bool verifyLViaRotation(ExceptionalType type, const Triad& t);

struct ReachabilityReport {
  int nodes = 0;
  int edges = 0;
  bool connected = false;
};

/// Graph on the 24 triads with edges from neighborhood-realized P and R
/// plus whole-tone transposition orbit edges.
ReachabilityReport triadReachabilityGraph(ExceptionalType type);

/// The realizing mode for every (root parity, quality, transform) cell of
/// one type; the realization depends on the root only through its parity.
struct RealizationTableRow {
  int rootParity;  // 0 even, 1 odd
  Quality quality;
  TransformKind transform;
  NeighborhoodMode mode;
  Triad example, exampleResult;
};
std::vector<RealizationTableRow> realizationTable(ExceptionalType type);

std::string nameOf(TransformKind k);
std::string nameOf(Quality q);
std::ostream& operator<<(std::ostream& os, TransformKind k);
std::ostream& operator<<(std::ostream& os, Quality q);

}  // namespace micosa

#endif  // MICOSA_NEO_HPP_
