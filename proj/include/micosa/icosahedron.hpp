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

#ifndef MICOSA_ICOSAHEDRON_HPP_
#define MICOSA_ICOSAHEDRON_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <optional>
#include <vector>

namespace micosa {

/// Vertex index 0..11 in the canonical numbering:
///   0        north pole
///   1..5     upper pentagon (cycle 1-2-3-4-5-1), all adjacent to 0
///   6..10    lower pentagon (cycle 6-7-8-9-10-6), all adjacent to 11;
///            vertex 1+k is adjacent to 6+k and 6+(k+1 mod 5)
///   11       south pole
/// Antipodal pairs: 0-11, 1-9, 2-10, 3-6, 4-7, 5-8.
using VertexId = int;

/// Vertex subset packed into the low 12 bits of a word.
using VertexSet = std::uint16_t;

constexpr VertexSet vBit(VertexId v) { return static_cast<VertexSet>(1u << v); }

/// Unordered-pair distance classes. Short is an edge; Long is a pentagon
/// diagonal (ratio phi to Short); Diameter joins antipodes.
enum class DistanceClass : std::uint8_t { Short, Long, Diameter };

/// Shape of a 3-vertex subset, by its multiset of pairwise distances:
/// {S,S,S} Face, {L,L,S} GoldenTriangle, {S,S,L} GoldenGnomon,
/// {L,L,L} GreatTriangle, any Diameter pair -> DiameterTriple.
enum class TripleShape : std::uint8_t {
  Face,
  GoldenTriangle,
  GoldenGnomon,
  GreatTriangle,
  DiameterTriple,
};

enum class FigureKind : std::uint8_t { Triangle, Gnomon, Rectangle };

/// A golden figure on the icosahedron. Triangles and gnomons carry the apex
/// (the vertex where the two equal legs meet); rectangles have none.
/// Equality is by vertex set and kind; base order never matters.
struct GoldenFigure {
  FigureKind kind;
  VertexSet vertices;
  VertexId apex = -1;  // -1 for rectangles

  friend bool operator==(const GoldenFigure& a, const GoldenFigure& b) {
    return a.kind == b.kind && a.vertices == b.vertices;
  }
};

/// The three ways a golden triangle or gnomon meets its two neighbors:
/// sharing the apex and a leg, or sharing a short/long edge on the one
/// link pentagon the figure lies on.
enum class NeighborhoodMode : std::uint8_t { ApexShared, SEdgePentagon, LEdgePentagon };

using VertexPermutation = std::array<std::uint8_t, 12>;

struct SymmetryOperation {
  VertexPermutation map;
  bool properRotation;

  VertexId operator()(VertexId v) const { return map[static_cast<std::size_t>(v)]; }
  VertexSet apply(VertexSet s) const;
  int order() const;
};

/// Pure combinatorics of the regular icosahedron over the canonical vertex
/// numbering above. No coordinates anywhere; all predicates go through the
/// Short/Long/Diameter classification. Immutable after construction and
/// safe to share across threads.
class IcosahedronTopology {
 public:
  IcosahedronTopology();

  bool adjacent(VertexId u, VertexId v) const { return adjacency_[u] & vBit(v); }
  VertexSet neighbors(VertexId v) const { return adjacency_[v]; }
  VertexId antipode(VertexId v) const { return antipode_[v]; }

  /// Throws std::invalid_argument if u == v.
  DistanceClass distanceClass(VertexId u, VertexId v) const;

  /// Throws std::invalid_argument unless the set has exactly 3 members.
  TripleShape classifyTriple(VertexSet triple) const;
  TripleShape classifyTriple(VertexId a, VertexId b, VertexId c) const;

  const std::vector<GoldenFigure>& goldenTriangles() const { return triangles_; }
  const std::vector<GoldenFigure>& goldenGnomons() const { return gnomons_; }
  const std::vector<GoldenFigure>& goldenRectangles() const { return rectangles_; }

  /// The 5 neighbors of v in cyclic adjacency order, starting from the
  /// smallest and stepping to its smaller pentagon neighbor first.
  const std::array<VertexId, 5>& linkPentagon(VertexId v) const { return pentagons_[v]; }

  /// The unique vertex whose link pentagon contains every vertex of the
  /// given golden triangle or gnomon.
  VertexId pentagonOwner(const GoldenFigure& figure) const;

  /// The two figures related to `figure` in the given mode. Throws
  /// std::invalid_argument for rectangles.
  std::array<GoldenFigure, 2> goldenNeighborhood(const GoldenFigure& figure,
                                                 NeighborhoodMode mode) const;

  /// All 120 adjacency-preserving vertex permutations, 60 proper rotations
  /// among them, in a fixed deterministic order.
  const std::vector<SymmetryOperation>& symmetryGroup() const { return group_; }
  const std::vector<SymmetryOperation>& rotationsOfOrder3() const { return order3_; }

  /// The 20 order-6 operations acting as two 6-cycles on the vertices.
  const std::vector<SymmetryOperation>& orderSixTwoCycleOps() const { return order6_; }

  bool isSymmetry(const VertexPermutation& p) const;

  /// TripleShape for any 3-element mask; figure kind (or nullopt) for any
  /// 3- or 4-element mask.
  TripleShape shapeOfMask(VertexSet triple) const;
  std::optional<FigureKind> figureKindOfMask(VertexSet vertices) const;

  /// Canonical figure (with apex) for a mask known to be golden.
  const GoldenFigure& figureOfMask(VertexSet vertices) const;

 private:
  std::array<VertexSet, 12> adjacency_{};
  std::array<VertexId, 12> antipode_{};
  std::array<std::array<DistanceClass, 12>, 12> dist_{};
  std::array<std::array<VertexId, 5>, 12> pentagons_{};
  std::array<std::uint8_t, 4096> shapeByMask_{};   // TripleShape + 1, 0 = n/a
  std::array<std::int16_t, 4096> figureByMask_{};  // index into figuresAll_, -1 = none
  std::vector<GoldenFigure> triangles_, gnomons_, rectangles_;
  std::vector<GoldenFigure> figuresAll_;
  std::array<VertexId, 4096> pentagonOwner_{};  // -1 where undefined
  std::vector<SymmetryOperation> group_, order3_, order6_;
  std::vector<std::uint64_t> groupKeys_;  // sorted packed permutations

  void buildFigures();
  void buildPentagons();
  void buildGroup();
};

/// The fixed canonical topology. Built once, then shared.
const IcosahedronTopology& icosahedron();

/// Same instance as icosahedron(); named to match the derivation pipeline.
inline const IcosahedronTopology& buildTopology() { return icosahedron(); }

std::uint64_t packPermutation(const VertexPermutation& p);

std::string nameOf(DistanceClass c);
std::string nameOf(TripleShape s);
std::string nameOf(FigureKind k);
std::string nameOf(NeighborhoodMode m);

std::ostream& operator<<(std::ostream& os, DistanceClass c);
std::ostream& operator<<(std::ostream& os, TripleShape s);
std::ostream& operator<<(std::ostream& os, FigureKind k);
std::ostream& operator<<(std::ostream& os, NeighborhoodMode m);

}  // namespace micosa

#endif  // MICOSA_ICOSAHEDRON_HPP_
