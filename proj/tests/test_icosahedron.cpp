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

#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include <stdexcept>

#include "micosa/icosahedron.hpp"

using namespace micosa;

namespace {

std::vector<VertexId> members(VertexSet s) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < 12; ++v) {
    if (s & vBit(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("topology basics: 12 vertices, 30 edges, degree 5") {
  const auto& topo = icosahedron();
  int degreeSum = 0;
  for (VertexId v = 0; v < 12; ++v) {
    CHECK(std::popcount(static_cast<unsigned>(topo.neighbors(v))) == 5);
    degreeSum += std::popcount(static_cast<unsigned>(topo.neighbors(v)));
  }
  CHECK(degreeSum / 2 == 30);
}

TEST_CASE("antipode is a fixed-point-free involution, never adjacent") {
  const auto& topo = icosahedron();
  for (VertexId v = 0; v < 12; ++v) {
    CHECK(topo.antipode(v) != v);
    CHECK(topo.antipode(topo.antipode(v)) == v);
    CHECK(!topo.adjacent(v, topo.antipode(v)));
  }
}

TEST_CASE("distance class census over all 66 pairs") {
  const auto& topo = icosahedron();
  std::map<DistanceClass, int> census;
  for (VertexId u = 0; u < 12; ++u) {
    for (VertexId v = u + 1; v < 12; ++v) ++census[topo.distanceClass(u, v)];
  }
  CHECK(census[DistanceClass::Short] == 30);
  CHECK(census[DistanceClass::Long] == 30);
  CHECK(census[DistanceClass::Diameter] == 6);
  CHECK(topo.distanceClass(0, 1) == DistanceClass::Short);
  CHECK(topo.distanceClass(0, 11) == DistanceClass::Diameter);
  CHECK_THROWS_AS(topo.distanceClass(3, 3), std::invalid_argument);
}

TEST_CASE("triple shape census over all 220 triples") {
  const auto& topo = icosahedron();
  std::map<TripleShape, int> census;
  for (VertexId a = 0; a < 12; ++a) {
    for (VertexId b = a + 1; b < 12; ++b) {
      for (VertexId c = b + 1; c < 12; ++c) ++census[topo.classifyTriple(a, b, c)];
    }
  }
  CHECK(census[TripleShape::Face] == 20);
  CHECK(census[TripleShape::GoldenTriangle] == 60);
  CHECK(census[TripleShape::GoldenGnomon] == 60);
  CHECK(census[TripleShape::GreatTriangle] == 20);
  CHECK(census[TripleShape::DiameterTriple] == 60);

  CHECK(topo.classifyTriple(0, 1, 2) == TripleShape::Face);
  // Any triple with an antipodal pair is a diameter triple.
  CHECK(topo.classifyTriple(0, 11, 4) == TripleShape::DiameterTriple);
  CHECK_THROWS_AS(topo.classifyTriple(1, 1, 2), std::invalid_argument);
}

TEST_CASE("figure catalogs: 60 triangles, 60 gnomons, 15 rectangles") {
  const auto& topo = icosahedron();
  CHECK(topo.goldenTriangles().size() == 60);
  CHECK(topo.goldenGnomons().size() == 60);
  CHECK(topo.goldenRectangles().size() == 15);

  for (const auto& f : topo.goldenTriangles()) {
    auto vs = members(f.vertices);
    REQUIRE(vs.size() == 3);
    REQUIRE(f.apex >= 0);
    std::vector<VertexId> base;
    for (VertexId v : vs) {
      if (v != f.apex) base.push_back(v);
    }
    CHECK(topo.distanceClass(f.apex, base[0]) == DistanceClass::Long);
    CHECK(topo.distanceClass(f.apex, base[1]) == DistanceClass::Long);
    CHECK(topo.distanceClass(base[0], base[1]) == DistanceClass::Short);
  }
  for (const auto& f : topo.goldenGnomons()) {
    auto vs = members(f.vertices);
    std::vector<VertexId> base;
    for (VertexId v : vs) {
      if (v != f.apex) base.push_back(v);
    }
    CHECK(topo.distanceClass(f.apex, base[0]) == DistanceClass::Short);
    CHECK(topo.distanceClass(f.apex, base[1]) == DistanceClass::Short);
    CHECK(topo.distanceClass(base[0], base[1]) == DistanceClass::Long);
  }
  for (const auto& f : topo.goldenRectangles()) {
    auto vs = members(f.vertices);
    REQUIRE(vs.size() == 4);
    CHECK(f.apex == -1);
    // Two antipodal pairs, and exactly two edges between the axes.
    CHECK((f.vertices & vBit(topo.antipode(vs[0]))) != 0);
    int shortEdges = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (topo.adjacent(vs[i], vs[j])) ++shortEdges;
      }
    }
    CHECK(shortEdges == 2);
  }
}

TEST_CASE("link pentagon: cyclic, excludes the vertex and its antipode") {
  const auto& topo = icosahedron();
  for (VertexId v = 0; v < 12; ++v) {
    const auto& ring = topo.linkPentagon(v);
    for (int i = 0; i < 5; ++i) {
      CHECK(topo.adjacent(v, ring[static_cast<std::size_t>(i)]));
      CHECK(topo.distanceClass(ring[static_cast<std::size_t>(i)],
                               ring[static_cast<std::size_t>((i + 1) % 5)]) ==
            DistanceClass::Short);
      CHECK(topo.distanceClass(ring[static_cast<std::size_t>(i)],
                               ring[static_cast<std::size_t>((i + 2) % 5)]) ==
            DistanceClass::Long);
      CHECK(ring[static_cast<std::size_t>(i)] != v);
      CHECK(ring[static_cast<std::size_t>(i)] != topo.antipode(v));
    }
  }
}

TEST_CASE("each golden triangle and gnomon lies on exactly one link pentagon") {
  const auto& topo = icosahedron();
  auto countOwners = [&](const GoldenFigure& f) {
    int owners = 0;
    for (VertexId w = 0; w < 12; ++w) {
      VertexSet ring = 0;
      for (VertexId u : topo.linkPentagon(w)) ring |= vBit(u);
      if ((f.vertices & ~ring) == 0) ++owners;
    }
    return owners;
  };
  for (const auto& f : topo.goldenTriangles()) {
    CHECK(countOwners(f) == 1);
    CHECK(topo.pentagonOwner(f) >= 0);
  }
  for (const auto& f : topo.goldenGnomons()) CHECK(countOwners(f) == 1);
}

TEST_CASE("golden neighborhoods return exactly two figures of the right kind") {
  const auto& topo = icosahedron();
  auto checkAll = [&](const std::vector<GoldenFigure>& figures) {
    for (const auto& f : figures) {
      bool isTriangle = f.kind == FigureKind::Triangle;

      auto apexPair = topo.goldenNeighborhood(f, NeighborhoodMode::ApexShared);
      for (const auto& g : apexPair) {
        CHECK(g.kind == f.kind);
        CHECK(g.apex == f.apex);
        CHECK(std::popcount(static_cast<unsigned>(g.vertices & f.vertices)) == 2);
      }
      CHECK(apexPair[0].vertices != apexPair[1].vertices);

      for (auto mode : {NeighborhoodMode::SEdgePentagon, NeighborhoodMode::LEdgePentagon}) {
        auto pair = topo.goldenNeighborhood(f, mode);
        DistanceClass want = mode == NeighborhoodMode::SEdgePentagon ? DistanceClass::Short
                                                                     : DistanceClass::Long;
        for (const auto& g : pair) {
          CHECK(g.kind == (isTriangle ? FigureKind::Gnomon : FigureKind::Triangle));
          CHECK(topo.pentagonOwner(g) == topo.pentagonOwner(f));
          auto shared = members(static_cast<VertexSet>(g.vertices & f.vertices));
          bool sharesEdge = false;
          for (std::size_t i = 0; i < shared.size(); ++i) {
            for (std::size_t j = i + 1; j < shared.size(); ++j) {
              sharesEdge = sharesEdge || topo.distanceClass(shared[i], shared[j]) == want;
            }
          }
          CHECK(sharesEdge);
        }
        CHECK(pair[0].vertices != pair[1].vertices);
      }
    }
  };
  checkAll(topo.goldenTriangles());
  checkAll(topo.goldenGnomons());

  CHECK_THROWS_AS(topo.goldenNeighborhood(topo.goldenRectangles().front(),
                                          NeighborhoodMode::ApexShared),
                  std::invalid_argument);
}

TEST_CASE("symmetry group: 120 operations, 60 rotations, closed") {
  const auto& topo = icosahedron();
  const auto& group = topo.symmetryGroup();
  REQUIRE(group.size() == 120);

  int rotations = 0;
  bool hasIdentity = false;
  std::map<int, int> orderCensus;
  for (const auto& op : group) {
    if (op.properRotation) ++rotations;
    ++orderCensus[op.order()];
    bool id = true;
    for (VertexId v = 0; v < 12; ++v) id = id && op(v) == v;
    if (id) {
      hasIdentity = true;
      CHECK(op.properRotation);
    }
    for (VertexId u = 0; u < 12; ++u) {
      for (VertexId v = u + 1; v < 12; ++v) {
        CHECK(topo.adjacent(u, v) == topo.adjacent(op(u), op(v)));
      }
    }
  }
  CHECK(rotations == 60);
  CHECK(hasIdentity);
  CHECK(orderCensus == std::map<int, int>{{1, 1}, {2, 31}, {3, 20}, {5, 24}, {6, 20}, {10, 24}});
  CHECK(topo.rotationsOfOrder3().size() == 20);
  for (const auto& op : topo.rotationsOfOrder3()) CHECK(op.properRotation);
  CHECK(topo.orderSixTwoCycleOps().size() == 20);

  for (std::size_t i = 0; i < group.size(); i += 7) {
    for (std::size_t j = 0; j < group.size(); j += 11) {
      VertexPermutation comp{};
      VertexPermutation inv{};
      for (VertexId v = 0; v < 12; ++v) {
        comp[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(group[i](group[j](v)));
        inv[static_cast<std::size_t>(group[i](v))] = static_cast<std::uint8_t>(v);
      }
      CHECK(topo.isSymmetry(comp));
      CHECK(topo.isSymmetry(inv));
    }
  }
}

TEST_CASE("symmetries map golden figures to golden figures, preserving apex") {
  const auto& topo = icosahedron();
  for (const auto& op : topo.symmetryGroup()) {
    for (const auto& f : topo.goldenTriangles()) {
      const auto& img = topo.figureOfMask(op.apply(f.vertices));
      CHECK(img.kind == FigureKind::Triangle);
      CHECK(img.apex == op(f.apex));
    }
    for (const auto& f : topo.goldenRectangles()) {
      CHECK(topo.figureOfMask(op.apply(f.vertices)).kind == FigureKind::Rectangle);
    }
  }
}

TEST_CASE("neighborhoods commute with every symmetry") {
  const auto& topo = icosahedron();
  for (const auto& op : topo.symmetryGroup()) {
    for (const auto& f : topo.goldenGnomons()) {
      for (auto mode : {NeighborhoodMode::ApexShared, NeighborhoodMode::SEdgePentagon,
                        NeighborhoodMode::LEdgePentagon}) {
        auto direct = topo.goldenNeighborhood(topo.figureOfMask(op.apply(f.vertices)), mode);
        auto mapped = topo.goldenNeighborhood(f, mode);
        std::set<VertexSet> directMasks = {direct[0].vertices, direct[1].vertices};
        std::set<VertexSet> mappedMasks = {op.apply(mapped[0].vertices),
                                           op.apply(mapped[1].vertices)};
        CHECK(directMasks == mappedMasks);
      }
    }
  }
}
