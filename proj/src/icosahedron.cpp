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

#include "micosa/icosahedron.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace micosa {

namespace {

constexpr std::array<std::pair<int, int>, 30> kEdges = {{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
    {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
    {1, 6}, {1, 7}, {2, 7}, {2, 8}, {3, 8},
    {3, 9}, {4, 9}, {4, 10}, {5, 10}, {5, 6},
    {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 6},
    {11, 6}, {11, 7}, {11, 8}, {11, 9}, {11, 10},
}};

std::vector<VertexId> maskToList(VertexSet s) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < 12; ++v) {
    if (s & vBit(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

VertexSet SymmetryOperation::apply(VertexSet s) const {
  VertexSet out = 0;
  for (VertexId v = 0; v < 12; ++v) {
    if (s & vBit(v)) out |= vBit(map[static_cast<std::size_t>(v)]);
  }
  return out;
}

int SymmetryOperation::order() const {
  VertexPermutation p = map;
  int n = 1;
  auto isIdentity = [](const VertexPermutation& q) {
    for (int i = 0; i < 12; ++i) {
      if (q[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
  };
  while (!isIdentity(p)) {
    VertexPermutation next;
    for (std::size_t i = 0; i < 12; ++i) next[i] = map[p[i]];
    p = next;
    ++n;
  }
  return n;
}

std::uint64_t packPermutation(const VertexPermutation& p) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < 12; ++i) key = (key << 4) | p[i];
  return key;
}

IcosahedronTopology::IcosahedronTopology() {
  for (auto [a, b] : kEdges) {
    adjacency_[static_cast<std::size_t>(a)] |= vBit(b);
    adjacency_[static_cast<std::size_t>(b)] |= vBit(a);
  }
  // Antipode: the unique vertex that is neither adjacent nor shares a neighbor.
  for (VertexId v = 0; v < 12; ++v) {
    antipode_[static_cast<std::size_t>(v)] = -1;
    for (VertexId w = 0; w < 12; ++w) {
      if (w == v || adjacent(v, w)) continue;
      if ((adjacency_[static_cast<std::size_t>(v)] & adjacency_[static_cast<std::size_t>(w)]) == 0) {
        antipode_[static_cast<std::size_t>(v)] = w;
      }
    }
  }
  for (VertexId u = 0; u < 12; ++u) {
    for (VertexId v = 0; v < 12; ++v) {
      if (u == v) continue;
      dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
          adjacent(u, v) ? DistanceClass::Short
                         : (antipode_[static_cast<std::size_t>(u)] == v ? DistanceClass::Diameter
                                                                        : DistanceClass::Long);
    }
  }

  shapeByMask_.fill(0);
  for (VertexId a = 0; a < 12; ++a) {
    for (VertexId b = a + 1; b < 12; ++b) {
      for (VertexId c = b + 1; c < 12; ++c) {
        VertexSet m = static_cast<VertexSet>(vBit(a) | vBit(b) | vBit(c));
        auto da = dist_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        auto db = dist_[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
        auto dc = dist_[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
        int shorts = (da == DistanceClass::Short) + (db == DistanceClass::Short) +
                     (dc == DistanceClass::Short);
        bool diam = da == DistanceClass::Diameter || db == DistanceClass::Diameter ||
                    dc == DistanceClass::Diameter;
        TripleShape shape;
        if (diam) {
          shape = TripleShape::DiameterTriple;
        } else if (shorts == 3) {
          shape = TripleShape::Face;
        } else if (shorts == 1) {
          shape = TripleShape::GoldenTriangle;
        } else if (shorts == 2) {
          shape = TripleShape::GoldenGnomon;
        } else {
          shape = TripleShape::GreatTriangle;
        }
        shapeByMask_[m] = static_cast<std::uint8_t>(shape) + 1;
      }
    }
  }

  buildFigures();
  buildPentagons();
  buildGroup();
}

void IcosahedronTopology::buildFigures() {
  figureByMask_.fill(-1);
  auto apexOf = [&](VertexSet m, DistanceClass legs) -> VertexId {
    auto vs = maskToList(m);
    for (VertexId v : vs) {
      int cnt = 0;
      for (VertexId u : vs) {
        if (u != v && dist_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] == legs) ++cnt;
      }
      if (cnt == 2) return v;
    }
    return -1;
  };
  for (VertexSet m = 0; m < 4096; ++m) {
    if (std::popcount(static_cast<unsigned>(m)) != 3) continue;
    TripleShape s = static_cast<TripleShape>(shapeByMask_[m] - 1);
    if (s == TripleShape::GoldenTriangle) {
      triangles_.push_back({FigureKind::Triangle, m, apexOf(m, DistanceClass::Long)});
    } else if (s == TripleShape::GoldenGnomon) {
      gnomons_.push_back({FigureKind::Gnomon, m, apexOf(m, DistanceClass::Short)});
    }
  }
  // One rectangle per unordered pair of antipodal axes; every pair of axes
  // spans one (the two axes always carry an edge between them).
  for (VertexId a = 0; a < 12; ++a) {
    if (a > antipode_[static_cast<std::size_t>(a)]) continue;
    for (VertexId b = a + 1; b < 12; ++b) {
      if (b > antipode_[static_cast<std::size_t>(b)] || b == antipode_[static_cast<std::size_t>(a)]) continue;
      VertexSet m = static_cast<VertexSet>(vBit(a) | vBit(antipode_[static_cast<std::size_t>(a)]) |
                                           vBit(b) | vBit(antipode_[static_cast<std::size_t>(b)]));
      rectangles_.push_back({FigureKind::Rectangle, m, -1});
    }
  }
  auto byMask = [](const GoldenFigure& x, const GoldenFigure& y) { return x.vertices < y.vertices; };
  std::sort(triangles_.begin(), triangles_.end(), byMask);
  std::sort(gnomons_.begin(), gnomons_.end(), byMask);
  std::sort(rectangles_.begin(), rectangles_.end(), byMask);
  for (const auto& list : {triangles_, gnomons_, rectangles_}) {
    for (const auto& f : list) {
      figureByMask_[f.vertices] = static_cast<std::int16_t>(figuresAll_.size());
      figuresAll_.push_back(f);
    }
  }
}

void IcosahedronTopology::buildPentagons() {
  for (VertexId v = 0; v < 12; ++v) {
    auto nbrs = maskToList(adjacency_[static_cast<std::size_t>(v)]);
    std::array<VertexId, 5> ring{};
    ring[0] = nbrs[0];
    VertexSet used = vBit(ring[0]);
    for (int i = 1; i < 5; ++i) {
      VertexId next = -1;
      for (VertexId u : nbrs) {
        if ((used & vBit(u)) == 0 && adjacent(u, ring[static_cast<std::size_t>(i - 1)])) {
          if (next == -1 || u < next) next = u;
        }
      }
      ring[static_cast<std::size_t>(i)] = next;
      used |= vBit(next);
    }
    pentagons_[static_cast<std::size_t>(v)] = ring;
  }
  pentagonOwner_.fill(-1);
  for (const auto& f : figuresAll_) {
    if (f.kind == FigureKind::Rectangle) continue;
    for (VertexId w = 0; w < 12; ++w) {
      VertexSet ringMask = 0;
      for (VertexId u : pentagons_[static_cast<std::size_t>(w)]) ringMask |= vBit(u);
      if ((f.vertices & ~ringMask) == 0) {
        pentagonOwner_[f.vertices] = w;
        break;  // unique; verified by tests
      }
    }
  }
}

void IcosahedronTopology::buildGroup() {
  // Backtracking over partial vertex maps, pruning on adjacency mismatch.
  VertexPermutation perm{};
  std::array<bool, 12> used{};
  std::vector<VertexPermutation> raw;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == 12) {
      raw.push_back(perm);
      return;
    }
    for (VertexId img = 0; img < 12; ++img) {
      if (used[static_cast<std::size_t>(img)]) continue;
      bool ok = true;
      for (VertexId u = 0; u < v; ++u) {
        if (adjacent(u, v) != adjacent(perm[static_cast<std::size_t>(u)], img)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      perm[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(img);
      used[static_cast<std::size_t>(img)] = true;
      self(self, v + 1);
      used[static_cast<std::size_t>(img)] = false;
    }
  };
  rec(rec, 0);

  // Orient the surface: pick one face, propagate across shared edges. A
  // permutation is a proper rotation iff it sends oriented faces to
  // oriented faces with the same sense.
  std::vector<std::array<VertexId, 3>> oriented;
  std::array<std::int8_t, 4096> seen{};
  seen.fill(0);
  auto faceMask = [](const std::array<VertexId, 3>& t) {
    return static_cast<VertexSet>(vBit(t[0]) | vBit(t[1]) | vBit(t[2]));
  };
  oriented.push_back({0, 1, 2});
  seen[faceMask(oriented[0])] = 1;
  for (std::size_t i = 0; i < oriented.size(); ++i) {
    auto [a, b, c] = oriented[i];
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
      for (VertexId w = 0; w < 12; ++w) {
        if (w == a || w == b || w == c) continue;
        if (!adjacent(w, u) || !adjacent(w, v)) continue;
        VertexSet m = static_cast<VertexSet>(vBit(u) | vBit(v) | vBit(w));
        if (shapeByMask_[m] - 1 != static_cast<int>(TripleShape::Face) || seen[m]) continue;
        seen[m] = 1;
        oriented.push_back({v, u, w});
      }
    }
  }
  std::array<std::int32_t, 4096> orientKey{};
  orientKey.fill(-1);
  for (const auto& t : oriented) {
    // Encode the cyclic class by the successor of each vertex in the face.
    orientKey[faceMask(t)] = t[0] * 144 + t[1] * 12 + t[2];
  }
  auto sameCycle = [](int key, VertexId a, VertexId b, VertexId c) {
    int x = key / 144, y = (key / 12) % 12, z = key % 12;
    return (a == x && b == y && c == z) || (a == y && b == z && c == x) ||
           (a == z && b == x && c == y);
  };
  auto isRotation = [&](const VertexPermutation& p) {
    for (const auto& t : oriented) {
      VertexId a = p[static_cast<std::size_t>(t[0])];
      VertexId b = p[static_cast<std::size_t>(t[1])];
      VertexId c = p[static_cast<std::size_t>(t[2])];
      VertexSet m = static_cast<VertexSet>(vBit(a) | vBit(b) | vBit(c));
      if (!sameCycle(orientKey[m], a, b, c)) return false;
    }
    return true;
  };

  std::sort(raw.begin(), raw.end());
  for (const auto& p : raw) {
    group_.push_back({p, isRotation(p)});
    groupKeys_.push_back(packPermutation(p));
  }
  std::sort(groupKeys_.begin(), groupKeys_.end());

  for (const auto& op : group_) {
    int n = op.order();
    if (n == 3) order3_.push_back(op);
    if (n == 6) {
      // Order-6 elements act as two 6-cycles: no fixed points, no short cycles.
      std::array<bool, 12> visited{};
      bool twoSix = true;
      for (VertexId v = 0; v < 12 && twoSix; ++v) {
        if (visited[static_cast<std::size_t>(v)]) continue;
        int len = 0;
        VertexId w = v;
        do {
          visited[static_cast<std::size_t>(w)] = true;
          w = op(w);
          ++len;
        } while (w != v);
        twoSix = (len == 6);
      }
      if (twoSix) order6_.push_back(op);
    }
  }
}

DistanceClass IcosahedronTopology::distanceClass(VertexId u, VertexId v) const {
  if (u < 0 || u >= 12 || v < 0 || v >= 12) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("distance class of a degenerate pair");
  return dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

TripleShape IcosahedronTopology::classifyTriple(VertexSet triple) const {
  if (std::popcount(static_cast<unsigned>(triple & 0x0FFF)) != 3 || (triple & ~VertexSet{0x0FFF})) {
    throw std::invalid_argument("classifyTriple needs exactly three distinct vertices");
  }
  return static_cast<TripleShape>(shapeByMask_[triple] - 1);
}

TripleShape IcosahedronTopology::classifyTriple(VertexId a, VertexId b, VertexId c) const {
  if (a == b || b == c || a == c) throw std::invalid_argument("degenerate triple");
  return classifyTriple(static_cast<VertexSet>(vBit(a) | vBit(b) | vBit(c)));
}

VertexId IcosahedronTopology::pentagonOwner(const GoldenFigure& figure) const {
  VertexId owner = pentagonOwner_[figure.vertices];
  if (owner < 0) throw std::invalid_argument("figure lies on no link pentagon");
  return owner;
}

std::array<GoldenFigure, 2> IcosahedronTopology::goldenNeighborhood(const GoldenFigure& figure,
                                                                    NeighborhoodMode mode) const {
  if (figure.kind == FigureKind::Rectangle) {
    throw std::invalid_argument("golden neighborhoods are defined for triangles and gnomons only");
  }
  bool isTriangle = figure.kind == FigureKind::Triangle;
  const std::vector<GoldenFigure>& sameKind = isTriangle ? triangles_ : gnomons_;
  const std::vector<GoldenFigure>& otherKind = isTriangle ? gnomons_ : triangles_;

  std::array<GoldenFigure, 2> out{};
  std::size_t n = 0;
  auto push = [&](const GoldenFigure& g) {
    if (n < 2) out[n] = g;
    ++n;
  };

  if (mode == NeighborhoodMode::ApexShared) {
    // Same kind, same apex, sharing one leg (apex plus one base vertex).
    for (const auto& g : sameKind) {
      if (g.vertices != figure.vertices && g.apex == figure.apex &&
          std::popcount(static_cast<unsigned>(g.vertices & figure.vertices)) == 2) {
        push(g);
      }
    }
  } else {
    // Opposite kind, on the same link pentagon, sharing an edge of the
    // requested class.
    DistanceClass cls =
        mode == NeighborhoodMode::SEdgePentagon ? DistanceClass::Short : DistanceClass::Long;
    VertexId owner = pentagonOwner(figure);
    for (const auto& g : otherKind) {
      if (pentagonOwner_[g.vertices] != owner) continue;
      VertexSet shared = static_cast<VertexSet>(g.vertices & figure.vertices);
      auto vs = maskToList(shared);
      bool hit = false;
      for (std::size_t i = 0; i < vs.size() && !hit; ++i) {
        for (std::size_t j = i + 1; j < vs.size() && !hit; ++j) {
          hit = dist_[static_cast<std::size_t>(vs[i])][static_cast<std::size_t>(vs[j])] == cls;
        }
      }
      if (hit) push(g);
    }
  }
  if (n != 2) throw std::logic_error("golden neighborhood did not yield exactly two figures");
  return out;
}

bool IcosahedronTopology::isSymmetry(const VertexPermutation& p) const {
  return std::binary_search(groupKeys_.begin(), groupKeys_.end(), packPermutation(p));
}

TripleShape IcosahedronTopology::shapeOfMask(VertexSet triple) const {
  return classifyTriple(triple);
}

std::optional<FigureKind> IcosahedronTopology::figureKindOfMask(VertexSet vertices) const {
  std::int16_t idx = figureByMask_[vertices & 0x0FFF];
  if (idx < 0) return std::nullopt;
  return figuresAll_[static_cast<std::size_t>(idx)].kind;
}

const GoldenFigure& IcosahedronTopology::figureOfMask(VertexSet vertices) const {
  std::int16_t idx = figureByMask_[vertices & 0x0FFF];
  if (idx < 0) throw std::invalid_argument("vertex set is not a golden figure");
  return figuresAll_[static_cast<std::size_t>(idx)];
}

const IcosahedronTopology& icosahedron() {
  static const IcosahedronTopology topo;
  return topo;
}

std::string nameOf(DistanceClass c) {
  switch (c) {
    case DistanceClass::Short: return "short";
    case DistanceClass::Long: return "long";
    case DistanceClass::Diameter: return "diameter";
  }
  return "?";
}

std::string nameOf(TripleShape s) {
  switch (s) {
    case TripleShape::Face: return "face";
    case TripleShape::GoldenTriangle: return "golden-triangle";
    case TripleShape::GoldenGnomon: return "golden-gnomon";
    case TripleShape::GreatTriangle: return "great-triangle";
    case TripleShape::DiameterTriple: return "diameter-triple";
  }
  return "?";
}

std::string nameOf(FigureKind k) {
  switch (k) {
    case FigureKind::Triangle: return "gt";
    case FigureKind::Gnomon: return "gg";
    case FigureKind::Rectangle: return "gr";
  }
  return "?";
}

std::string nameOf(NeighborhoodMode m) {
  switch (m) {
    case NeighborhoodMode::ApexShared: return "apex-shared";
    case NeighborhoodMode::SEdgePentagon: return "s-edge-pentagon";
    case NeighborhoodMode::LEdgePentagon: return "l-edge-pentagon";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, DistanceClass c) { return os << nameOf(c); }
std::ostream& operator<<(std::ostream& os, TripleShape s) { return os << nameOf(s); }
std::ostream& operator<<(std::ostream& os, FigureKind k) { return os << nameOf(k); }
std::ostream& operator<<(std::ostream& os, NeighborhoodMode m) { return os << nameOf(m); }

}  // namespace micosa
