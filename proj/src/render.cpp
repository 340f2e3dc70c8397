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

#include "micosa/render.hpp"

#include <array>

#include "micosa/icosahedron.hpp"

namespace micosa {

namespace {

struct Pt {
  int x, y;
};

constexpr std::array<Pt, 12> kPos = {{{300, 60},
                                      {300, 204},
                                      {79, 204},
                                      {163, 204},
                                      {437, 204},
                                      {521, 204},
                                      {437, 436},
                                      {163, 436},
                                      {79, 436},
                                      {300, 436},
                                      {521, 436},
                                      {300, 580}}};

constexpr std::array<const char*, 4> kFill = {"#e6550d", "#3182bd", "#31a354", "#756bb1"};

std::string num(int v) { return std::to_string(v); }

}  // namespace

std::string renderDecompositionSvg(const GoldenStructure& structure, PcSet harmony,
                                   const GoldenDecomposition& decomposition) {
  const auto& topo = icosahedron();
  const auto& assignment = structure.representative;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" "
         "height=\"640\" viewBox=\"0 0 600 640\">\n";
  svg += "<rect width=\"600\" height=\"640\" fill=\"white\"/>\n";
  svg += "<text x=\"12\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">type ";
  svg += nameOf(structure.type);
  svg += "  ";
  svg += pcSetName(harmony);
  svg += "</text>\n";

  svg += "<g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  for (VertexId u = 0; u < 12; ++u) {
    for (VertexId v = u + 1; v < 12; ++v) {
      if (!topo.adjacent(u, v)) continue;
      svg += "<line x1=\"" + num(kPos[static_cast<std::size_t>(u)].x) + "\" y1=\"" +
             num(kPos[static_cast<std::size_t>(u)].y) + "\" x2=\"" +
             num(kPos[static_cast<std::size_t>(v)].x) + "\" y2=\"" +
             num(kPos[static_cast<std::size_t>(v)].y) + "\"/>\n";
    }
  }
  svg += "</g>\n";

  std::size_t colorIdx = 0;
  for (const auto& part : decomposition.parts) {
    std::vector<VertexId> order;
    VertexSet vs = assignment.vertexSetOf(part.pcs);
    if (part.kind == FigureKind::Rectangle) {
      // Trace the perimeter a -> b -> antipode(a) -> antipode(b) with b the
      // member adjacent to the lowest vertex a.
      VertexId a = -1, b = -1;
      for (VertexId v = 0; v < 12 && a < 0; ++v) {
        if (vs & vBit(v)) a = v;
      }
      for (VertexId v = 0; v < 12 && b < 0; ++v) {
        if (v != a && (vs & vBit(v)) && topo.adjacent(a, v)) b = v;
      }
      order = {a, b, topo.antipode(a), topo.antipode(b)};
    } else {
      for (VertexId v = 0; v < 12; ++v) {
        if (vs & vBit(v)) order.push_back(v);
      }
    }
    const char* fill = kFill[colorIdx % kFill.size()];
    ++colorIdx;
    svg += "<polygon points=\"";
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i) svg += " ";
      svg += num(kPos[static_cast<std::size_t>(order[i])].x) + "," +
             num(kPos[static_cast<std::size_t>(order[i])].y);
    }
    svg += "\" fill=\"" + std::string(fill) + "\" fill-opacity=\"0.35\" stroke=\"" + fill +
           "\" stroke-width=\"3\"/>\n";
  }

  for (VertexId v = 0; v < 12; ++v) {
    PitchClass pc = assignment.pitchOf(v);
    bool inHarmony = (harmony & pcBit(pc)) != 0;
    svg += "<circle cx=\"" + num(kPos[static_cast<std::size_t>(v)].x) + "\" cy=\"" +
           num(kPos[static_cast<std::size_t>(v)].y) + "\" r=\"14\" fill=\"" +
           (inHarmony ? "#ffd92f" : "#f0f0f0") + "\" stroke=\"#555555\"/>\n";
    svg += "<text x=\"" + num(kPos[static_cast<std::size_t>(v)].x) + "\" y=\"" +
           num(kPos[static_cast<std::size_t>(v)].y + 5) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" +
           toneName(pc) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace micosa
