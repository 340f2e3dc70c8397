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

#include "micosa/pitch.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace micosa {

int pcCount(PcSet s) { return std::popcount(static_cast<unsigned>(s & kFullPcSet)); }

std::vector<PitchClass> pcList(PcSet s) {
  std::vector<PitchClass> out;
  out.reserve(static_cast<std::size_t>(pcCount(s)));
  for (PitchClass pc = 0; pc < 12; ++pc) {
    if (s & pcBit(pc)) out.push_back(pc);
  }
  return out;
}

PcSet pcSetOf(std::initializer_list<PitchClass> pcs) {
  PcSet s = 0;
  for (PitchClass pc : pcs) s |= pcBit(((pc % 12) + 12) % 12);
  return s;
}

PcSet pcSetOf(const std::vector<PitchClass>& pcs) {
  PcSet s = 0;
  for (PitchClass pc : pcs) s |= pcBit(((pc % 12) + 12) % 12);
  return s;
}

PcSet transposeHarmony(PcSet s, int interval) {
  int k = ((interval % 12) + 12) % 12;
  unsigned wide = static_cast<unsigned>(s & kFullPcSet) << k;
  return static_cast<PcSet>((wide | (wide >> 12)) & kFullPcSet);
}

bool pcLexLess(PcSet a, PcSet b) {
  auto la = pcList(a), lb = pcList(b);
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

namespace {

const std::array<std::string, 12> kNames = {"C",  "C#", "D", "Eb", "E",  "F",
                                            "F#", "G",  "G#", "A", "Bb", "B"};

const std::unordered_map<std::string, PitchClass>& nameTable() {
  static const std::unordered_map<std::string, PitchClass> table = {
      {"C", 0},  {"B#", 0},  {"C#", 1}, {"Db", 1}, {"D", 2},   {"D#", 3},
      {"Eb", 3}, {"E", 4},   {"Fb", 4}, {"E#", 5}, {"F", 5},   {"F#", 6},
      {"Gb", 6}, {"G", 7},   {"G#", 8}, {"Ab", 8}, {"A", 9},   {"A#", 10},
      {"Bb", 10}, {"B", 11}, {"Cb", 11}};
  return table;
}

}  // namespace

PitchClass parseToneName(const std::string& name) {
  auto it = nameTable().find(name);
  if (it == nameTable().end()) {
    throw std::invalid_argument("unknown tone name: '" + name + "'");
  }
  return it->second;
}

const std::string& toneName(PitchClass pc) {
  if (pc < 0 || pc >= 12) throw std::invalid_argument("pitch class out of range");
  return kNames[static_cast<std::size_t>(pc)];
}

std::string pcSetName(PcSet s) {
  std::string out;
  for (PitchClass pc : pcList(s)) {
    if (!out.empty()) out += ",";
    out += toneName(pc);
  }
  return out;
}

}  // namespace micosa
