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

#ifndef MICOSA_PITCH_HPP_
#define MICOSA_PITCH_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace micosa {

/// Pitch class as an integer 0..11 with C = 0, C# = 1, ..., B = 11.
using PitchClass = int;

/// A set of pitch classes packed into the low 12 bits of a word.
/// Bit i is set iff pitch class i is a member.
using PcSet = std::uint16_t;

constexpr PcSet kFullPcSet = 0x0FFF;

constexpr PcSet pcBit(PitchClass pc) { return static_cast<PcSet>(1u << pc); }

int pcCount(PcSet s);

/// Members of `s` in ascending order.
std::vector<PitchClass> pcList(PcSet s);

PcSet pcSetOf(std::initializer_list<PitchClass> pcs);
PcSet pcSetOf(const std::vector<PitchClass>& pcs);

/// Adds `interval` (mod 12) to every member.
PcSet transposeHarmony(PcSet s, int interval);

/// Ascending-member lexicographic order on pitch-class sets, e.g.
/// {0,11} sorts before {1,2}. Used wherever catalogs or decompositions
/// need a stable, human-predictable order.
bool pcLexLess(PcSet a, PcSet b);

/// Parses a tone name. Sharps and flats are synonyms (C# == Db).
/// Throws std::invalid_argument for unknown names.
PitchClass parseToneName(const std::string& name);

/// Canonical display name (C, C#, D, Eb, E, F, F#, G, G#, A, Bb, B).
const std::string& toneName(PitchClass pc);

/// "C,E,G" style rendering of a set, ascending.
std::string pcSetName(PcSet s);

}  // namespace micosa

#endif  // MICOSA_PITCH_HPP_
