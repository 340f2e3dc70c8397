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

#include <stdexcept>

#include "micosa/pitch.hpp"

using namespace micosa;

TEST_CASE("tone names parse with sharp/flat synonyms") {
  CHECK(parseToneName("C") == 0);
  CHECK(parseToneName("C#") == 1);
  CHECK(parseToneName("Db") == 1);
  CHECK(parseToneName("Eb") == 3);
  CHECK(parseToneName("D#") == 3);
  CHECK(parseToneName("Gb") == parseToneName("F#"));
  CHECK(parseToneName("B") == 11);
  CHECK_THROWS_AS(parseToneName("H"), std::invalid_argument);
  CHECK_THROWS_AS(parseToneName("cb"), std::invalid_argument);
}

TEST_CASE("transposition is mod-12 on every member") {
  PcSet cMajor = pcSetOf({0, 4, 7});
  CHECK(transposeHarmony(cMajor, 0) == cMajor);
  CHECK(transposeHarmony(cMajor, 12) == cMajor);
  CHECK(transposeHarmony(cMajor, 1) == pcSetOf({1, 5, 8}));
  CHECK(transposeHarmony(cMajor, -1) == pcSetOf({11, 3, 6}));
  for (int n = 0; n < 12; ++n) {
    CHECK(transposeHarmony(transposeHarmony(cMajor, n), 12 - n) == cMajor);
  }
}

TEST_CASE("pc-lex order follows ascending member lists") {
  CHECK(pcLexLess(pcSetOf({0, 11}), pcSetOf({1, 2})));
  CHECK(!pcLexLess(pcSetOf({1, 2}), pcSetOf({0, 11})));
  CHECK(pcLexLess(pcSetOf({0, 4, 7}), pcSetOf({0, 4, 8})));
  CHECK(!pcLexLess(pcSetOf({0, 4, 7}), pcSetOf({0, 4, 7})));
  CHECK(pcLexLess(pcSetOf({0, 4}), pcSetOf({0, 4, 7})));
}

TEST_CASE("set formatting uses canonical names") {
  CHECK(pcSetName(pcSetOf({0, 4, 7})) == "C,E,G");
  CHECK(pcSetName(pcSetOf({10, 3, 6})) == "Eb,F#,Bb");
  CHECK(pcCount(kFullPcSet) == 12);
}
