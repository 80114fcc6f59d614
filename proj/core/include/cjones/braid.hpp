// Copyright 2026 The cjones Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CJONES_BRAID_HPP
#define CJONES_BRAID_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cjones/blocks.hpp"

namespace cjones {

// Generator b_index (sign +1) or its inverse (sign -1). index is 1-based and
// crosses strands at positions index and index+1.
struct Letter {
  int index = 1;
  int sign = +1;
  bool operator==(const Letter&) const = default;
};

// A coloured oriented braid read bottom to top, closed as a plat. `colors`
// is the bottom boundary. Zero strands denotes the empty link.
struct ColoredBraidWord {
  int strands = 0;
  std::vector<OrientedSpin> colors;
  std::vector<Letter> letters;
  std::vector<int> framings;  // one per component, empty when absent

  int m() const { return strands / 2; }
  bool empty_link() const { return strands == 0; }
  PunctureColors bottom() const { return PunctureColors(colors); }
  bool operator==(const ColoredBraidWord&) const = default;
};

struct LinkComponents {
  std::vector<int> component_of;  // indexed by bottom strand position
  int n_components = 0;
  std::vector<int> framings;
};

// Parses the JSON braid schema. When `level` is given, spins above k/2 are
// rejected with RangeError.
ColoredBraidWord parse_word(std::string_view text, std::optional<int> level = std::nullopt);
std::string serialize_word(const ColoredBraidWord& word);

// Checks structure and, unless disabled, the plat pairing at both ends.
void validate_word(const ColoredBraidWord& word, std::optional<int> level = std::nullopt, bool require_plat = true);

// Colours after applying the first `count` letters (all by default).
std::vector<OrientedSpin> colors_after(const ColoredBraidWord& word, int count = -1);

// Orientations that make the plat closure consistent, taking strand 1 as
// upward. Returned for the bottom boundary.
std::vector<int> plat_orientations(int strands, const std::vector<Letter>& letters);

// Builds a plat word whose components carry the given spins (twice-values,
// one per component in LinkComponents order).
ColoredBraidWord make_plat_word(int strands, const std::vector<Letter>& letters, const std::vector<int>& spins_twice);

LinkComponents components(const ColoredBraidWord& word);

// Self-writhe: signed crossings between arcs of the same component.
int writhe(const ColoredBraidWord& word);
// Signed count over every crossing.
int total_writhe(const ColoredBraidWord& word);

struct Crossing {
  int letter = 0;
  int left_strand = 0;   // bottom positions of the two strands involved
  int right_strand = 0;
  int sign = 0;          // letter sign times both orientations
};
std::vector<Crossing> crossings(const ColoredBraidWord& word);

using IntMatrix = std::vector<std::vector<int>>;
IntMatrix linking_matrix(const ColoredBraidWord& word, const std::vector<int>& framings);
int signature(const IntMatrix& m);

// Letters reversed and inverted; starts from the top colours of `word`.
ColoredBraidWord inverse_word(const ColoredBraidWord& word);
// All letter signs flipped.
ColoredBraidWord mirror_word(const ColoredBraidWord& word);
// `a` followed by `b`; the top of `a` must equal the bottom of `b`.
ColoredBraidWord concat(const ColoredBraidWord& a, const ColoredBraidWord& b);

// Entries of the bundled link library.
struct LibraryEntry {
  std::string name;
  int strands = 0;
  std::vector<Letter> letters;
  int components = 1;
  // Jones polynomial coefficients in t^(1/2): exponent (in half-units) -> coefficient.
  std::vector<std::pair<int, long long>> jones;
};

struct LinkLibrary {
  std::string version;
  std::vector<LibraryEntry> entries;

  const LibraryEntry& get(std::string_view name) const;
};

LinkLibrary parse_library(std::string_view text);
const LinkLibrary& builtin_library();
// Spin-1/2 word (or a single spin for every component) for a library entry.
ColoredBraidWord library_word(const LibraryEntry& entry, int spin_twice = 1);

}  // namespace cjones

#endif  // CJONES_BRAID_HPP
