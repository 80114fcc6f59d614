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

#include "cjones/braid.hpp"

#include <Eigen/Dense>
#include <numeric>

#include "json.hpp"

namespace cjones {

extern const char* const kLinkLibraryJson;

namespace {

using nlohmann::json;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Bottom strand found at each top position.
std::vector<int> top_permutation(int strands, const std::vector<Letter>& letters) {
  std::vector<int> pos(strands);
  std::iota(pos.begin(), pos.end(), 0);
  for (const auto& l : letters) std::swap(pos[l.index - 1], pos[l.index]);
  return pos;
}

// Component id per bottom strand, numbered by first appearance.
std::vector<int> component_ids(int strands, const std::vector<Letter>& letters) {
  const auto top = top_permutation(strands, letters);
  UnionFind uf(strands);
  for (int i = 0; i < strands; i += 2) {
    uf.unite(i, i + 1);
    uf.unite(top[i], top[i + 1]);
  }
  std::vector<int> id(strands, -1), root_id(strands, -1);
  int next = 0;
  for (int s = 0; s < strands; ++s) {
    const int r = uf.find(s);
    if (root_id[r] < 0) root_id[r] = next++;
    id[s] = root_id[r];
  }
  return id;
}

void check_letters(int strands, const std::vector<Letter>& letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const auto& l = letters[i];
    if (l.index < 1 || l.index > strands - 1) {
      throw RangeError("word[" + std::to_string(i) + "]: generator index " + std::to_string(l.index) +
                       " outside [1, " + std::to_string(strands - 1) + "]");
    }
    if (l.sign != 1 && l.sign != -1) {
      throw RangeError("word[" + std::to_string(i) + "]: sign must be +1 or -1");
    }
  }
}

void check_plat_pairs(const std::vector<OrientedSpin>& c, const char* where) {
  for (std::size_t i = 0; i + 1 < c.size(); i += 2) {
    if (c[i].spin != c[i + 1].spin || c[i].orient != -c[i + 1].orient) {
      throw PlatError(std::string(where) + " strands " + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                      " are not a conjugate pair (equal spins, opposite orientations)");
    }
  }
}

}  // namespace

void validate_word(const ColoredBraidWord& w, std::optional<int> level, bool require_plat) {
  if (w.strands == 0) {
    if (!w.colors.empty() || !w.letters.empty()) throw RangeError("strands: empty link cannot carry colors or letters");
    return;
  }
  if (w.strands < 0 || w.strands % 2 != 0) {
    throw RangeError("strands: must be even and >= 2, got " + std::to_string(w.strands));
  }
  if (static_cast<int>(w.colors.size()) != w.strands) {
    throw RangeError("colors_twice: expected " + std::to_string(w.strands) + " entries, got " +
                     std::to_string(w.colors.size()));
  }
  for (std::size_t i = 0; i < w.colors.size(); ++i) {
    const int t = w.colors[i].spin.twice;
    if (t < 0 || (level && t > *level)) {
      throw RangeError("colors_twice[" + std::to_string(i) + "]: twice-spin " + std::to_string(t) + " outside [0, " +
                       (level ? std::to_string(*level) : std::string("inf")) + "]");
    }
    if (w.colors[i].orient != 1 && w.colors[i].orient != -1) {
      throw RangeError("orient[" + std::to_string(i) + "]: must be + or -");
    }
  }
  check_letters(w.strands, w.letters);
  if (!require_plat) return;
  check_plat_pairs(w.colors, "bottom:");
  check_plat_pairs(colors_after(w), "top:");
  if (!w.framings.empty()) {
    const int n = components(w).n_components;
    if (static_cast<int>(w.framings.size()) != n) {
      throw RangeError("framings: expected " + std::to_string(n) + " entries (one per component), got " +
                       std::to_string(w.framings.size()));
    }
  }
}

ColoredBraidWord parse_word(std::string_view text, std::optional<int> level) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("braid input is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("braid input must be a JSON object");
  ColoredBraidWord w;
  auto require = [&](const char* key) -> const json& {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
  };
  const auto& s = require("strands");
  if (!s.is_number_integer()) throw ParseError("strands: must be an integer");
  w.strands = s.get<int>();
  if (w.strands != 0) {
    const auto& ct = require("colors_twice");
    const auto& ori = require("orient");
    if (!ct.is_array()) throw ParseError("colors_twice: must be an array of integers");
    if (!ori.is_array()) throw ParseError("orient: must be an array of \"+\"/\"-\"");
    if (ct.size() != ori.size()) throw ParseError("colors_twice and orient differ in length");
    for (std::size_t i = 0; i < ct.size(); ++i) {
      if (!ct[i].is_number_integer()) throw ParseError("colors_twice[" + std::to_string(i) + "]: not an integer");
      if (!ori[i].is_string()) throw ParseError("orient[" + std::to_string(i) + "]: not a string");
      const auto o = ori[i].get<std::string>();
      if (o != "+" && o != "-") throw ParseError("orient[" + std::to_string(i) + "]: expected \"+\" or \"-\"");
      w.colors.push_back({Spin{ct[i].get<int>()}, o == "+" ? 1 : -1});
    }
  }
  if (j.contains("word")) {
    const auto& wd = j.at("word");
    if (!wd.is_array()) throw ParseError("word: must be an array of [index, sign] pairs");
    for (std::size_t i = 0; i < wd.size(); ++i) {
      const auto& e = wd[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw ParseError("word[" + std::to_string(i) + "]: expected [index, sign]");
      }
      w.letters.push_back({e[0].get<int>(), e[1].get<int>()});
    }
  }
  if (j.contains("framings")) {
    const auto& f = j.at("framings");
    if (!f.is_array()) throw ParseError("framings: must be an array of integers");
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!f[i].is_number_integer()) throw ParseError("framings[" + std::to_string(i) + "]: not an integer");
      w.framings.push_back(f[i].get<int>());
    }
  }
  validate_word(w, level);
  return w;
}

std::string serialize_word(const ColoredBraidWord& w) {
  nlohmann::ordered_json j;
  j["strands"] = w.strands;
  auto ct = json::array();
  auto ori = json::array();
  for (const auto& c : w.colors) {
    ct.push_back(c.spin.twice);
    ori.push_back(c.orient > 0 ? "+" : "-");
  }
  j["colors_twice"] = ct;
  j["orient"] = ori;
  auto wd = json::array();
  for (const auto& l : w.letters) wd.push_back({l.index, l.sign});
  j["word"] = wd;
  if (!w.framings.empty()) j["framings"] = w.framings;
  return j.dump();
}

std::vector<OrientedSpin> colors_after(const ColoredBraidWord& w, int count) {
  auto c = w.colors;
  const int n = count < 0 ? static_cast<int>(w.letters.size()) : count;
  for (int i = 0; i < n; ++i) std::swap(c[w.letters[i].index - 1], c[w.letters[i].index]);
  return c;
}

std::vector<int> plat_orientations(int strands, const std::vector<Letter>& letters) {
  check_letters(strands, letters);
  const auto top = top_permutation(strands, letters);
  std::vector<int> where_top(strands);
  for (int x = 0; x < strands; ++x) where_top[top[x]] = x;
  std::vector<int> o(strands, 0);
  for (int start = 0; start < strands; ++start) {
    if (o[start]) continue;
    int x = start;
    // Walk up strand x, across the top cap, down strand y, across the bottom cap.
    while (!o[x]) {
      o[x] = 1;
      const int y = top[where_top[x] ^ 1];
      o[y] = -1;
      x = y ^ 1;
    }
  }
  return o;
}

ColoredBraidWord make_plat_word(int strands, const std::vector<Letter>& letters, const std::vector<int>& spins) {
  const auto o = plat_orientations(strands, letters);
  const auto id = component_ids(strands, letters);
  ColoredBraidWord w;
  w.strands = strands;
  w.letters = letters;
  for (int s = 0; s < strands; ++s) {
    if (id[s] >= static_cast<int>(spins.size())) throw RangeError("spins: one entry per component required");
    w.colors.push_back({Spin{spins[id[s]]}, o[s]});
  }
  validate_word(w);
  return w;
}

LinkComponents components(const ColoredBraidWord& w) {
  LinkComponents lc;
  lc.component_of = component_ids(w.strands, w.letters);
  lc.n_components = 0;
  for (int c : lc.component_of) lc.n_components = std::max(lc.n_components, c + 1);
  lc.framings = w.framings.empty() ? std::vector<int>(lc.n_components, 0) : w.framings;
  return lc;
}

std::vector<Crossing> crossings(const ColoredBraidWord& w) {
  std::vector<int> pos(w.strands);
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<int> o;
  for (const auto& c : w.colors) o.push_back(c.orient);
  std::vector<Crossing> out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const int a = w.letters[i].index - 1;
    out.push_back({static_cast<int>(i), pos[a], pos[a + 1], w.letters[i].sign * o[a] * o[a + 1]});
    std::swap(pos[a], pos[a + 1]);
    std::swap(o[a], o[a + 1]);
  }
  return out;
}

int writhe(const ColoredBraidWord& w) {
  const auto id = component_ids(w.strands, w.letters);
  int s = 0;
  for (const auto& c : crossings(w)) {
    if (id[c.left_strand] == id[c.right_strand]) s += c.sign;
  }
  return s;
}

int total_writhe(const ColoredBraidWord& w) {
  int s = 0;
  for (const auto& c : crossings(w)) s += c.sign;
  return s;
}

IntMatrix linking_matrix(const ColoredBraidWord& w, const std::vector<int>& framings) {
  const auto lc = components(w);
  const int n = lc.n_components;
  if (static_cast<int>(framings.size()) != n) {
    throw RangeError("framings: expected " + std::to_string(n) + " entries, got " + std::to_string(framings.size()));
  }
  IntMatrix twice(n, std::vector<int>(n, 0));
  for (const auto& c : crossings(w)) {
    const int a = lc.component_of[c.left_strand];
    const int b = lc.component_of[c.right_strand];
    if (a != b) {
      twice[a][b] += c.sign;
      twice[b][a] += c.sign;
    }
  }
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        m[i][j] = framings[i];
      } else if (twice[i][j] % 2 != 0) {
        throw OddCrossingParity("components " + std::to_string(i) + " and " + std::to_string(j) +
                                " cross an odd signed number of times");
      } else {
        m[i][j] = twice[i][j] / 2;
      }
    }
  }
  return m;
}

int signature(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 0;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = m[i][j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  int s = 0;
  for (int i = 0; i < n; ++i) {
    if (es.eigenvalues()(i) > 1e-9) ++s;
    if (es.eigenvalues()(i) < -1e-9) --s;
  }
  return s;
}

ColoredBraidWord inverse_word(const ColoredBraidWord& w) {
  ColoredBraidWord r = w;
  r.colors = colors_after(w);
  r.letters.clear();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back({it->index, -it->sign});
  return r;
}

ColoredBraidWord mirror_word(const ColoredBraidWord& w) {
  ColoredBraidWord r = w;
  for (auto& l : r.letters) l.sign = -l.sign;
  return r;
}

ColoredBraidWord concat(const ColoredBraidWord& a, const ColoredBraidWord& b) {
  if (a.strands != b.strands || colors_after(a) != b.colors) {
    throw ColorMismatch("concat: top colours of the first word differ from bottom colours of the second");
  }
  ColoredBraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  r.framings.clear();
  return r;
}

const LibraryEntry& LinkLibrary::get(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw NotFound("no link named '" + std::string(name) + "' in library version " + version);
}

LinkLibrary parse_library(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("link library is not valid JSON: ") + e.what());
  }
  LinkLibrary lib;
  try {
    lib.version = j.at("version").get<std::string>();
    for (const auto& e : j.at("links")) {
      LibraryEntry x;
      x.name = e.at("name").get<std::string>();
      x.strands = e.at("strands").get<int>();
      for (const auto& l : e.at("word")) x.letters.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
      x.components = e.at("components").get<int>();
      for (const auto& t : e.at("jones")) x.jones.emplace_back(t.at(0).get<int>(), t.at(1).get<long long>());
      lib.entries.push_back(std::move(x));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("link library: ") + e.what());
  }
  return lib;
}

const LinkLibrary& builtin_library() {
  static const LinkLibrary lib = parse_library(kLinkLibraryJson);
  return lib;
}

ColoredBraidWord library_word(const LibraryEntry& entry, int spin_twice) {
  return make_plat_word(entry.strands, entry.letters, std::vector<int>(entry.components, spin_twice));
}

}  // namespace cjones
