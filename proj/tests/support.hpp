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

// Helpers shared by the unit tests and the acceptance binary.

#ifndef CJONES_TESTS_SUPPORT_HPP
#define CJONES_TESTS_SUPPORT_HPP

#include <functional>
#include <vector>

#include "cjones/kaulrep.hpp"

namespace cjones::testing {

inline double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

inline double unitarity_error(const CMatrix& u) {
  return max_abs(u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols()));
}

// Calls f for every vector of `n` twice-spins in [0, max_twice].
inline void for_each_coloring(int n, int max_twice, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> c(n, 0);
  while (true) {
    f(c);
    int i = 0;
    while (i < n && c[i] == max_twice) c[i++] = 0;
    if (i == n) return;
    ++c[i];
  }
}

inline std::vector<OrientedSpin> orient(const std::vector<int>& twice, unsigned pattern) {
  std::vector<OrientedSpin> out;
  for (std::size_t i = 0; i < twice.size(); ++i) {
    out.push_back({Spin{twice[i]}, (pattern >> i) & 1u ? -1 : +1});
  }
  return out;
}

// Word on arbitrary colours; plat compatibility is not required.
inline ColoredBraidWord raw_word(const std::vector<OrientedSpin>& colors, std::vector<Letter> letters) {
  ColoredBraidWord w;
  w.strands = static_cast<int>(colors.size());
  w.colors = colors;
  w.letters = std::move(letters);
  return w;
}

// Worst deviation from unitarity and from both braid relations over the
// generators of B_{2m} on one colouring. Returns -1 if the colouring
// carries no conformal blocks.
struct RelationErrors {
  double unitarity = 0.0;
  double yang_baxter = 0.0;
  double far = 0.0;
  int words = 0;
};

inline RelationErrors braid_relation_errors(KaulRep& rep, const std::vector<OrientedSpin>& colors) {
  RelationErrors e;
  const int n = static_cast<int>(colors.size());
  for (int sign : {+1, -1}) {
    for (int i = 1; i < n; ++i) {
      const auto u = rep.represent(raw_word(colors, {{i, sign}}));
      e.unitarity = std::max(e.unitarity, unitarity_error(u.entries));
      ++e.words;
      if (i + 1 < n) {
        const auto l = rep.represent(raw_word(colors, {{i, sign}, {i + 1, sign}, {i, sign}}));
        const auto r = rep.represent(raw_word(colors, {{i + 1, sign}, {i, sign}, {i + 1, sign}}));
        e.yang_baxter = std::max(e.yang_baxter, max_abs(l.entries - r.entries));
        e.words += 2;
      }
      for (int j = i + 2; j < n; ++j) {
        const auto l = rep.represent(raw_word(colors, {{i, sign}, {j, sign}}));
        const auto r = rep.represent(raw_word(colors, {{j, sign}, {i, sign}}));
        e.far = std::max(e.far, max_abs(l.entries - r.entries));
        e.words += 2;
      }
    }
  }
  return e;
}

}  // namespace cjones::testing

#endif  // CJONES_TESTS_SUPPORT_HPP
