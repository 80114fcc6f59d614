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

#include "cjones/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cjones/errors.hpp"
#include "support.hpp"

namespace cjones {
namespace {

using cd = std::complex<double>;
const LibraryEntry& lib(const char* name) { return builtin_library().get(name); }

LaurentPoly poly(std::initializer_list<std::pair<int, long long>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += LaurentPoly::monomial(e, c);
  return p;
}

TEST(LaurentPoly, Arithmetic) {
  const auto a = poly({{1, 1}, {-1, 1}});
  EXPECT_EQ(a * a, poly({{2, 1}, {0, 2}, {-2, 1}}));
  EXPECT_EQ((a + poly({{1, -1}})), poly({{-1, 1}}));
  EXPECT_EQ(poly({{2, 1}, {-3, -2}}).to_string("t"), "-2t^-3 + t^2");
  EXPECT_NEAR(std::abs(a.eval(cd(0, 1))), 0.0, 1e-15);
}

TEST(KauffmanBracket, Unknot) {
  EXPECT_EQ(kauffman_bracket(library_word(lib("unknot"))), LaurentPoly::monomial(0));
  EXPECT_EQ(jones_polynomial(library_word(lib("unknot"))), LaurentPoly::monomial(0));
}

TEST(KauffmanBracket, FrozenValues) {
  EXPECT_EQ(kauffman_bracket(library_word(lib("hopf"))), poly({{4, -1}, {-4, -1}}));
  EXPECT_EQ(kauffman_bracket(library_word(lib("trefoil"))), poly({{-7, 1}, {-3, -1}, {5, -1}}));
  EXPECT_EQ(kauffman_bracket(library_word(lib("figure-eight"))), poly({{-8, 1}, {-4, -1}, {0, 1}, {4, -1}, {8, 1}}));
}

TEST(KauffmanBracket, ResolutionOrderIndependent) {
  std::mt19937_64 gen(3);
  for (const auto& e : builtin_library().entries) {
    const auto w = library_word(e);
    const auto ref = kauffman_bracket(w);
    std::vector<int> order(w.letters.size());
    std::iota(order.begin(), order.end(), 0);
    for (int t = 0; t < 6; ++t) {
      std::shuffle(order.begin(), order.end(), gen);
      EXPECT_EQ(kauffman_bracket(w, order), ref) << e.name;
    }
  }
}

TEST(KauffmanBracket, Limits) {
  EXPECT_THROW(kauffman_bracket(library_word(lib("trefoil"), 2)), DomainError);
  std::vector<Letter> many(17, Letter{2, 1});
  const auto w = make_plat_word(4, many, {1, 1});
  EXPECT_THROW(kauffman_bracket(w), ResourceError);
}

TEST(JonesPolynomial, LibraryEntriesDistinct) {
  std::vector<LaurentPoly> seen;
  for (const auto& e : builtin_library().entries) {
    LaurentPoly frozen;
    for (const auto& [ex, c] : e.jones) frozen += LaurentPoly::monomial(ex, c);
    const auto p = jones_polynomial(library_word(e));
    EXPECT_EQ(p, frozen) << e.name;
    for (const auto& s : seen) EXPECT_FALSE(s == p) << e.name;
    seen.push_back(p);
  }
}

TEST(JonesAt, MirrorIsConjugate) {
  for (const auto& e : builtin_library().entries) {
    for (int k = 2; k <= 8; ++k) {
      const RootOfUnity r(k);
      const auto w = library_word(e);
      EXPECT_NEAR(std::abs(jones_at(mirror_word(w), r) - std::conj(jones_at(w, r))), 0.0, 1e-12) << e.name;
    }
  }
}

TEST(JonesAt, AgreesWithPolynomial) {
  // t = q here; the polynomial is in t^(1/2).
  for (const auto& e : builtin_library().entries) {
    if (e.components != 1) continue;
    const auto w = library_word(e);
    for (int k = 2; k <= 6; ++k) {
      const RootOfUnity r(k);
      EXPECT_NEAR(std::abs(jones_polynomial(w).eval(r.qpow(0.5)) - jones_at(w, r)), 0.0, 1e-12) << e.name;
    }
  }
}

TEST(TreeOracle, TwoPairsEqualsDuality) {
  for (int k = 1; k <= 5; ++k) {
    for (const auto& tw : std::vector<std::vector<int>>{{1, 1, 1, 1}, {2, 1, 1, 2}, {2, 2, 2, 2}, {1, 1, 2, 2}}) {
      const auto c = PunctureColors::from_twice(tw);
      if (enumerate_basis(c, k).dim() == 0) continue;
      const auto a = tree_recoupling_oracle(c, RootOfUnity(k));
      const auto b = full_duality_matrix(c, RootOfUnity(k));
      EXPECT_LT(testing::max_abs(a.entries - b.entries), 1e-12);
    }
  }
}

TEST(TreeOracle, SpinZeroInsertion) {
  for (const auto& tw : std::vector<std::vector<int>>{{1, 1, 0, 0, 1, 1}, {0, 0, 1, 1, 1, 1}, {2, 2, 1, 1, 0, 0}}) {
    const auto c = PunctureColors::from_twice(tw);
    const auto a = tree_recoupling_oracle(c, RootOfUnity(3));
    EXPECT_LT(testing::unitarity_error(a.entries), 1e-12);
    EXPECT_LT(testing::max_abs(a.entries - full_duality_matrix(c, RootOfUnity(3)).entries), 1e-12);
  }
}

TEST(TreeOracle, Limits) {
  EXPECT_THROW(tree_recoupling_oracle(PunctureColors::from_twice(std::vector<int>(8, 1)), RootOfUnity(3)),
               ResourceError);
}

TEST(Fig8ColoredJones, SmallN) {
  EXPECT_NEAR(std::abs(fig8_colored_jones(1, std::polar(1.0, 0.7)) - 1.0), 0.0, 1e-15);
  const auto w = library_word(lib("figure-eight"));
  for (int k = 1; k <= 6; ++k) {
    const RootOfUnity r(k);
    EXPECT_NEAR(std::abs(fig8_colored_jones(2, r.q()) - jones_at(w, r)), 0.0, 1e-12);
  }
  EXPECT_NEAR(fig8_colored_jones_angle(2, kPi).real(), 5.0, 1e-12);
  EXPECT_NEAR(fig8_colored_jones_angle(3, 2.0 * kPi / 3).real(), 13.0, 1e-10);
  EXPECT_NEAR(fig8_colored_jones_angle(4, 2.0 * kPi / 4).real(), 27.0, 1e-10);
}

TEST(Fig8ColoredJones, RealAtVolumePoint) {
  for (int n = 2; n <= 40; ++n) {
    const cd v = fig8_colored_jones_angle(n, 2.0 * kPi / n);
    EXPECT_LT(std::abs(v.imag()), 1e-9 * std::abs(v)) << n;
  }
}

TEST(Fig8Volume, Constant) {
  const double v = fig8_volume();
  EXPECT_NEAR(v, 2.0298832128193074, 1e-12);
  EXPECT_GT(v, 2.0);
  EXPECT_LT(v, 2.1);
  EXPECT_NEAR(fig8_volume(1'000'000), v, 1e-10);
  EXPECT_NEAR(v / 2.0, 1.01494161, 1e-8);
}

}  // namespace
}  // namespace cjones
