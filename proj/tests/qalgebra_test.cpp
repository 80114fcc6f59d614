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

#include "cjones/qalgebra.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "cjones/errors.hpp"
#include "cjones/kaulrep.hpp"

namespace cjones {
namespace {

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

TEST(QInt, SpotValues) {
  EXPECT_EQ(qint(0, RootOfUnity(3)), 0.0);
  EXPECT_NEAR(qint(1, RootOfUnity(7)), 1.0, 1e-15);
  EXPECT_NEAR(qint(2, RootOfUnity(2)), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(qint(3, RootOfUnity(3)), kGolden, 1e-12);
}

TEST(QInt, ReflectionSymmetry) {
  for (int k = 1; k <= 10; ++k) {
    const RootOfUnity r(k);
    for (int x = 0; x <= k + 2; ++x) EXPECT_NEAR(qint(k + 2 - x, r), qint(x, r), 1e-12) << k << " " << x;
  }
}

TEST(QInt, ConjugationDoesNotChangeRealValues) {
  for (int x = 0; x < 6; ++x) EXPECT_DOUBLE_EQ(qint(x, RootOfUnity(4)), qint(x, RootOfUnity(4, true)));
}

TEST(QFact, Values) {
  EXPECT_DOUBLE_EQ(qfact(0, RootOfUnity(3)), 1.0);
  EXPECT_NEAR(qfact(1, RootOfUnity(3)), 1.0, 1e-15);
  EXPECT_NEAR(qfact(3, RootOfUnity(3)), kGolden * kGolden, 1e-12);
}

TEST(QFact, DomainErrors) {
  EXPECT_THROW(qfact(-1, RootOfUnity(3)), DomainError);
  EXPECT_THROW(qfact(5, RootOfUnity(3)), DomainError);
  EXPECT_NO_THROW(qfact(4, RootOfUnity(3)));
}

TEST(Casimir, Values) {
  EXPECT_DOUBLE_EQ(casimir(Spin{0}), 0.0);
  EXPECT_DOUBLE_EQ(casimir(Spin{1}), 0.75);
  EXPECT_DOUBLE_EQ(casimir(Spin{2}), 2.0);
}

TEST(RootOfUnity, SignConvention) {
  const RootOfUnity r(4);
  EXPECT_NEAR(std::arg(r.q()), 2.0 * kPi / 6.0, 1e-15);
  EXPECT_NEAR(std::arg(RootOfUnity(4, true).q()), -2.0 * kPi / 6.0, 1e-15);
  EXPECT_NEAR(std::abs(r.qpow(0.5) - std::polar(1.0, kPi / 6.0)), 0.0, 1e-15);
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(admissible(Spin{1}, Spin{1}, Spin{0}, RootOfUnity(2)));
  EXPECT_FALSE(admissible(Spin{1}, Spin{1}, Spin{2}, RootOfUnity(1)));
  EXPECT_FALSE(admissible(Spin{2}, Spin{2}, Spin{6}, RootOfUnity(20)));
  EXPECT_FALSE(admissible(Spin{1}, Spin{1}, Spin{1}, RootOfUnity(5)));  // parity
}

TEST(Admissible, PermutationInvariant) {
  for (int k = 1; k <= 6; ++k) {
    for (int a = 0; a <= k; ++a) {
      for (int b = 0; b <= k; ++b) {
        for (int c = 0; c <= k; ++c) {
          std::array<int, 3> v{a, b, c};
          const bool ref = admissible_twice(a, b, c, k);
          std::sort(v.begin(), v.end());
          do {
            EXPECT_EQ(admissible_twice(v[0], v[1], v[2], k), ref);
          } while (std::next_permutation(v.begin(), v.end()));
        }
      }
    }
  }
}

TEST(Admissible, UntruncatedLevel) {
  EXPECT_TRUE(admissible_twice(10, 10, 20, -1));
  EXPECT_FALSE(admissible_twice(10, 10, 20, 9));
}

RMatrix duality_block(int a, int b, int c, int d, int k) {
  const RootOfUnity root(k);
  std::vector<int> ls, ms;
  for (int x = 0; x <= k; ++x) {
    if (admissible_twice(a, b, x, k) && admissible_twice(c, d, x, k)) ls.push_back(x);
    if (admissible_twice(a, d, x, k) && admissible_twice(b, c, x, k)) ms.push_back(x);
  }
  RMatrix m(ms.size(), ls.size());
  for (std::size_t r = 0; r < ms.size(); ++r) {
    for (std::size_t col = 0; col < ls.size(); ++col) {
      m(r, col) = duality6j({Spin{a}, Spin{b}, Spin{c}, Spin{d}, Spin{ls[col]}, Spin{ms[r]}}, root);
    }
  }
  return m;
}

TEST(Duality6j, AllHalfSpinsLevelTwo) {
  const RMatrix m = duality_block(1, 1, 1, 1, 2);
  ASSERT_EQ(m.rows(), 2);
  ASSERT_EQ(m.cols(), 2);
  const double q2 = std::sqrt(2.0), q3 = 1.0;  // [2], [3] at k = 2
  EXPECT_NEAR(std::abs(m(0, 0)), 1.0 / q2, 1e-12);
  EXPECT_NEAR(std::abs(m(0, 1)), std::sqrt(q3) / q2, 1e-12);
  EXPECT_NEAR(std::abs(m(1, 0)), std::sqrt(q3) / q2, 1e-12);
  EXPECT_NEAR(std::abs(m(1, 1)), 1.0 / q2, 1e-12);
}

TEST(Duality6j, SingletCornerIsInverseQuantumDimension) {
  for (int k = 2; k <= 8; ++k) {
    const double v = duality6j({Spin{1}, Spin{1}, Spin{1}, Spin{1}, Spin{0}, Spin{0}}, RootOfUnity(k));
    EXPECT_NEAR(std::abs(v), 1.0 / qint(2, RootOfUnity(k)), 1e-12);
  }
}

TEST(Duality6j, SpinZeroGivesUnimodularEntry) {
  for (int k = 1; k <= 6; ++k) {
    for (int a = 0; a <= k; ++a) {
      for (int d = 0; d <= k; ++d) {
        for (int c = 0; c <= k; ++c) {
          const RMatrix m = duality_block(a, 0, c, d, k);
          if (m.size() == 0) continue;
          ASSERT_EQ(m.size(), 1);
          EXPECT_NEAR(std::abs(m(0, 0)), 1.0, 1e-12);
        }
      }
    }
  }
}

TEST(Duality6j, OrthogonalAtLevelFive) {
  const int k = 5;
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b <= k; ++b) {
      for (int c = 0; c <= k; ++c) {
        for (int d = 0; d <= k; ++d) {
          const RMatrix m = duality_block(a, b, c, d, k);
          if (m.size() == 0) continue;
          ASSERT_EQ(m.rows(), m.cols());
          EXPECT_LT((m * m.transpose() - RMatrix::Identity(m.rows(), m.rows())).cwiseAbs().maxCoeff(), 1e-10);
        }
      }
    }
  }
}

TEST(QRacah, ColumnSwapSymmetry) {
  for (int k = 1; k <= 5; ++k) {
    const RootOfUnity root(k);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c)
          for (int d = 0; d <= k; ++d)
            for (int l = 0; l <= k; ++l)
              for (int m = 0; m <= k; ++m) {
                const QRacahArgs x{Spin{a}, Spin{b}, Spin{c}, Spin{d}, Spin{l}, Spin{m}};
                const QRacahArgs y{Spin{c}, Spin{d}, Spin{a}, Spin{b}, Spin{l}, Spin{m}};
                if (!racah_admissible(x, k)) continue;
                ASSERT_TRUE(racah_admissible(y, k));
                EXPECT_NEAR(qracah(x, root), qracah(y, root), 1e-10);
              }
  }
}

TEST(QRacah, PhaseExponentIntegralWhenAdmissible) {
  for (int k = 1; k <= 6; ++k)
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c)
          for (int d = 0; d <= k; ++d)
            for (int l = 0; l <= k; ++l)
              for (int m = 0; m <= k; ++m) {
                const QRacahArgs x{Spin{a}, Spin{b}, Spin{c}, Spin{d}, Spin{l}, Spin{m}};
                if (racah_admissible(x, k)) EXPECT_EQ((a + b + c + d) % 2, 0);
              }
}

TEST(QRacah, InadmissibleIsRejected) {
  const QRacahArgs x{Spin{1}, Spin{1}, Spin{1}, Spin{1}, Spin{2}, Spin{2}};
  EXPECT_FALSE(racah_admissible(x, 1));
  EXPECT_THROW(duality6j(x, RootOfUnity(1)), AdmissibilityError);
}

}  // namespace
}  // namespace cjones
