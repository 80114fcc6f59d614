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

#ifndef CJONES_QALGEBRA_HPP
#define CJONES_QALGEBRA_HPP

#include <algorithm>
#include <compare>
#include <complex>
#include <cstdlib>

#include "cjones/errors.hpp"

namespace cjones {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// q = exp(+2 pi i / (k + 2)), or its conjugate when `conjugate` is set.
class RootOfUnity {
 public:
  explicit RootOfUnity(int k, bool conjugate = false);

  int k() const { return k_; }
  bool conjugated() const { return conjugate_; }
  // Signed angle of q.
  double angle() const;
  std::complex<double> q() const { return qpow(1.0); }
  // q^x on the principal branch of the angle.
  std::complex<double> qpow(double x) const;

 private:
  int k_;
  bool conjugate_;
};

// Spin j stored as the integer 2j.
struct Spin {
  int twice = 0;

  constexpr double value() const { return twice / 2.0; }
  auto operator<=>(const Spin&) const = default;
};

// Colour with orientation: +1 for an upward strand, -1 for a downward one.
struct OrientedSpin {
  Spin spin;
  int orient = +1;

  bool operator==(const OrientedSpin&) const = default;
  OrientedSpin conjugate() const { return {spin, -orient}; }
};

// [x] = sin(pi x / (k+2)) / sin(pi / (k+2)).
double qint(double x, const RootOfUnity& root);

// [n]! for 0 <= n <= k+1. Throws DomainError outside that range.
double qfact(int n, const RootOfUnity& root);

// c_j = j (j + 1).
double casimir(Spin j);
inline double casimir_twice(int twice) { return twice * (twice + 2) / 4.0; }

// Fusion rule of SU(2)_k on twice-values. A negative level disables truncation.
constexpr bool admissible_twice(int a, int b, int c, int level) {
  if (a < 0 || b < 0 || c < 0) return false;
  if (c < std::abs(a - b) || c > a + b) return false;
  if ((a + b + c) % 2 != 0) return false;
  return level < 0 || a + b + c <= 2 * level;
}
bool admissible(Spin a, Spin b, Spin c, const RootOfUnity& root);

// The six spins of a q-6j symbol. l couples (j1, j2) and (j3, j4); m couples
// (j2, j3) and (j1, j4).
struct QRacahArgs {
  Spin j1, j2, j3, j4, l, m;
};

bool racah_admissible(const QRacahArgs& a, int level);

// q-Racah coefficient {j1 j2 l; j3 j4 m}_q.
double qracah(const QRacahArgs& args, const RootOfUnity& root);

// A_m^l = (-1)^(j1+j2+j3+j4) sqrt([2m+1][2l+1]) {j1 j2 l; j3 j4 m}_q.
// For fixed (j1..j4) the matrix over (m, l) is real orthogonal.
double duality6j(const QRacahArgs& args, const RootOfUnity& root);

namespace detail {

// Product [1][2]...[n] for a caller-supplied quantum integer. No range check:
// the Racah sum may reach past k+1, where the vanishing [k+2] kills the term.
template <class QInt>
auto qfact_raw(int n, const QInt& qi) -> decltype(qi(1)) {
  decltype(qi(1)) r = 1;
  for (int i = 2; i <= n; ++i) r *= qi(i);
  return r;
}

// Delta(a,b,c)^2 on twice-values.
template <class QInt>
auto delta_squared(int a, int b, int c, const QInt& qi) -> decltype(qi(1)) {
  return qfact_raw((-a + b + c) / 2, qi) * qfact_raw((a - b + c) / 2, qi) * qfact_raw((a + b - c) / 2, qi) /
         qfact_raw((a + b + c) / 2 + 1, qi);
}

// Alternating x-sum of the q-Racah coefficient, without the Delta prefactors.
// All arguments are twice-values; an empty range gives 0.
template <class QInt>
auto racah_series(int j1, int j2, int j3, int j4, int l, int m, const QInt& qi) -> decltype(qi(1)) {
  const int lo = std::max({j1 + j2 + l, j3 + j4 + l, j1 + j4 + m, j2 + j3 + m}) / 2;
  const int hi = std::min({j1 + j2 + j3 + j4, j1 + j3 + l + m, j2 + j4 + l + m}) / 2;
  decltype(qi(1)) s = 0;
  for (int x = lo; x <= hi; ++x) {
    auto den = qfact_raw(x - (j1 + j2 + l) / 2, qi) * qfact_raw(x - (j3 + j4 + l) / 2, qi) *
               qfact_raw(x - (j1 + j4 + m) / 2, qi) * qfact_raw(x - (j2 + j3 + m) / 2, qi) *
               qfact_raw((j1 + j2 + j3 + j4) / 2 - x, qi) * qfact_raw((j1 + j3 + l + m) / 2 - x, qi) *
               qfact_raw((j2 + j4 + l + m) / 2 - x, qi);
    auto term = qfact_raw(x + 1, qi) / den;
    if (x % 2) {
      s -= term;
    } else {
      s += term;
    }
  }
  return s;
}

}  // namespace detail

}  // namespace cjones

#endif  // CJONES_QALGEBRA_HPP
