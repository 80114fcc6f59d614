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

#include <cmath>
#include <stdexcept>
#include <string>

namespace cjones {

RootOfUnity::RootOfUnity(int k, bool conjugate) : k_(k), conjugate_(conjugate) {
  if (k < 1) throw DomainError("level k must be >= 1, got " + std::to_string(k));
}

double RootOfUnity::angle() const {
  const double a = 2.0 * kPi / (k_ + 2);
  return conjugate_ ? -a : a;
}

std::complex<double> RootOfUnity::qpow(double x) const { return std::polar(1.0, angle() * x); }

double qint(double x, const RootOfUnity& root) {
  const double h = kPi / (root.k() + 2);
  return std::sin(h * x) / std::sin(h);
}

double qfact(int n, const RootOfUnity& root) {
  if (n < 0 || n > root.k() + 1) {
    throw DomainError("qfact(" + std::to_string(n) + ") needs 0 <= n <= k+1 = " + std::to_string(root.k() + 1));
  }
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= qint(i, root);
  return r;
}

double casimir(Spin j) { return casimir_twice(j.twice); }

bool admissible(Spin a, Spin b, Spin c, const RootOfUnity& root) {
  return admissible_twice(a.twice, b.twice, c.twice, root.k());
}

bool racah_admissible(const QRacahArgs& a, int level) {
  return admissible_twice(a.j1.twice, a.j2.twice, a.l.twice, level) &&
         admissible_twice(a.j3.twice, a.j4.twice, a.l.twice, level) &&
         admissible_twice(a.j1.twice, a.j4.twice, a.m.twice, level) &&
         admissible_twice(a.j2.twice, a.j3.twice, a.m.twice, level);
}

namespace {

void require_admissible(const QRacahArgs& a, const RootOfUnity& root) {
  if (!racah_admissible(a, root.k())) {
    throw AdmissibilityError("q-6j arguments (" + std::to_string(a.j1.twice) + "," + std::to_string(a.j2.twice) +
                             "," + std::to_string(a.j3.twice) + "," + std::to_string(a.j4.twice) +
                             "; l=" + std::to_string(a.l.twice) + ", m=" + std::to_string(a.m.twice) +
                             ") [twice-values] violate the fusion rules at k=" + std::to_string(root.k()));
  }
}

}  // namespace

double qracah(const QRacahArgs& a, const RootOfUnity& root) {
  require_admissible(a, root);
  auto qi = [&](int x) { return qint(x, root); };
  const double d = std::sqrt(detail::delta_squared(a.j1.twice, a.j2.twice, a.l.twice, qi) *
                             detail::delta_squared(a.j3.twice, a.j4.twice, a.l.twice, qi) *
                             detail::delta_squared(a.j1.twice, a.j4.twice, a.m.twice, qi) *
                             detail::delta_squared(a.j2.twice, a.j3.twice, a.m.twice, qi));
  return d * detail::racah_series(a.j1.twice, a.j2.twice, a.j3.twice, a.j4.twice, a.l.twice, a.m.twice, qi);
}

double duality6j(const QRacahArgs& a, const RootOfUnity& root) {
  const double r = qracah(a, root);
  const int e = a.j1.twice + a.j2.twice + a.j3.twice + a.j4.twice;
  if (e % 2 != 0) throw std::logic_error("non-integer phase exponent in duality6j");
  const double sign = (e / 2) % 2 ? -1.0 : 1.0;
  return sign * std::sqrt(qint(a.m.twice + 1, root) * qint(a.l.twice + 1, root)) * r;
}

}  // namespace cjones
