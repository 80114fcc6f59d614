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

#ifndef CJONES_ORACLE_HPP
#define CJONES_ORACLE_HPP

// Slow, independent reference computations used to validate the main path.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "cjones/braid.hpp"
#include "cjones/kaulrep.hpp"

namespace cjones {

inline constexpr int kMaxOracleCrossings = 16;

// Integer Laurent polynomial in one variable.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, long long coeff = 1);

  const std::map<int, long long>& terms() const { return terms_; }
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  std::complex<double> eval(std::complex<double> x) const;
  std::string to_string(const std::string& var = "A") const;

 private:
  void add(int e, long long c);
  std::map<int, long long> terms_;
};

// Kauffman bracket of the plat diagram in A, normalised so that a single
// circle has bracket 1. Every colour must be spin 1/2. Crossings are resolved
// in `order` (a permutation of letter positions); empty means left to right.
LaurentPoly kauffman_bracket(const ColoredBraidWord& word, const std::vector<int>& order = {});

// (-1)^(n_L - 1) (-A^3)^(-w_self) <D> at A = q^(-1/4).
std::complex<double> jones_at(const ColoredBraidWord& word, const RootOfUnity& root);
// Same with q = exp(i theta) for a possibly complex theta.
std::complex<double> jones_at_angle(const ColoredBraidWord& word, std::complex<double> theta);

// Standard Jones polynomial (-A^3)^(-w) <D> with t = A^(-4), returned in the
// variable t^(1/2).
LaurentPoly jones_polynomial(const ColoredBraidWord& word);

// Odd -> even change of basis by rewriting both coupling trees into a left
// comb with single q-6j moves and taking inner products. m must be 2 or 3.
UnitaryOp tree_recoupling_oracle(const PunctureColors& colors, const RootOfUnity& root);

// sum_{j=0}^{N-1} prod_{l=1}^{j} {N-l}{N+l}, {x} = q^(x/2) - q^(-x/2), with
// q^(1/2) the principal square root.
std::complex<double> fig8_colored_jones(int n, std::complex<double> q);
// Same with q^(x/2) = exp(i x theta / 2).
std::complex<double> fig8_colored_jones_angle(int n, std::complex<double> theta);

// 2 Im Li2(exp(i pi/3)) = 2 sum_{n>=1} sin(n pi/3)/n^2.
double fig8_volume(long long terms = 10'000'000);

}  // namespace cjones

#endif  // CJONES_ORACLE_HPP
