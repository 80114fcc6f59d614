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

#ifndef CJONES_INVARIANT_HPP
#define CJONES_INVARIANT_HPP

#include <complex>
#include <string>
#include <vector>

#include "cjones/braid.hpp"
#include "cjones/kaulrep.hpp"

namespace cjones {

struct InvariantResult {
  std::complex<double> V;            // prod [2 j_i + 1] * <0|K|0>
  std::complex<double> E;            // V with inter-component crossings reframed to zero
  std::complex<double> J;            // E / [2 j + 1] for the first component
  std::complex<double> expectation;  // <0|K|0>
  int writhe = 0;                    // self-writhe
  std::complex<double> q_used;
  std::vector<Spin> colors;          // per component
};

// Vacuum-to-vacuum element of K(word).
std::complex<double> plat_expectation(const ColoredBraidWord& word, const RootOfUnity& root);
std::complex<double> plat_expectation(const ColoredBraidWord& word, KaulRep& rep);

InvariantResult colored_jones(const ColoredBraidWord& word, const RootOfUnity& root);
InvariantResult colored_jones(const ColoredBraidWord& word, KaulRep& rep);

// sum over inter-component crossings of sign * c_min(j_a, j_b).
double interlink_casimir_exponent(const ColoredBraidWord& word);

struct RTTerm {
  std::vector<int> colors_twice;  // per component
  double weight = 0.0;            // prod [2 j_i + 1]
  std::complex<double> E;         // framed invariant
};

struct RTResult {
  std::complex<double> tau;
  std::complex<double> alpha;
  double b = 0.0;
  std::complex<double> c;
  int k = 0;
  int k_used = 0;  // k or k+2 with the shift
  int sigma = 0;
  int n_components = 0;
  std::vector<RTTerm> terms;
};

struct RTOptions {
  bool rt_shift = false;
  int threads = 1;
  bool keep_terms = false;
  long long max_terms = 1LL << 20;
};

RTResult rt_invariant(const ColoredBraidWord& word, const std::vector<int>& framings, const RootOfUnity& root,
                      const RTOptions& opts = {});

// Colored Jones data at q = exp(i theta) for a complex theta, with
// untruncated fusion rules. Used where the level-k theory degenerates.
InvariantResult colored_jones_analytic(const ColoredBraidWord& word, std::complex<double> theta);

struct VolumeOptions {
  int max_kaul_n = 10;
  int contour_points = 16;
  double radius = 1e-3;
};

struct VolumePoint {
  int n = 0;
  std::complex<double> j_n;
  double abs_j = 0.0;
  double ratio = 0.0;
  std::string method;  // "kaul" or "oracle"
};

// Unknot-normalised N-coloured invariant at q = exp(2 pi i / N) on the Kaul path.
std::complex<double> kaul_volume_point(const LibraryEntry& knot, int n, const VolumeOptions& opts = {});

// 2 pi log|J_N| / N.
VolumePoint volume_ratio(const LibraryEntry& knot, int n, const VolumeOptions& opts = {});

}  // namespace cjones

#endif  // CJONES_INVARIANT_HPP
