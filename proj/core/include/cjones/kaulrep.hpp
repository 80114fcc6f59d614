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

#ifndef CJONES_KAULREP_HPP
#define CJONES_KAULREP_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "cjones/blocks.hpp"
#include "cjones/braid.hpp"

namespace cjones {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;

// Largest basis dimension accepted on the exact path.
inline constexpr std::size_t kMaxExactDim = std::size_t{1} << 14;

// Linear map between two block bases. The bases may carry different colour
// lists; composition is only defined when they line up.
struct UnitaryOp {
  BasisPtr basis_in;
  BasisPtr basis_out;
  CMatrix entries;

  std::size_t rows() const { return static_cast<std::size_t>(entries.rows()); }
  double unitarity_defect() const;
};

// second * first.
UnitaryOp compose(const UnitaryOp& second, const UnitaryOp& first);

struct EigenvalueSpec {
  Spin t;
  Spin j;
  Spin i;
  bool parallel = true;
  bool over = true;
};

// Eigenvalues exactly as printed: parallel (-1)^(j+i-t) q^((c_j+c_i)/2 + c_min - c_t/2),
// antiparallel (-1)^(|j-i|-t) q^(-|c_j-c_i|/2 + c_t/2); under-crossings conjugate.
std::complex<double> braiding_eigenvalue(const EigenvalueSpec& spec, const RootOfUnity& root);

// `calibrated` conjugates the antiparallel eigenvalue, which is what makes the
// braid relations hold for strands of mixed orientation. `literal` uses
// braiding_eigenvalue unchanged.
enum class EigenvalueConvention { calibrated, literal };

std::complex<double> generator_eigenvalue(const EigenvalueSpec& spec, const RootOfUnity& root,
                                          EigenvalueConvention conv = EigenvalueConvention::calibrated);

// Caches bases, q-6j values and duality matrices for one root of unity.
// Not thread-safe; use one instance per thread.
class KaulRep {
 public:
  explicit KaulRep(RootOfUnity root, EigenvalueConvention conv = EigenvalueConvention::calibrated);

  const RootOfUnity& root() const { return root_; }

  double sixj(int a, int b, int c, int d, int bc, int ab);

  BasisPtr odd_basis(const PunctureColors& colors);
  BasisPtr even_basis(const PunctureColors& colors);

  // Odd (p;r) -> even (q;s) duality, from the factored t-sum.
  const RMatrix& duality(const PunctureColors& colors);
  // The same matrix as a product of single-move matrices.
  RMatrix duality_by_moves(const PunctureColors& colors);

  UnitaryOp odd_generator(int l, const BlockBasis& basis, int sign);
  UnitaryOp even_generator(int l, const BlockBasis& basis, int sign);
  UnitaryOp generator(int l, const BlockBasis& basis, int sign);

  UnitaryOp represent(const ColoredBraidWord& word);
  // K(word) applied to `v` (given in the odd basis of the bottom colours).
  CVector apply(const ColoredBraidWord& word, const CVector& v);

 private:
  std::vector<std::complex<double>> odd_diagonal(int l, const BlockBasis& basis, int sign);

  RootOfUnity root_;
  EigenvalueConvention conv_;
  std::unordered_map<std::uint64_t, double> sixj_;
  std::map<std::vector<int>, BasisPtr> odd_;
  std::map<std::vector<int>, BasisPtr> even_;
  std::map<std::vector<int>, RMatrix> duality_;
};

UnitaryOp odd_generator(int l, const BlockBasis& basis, const RootOfUnity& root, int sign);
UnitaryOp even_generator(int l, const BlockBasis& basis, const RootOfUnity& root, int sign);
UnitaryOp full_duality_matrix(const PunctureColors& colors, const RootOfUnity& root);
UnitaryOp represent_word(const ColoredBraidWord& word, const RootOfUnity& root,
                         EigenvalueConvention conv = EigenvalueConvention::calibrated);

}  // namespace cjones

#endif  // CJONES_KAULREP_HPP
