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

#ifndef CJONES_BLOCKS_HPP
#define CJONES_BLOCKS_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cjones/qalgebra.hpp"

namespace cjones {

// Colours of the 2m punctures, bottom to top of the fusion tree.
struct PunctureColors {
  std::vector<OrientedSpin> colors;

  PunctureColors() = default;
  explicit PunctureColors(std::vector<OrientedSpin> c);
  // All orientations alternate +,-,+,- ...
  static PunctureColors from_twice(const std::vector<int>& twice);

  int m() const { return static_cast<int>(colors.size()) / 2; }
  int size() const { return static_cast<int>(colors.size()); }
  int twice(int i) const { return colors[i].spin.twice; }
  std::vector<int> twice_values() const;
  bool operator==(const PunctureColors&) const = default;
};

// Which pairing the labels refer to. Odd: strands (1,2),(3,4),... give p_i.
// Even: (1,2m) gives q_0 and (2i,2i+1) give q_i.
enum class Coupling { odd, even };

// Intermediate spins of one fusion tree, as twice-values. For the odd
// coupling p = (p_0..p_{m-1}) and r = (r_0..r_{m-2}) with r_0 = p_0 and
// r_{m-2} = p_{m-1}. For the even coupling the same fields hold (q; s).
struct BlockLabel {
  std::vector<int> p;
  std::vector<int> r;

  auto operator<=>(const BlockLabel&) const = default;
  bool is_zero() const;
  std::string to_string() const;
};

class BlockBasis {
 public:
  BlockBasis(PunctureColors colors, Coupling coupling, int level, std::vector<BlockLabel> labels);

  const PunctureColors& colors() const { return colors_; }
  Coupling coupling() const { return coupling_; }
  // Truncation level used for admissibility; negative means untruncated.
  int level() const { return level_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<BlockLabel>& labels() const { return labels_; }

  std::size_t index_of(const BlockLabel& label) const;
  const BlockLabel& label_at(std::size_t i) const;
  bool contains(const BlockLabel& label) const { return index_.count(label) != 0; }

 private:
  PunctureColors colors_;
  Coupling coupling_;
  int level_;
  std::vector<BlockLabel> labels_;
  std::map<BlockLabel, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const BlockBasis>;

// All admissible labels in lexicographic order. A dimension of 0 is legal.
BlockBasis enumerate_basis(const PunctureColors& colors, const RootOfUnity& root);
BlockBasis enumerate_basis(const PunctureColors& colors, int level, Coupling coupling = Coupling::odd);
BlockBasis enumerate_even_basis(const PunctureColors& colors, const RootOfUnity& root);

// The all-zero label. Throws NotPlatCompatible unless each pair (2i+1, 2i+2)
// carries equal spins.
BlockLabel vacuum_label(const BlockBasis& basis);

// Spins of the pairs (a_i, b_i) whose couplings give p_i (odd) or q_i (even).
std::vector<std::pair<int, int>> coupling_pairs(const PunctureColors& colors, Coupling coupling);

}  // namespace cjones

#endif  // CJONES_BLOCKS_HPP
