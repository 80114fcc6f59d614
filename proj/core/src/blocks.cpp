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

#include "cjones/blocks.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cjones {

PunctureColors::PunctureColors(std::vector<OrientedSpin> c) : colors(std::move(c)) {
  if (colors.size() % 2 != 0 || colors.empty()) {
    throw RangeError("puncture count must be even and positive, got " + std::to_string(colors.size()));
  }
  for (const auto& x : colors) {
    if (x.spin.twice < 0) throw RangeError("negative spin in puncture colors");
  }
}

PunctureColors PunctureColors::from_twice(const std::vector<int>& twice) {
  std::vector<OrientedSpin> c;
  for (std::size_t i = 0; i < twice.size(); ++i) c.push_back({Spin{twice[i]}, i % 2 ? -1 : +1});
  return PunctureColors(std::move(c));
}

std::vector<int> PunctureColors::twice_values() const {
  std::vector<int> v;
  for (const auto& x : colors) v.push_back(x.spin.twice);
  return v;
}

bool BlockLabel::is_zero() const {
  return std::all_of(p.begin(), p.end(), [](int x) { return x == 0; }) &&
         std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

std::string BlockLabel::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ";";
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << ")";
  return os.str();
}

BlockBasis::BlockBasis(PunctureColors colors, Coupling coupling, int level, std::vector<BlockLabel> labels)
    : colors_(std::move(colors)), coupling_(coupling), level_(level), labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

std::size_t BlockBasis::index_of(const BlockLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw NotFound("label " + label.to_string() + " is not in the basis");
  return it->second;
}

const BlockLabel& BlockBasis::label_at(std::size_t i) const {
  if (i >= labels_.size()) {
    throw OutOfRange("basis index " + std::to_string(i) + " out of range for dimension " +
                     std::to_string(labels_.size()));
  }
  return labels_[i];
}

std::vector<std::pair<int, int>> coupling_pairs(const PunctureColors& colors, Coupling coupling) {
  const int m = colors.m();
  const int n = colors.size();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i) {
    if (coupling == Coupling::odd) {
      pairs.emplace_back(colors.twice(2 * i), colors.twice(2 * i + 1));
    } else if (i == 0) {
      pairs.emplace_back(colors.twice(n - 1), colors.twice(0));
    } else {
      pairs.emplace_back(colors.twice(2 * i - 1), colors.twice(2 * i));
    }
  }
  return pairs;
}

BlockBasis enumerate_basis(const PunctureColors& colors, int level, Coupling coupling) {
  const int m = colors.m();
  std::vector<BlockLabel> out;
  if (m == 1) {
    if (colors.twice(0) == colors.twice(1)) out.push_back({{0}, {}});
    return BlockBasis(colors, coupling, level, std::move(out));
  }
  const auto pairs = coupling_pairs(colors, coupling);
  std::vector<std::vector<int>> choices(m);
  for (int i = 0; i < m; ++i) {
    const auto [a, b] = pairs[i];
    for (int c = std::abs(a - b); c <= a + b; c += 2) {
      if (admissible_twice(a, b, c, level)) choices[i].push_back(c);
    }
  }
  std::vector<int> p(m);
  std::vector<int> r(m - 1);
  // r_i for 1 <= i <= m-3 are free; the last link closes on p_{m-1}.
  std::function<void(int)> chain = [&](int i) {
    if (i == m - 2) {
      if (admissible_twice(r[m - 3], p[m - 2], p[m - 1], level)) {
        r[m - 2] = p[m - 1];
        out.push_back({p, r});
      }
      return;
    }
    for (int x = std::abs(r[i - 1] - p[i]); x <= r[i - 1] + p[i]; x += 2) {
      if (!admissible_twice(r[i - 1], p[i], x, level)) continue;
      r[i] = x;
      chain(i + 1);
    }
  };
  std::function<void(int)> pick = [&](int i) {
    if (i == m) {
      if (m == 2) {
        if (p[0] == p[1]) out.push_back({p, {p[0]}});
        return;
      }
      r[0] = p[0];
      chain(1);
      return;
    }
    for (int c : choices[i]) {
      p[i] = c;
      pick(i + 1);
    }
  };
  pick(0);
  return BlockBasis(colors, coupling, level, std::move(out));
}

BlockBasis enumerate_basis(const PunctureColors& colors, const RootOfUnity& root) {
  return enumerate_basis(colors, root.k(), Coupling::odd);
}

BlockBasis enumerate_even_basis(const PunctureColors& colors, const RootOfUnity& root) {
  return enumerate_basis(colors, root.k(), Coupling::even);
}

BlockLabel vacuum_label(const BlockBasis& basis) {
  const auto& c = basis.colors();
  for (int i = 0; i < c.m(); ++i) {
    if (c.twice(2 * i) != c.twice(2 * i + 1)) {
      throw NotPlatCompatible("strands " + std::to_string(2 * i + 1) + " and " + std::to_string(2 * i + 2) +
                              " carry different spins; no vacuum label");
    }
  }
  BlockLabel v{std::vector<int>(c.m(), 0), std::vector<int>(c.m() > 1 ? c.m() - 1 : 0, 0)};
  if (!basis.contains(v)) throw NotPlatCompatible("vacuum label missing from basis");
  return v;
}

}  // namespace cjones
