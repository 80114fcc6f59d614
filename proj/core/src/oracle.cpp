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

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>
#include <sstream>

namespace cjones {

LaurentPoly LaurentPoly::monomial(int e, long long c) {
  LaurentPoly p;
  p.add(e, c);
  return p;
}

void LaurentPoly::add(int e, long long c) {
  if (c == 0) return;
  auto& v = terms_[e];
  v += c;
  if (v == 0) terms_.erase(e);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) r.add(e1 + e2, c1 * c2);
  }
  return r;
}

std::complex<double> LaurentPoly::eval(std::complex<double> x) const {
  std::complex<double> s = 0;
  for (const auto& [e, c] : terms_) s += static_cast<double>(c) * std::pow(x, e);
  return s;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const long long a = std::llabs(c);
    if (a != 1 || e == 0) os << a;
    if (e != 0) os << var << "^" << e;
    first = false;
  }
  return os.str();
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Number of circles after smoothing every crossing; smooth[i] is 0 for the
// vertical (A) resolution of letter i and 1 for the cup-cap one.
int count_loops(int n, const std::vector<Letter>& letters, const std::vector<int>& smooth) {
  const int levels = static_cast<int>(letters.size()) + 1;
  Dsu d(n * levels);
  auto id = [n](int t, int x) { return t * n + x; };
  for (int i = 0; i < n; i += 2) {
    d.unite(id(0, i), id(0, i + 1));
    d.unite(id(levels - 1, i), id(levels - 1, i + 1));
  }
  for (int t = 0; t + 1 < levels; ++t) {
    const int a = letters[t].index - 1;
    for (int x = 0; x < n; ++x) {
      if (x != a && x != a + 1) d.unite(id(t, x), id(t + 1, x));
    }
    if (smooth[t] == 0) {
      d.unite(id(t, a), id(t + 1, a));
      d.unite(id(t, a + 1), id(t + 1, a + 1));
    } else {
      d.unite(id(t, a), id(t, a + 1));
      d.unite(id(t + 1, a), id(t + 1, a + 1));
    }
  }
  int loops = 0;
  for (int v = 0; v < n * levels; ++v) loops += d.find(v) == v;
  return loops;
}

void require_spin_half(const ColoredBraidWord& w) {
  for (std::size_t i = 0; i < w.colors.size(); ++i) {
    if (w.colors[i].spin.twice != 1) {
      throw DomainError("Kauffman oracle needs spin 1/2 on every strand; colors_twice[" + std::to_string(i) + "] = " +
                        std::to_string(w.colors[i].spin.twice));
    }
  }
}

}  // namespace

LaurentPoly kauffman_bracket(const ColoredBraidWord& w, const std::vector<int>& order_in) {
  validate_word(w);
  if (w.empty_link()) return LaurentPoly::monomial(0);
  require_spin_half(w);
  const int nc = static_cast<int>(w.letters.size());
  if (nc > kMaxOracleCrossings) {
    throw ResourceError("Kauffman oracle limited to " + std::to_string(kMaxOracleCrossings) + " crossings, got " +
                        std::to_string(nc));
  }
  std::vector<int> order = order_in;
  if (order.empty()) {
    order.resize(nc);
    std::iota(order.begin(), order.end(), 0);
  }
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < nc; ++i) {
      if (static_cast<int>(sorted.size()) != nc || sorted[i] != i) throw RangeError("order: not a permutation of crossings");
    }
  }
  // d = -A^2 - A^-2; powers cached as the loop count grows.
  const LaurentPoly d = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
  std::vector<LaurentPoly> dpow{LaurentPoly::monomial(0)};
  std::vector<int> smooth(nc, 0);
  LaurentPoly total;
  std::function<void(int, int)> expand = [&](int depth, int a_exp) {
    if (depth == nc) {
      const int loops = count_loops(w.strands, w.letters, smooth);
      while (static_cast<int>(dpow.size()) < loops) dpow.push_back(dpow.back() * d);
      total += LaurentPoly::monomial(a_exp) * dpow[loops - 1];
      return;
    }
    const int c = order[depth];
    const int s = w.letters[c].sign;
    smooth[c] = 0;
    expand(depth + 1, a_exp + s);
    smooth[c] = 1;
    expand(depth + 1, a_exp - s);
  };
  expand(0, 0);
  return total;
}

std::complex<double> jones_at_angle(const ColoredBraidWord& w, std::complex<double> theta) {
  if (w.empty_link()) return 1.0;
  const auto br = kauffman_bracket(w);
  const std::complex<double> a = std::exp(std::complex<double>(0, -1) * theta / 4.0);
  const int nl = components(w).n_components;
  const int ws = writhe(w);
  const std::complex<double> pre = std::pow(-std::pow(a, 3), -ws) * ((nl - 1) % 2 ? -1.0 : 1.0);
  return pre * br.eval(a);
}

std::complex<double> jones_at(const ColoredBraidWord& w, const RootOfUnity& root) {
  return jones_at_angle(w, root.angle());
}

LaurentPoly jones_polynomial(const ColoredBraidWord& w) {
  const auto br = kauffman_bracket(w);
  const int wt = total_writhe(w);
  LaurentPoly pre = LaurentPoly::monomial(-3 * wt, (wt % 2) ? -1 : 1);
  const auto pa = pre * br;
  LaurentPoly out;
  for (const auto& [e, c] : pa.terms()) {
    if (e % 2 != 0) throw std::logic_error("odd exponent in Jones polynomial");
    out += LaurentPoly::monomial(-e / 2, c);
  }
  return out;
}

namespace {

struct Tree {
  int leaf = -1;  // leaf index, or -1 for an internal node
  int label = 0;  // twice-spin of the edge above this node
  std::shared_ptr<const Tree> left, right;
};
using TreePtr = std::shared_ptr<const Tree>;

TreePtr leaf(int i, int spin) { return std::make_shared<const Tree>(Tree{i, spin, nullptr, nullptr}); }
TreePtr node(TreePtr l, TreePtr r, int label) { return std::make_shared<const Tree>(Tree{-1, label, l, r}); }

// Expands a tree into left combs; the key lists the spine labels bottom-up.
std::map<std::vector<int>, double> expand(const TreePtr& t, KaulRep& rep) {
  if (t->leaf >= 0) return {{{}, 1.0}};
  std::map<std::vector<int>, double> out;
  if (t->right->leaf >= 0) {
    for (const auto& [k0, v] : expand(t->left, rep)) {
      auto key = k0;
      key.push_back(t->label);
      out[key] += v;
    }
    return out;
  }
  const auto& r1 = t->right->left;
  const auto& r2 = t->right->right;
  const int a = t->left->label, b = r1->label, c = r2->label, d = t->label, f = t->right->label;
  for (int e = std::abs(a - b); e <= a + b; e += 2) {
    const double co = rep.sixj(a, b, c, d, f, e);
    if (co == 0.0) continue;
    for (const auto& [key, v] : expand(node(node(t->left, r1, e), r2, d), rep)) out[key] += co * v;
  }
  return out;
}

}  // namespace

UnitaryOp tree_recoupling_oracle(const PunctureColors& colors, const RootOfUnity& root) {
  const int m = colors.m();
  if (m < 2 || m > 3) throw ResourceError("tree recoupling oracle supports m = 2 or 3 only");
  const int n = 2 * m;
  KaulRep rep(root);
  auto odd = std::make_shared<const BlockBasis>(enumerate_basis(colors, root));
  auto even = std::make_shared<const BlockBasis>(enumerate_even_basis(colors, root));
  const auto c = colors.twice_values();
  auto odd_tree = [&](const BlockLabel& l) {
    auto pair = [&](int i) { return node(leaf(2 * i, c[2 * i]), leaf(2 * i + 1, c[2 * i + 1]), l.p[i]); };
    TreePtr t = pair(0);
    for (int i = 1; i <= m - 2; ++i) t = node(t, pair(i), l.r[i]);
    return node(t, leaf(n - 2, c[n - 2]), c[n - 1]);
  };
  auto even_tree = [&](const BlockLabel& l) {
    auto pair = [&](int i) { return node(leaf(2 * i - 1, c[2 * i - 1]), leaf(2 * i, c[2 * i]), l.p[i]); };
    TreePtr s = pair(m - 1);
    for (int i = m - 2; i >= 1; --i) s = node(pair(i), s, l.r[i - 1]);
    return node(leaf(0, c[0]), s, c[n - 1]);
  };
  std::vector<std::map<std::vector<int>, double>> oe, ee;
  for (const auto& l : odd->labels()) oe.push_back(expand(odd_tree(l), rep));
  for (const auto& l : even->labels()) ee.push_back(expand(even_tree(l), rep));
  CMatrix a = CMatrix::Zero(even->dim(), odd->dim());
  for (std::size_t i = 0; i < ee.size(); ++i) {
    for (std::size_t j = 0; j < oe.size(); ++j) {
      double s = 0;
      for (const auto& [key, v] : ee[i]) {
        auto it = oe[j].find(key);
        if (it != oe[j].end()) s += v * it->second;
      }
      a(i, j) = s;
    }
  }
  return {odd, even, a};
}

namespace {

std::complex<double> fig8_from_half(int n, std::complex<double> s) {
  auto br = [&](int x) { return std::pow(s, x) - std::pow(s, -x); };
  std::complex<double> total = 0, prod = 1;
  for (int j = 0; j < n; ++j) {
    if (j > 0) prod *= br(n - j) * br(n + j);
    total += prod;
  }
  return total;
}

}  // namespace

std::complex<double> fig8_colored_jones(int n, std::complex<double> q) {
  if (n < 1) throw DomainError("fig8_colored_jones needs N >= 1");
  return fig8_from_half(n, std::sqrt(q));
}

std::complex<double> fig8_colored_jones_angle(int n, std::complex<double> theta) {
  if (n < 1) throw DomainError("fig8_colored_jones needs N >= 1");
  return fig8_from_half(n, std::exp(std::complex<double>(0, 0.5) * theta));
}

double fig8_volume(long long terms) {
  // sin(n pi / 3) cycles through s, s, 0, -s, -s, 0 with s = sqrt(3)/2.
  static constexpr int kPattern[6] = {0, 1, 1, 0, -1, -1};
  double sum = 0.0;
  for (long long k = terms; k >= 1; --k) {
    const int p = kPattern[k % 6];
    if (p) sum += p / (static_cast<double>(k) * static_cast<double>(k));
  }
  return 2.0 * (std::sqrt(3.0) / 2.0) * sum;
}

}  // namespace cjones
