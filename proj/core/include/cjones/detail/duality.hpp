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

#ifndef CJONES_DETAIL_DUALITY_HPP
#define CJONES_DETAIL_DUALITY_HPP

// Assembly of the odd -> even duality matrix from elementary q-6j moves.
//
// A factor callable has the signature
//   Scalar f(int a, int b, int c, int d, int bc, int ab, NewLabel which)
// and returns the recoupling coefficient between ((a b)_ab c)_d and
// (a (b c)_bc)_d, or 0 when a triad is inadmissible. `which` names the label
// that is produced by the move; gauge-free factors ignore it.

#include <Eigen/Dense>
#include <cstdlib>
#include <functional>
#include <vector>

#include "cjones/blocks.hpp"

namespace cjones::detail {

enum class NewLabel { ab, bc };

inline NewLabel flip(NewLabel w, bool inverse) {
  if (!inverse) return w;
  return w == NewLabel::ab ? NewLabel::bc : NewLabel::ab;
}

// Literal factored sum over t_1..t_{m-2}, with t_0 = j_1 and t_{m-1} = j_2m.
template <class Scalar, class Factor>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> literal_duality(const BlockBasis& odd, const BlockBasis& even,
                                                                     const Factor& f, bool inverse = false) {
  const auto c = odd.colors().twice_values();
  const int m = odd.colors().m();
  const int n = 2 * m;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(even.dim(), odd.dim());
  out.setZero();
  const NewLabel w1 = flip(NewLabel::ab, inverse);
  const NewLabel w23 = flip(NewLabel::bc, inverse);
  std::vector<int> t(m);
  t[0] = c[0];
  t[m - 1] = c[n - 1];
  for (std::size_t ei = 0; ei < even.dim(); ++ei) {
    const auto& qs = even.label_at(ei);
    for (std::size_t oi = 0; oi < odd.dim(); ++oi) {
      const auto& pr = odd.label_at(oi);
      Scalar total = 0;
      std::function<void(int, Scalar)> sum_t = [&](int i, Scalar acc) {
        if (i == m - 1) {
          for (int l = 0; l <= m - 2; ++l) {
            acc *= f(t[l], c[2 * l + 1], c[2 * l + 2], t[l + 1], qs.p[l + 1], pr.r[l], w23);
            if (acc == Scalar(0)) return;
          }
          total += acc;
          return;
        }
        const int lo = std::abs(pr.r[i - 1] - c[2 * i]);
        const int hi = pr.r[i - 1] + c[2 * i];
        for (int x = lo; x <= hi; x += 2) {
          t[i] = x;
          Scalar v = acc * f(pr.r[i - 1], c[2 * i], c[2 * i + 1], pr.r[i], pr.p[i], x, w1);
          if (v == Scalar(0)) continue;
          v *= f(t[i - 1], qs.p[i], qs.r[i], c[n - 1], qs.r[i - 1], x, w23);
          if (v == Scalar(0)) continue;
          sum_t(i + 1, v);
        }
      };
      sum_t(1, Scalar(1));
      out(ei, oi) = total;
    }
  }
  return out;
}

// Labels of the left comb (((j1 j2)_{a0} j3)_{a1} ... j_{2m-1})_{j_2m}.
inline std::vector<std::vector<int>> comb_labels(const std::vector<int>& c, int level) {
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<int>> out;
  std::vector<int> a(n - 3);
  std::function<void(int, int)> rec = [&](int i, int prev) {
    if (i == n - 3) {
      if (admissible_twice(prev, c[n - 2], c[n - 1], level)) out.push_back(a);
      return;
    }
    for (int x = std::abs(prev - c[i + 1]); x <= prev + c[i + 1]; x += 2) {
      if (!admissible_twice(prev, c[i + 1], x, level)) continue;
      a[i] = x;
      rec(i + 1, x);
    }
  };
  rec(0, c[0]);
  return out;
}

// Labels (t_1..t_{m-2}, q_1..q_{m-1}) of (((j1 Q1)_{t1} Q2)_{t2} ... Q_{m-1})_{j_2m}.
struct LeftQLabel {
  std::vector<int> t;  // t_0..t_{m-1}, ends fixed to j_1 and j_2m
  std::vector<int> q;  // q_1..q_{m-1} stored at index 1..m-1
};

inline std::vector<LeftQLabel> leftq_labels(const std::vector<int>& c, int level) {
  const int n = static_cast<int>(c.size());
  const int m = n / 2;
  std::vector<LeftQLabel> out;
  LeftQLabel cur{std::vector<int>(m), std::vector<int>(m, 0)};
  cur.t[0] = c[0];
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      out.push_back(cur);
      return;
    }
    const int a = c[2 * i - 1];
    const int b = c[2 * i];
    for (int q = std::abs(a - b); q <= a + b; q += 2) {
      if (!admissible_twice(a, b, q, level)) continue;
      cur.q[i] = q;
      if (i == m - 1) {
        if (!admissible_twice(cur.t[i - 1], q, c[n - 1], level)) continue;
        cur.t[i] = c[n - 1];
        rec(i + 1);
        continue;
      }
      for (int t = std::abs(cur.t[i - 1] - q); t <= cur.t[i - 1] + q; t += 2) {
        if (!admissible_twice(cur.t[i - 1], q, t, level)) continue;
        cur.t[i] = t;
        rec(i + 1);
      }
    }
  };
  rec(1);
  return out;
}

// Product of elementary move matrices odd -> comb -> left q-tree -> even.
template <class Scalar, class Factor>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> duality_by_moves(const BlockBasis& odd, const BlockBasis& even,
                                                                      const Factor& f, bool inverse = false) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto c = odd.colors().twice_values();
  const int m = odd.colors().m();
  const int n = 2 * m;
  const int level = odd.level();
  const auto comb = comb_labels(c, level);
  const auto leftq = leftq_labels(c, level);
  const NewLabel w1 = flip(NewLabel::ab, inverse);
  const NewLabel w23 = flip(NewLabel::bc, inverse);

  Mat m1 = Mat::Zero(comb.size(), odd.dim());
  for (std::size_t ci = 0; ci < comb.size(); ++ci) {
    const auto& a = comb[ci];
    for (std::size_t oi = 0; oi < odd.dim(); ++oi) {
      const auto& pr = odd.label_at(oi);
      bool match = true;
      for (int i = 0; i <= m - 2 && match; ++i) match = a[2 * i] == pr.r[i];
      if (!match) continue;
      Scalar v = 1;
      for (int i = 1; i <= m - 2; ++i) v *= f(pr.r[i - 1], c[2 * i], c[2 * i + 1], pr.r[i], pr.p[i], a[2 * i - 1], w1);
      m1(ci, oi) = v;
    }
  }
  Mat m3 = Mat::Zero(leftq.size(), comb.size());
  for (std::size_t li = 0; li < leftq.size(); ++li) {
    const auto& lq = leftq[li];
    for (std::size_t ci = 0; ci < comb.size(); ++ci) {
      const auto& a = comb[ci];
      bool match = true;
      for (int i = 1; i <= m - 2 && match; ++i) match = lq.t[i] == a[2 * i - 1];
      if (!match) continue;
      Scalar v = 1;
      for (int l = 0; l <= m - 2; ++l) v *= f(lq.t[l], c[2 * l + 1], c[2 * l + 2], lq.t[l + 1], lq.q[l + 1], a[2 * l], w23);
      m3(li, ci) = v;
    }
  }
  Mat m2 = Mat::Zero(even.dim(), leftq.size());
  for (std::size_t ei = 0; ei < even.dim(); ++ei) {
    const auto& qs = even.label_at(ei);
    for (std::size_t li = 0; li < leftq.size(); ++li) {
      const auto& lq = leftq[li];
      bool match = true;
      for (int i = 1; i <= m - 1 && match; ++i) match = lq.q[i] == qs.p[i];
      if (!match) continue;
      Scalar v = 1;
      for (int i = 1; i <= m - 2; ++i) v *= f(lq.t[i - 1], qs.p[i], qs.r[i], c[n - 1], qs.r[i - 1], lq.t[i], w23);
      m2(ei, li) = v;
    }
  }
  return m2 * m3 * m1;
}

}  // namespace cjones::detail

#endif  // CJONES_DETAIL_DUALITY_HPP
