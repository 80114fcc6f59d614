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

#include "cjones/invariant.hpp"

#include <cmath>
#include <thread>
#include <unordered_map>

#include "cjones/detail/duality.hpp"
#include "cjones/oracle.hpp"

namespace cjones {

using cd = std::complex<double>;

std::complex<double> plat_expectation(const ColoredBraidWord& word, KaulRep& rep) {
  validate_word(word, rep.root().k());
  if (word.empty_link()) return 1.0;
  const auto in = rep.odd_basis(word.bottom());
  const auto out = rep.odd_basis(PunctureColors(colors_after(word)));
  const auto vin = in->index_of(vacuum_label(*in));
  const auto vout = out->index_of(vacuum_label(*out));
  CVector e = CVector::Zero(in->dim());
  e(vin) = 1.0;
  return rep.apply(word, e)(vout);
}

std::complex<double> plat_expectation(const ColoredBraidWord& word, const RootOfUnity& root) {
  KaulRep rep(root);
  return plat_expectation(word, rep);
}

double interlink_casimir_exponent(const ColoredBraidWord& word) {
  const auto lc = components(word);
  double x = 0.0;
  for (const auto& c : crossings(word)) {
    const int a = c.left_strand, b = c.right_strand;
    if (lc.component_of[a] == lc.component_of[b]) continue;
    x += c.sign * casimir_twice(std::min(word.colors[a].spin.twice, word.colors[b].spin.twice));
  }
  return x;
}

namespace {

std::vector<Spin> component_spins(const ColoredBraidWord& word) {
  const auto lc = components(word);
  std::vector<Spin> s(lc.n_components);
  for (int i = 0; i < word.strands; ++i) s[lc.component_of[i]] = word.colors[i].spin;
  return s;
}

// Fills V, E, J from the vacuum element; qi and qpow evaluate [x] and q^x.
template <class QInt, class QPow>
InvariantResult finish(const ColoredBraidWord& word, cd expectation, const QInt& qi, const QPow& qpow) {
  InvariantResult r;
  r.expectation = expectation;
  if (word.empty_link()) {
    r.V = r.E = r.J = 1.0;
    return r;
  }
  cd pref = 1.0;
  for (int i = 0; i < word.m(); ++i) pref *= qi(word.colors[2 * i].spin.twice + 1);
  r.V = pref * expectation;
  r.E = r.V * qpow(-interlink_casimir_exponent(word));
  r.J = r.E / cd(qi(word.colors[0].spin.twice + 1));
  r.writhe = writhe(word);
  r.colors = component_spins(word);
  return r;
}

}  // namespace

InvariantResult colored_jones(const ColoredBraidWord& word, KaulRep& rep) {
  const auto& root = rep.root();
  auto r = finish(
      word, plat_expectation(word, rep), [&](int x) { return cd(qint(x, root)); },
      [&](double x) { return root.qpow(x); });
  r.q_used = root.q();
  return r;
}

InvariantResult colored_jones(const ColoredBraidWord& word, const RootOfUnity& root) {
  KaulRep rep(root);
  return colored_jones(word, rep);
}

RTResult rt_invariant(const ColoredBraidWord& word, const std::vector<int>& framings, const RootOfUnity& root,
                      const RTOptions& opts) {
  RTResult res;
  res.k = root.k();
  res.k_used = opts.rt_shift ? root.k() + 2 : root.k();
  const double kk = res.k_used;
  res.b = std::sqrt(2.0 / kk) * std::sin(kPi / kk);
  res.c = std::polar(1.0, -2.0 * kPi * (kk - 2.0) / (8.0 * kk));
  if (root.conjugated()) res.c = std::conj(res.c);
  if (word.empty_link()) {
    res.alpha = 1.0;
    res.tau = 1.0;
    return res;
  }
  validate_word(word, root.k());
  const auto lc = components(word);
  const int nl = lc.n_components;
  res.n_components = nl;
  res.sigma = signature(linking_matrix(word, framings));
  res.alpha = std::pow(res.b, nl) * std::pow(res.c, res.sigma);

  const int base = root.k() + 1;
  long long count = 1;
  for (int i = 0; i < nl; ++i) {
    count *= base;
    if (count > opts.max_terms) {
      throw ResourceError("RT sum has more than " + std::to_string(opts.max_terms) + " colour assignments");
    }
  }
  std::vector<RTTerm> terms(count);
  auto work = [&](long long begin, long long end) {
    KaulRep rep(root);
    for (long long idx = begin; idx < end; ++idx) {
      std::vector<int> spins(nl);
      long long x = idx;
      for (int i = 0; i < nl; ++i) {
        spins[i] = static_cast<int>(x % base);
        x /= base;
      }
      auto w = make_plat_word(word.strands, word.letters, spins);
      const auto cj = colored_jones(w, rep);
      cd e = cj.E;
      double weight = 1.0;
      for (int i = 0; i < nl; ++i) {
        e *= root.qpow(framings[i] * casimir_twice(spins[i]));
        weight *= qint(spins[i] + 1, root);
      }
      terms[idx] = {spins, weight, e};
    }
  };
  const int nt = std::max(1, std::min<int>(opts.threads, static_cast<int>(count)));
  if (nt == 1) {
    work(0, count);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(work, count * t / nt, count * (t + 1) / nt);
    for (auto& th : pool) th.join();
  }
  cd sum = 0.0;
  for (const auto& t : terms) sum += t.weight * t.E;
  res.tau = res.alpha * sum;
  if (opts.keep_terms) res.terms = std::move(terms);
  return res;
}

namespace {

// Rational-gauge recoupling coefficient at a complex angle. The produced
// label carries [2x+1] Delta^2 Delta^2, so no square roots appear.
class AnalyticFactor {
 public:
  explicit AnalyticFactor(cd theta) : theta_(theta), s_(std::sin(theta / 2.0)) {}

  cd qi(int x) const { return std::sin(cd(x) * theta_ / 2.0) / s_; }
  cd qpow(double x) const { return std::exp(cd(0, 1) * x * theta_); }

  cd operator()(int a, int b, int c, int d, int bc, int ab, detail::NewLabel which) const {
    if (!admissible_twice(a, b, ab, -1) || !admissible_twice(c, d, ab, -1) || !admissible_twice(a, d, bc, -1) ||
        !admissible_twice(b, c, bc, -1)) {
      return 0.0;
    }
    std::uint64_t key = which == detail::NewLabel::bc ? 1 : 0;
    for (int x : {a, b, c, d, bc, ab}) key = (key << 10) | static_cast<std::uint64_t>(x & 1023);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto q = [this](int x) { return qi(x); };
    const cd sg = ((a + b + c + d) / 2) % 2 ? -1.0 : 1.0;
    const cd s = detail::racah_series(a, b, c, d, ab, bc, q);
    cd v;
    if (which == detail::NewLabel::bc) {
      v = sg * qi(bc + 1) * detail::delta_squared(a, d, bc, q) * detail::delta_squared(b, c, bc, q) * s;
    } else {
      v = sg * qi(ab + 1) * detail::delta_squared(a, b, ab, q) * detail::delta_squared(c, d, ab, q) * s;
    }
    memo_.emplace(key, v);
    return v;
  }

 private:
  cd theta_;
  cd s_;
  mutable std::unordered_map<std::uint64_t, cd> memo_;
};

cd analytic_eigenvalue(int t, int j, int i, bool parallel, int sign, const AnalyticFactor& f) {
  int e;
  double x;
  if (parallel) {
    e = (j + i - t) / 2;
    x = (casimir_twice(j) + casimir_twice(i)) / 2 + casimir_twice(std::min(i, j)) - casimir_twice(t) / 2;
  } else {
    e = (std::abs(j - i) - t) / 2;
    x = -(-std::abs(casimir_twice(j) - casimir_twice(i)) / 2 + casimir_twice(t) / 2);
  }
  return f.qpow(sign * x) * (e % 2 ? -1.0 : 1.0);
}

}  // namespace

InvariantResult colored_jones_analytic(const ColoredBraidWord& word, std::complex<double> theta) {
  validate_word(word);
  AnalyticFactor f(theta);
  if (word.empty_link()) {
    return finish(
        word, 1.0, [&](int x) { return f.qi(x); }, [&](double x) { return f.qpow(x); });
  }
  using CMat = Eigen::MatrixXcd;
  PunctureColors c = word.bottom();
  auto basis = std::make_shared<const BlockBasis>(enumerate_basis(c, -1, Coupling::odd));
  if (basis->dim() > kMaxExactDim) throw ResourceError("analytic path: basis dimension exceeds the cap");
  const auto vin = basis->index_of(vacuum_label(*basis));
  CVector x = CVector::Zero(basis->dim());
  x(vin) = 1.0;
  for (const auto& l : word.letters) {
    const int i = l.index;
    auto cv = c.colors;
    const bool parallel = cv[i - 1].orient == cv[i].orient;
    const int b = cv[i - 1].spin.twice, cc = cv[i].spin.twice;
    std::swap(cv[i - 1], cv[i]);
    PunctureColors cout(cv);
    auto bout = std::make_shared<const BlockBasis>(enumerate_basis(cout, -1, Coupling::odd));
    if (i % 2) {
      const int a = (i - 1) / 2;
      for (std::size_t r = 0; r < basis->dim(); ++r) {
        x(r) *= analytic_eigenvalue(basis->label_at(r).p[a], b, cc, parallel, l.sign, f);
      }
    } else {
      const auto ein = enumerate_basis(c, -1, Coupling::even);
      const auto eout = enumerate_basis(cout, -1, Coupling::even);
      const CMat fwd = detail::duality_by_moves<cd>(*basis, ein, f, false);
      const CMat inv = detail::duality_by_moves<cd>(*bout, eout, f, true);
      CVector y = fwd * x;
      for (std::size_t r = 0; r < ein.dim(); ++r) {
        y(r) *= analytic_eigenvalue(ein.label_at(r).p[i / 2], b, cc, parallel, l.sign, f);
      }
      x = inv.transpose() * y;
    }
    c = cout;
    basis = bout;
  }
  const auto vout = basis->index_of(vacuum_label(*basis));
  auto r = finish(
      word, x(vout), [&](int v) { return f.qi(v); }, [&](double v) { return f.qpow(v); });
  r.q_used = f.qpow(1.0);
  return r;
}

std::complex<double> kaul_volume_point(const LibraryEntry& knot, int n, const VolumeOptions& opts) {
  if (knot.components != 1) throw DomainError("volume_ratio needs a knot, '" + knot.name + "' has several components");
  if (n < 2) throw DomainError("volume_ratio needs N >= 2");
  const auto word = library_word(knot, n - 1);
  const double theta0 = 2.0 * kPi / n;
  cd sum = 0.0;
  for (int s = 0; s < opts.contour_points; ++s) {
    const cd theta = theta0 + opts.radius * std::exp(cd(0, 2.0 * kPi * (s + 0.5) / opts.contour_points));
    sum += colored_jones_analytic(word, theta).J;
  }
  return sum / static_cast<double>(opts.contour_points);
}

VolumePoint volume_ratio(const LibraryEntry& knot, int n, const VolumeOptions& opts) {
  VolumePoint p;
  p.n = n;
  if (n <= opts.max_kaul_n) {
    p.j_n = kaul_volume_point(knot, n, opts);
    p.method = "kaul";
  } else if (knot.name == "figure-eight") {
    p.j_n = fig8_colored_jones_angle(n, 2.0 * kPi / n);
    p.method = "oracle";
  } else {
    throw ResourceError("volume_ratio: N = " + std::to_string(n) + " exceeds the exact-path limit " +
                        std::to_string(opts.max_kaul_n) + " and no closed form exists for '" + knot.name + "'");
  }
  p.abs_j = std::abs(p.j_n);
  p.ratio = 2.0 * kPi * std::log(p.abs_j) / n;
  return p;
}

}  // namespace cjones
