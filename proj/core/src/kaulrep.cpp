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

#include "cjones/kaulrep.hpp"

#include <cmath>
#include <string>

#include "cjones/detail/duality.hpp"

namespace cjones {

double UnitaryOp::unitarity_defect() const {
  if (entries.rows() != entries.cols()) return INFINITY;
  const CMatrix d = entries.adjoint() * entries - CMatrix::Identity(entries.rows(), entries.cols());
  return d.size() ? d.cwiseAbs().maxCoeff() : 0.0;
}

UnitaryOp compose(const UnitaryOp& second, const UnitaryOp& first) {
  if (!(first.basis_out->colors() == second.basis_in->colors()) ||
      first.basis_out->coupling() != second.basis_in->coupling()) {
    throw ColorMismatch("compose: output colours of the first map differ from input colours of the second");
  }
  return {first.basis_in, second.basis_out, second.entries * first.entries};
}

std::complex<double> braiding_eigenvalue(const EigenvalueSpec& s, const RootOfUnity& root) {
  const int t = s.t.twice, j = s.j.twice, i = s.i.twice;
  if (!admissible_twice(j, i, t, root.k())) {
    throw AdmissibilityError("braiding eigenvalue: (j,i,t) = (" + std::to_string(j) + "," + std::to_string(i) + "," +
                             std::to_string(t) + ") [twice-values] is not admissible");
  }
  int e;
  double x;
  if (s.parallel) {
    e = (j + i - t) / 2;
    x = (casimir_twice(j) + casimir_twice(i)) / 2 + casimir_twice(std::min(i, j)) - casimir_twice(t) / 2;
  } else {
    e = (std::abs(j - i) - t) / 2;
    x = -std::abs(casimir_twice(j) - casimir_twice(i)) / 2 + casimir_twice(t) / 2;
  }
  std::complex<double> v = root.qpow(x) * (e % 2 ? -1.0 : 1.0);
  return s.over ? v : std::conj(v);
}

std::complex<double> generator_eigenvalue(const EigenvalueSpec& s, const RootOfUnity& root,
                                          EigenvalueConvention conv) {
  const auto v = braiding_eigenvalue(s, root);
  if (conv == EigenvalueConvention::calibrated && !s.parallel) return std::conj(v);
  return v;
}

KaulRep::KaulRep(RootOfUnity root, EigenvalueConvention conv) : root_(root), conv_(conv) {}

double KaulRep::sixj(int a, int b, int c, int d, int bc, int ab) {
  const QRacahArgs args{Spin{a}, Spin{b}, Spin{c}, Spin{d}, Spin{ab}, Spin{bc}};
  if (!racah_admissible(args, root_.k())) return 0.0;
  std::uint64_t key = 0;
  for (int x : {a, b, c, d, bc, ab}) key = (key << 10) | static_cast<std::uint64_t>(x & 1023);
  auto it = sixj_.find(key);
  if (it != sixj_.end()) return it->second;
  const double v = duality6j(args, root_);
  sixj_.emplace(key, v);
  return v;
}

namespace {

void check_dim(const BlockBasis& b) {
  if (b.dim() > kMaxExactDim) {
    throw ResourceError("basis dimension " + std::to_string(b.dim()) + " exceeds the exact-path cap " +
                        std::to_string(kMaxExactDim));
  }
}

PunctureColors swapped(const PunctureColors& c, int l) {
  auto v = c.colors;
  std::swap(v[l - 1], v[l]);
  return PunctureColors(std::move(v));
}

}  // namespace

BasisPtr KaulRep::odd_basis(const PunctureColors& colors) {
  auto key = colors.twice_values();
  for (const auto& x : colors.colors) key.push_back(x.orient);
  auto it = odd_.find(key);
  if (it != odd_.end()) return it->second;
  auto b = std::make_shared<const BlockBasis>(enumerate_basis(colors, root_));
  check_dim(*b);
  odd_.emplace(key, b);
  return b;
}

BasisPtr KaulRep::even_basis(const PunctureColors& colors) {
  auto key = colors.twice_values();
  for (const auto& x : colors.colors) key.push_back(x.orient);
  auto it = even_.find(key);
  if (it != even_.end()) return it->second;
  auto b = std::make_shared<const BlockBasis>(enumerate_even_basis(colors, root_));
  check_dim(*b);
  even_.emplace(key, b);
  return b;
}

const RMatrix& KaulRep::duality(const PunctureColors& colors) {
  if (colors.m() < 2) throw RangeError("duality matrix needs at least 4 punctures");
  const auto key = colors.twice_values();
  auto it = duality_.find(key);
  if (it != duality_.end()) return it->second;
  auto f = [this](int a, int b, int c, int d, int bc, int ab, detail::NewLabel) { return sixj(a, b, c, d, bc, ab); };
  RMatrix a = detail::literal_duality<double>(*odd_basis(colors), *even_basis(colors), f);
  return duality_.emplace(key, std::move(a)).first->second;
}

RMatrix KaulRep::duality_by_moves(const PunctureColors& colors) {
  if (colors.m() < 2) throw RangeError("duality matrix needs at least 4 punctures");
  auto f = [this](int a, int b, int c, int d, int bc, int ab, detail::NewLabel) { return sixj(a, b, c, d, bc, ab); };
  return detail::duality_by_moves<double>(*odd_basis(colors), *even_basis(colors), f);
}

std::vector<std::complex<double>> KaulRep::odd_diagonal(int l, const BlockBasis& basis, int sign) {
  const auto& c = basis.colors();
  const int a = (l - 1) / 2;
  const EigenvalueSpec base{Spin{0}, c.colors[l - 1].spin, c.colors[l].spin,
                            c.colors[l - 1].orient == c.colors[l].orient, sign > 0};
  std::vector<std::complex<double>> d;
  for (const auto& lab : basis.labels()) {
    auto s = base;
    s.t = Spin{lab.p[a]};
    d.push_back(generator_eigenvalue(s, root_, conv_));
  }
  return d;
}

UnitaryOp KaulRep::odd_generator(int l, const BlockBasis& basis, int sign) {
  const auto& c = basis.colors();
  if (l < 1 || l >= c.size() || l % 2 == 0) throw RangeError("odd generator index out of range: " + std::to_string(l));
  const auto d = odd_diagonal(l, basis, sign);
  auto out = odd_basis(swapped(c, l));
  auto in = odd_basis(c);
  CMatrix u = CMatrix::Zero(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) u(i, i) = d[i];
  return {in, out, u};
}

UnitaryOp KaulRep::even_generator(int l, const BlockBasis& basis, int sign) {
  const auto& c = basis.colors();
  if (l < 2 || l >= c.size() || l % 2 != 0) throw RangeError("even generator index out of range: " + std::to_string(l));
  const auto cout = swapped(c, l);
  const RMatrix& ain = duality(c);
  const RMatrix& aout = duality(cout);
  const auto ev = even_basis(c);
  const int a = l / 2;
  const EigenvalueSpec base{Spin{0}, c.colors[l - 1].spin, c.colors[l].spin,
                            c.colors[l - 1].orient == c.colors[l].orient, sign > 0};
  CVector d(ev->dim());
  for (std::size_t i = 0; i < ev->dim(); ++i) {
    auto s = base;
    s.t = Spin{ev->label_at(i).p[a]};
    d(i) = generator_eigenvalue(s, root_, conv_);
  }
  CMatrix u = aout.transpose().cast<std::complex<double>>() * d.asDiagonal() * ain.cast<std::complex<double>>();
  return {odd_basis(c), odd_basis(cout), u};
}

UnitaryOp KaulRep::generator(int l, const BlockBasis& basis, int sign) {
  return l % 2 ? odd_generator(l, basis, sign) : even_generator(l, basis, sign);
}

UnitaryOp KaulRep::represent(const ColoredBraidWord& word) {
  validate_word(word, root_.k(), false);
  auto cur = odd_basis(word.bottom());
  UnitaryOp u{cur, cur, CMatrix::Identity(cur->dim(), cur->dim())};
  for (const auto& l : word.letters) {
    auto g = generator(l.index, *u.basis_out, l.sign);
    u = compose(g, u);
  }
  return u;
}

CVector KaulRep::apply(const ColoredBraidWord& word, const CVector& v) {
  validate_word(word, root_.k(), false);
  auto cur = odd_basis(word.bottom());
  if (static_cast<std::size_t>(v.size()) != cur->dim()) throw DimensionMismatch("apply: vector size differs from basis");
  CVector x = v;
  for (const auto& l : word.letters) {
    const auto& c = cur->colors();
    if (l.index % 2) {
      const auto d = odd_diagonal(l.index, *cur, l.sign);
      for (Eigen::Index i = 0; i < x.size(); ++i) x(i) *= d[i];
    } else {
      const auto cout = swapped(c, l.index);
      const auto ev = even_basis(c);
      const int a = l.index / 2;
      const EigenvalueSpec base{Spin{0}, c.colors[l.index - 1].spin, c.colors[l.index].spin,
                                c.colors[l.index - 1].orient == c.colors[l.index].orient, l.sign > 0};
      CVector y = duality(c).cast<std::complex<double>>() * x;
      for (std::size_t i = 0; i < ev->dim(); ++i) {
        auto s = base;
        s.t = Spin{ev->label_at(i).p[a]};
        y(i) *= generator_eigenvalue(s, root_, conv_);
      }
      x = duality(cout).transpose().cast<std::complex<double>>() * y;
    }
    cur = odd_basis(swapped(c, l.index));
  }
  return x;
}

UnitaryOp odd_generator(int l, const BlockBasis& basis, const RootOfUnity& root, int sign) {
  return KaulRep(root).odd_generator(l, basis, sign);
}

UnitaryOp even_generator(int l, const BlockBasis& basis, const RootOfUnity& root, int sign) {
  return KaulRep(root).even_generator(l, basis, sign);
}

UnitaryOp full_duality_matrix(const PunctureColors& colors, const RootOfUnity& root) {
  KaulRep rep(root);
  const RMatrix a = rep.duality(colors);
  return {rep.odd_basis(colors), rep.even_basis(colors), a.cast<std::complex<double>>()};
}

UnitaryOp represent_word(const ColoredBraidWord& word, const RootOfUnity& root, EigenvalueConvention conv) {
  return KaulRep(root, conv).represent(word);
}

}  // namespace cjones
