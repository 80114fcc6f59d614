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

#include "cjones/qcircuit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cjones {

QubitRegister::QubitRegister(int m, int k) : m_(m), k_(k) {
  if (m < 1 || k < 1) throw RangeError("register needs m >= 1 and k >= 1");
  width_ = 0;
  while ((1 << width_) < k + 1) ++width_;
  slots_ = m == 1 ? 0 : (m == 2 ? 1 : 2 * m - 3);
  if (n_qubits() > 62) throw ResourceError("register of " + std::to_string(n_qubits()) + " qubits is too large");
}

int QubitRegister::slot_of_p(int i) const {
  if (i < 0 || i >= m_) throw OutOfRange("p index out of range");
  return m_ == 2 ? 0 : i;
}

int QubitRegister::slot_of_r(int i) const {
  if (i < 0 || i > m_ - 2) throw OutOfRange("r index out of range");
  if (i == 0) return slot_of_p(0);
  if (i == m_ - 2) return slot_of_p(m_ - 1);
  return m_ - 1 + i;
}

int QubitRegister::field(std::uint64_t index, int s) const {
  const int shift = n_qubits() - (s + 1) * width_;
  return static_cast<int>((index >> shift) & ((std::uint64_t{1} << width_) - 1));
}

std::uint64_t QubitRegister::with_field(std::uint64_t index, int s, int value) const {
  const int shift = n_qubits() - (s + 1) * width_;
  const std::uint64_t mask = ((std::uint64_t{1} << width_) - 1) << shift;
  return (index & ~mask) | (static_cast<std::uint64_t>(value) << shift);
}

std::uint64_t bits_to_index(const Bitstring& bits) {
  std::uint64_t x = 0;
  for (auto b : bits) x = (x << 1) | (b & 1u);
  return x;
}

Bitstring index_to_bits(std::uint64_t index, int n) {
  Bitstring b(n);
  for (int i = 0; i < n; ++i) b[i] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1u);
  return b;
}

Bitstring encode_register(const BlockLabel& label, const QubitRegister& reg) {
  const int m = reg.m();
  if (static_cast<int>(label.p.size()) != m) throw DimensionMismatch("label has the wrong number of p entries");
  std::uint64_t idx = 0;
  auto put = [&](int slot, int v) {
    if (v < 0 || v >= (1 << reg.slot_width())) {
      throw WidthError("twice-spin " + std::to_string(v) + " does not fit in " + std::to_string(reg.slot_width()) +
                       " bits");
    }
    idx = reg.with_field(idx, slot, v);
  };
  if (m >= 2) {
    for (int i = 0; i < m; ++i) put(reg.slot_of_p(i), label.p[i]);
    for (int i = 1; i <= m - 3; ++i) put(reg.slot_of_r(i), label.r[i]);
  }
  return index_to_bits(idx, reg.n_qubits());
}

BlockLabel decode_register(const Bitstring& bits, const QubitRegister& reg) {
  if (static_cast<int>(bits.size()) != reg.n_qubits()) throw DimensionMismatch("bitstring length differs from register");
  const int m = reg.m();
  if (m == 1) return {{0}, {}};
  const auto idx = bits_to_index(bits);
  BlockLabel l{std::vector<int>(m), std::vector<int>(m - 1)};
  for (int i = 0; i < m; ++i) l.p[i] = reg.field(idx, reg.slot_of_p(i));
  for (int i = 0; i <= m - 2; ++i) l.r[i] = reg.field(idx, reg.slot_of_r(i));
  return l;
}

StateVec basis_state(const BlockLabel& label, const QubitRegister& reg) {
  StateVec v = StateVec::Zero(std::int64_t{1} << reg.n_qubits());
  v(static_cast<Eigen::Index>(bits_to_index(encode_register(label, reg)))) = 1.0;
  return v;
}

CMatrix circuit_block_matrix(const GateList& gates, const BlockBasis& in, const BlockBasis& out) {
  CMatrix m(out.dim(), in.dim());
  for (std::size_t c = 0; c < in.dim(); ++c) {
    const StateVec v = simulate_statevector(gates, basis_state(in.label_at(c), gates.reg));
    for (std::size_t r = 0; r < out.dim(); ++r) {
      m(r, c) = v(static_cast<Eigen::Index>(bits_to_index(encode_register(out.label_at(r), gates.reg))));
    }
  }
  return m;
}

namespace {

// Square matrix on the 2^w slot values: `block` maps old values (columns,
// from `from`) to new values (rows, from `to`); the complements are paired
// in increasing order.
RMatrix complete(int size, const std::vector<int>& from, const std::vector<int>& to, const RMatrix& block) {
  RMatrix u = RMatrix::Zero(size, size);
  for (std::size_t i = 0; i < to.size(); ++i) {
    for (std::size_t j = 0; j < from.size(); ++j) u(to[i], from[j]) = block(i, j);
  }
  std::vector<int> rest_from, rest_to;
  for (int v = 0; v < size; ++v) {
    if (std::find(from.begin(), from.end(), v) == from.end()) rest_from.push_back(v);
    if (std::find(to.begin(), to.end(), v) == to.end()) rest_to.push_back(v);
  }
  for (std::size_t i = 0; i < rest_from.size(); ++i) u(rest_to[i], rest_from[i]) = 1.0;
  return u;
}

struct Move {
  // Fixed colours b, c of the 6j symbol, and fixed a or d (or -1 when
  // supplied by a control slot).
  int a_fixed, b, c, d_fixed;
  int a_slot, d_slot;
  int target;
  bool old_is_bc;  // family 1 rewrites (b c) into (a b); family 3 the reverse
};

ControlledQ6J build_move(const Move& mv, const QubitRegister& reg, KaulRep& rep) {
  const int size = 1 << reg.slot_width();
  const int k = reg.k();
  ControlledQ6J g;
  g.target = mv.target;
  if (mv.a_slot >= 0) g.controls.push_back(mv.a_slot);
  if (mv.d_slot >= 0) g.controls.push_back(mv.d_slot);
  const int na = mv.a_slot >= 0 ? size : 1;
  const int nd = mv.d_slot >= 0 ? size : 1;
  for (int ia = 0; ia < na; ++ia) {
    for (int id = 0; id < nd; ++id) {
      const int a = mv.a_slot >= 0 ? ia : mv.a_fixed;
      const int d = mv.d_slot >= 0 ? id : mv.d_fixed;
      std::vector<int> ab, bc;
      for (int x = 0; x < size; ++x) {
        if (admissible_twice(a, mv.b, x, k) && admissible_twice(x, mv.c, d, k)) ab.push_back(x);
        if (admissible_twice(mv.b, mv.c, x, k) && admissible_twice(a, x, d, k)) bc.push_back(x);
      }
      if (ab.empty() && bc.empty()) continue;
      if (ab.size() != bc.size()) throw std::logic_error("q-6j block is not square");
      const auto& from = mv.old_is_bc ? bc : ab;
      const auto& to = mv.old_is_bc ? ab : bc;
      RMatrix block(to.size(), from.size());
      for (std::size_t i = 0; i < to.size(); ++i) {
        for (std::size_t j = 0; j < from.size(); ++j) {
          const int xbc = mv.old_is_bc ? from[j] : to[i];
          const int xab = mv.old_is_bc ? to[i] : from[j];
          block(i, j) = rep.sixj(a, mv.b, mv.c, d, xbc, xab);
        }
      }
      std::vector<int> key;
      if (mv.a_slot >= 0) key.push_back(a);
      if (mv.d_slot >= 0) key.push_back(d);
      g.table.emplace(std::move(key), complete(size, from, to, block));
    }
  }
  return g;
}

// Odd basis -> comb -> left-nested q tree, as 2m-3 controlled moves.
std::vector<ControlledQ6J> duality_chain(const std::vector<int>& c, const QubitRegister& reg, KaulRep& rep) {
  const int m = reg.m();
  const int n = 2 * m;
  std::vector<ControlledQ6J> out;
  for (int i = 1; i <= m - 2; ++i) {
    Move mv{-1, c[2 * i], c[2 * i + 1], -1, reg.slot_of_r(i - 1), reg.slot_of_r(i), reg.slot_of_p(i), true};
    out.push_back(build_move(mv, reg, rep));
  }
  for (int l = 0; l <= m - 2; ++l) {
    Move mv{l == 0 ? c[0] : -1, c[2 * l + 1], c[2 * l + 2], l + 1 == m - 1 ? c[n - 1] : -1,
            l == 0 ? -1 : reg.slot_of_p(l), l + 1 == m - 1 ? -1 : reg.slot_of_p(l + 1), reg.slot_of_r(l), false};
    out.push_back(build_move(mv, reg, rep));
  }
  return out;
}

ControlledQ6J inverse(ControlledQ6J g) {
  for (auto& [key, u] : g.table) u = u.transpose().eval();
  return g;
}

DiagPhase phase_gate(int slot, int b, int c, bool parallel, int sign, const QubitRegister& reg, KaulRep& rep) {
  DiagPhase g;
  g.slot = slot;
  const int size = slot < 0 ? 1 : 1 << reg.slot_width();
  for (int v = 0; v < size; ++v) {
    if (admissible_twice(b, c, v, reg.k())) {
      g.phases.push_back(generator_eigenvalue({Spin{v}, Spin{b}, Spin{c}, parallel, sign > 0}, rep.root()));
    } else {
      g.phases.push_back(1.0);
    }
  }
  return g;
}

}  // namespace

GateList compile_word(const ColoredBraidWord& word, const RootOfUnity& root) {
  validate_word(word, root.k(), false);
  if (word.empty_link()) throw RangeError("compile_word: empty link has no circuit");
  KaulRep rep(root);
  const int m = word.m();
  const auto basis = rep.odd_basis(word.bottom());
  GateList gl{QubitRegister(m, root.k()), {}};
  const auto& reg = gl.reg;
  auto c = word.colors;
  for (const auto& l : word.letters) {
    const int i = l.index;
    const bool parallel = c[i - 1].orient == c[i].orient;
    const int b = c[i - 1].spin.twice, cc = c[i].spin.twice;
    auto cout = c;
    std::swap(cout[i - 1], cout[i]);
    if (i % 2) {
      const int a = (i - 1) / 2;
      gl.gates.push_back(phase_gate(m == 1 ? -1 : reg.slot_of_p(a), b, cc, parallel, l.sign, reg, rep));
    } else {
      std::vector<int> tin, tout;
      for (const auto& x : c) tin.push_back(x.spin.twice);
      for (const auto& x : cout) tout.push_back(x.spin.twice);
      for (auto& g : duality_chain(tin, reg, rep)) gl.gates.push_back(std::move(g));
      gl.gates.push_back(phase_gate(reg.slot_of_r(i / 2 - 1), b, cc, parallel, l.sign, reg, rep));
      auto back = duality_chain(tout, reg, rep);
      for (auto it = back.rbegin(); it != back.rend(); ++it) gl.gates.push_back(inverse(*it));
    }
    c = cout;
  }
  return gl;
}

StateVec simulate_statevector(const GateList& gl, const StateVec& initial) {
  const auto& reg = gl.reg;
  const std::uint64_t dim = std::uint64_t{1} << reg.n_qubits();
  if (static_cast<std::uint64_t>(initial.size()) != dim) {
    throw DimensionMismatch("state of size " + std::to_string(initial.size()) + " on a " +
                            std::to_string(reg.n_qubits()) + "-qubit register");
  }
  StateVec s = initial;
  const int size = 1 << reg.slot_width();
  for (const auto& gate : gl.gates) {
    if (const auto* d = std::get_if<DiagPhase>(&gate)) {
      if (d->slot < 0) {
        s *= d->phases[0];
        continue;
      }
      for (std::uint64_t x = 0; x < dim; ++x) s(x) *= d->phases[reg.field(x, d->slot)];
      continue;
    }
    const auto& g = std::get<ControlledQ6J>(gate);
    std::vector<int> key(g.controls.size());
    Eigen::VectorXcd buf(size);
    for (std::uint64_t x = 0; x < dim; ++x) {
      if (reg.field(x, g.target) != 0) continue;
      for (std::size_t j = 0; j < g.controls.size(); ++j) key[j] = reg.field(x, g.controls[j]);
      auto it = g.table.find(key);
      if (it == g.table.end()) continue;
      for (int v = 0; v < size; ++v) buf(v) = s(reg.with_field(x, g.target, v));
      const Eigen::VectorXcd out = it->second.cast<std::complex<double>>() * buf;
      for (int v = 0; v < size; ++v) s(reg.with_field(x, g.target, v)) = out(v);
    }
  }
  return s;
}

long long required_samples(double delta, double v, double confidence) {
  if (!(delta > 0) || !(v > 0) || !(confidence > 0 && confidence < 1)) {
    throw DomainError("required_samples needs delta > 0, v > 0 and 0 < confidence < 1");
  }
  const double x = 4.0 * v / (delta * delta) * std::log(2.0 / (1.0 - confidence));
  auto n = static_cast<long long>(std::ceil(x));
  while (n > 1 && 2.0 * std::exp(-(n - 1) * delta * delta / (4.0 * v)) <= 1.0 - confidence) --n;
  return std::max(n, 1LL);
}

HadamardResult sample_bernoulli(double p, long long shots, std::uint64_t seed) {
  if (shots < 1) throw DomainError("shots must be positive");
  std::mt19937_64 gen(seed);
  HadamardResult r;
  r.shots = shots;
  r.probability = p;
  for (long long i = 0; i < shots; ++i) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    if (u < p) {
      ++r.plus;
    } else {
      ++r.minus;
    }
  }
  r.estimate = static_cast<double>(r.plus - r.minus) / static_cast<double>(shots);
  return r;
}

namespace {

std::complex<double> vacuum_amplitude(const ColoredBraidWord& word, const RootOfUnity& root) {
  KaulRep rep(root);
  const auto in = rep.odd_basis(word.bottom());
  const auto out = rep.odd_basis(PunctureColors(colors_after(word)));
  const auto vin = in->index_of(vacuum_label(*in));
  const auto vout = out->index_of(vacuum_label(*out));
  CVector e = CVector::Zero(in->dim());
  e(vin) = 1.0;
  return rep.apply(word, e)(vout);
}

}  // namespace

HadamardResult hadamard_test(const ColoredBraidWord& word, const RootOfUnity& root, Component component,
                             const SamplePlan& plan) {
  validate_word(word, root.k());
  const auto z = vacuum_amplitude(word, root);
  const double x = component == Component::re ? z.real() : z.imag();
  const double p = std::clamp((1.0 + x) / 2.0, 0.0, 1.0);
  const long long n = plan.shots > 0 ? plan.shots : required_samples(plan.delta, plan.variance, plan.confidence);
  return sample_bernoulli(p, n, plan.seed);
}

double hadamard_probability_statevector(const ColoredBraidWord& word, const RootOfUnity& root, Component component) {
  validate_word(word, root.k());
  if (word.m() > 3) throw ResourceError("statevector Hadamard test is limited to m <= 3");
  const auto gl = compile_word(word, root);
  const auto in = enumerate_basis(word.bottom(), root);
  const auto phi = basis_state(vacuum_label(in), gl.reg);
  // Ancilla |+>: both branches hold phi / sqrt(2); the 1-branch gets U.
  const double h = 1.0 / std::sqrt(2.0);
  StateVec b0 = phi * h;
  StateVec b1 = simulate_statevector(gl, phi * h);
  if (component == Component::im) b1 *= std::complex<double>(0, -1);
  const StateVec out0 = (b0 + b1) * h;
  return out0.squaredNorm();
}

}  // namespace cjones
