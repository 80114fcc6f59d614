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

#ifndef CJONES_QCIRCUIT_HPP
#define CJONES_QCIRCUIT_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "cjones/kaulrep.hpp"

namespace cjones {

// Qubit layout for 2m punctures at level k. Slots hold twice-spins in
// ceil(log2(k+1)) bits each, ordered p_0..p_{m-1}, r_1..r_{m-3}. For m = 2
// the single slot holds p_0 = p_1; for m = 1 the register is empty.
class QubitRegister {
 public:
  QubitRegister(int m, int k);

  int m() const { return m_; }
  int k() const { return k_; }
  int slot_width() const { return width_; }
  int n_slots() const { return slots_; }
  int n_qubits() const { return slots_ * width_; }

  int slot_of_p(int i) const;
  // r_0 and r_{m-2} live in the slots of p_0 and p_{m-1}.
  int slot_of_r(int i) const;

  // Extracts slot `s` from a register index.
  int field(std::uint64_t index, int s) const;
  std::uint64_t with_field(std::uint64_t index, int s, int value) const;

 private:
  int m_, k_, width_, slots_;
};

using Bitstring = std::vector<std::uint8_t>;

Bitstring encode_register(const BlockLabel& label, const QubitRegister& reg);
BlockLabel decode_register(const Bitstring& bits, const QubitRegister& reg);
std::uint64_t bits_to_index(const Bitstring& bits);
Bitstring index_to_bits(std::uint64_t index, int n_qubits);

// Phase depending on one slot's value; slot -1 is a global phase taken
// from phases[0].
struct DiagPhase {
  int slot = -1;
  std::vector<std::complex<double>> phases;
};

// Real orthogonal action on the target slot, selected by the control slot
// values. Control values missing from the table act as the identity.
struct ControlledQ6J {
  std::vector<int> controls;
  int target = 0;
  std::map<std::vector<int>, RMatrix> table;
};

using Gate = std::variant<DiagPhase, ControlledQ6J>;

struct GateList {
  QubitRegister reg{1, 1};
  std::vector<Gate> gates;
};

GateList compile_word(const ColoredBraidWord& word, const RootOfUnity& root);

using StateVec = CVector;
StateVec simulate_statevector(const GateList& gates, const StateVec& initial);

// Register state holding `label`.
StateVec basis_state(const BlockLabel& label, const QubitRegister& reg);

// Matrix of the compiled circuit between two block bases, columns indexed
// by `in` and rows by `out`. Comparable with KaulRep::represent.
CMatrix circuit_block_matrix(const GateList& gates, const BlockBasis& in, const BlockBasis& out);

enum class Component { re, im };

struct SamplePlan {
  double delta = 0.1;
  double variance = 1.0;
  double confidence = 0.75;
  long long shots = 0;  // 0: use required_samples
  std::uint64_t seed = 0;
};

struct HadamardResult {
  double estimate = 0.0;
  long long plus = 0;   // ancilla outcomes 0
  long long minus = 0;  // ancilla outcomes 1
  long long shots = 0;
  double probability = 0.0;  // exact probability of outcome 0
};

// Smallest N with 2 exp(-N delta^2 / (4 v)) <= 1 - confidence.
long long required_samples(double delta, double variance, double confidence);

// Bernoulli sampling of the ancilla with P(0) = (1 + Re<0|K|0>)/2 or the Im analogue.
HadamardResult hadamard_test(const ColoredBraidWord& word, const RootOfUnity& root, Component component,
                             const SamplePlan& plan);
HadamardResult sample_bernoulli(double probability, long long shots, std::uint64_t seed);

// Ancilla-level statevector simulation of the Hadamard test on the compiled
// circuit. Returns P(ancilla = 0). Intended for m <= 3.
double hadamard_probability_statevector(const ColoredBraidWord& word, const RootOfUnity& root, Component component);

}  // namespace cjones

#endif  // CJONES_QCIRCUIT_HPP
