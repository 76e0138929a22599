// Copyright 2026 The davio-synth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "davio/boolfn.hpp"
#include "davio/lattice.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace davio {

enum class GateKind : std::uint8_t {
  X,
  H,
  T,
  Tdg,
  V,
  Vdg,
  CNOT,
  CZ,
  SWAP,
  TOFFOLI
};

[[nodiscard]] std::size_t arity(GateKind kind) noexcept;
/// Lower-case mnemonic used in text output: x, h, t, tdg, v, vdg, cx, cz,
/// swap, ccx.
[[nodiscard]] std::string_view mnemonic(GateKind kind) noexcept;
[[nodiscard]] GateKind parse_gate_kind(std::string_view text);
/// X, CNOT, SWAP and TOFFOLI map basis states to basis states.
[[nodiscard]] bool is_permutation(GateKind kind) noexcept;

/// Controls come before the target.
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<std::size_t> qubits;

  static Gate x(std::size_t q) { return {GateKind::X, {q}}; }
  static Gate h(std::size_t q) { return {GateKind::H, {q}}; }
  static Gate t(std::size_t q) { return {GateKind::T, {q}}; }
  static Gate tdg(std::size_t q) { return {GateKind::Tdg, {q}}; }
  static Gate v(std::size_t q) { return {GateKind::V, {q}}; }
  static Gate vdg(std::size_t q) { return {GateKind::Vdg, {q}}; }
  static Gate cnot(std::size_t control, std::size_t target) {
    return {GateKind::CNOT, {control, target}};
  }
  static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, {a, b}}; }
  static Gate swap(std::size_t a, std::size_t b) {
    return {GateKind::SWAP, {a, b}};
  }
  static Gate toffoli(std::size_t c1, std::size_t c2, std::size_t target) {
    return {GateKind::TOFFOLI, {c1, c2, target}};
  }

  /// Throws InvalidArgument on wrong operand count or repeated operands.
  void validate() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
public:
  Circuit() = default;
  Circuit(std::size_t n_qubits, std::vector<std::string> labels);

  [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept {
    return labels_;
  }
  [[nodiscard]] const std::vector<Gate>& gates() const noexcept {
    return gates_;
  }

  /// Validates the gate and its operand range before appending.
  void add(Gate gate);
  void append(const std::vector<Gate>& gates);

  [[nodiscard]] std::size_t count(GateKind kind) const noexcept;

  friend bool operator==(const Circuit&, const Circuit&) = default;

private:
  std::size_t n_qubits_ = 0;
  std::vector<std::string> labels_;
  std::vector<Gate> gates_;
};

/// SWAP(data_hi, data_lo) followed by TOFFOLI(ctrl, data_lo -> data_hi).
/// In pattern terms qubit 0 is data_hi (the target), qubit 1 data_lo and
/// qubit 2 ctrl.
struct SwatBlock {
  std::size_t data_hi = 0;
  std::size_t data_lo = 0;
  std::size_t ctrl = 0;

  [[nodiscard]] std::array<Gate, 2> expand() const;
  [[nodiscard]] std::array<std::size_t, 3> qubits() const noexcept {
    return {data_hi, data_lo, ctrl};
  }

  friend bool operator==(const SwatBlock&, const SwatBlock&) = default;
};

/// A SWAT block located in a circuit; `gate_index` points at its SWAP.
struct LocatedSwat {
  std::size_t gate_index = 0;
  SwatBlock block;
};

/// Finds every SWAP immediately followed by a Toffoli that targets the
/// SWAP's first operand and is controlled by its second.
[[nodiscard]] std::vector<LocatedSwat> find_swat_blocks(const Circuit& c);

enum class DecompositionKind { QiskitStandard, Barenco, Amy, LinearNN };

struct DecompositionStyle {
  DecompositionKind kind = DecompositionKind::LinearNN;

  static DecompositionStyle parse(std::string_view name);
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] static std::vector<DecompositionStyle> all();

  friend bool operator==(const DecompositionStyle&,
                         const DecompositionStyle&) = default;
};

/// Qubit lines 0..n-1 carry the level variables (line k is level k), lines
/// n..2n carry the data, with leaf j loaded onto line n+j. The result lands
/// on `output_line`.
struct Synthesis {
  Circuit circuit;
  std::vector<SwatBlock> swats;
  std::size_t output_line = 0;
  /// Initial value of every line before the circuit runs; leaves are
  /// loaded by X gates so this is all zero.
  std::vector<bool> leaf_init;
  std::size_t n_levels = 0;
};

/// Largest lattice accepted by synthesize_from_lattice.
inline constexpr std::size_t kMaxSynthesisLevels = 32;

[[nodiscard]] Synthesis synthesize_from_lattice(const DavioLattice& lattice);

/// CNOT(a->b), CNOT(b->a), CNOT(a->b).
[[nodiscard]] std::vector<Gate> decompose_swap(const Gate& g);
[[nodiscard]] std::vector<Gate> decompose_toffoli(const Gate& g,
                                                  DecompositionStyle style);
[[nodiscard]] std::vector<Gate> decompose_swat(const SwatBlock& b,
                                               DecompositionStyle style);
/// Replaces every SWAP and TOFFOLI by its decomposition.
[[nodiscard]] Circuit decompose_circuit(const Circuit& c,
                                        DecompositionStyle style);

/// Throws InvalidArgument on any gate that is not a basis permutation.
[[nodiscard]] std::vector<bool> simulate_classical(const Circuit& c,
                                                   std::vector<bool> input);

inline constexpr std::size_t kMaxUnitaryQubits = 10;

/// Product of the gate unitaries with qubit 0 as the least significant
/// basis bit. Throws InvalidArgument above kMaxUnitaryQubits.
[[nodiscard]] Eigen::MatrixXcd circuit_unitary(const Circuit& c);
[[nodiscard]] Eigen::MatrixXcd gates_unitary(std::size_t n_qubits,
                                             const std::vector<Gate>& gates);

/// Largest entrywise deviation after aligning the phase of `actual` to
/// `expected` at the largest-magnitude entry of `expected`.
[[nodiscard]] double phase_aligned_distance(const Eigen::MatrixXcd& actual,
                                            const Eigen::MatrixXcd& expected);
[[nodiscard]] bool equal_up_to_global_phase(const Eigen::MatrixXcd& actual,
                                            const Eigen::MatrixXcd& expected,
                                            double tolerance = 1e-9);

/// Exhaustively checks that `output_line` equals f. Lines labelled with a
/// variable name take that variable's value; the other lines start from
/// leaf_init (all zero when empty).
[[nodiscard]] bool verify_synthesis(const Circuit& c, const EsopFunction& f,
                                    std::size_t output_line,
                                    const std::vector<bool>& leaf_init);

/// Unordered qubit pairs touched by a multi-qubit gate, sorted.
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>>
interaction_graph(const std::vector<Gate>& gates);

} // namespace davio
