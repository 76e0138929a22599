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

#include "davio/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

namespace davio {

namespace {

using Complex = std::complex<double>;

struct KindInfo {
  GateKind kind;
  std::string_view mnemonic;
  std::size_t arity;
};

constexpr std::array<KindInfo, 10> kKinds{{
    {GateKind::X, "x", 1},
    {GateKind::H, "h", 1},
    {GateKind::T, "t", 1},
    {GateKind::Tdg, "tdg", 1},
    {GateKind::V, "v", 1},
    {GateKind::Vdg, "vdg", 1},
    {GateKind::CNOT, "cx", 2},
    {GateKind::CZ, "cz", 2},
    {GateKind::SWAP, "swap", 2},
    {GateKind::TOFFOLI, "ccx", 3},
}};

const KindInfo& info(GateKind kind) {
  return kKinds.at(static_cast<std::size_t>(kind));
}

using Matrix2 = std::array<Complex, 4>; // row-major

Matrix2 single_qubit_matrix(GateKind kind) {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex phase_t = std::polar(1.0, M_PI / 4.0);
  const Complex half_p{0.5, 0.5};
  const Complex half_m{0.5, -0.5};
  switch (kind) {
  case GateKind::X:
    return {0, 1, 1, 0};
  case GateKind::H:
    return {r, r, r, -r};
  case GateKind::T:
    return {1, 0, 0, phase_t};
  case GateKind::Tdg:
    return {1, 0, 0, std::conj(phase_t)};
  case GateKind::V:
    return {half_p, half_m, half_m, half_p};
  case GateKind::Vdg:
    return {half_m, half_p, half_p, half_m};
  default:
    throw InvalidArgument("not a single-qubit gate");
  }
}

// Left-multiplies the rows of `m` by the gate.
void apply_rows(Eigen::MatrixXcd& m, const Gate& g) {
  const auto dim = static_cast<std::size_t>(m.rows());
  const auto bit = [&](std::size_t i) { return std::size_t{1} << g.qubits[i]; };
  switch (g.kind) {
  case GateKind::CNOT:
  case GateKind::TOFFOLI: {
    std::size_t controls = 0;
    for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i) {
      controls |= bit(i);
    }
    const auto target = bit(g.qubits.size() - 1);
    for (std::size_t r = 0; r < dim; ++r) {
      if ((r & controls) == controls && (r & target) == 0) {
        m.row(static_cast<Eigen::Index>(r))
            .swap(m.row(static_cast<Eigen::Index>(r | target)));
      }
    }
    return;
  }
  case GateKind::SWAP: {
    const auto a = bit(0);
    const auto b = bit(1);
    for (std::size_t r = 0; r < dim; ++r) {
      if ((r & a) != 0 && (r & b) == 0) {
        m.row(static_cast<Eigen::Index>(r))
            .swap(m.row(static_cast<Eigen::Index>(r ^ a ^ b)));
      }
    }
    return;
  }
  case GateKind::CZ: {
    const auto both = bit(0) | bit(1);
    for (std::size_t r = 0; r < dim; ++r) {
      if ((r & both) == both) {
        m.row(static_cast<Eigen::Index>(r)) *= -1.0;
      }
    }
    return;
  }
  default:
    break;
  }
  const auto u = single_qubit_matrix(g.kind);
  const auto q = bit(0);
  for (std::size_t r = 0; r < dim; ++r) {
    if ((r & q) != 0) {
      continue;
    }
    const auto i0 = static_cast<Eigen::Index>(r);
    const auto i1 = static_cast<Eigen::Index>(r | q);
    const Eigen::RowVectorXcd r0 = m.row(i0);
    const Eigen::RowVectorXcd r1 = m.row(i1);
    m.row(i0) = u[0] * r0 + u[1] * r1;
    m.row(i1) = u[2] * r0 + u[3] * r1;
  }
}

// Controlled-V built from H, T and CNOT: H (controlled-S) H equals
// controlled-V exactly.
void controlled_v(std::vector<Gate>& out, std::size_t ctl, std::size_t t,
                  bool dagger) {
  out.push_back(Gate::h(t));
  if (!dagger) {
    out.push_back(Gate::t(ctl));
    out.push_back(Gate::t(t));
    out.push_back(Gate::cnot(ctl, t));
    out.push_back(Gate::tdg(t));
  } else {
    out.push_back(Gate::tdg(ctl));
    out.push_back(Gate::tdg(t));
    out.push_back(Gate::cnot(ctl, t));
    out.push_back(Gate::t(t));
  }
  out.push_back(Gate::cnot(ctl, t));
  out.push_back(Gate::h(t));
}

} // namespace

std::size_t arity(GateKind kind) noexcept { return info(kind).arity; }

std::string_view mnemonic(GateKind kind) noexcept {
  return info(kind).mnemonic;
}

GateKind parse_gate_kind(std::string_view text) {
  for (const auto& k : kKinds) {
    if (k.mnemonic == text) {
      return k.kind;
    }
  }
  static constexpr std::array<std::pair<std::string_view, GateKind>, 4>
      kAliases{{{"cnot", GateKind::CNOT},
                {"toffoli", GateKind::TOFFOLI},
                {"ccnot", GateKind::TOFFOLI},
                {"not", GateKind::X}}};
  for (const auto& [name, kind] : kAliases) {
    if (name == text) {
      return kind;
    }
  }
  throw InvalidArgument("unknown gate kind '" + std::string(text) + "'");
}

bool is_permutation(GateKind kind) noexcept {
  return kind == GateKind::X || kind == GateKind::CNOT ||
         kind == GateKind::SWAP || kind == GateKind::TOFFOLI;
}

void Gate::validate() const {
  if (qubits.size() != arity(kind)) {
    throw InvalidArgument(std::string(mnemonic(kind)) + " takes " +
                          std::to_string(arity(kind)) + " operands, got " +
                          std::to_string(qubits.size()));
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw InvalidArgument(std::string(mnemonic(kind)) +
                              " operands must be distinct");
      }
    }
  }
}

Circuit::Circuit(std::size_t n_qubits, std::vector<std::string> labels)
    : n_qubits_(n_qubits), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.assign(n_qubits_, "");
  }
  if (labels_.size() != n_qubits_) {
    throw InvalidArgument("circuit needs one label per qubit");
  }
}

void Circuit::add(Gate gate) {
  gate.validate();
  for (auto q : gate.qubits) {
    if (q >= n_qubits_) {
      throw InvalidArgument("qubit " + std::to_string(q) +
                            " out of range for " + std::to_string(n_qubits_) +
                            " qubits");
    }
  }
  gates_.push_back(std::move(gate));
}

void Circuit::append(const std::vector<Gate>& gates) {
  for (const auto& g : gates) {
    add(g);
  }
}

std::size_t Circuit::count(GateKind kind) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(),
                    [kind](const Gate& g) { return g.kind == kind; }));
}

std::array<Gate, 2> SwatBlock::expand() const {
  return {Gate::swap(data_hi, data_lo), Gate::toffoli(ctrl, data_lo, data_hi)};
}

std::vector<LocatedSwat> find_swat_blocks(const Circuit& c) {
  std::vector<LocatedSwat> out;
  const auto& gates = c.gates();
  for (std::size_t i = 0; i + 1 < gates.size(); ++i) {
    const auto& s = gates[i];
    const auto& t = gates[i + 1];
    if (s.kind != GateKind::SWAP || t.kind != GateKind::TOFFOLI) {
      continue;
    }
    const auto hi = s.qubits[0];
    const auto lo = s.qubits[1];
    if (t.qubits[2] != hi) {
      continue;
    }
    std::size_t ctrl = 0;
    if (t.qubits[1] == lo) {
      ctrl = t.qubits[0];
    } else if (t.qubits[0] == lo) {
      ctrl = t.qubits[1];
    } else {
      continue;
    }
    out.push_back({i, {hi, lo, ctrl}});
    ++i;
  }
  return out;
}

DecompositionStyle DecompositionStyle::parse(std::string_view name) {
  if (name == "qiskit-standard") {
    return {DecompositionKind::QiskitStandard};
  }
  if (name == "barenco") {
    return {DecompositionKind::Barenco};
  }
  if (name == "amy") {
    return {DecompositionKind::Amy};
  }
  if (name == "linear-nn") {
    return {DecompositionKind::LinearNN};
  }
  throw InvalidArgument("unknown decomposition style '" + std::string(name) +
                        "'");
}

std::string DecompositionStyle::to_string() const {
  switch (kind) {
  case DecompositionKind::QiskitStandard:
    return "qiskit-standard";
  case DecompositionKind::Barenco:
    return "barenco";
  case DecompositionKind::Amy:
    return "amy";
  case DecompositionKind::LinearNN:
    return "linear-nn";
  }
  return "unknown";
}

std::vector<DecompositionStyle> DecompositionStyle::all() {
  return {{DecompositionKind::QiskitStandard},
          {DecompositionKind::Barenco},
          {DecompositionKind::Amy},
          {DecompositionKind::LinearNN}};
}

Synthesis synthesize_from_lattice(const DavioLattice& lattice) {
  const auto n = lattice.n_levels();
  if (n > kMaxSynthesisLevels) {
    throw LevelBudgetExceeded("lattice has " + std::to_string(n) +
                              " levels, synthesis supports at most " +
                              std::to_string(kMaxSynthesisLevels));
  }
  std::vector<std::string> labels = lattice.level_var_names();
  for (std::size_t j = 0; j <= n; ++j) {
    labels.push_back("d" + std::to_string(j));
  }
  Synthesis out;
  out.n_levels = n;
  out.circuit = Circuit(2 * n + 1, labels);
  const auto leaves = lattice.leaves();
  for (std::size_t j = 0; j <= n; ++j) {
    if (leaves[j]) {
      out.circuit.add(Gate::x(n + j));
    }
  }
  // Sweep t moves variable line n-1-t down through the data lines; each
  // SWAT folds one lattice level into its parent row.
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t j = 0; j < n - t; ++j) {
      const auto p = n - 1 - t + j;
      const SwatBlock block{p, p + 1, p + 2};
      for (const auto& g : block.expand()) {
        out.circuit.add(g);
      }
      out.swats.push_back(block);
    }
  }
  out.output_line = 0;
  out.leaf_init.assign(out.circuit.n_qubits(), false);
  return out;
}

std::vector<Gate> decompose_swap(const Gate& g) {
  if (g.kind != GateKind::SWAP) {
    throw InvalidArgument("decompose_swap expects a SWAP gate");
  }
  g.validate();
  const auto a = g.qubits[0];
  const auto b = g.qubits[1];
  return {Gate::cnot(a, b), Gate::cnot(b, a), Gate::cnot(a, b)};
}

std::vector<Gate> decompose_toffoli(const Gate& g, DecompositionStyle style) {
  if (g.kind != GateKind::TOFFOLI) {
    throw InvalidArgument("decompose_toffoli expects a TOFFOLI gate");
  }
  g.validate();
  const auto a = g.qubits[0];
  const auto b = g.qubits[1];
  const auto c = g.qubits[2];
  switch (style.kind) {
  case DecompositionKind::QiskitStandard:
    return {Gate::h(c),       Gate::cnot(b, c), Gate::tdg(c), Gate::cnot(a, c),
            Gate::t(c),       Gate::cnot(b, c), Gate::tdg(c), Gate::cnot(a, c),
            Gate::t(b),       Gate::t(c),       Gate::h(c),   Gate::cnot(a, b),
            Gate::t(a),       Gate::tdg(b),     Gate::cnot(a, b)};
  case DecompositionKind::Barenco: {
    std::vector<Gate> out;
    controlled_v(out, b, c, false);
    out.push_back(Gate::cnot(a, b));
    controlled_v(out, b, c, true);
    out.push_back(Gate::cnot(a, b));
    controlled_v(out, a, c, false);
    return out;
  }
  case DecompositionKind::Amy:
    return {Gate::h(c),       Gate::t(a),       Gate::t(b),
            Gate::t(c),       Gate::cnot(b, a), Gate::cnot(a, c),
            Gate::cnot(c, b), Gate::tdg(a),     Gate::tdg(b),
            Gate::t(c),       Gate::cnot(a, b), Gate::tdg(b),
            Gate::cnot(a, c), Gate::cnot(c, b), Gate::cnot(b, a),
            Gate::h(c)};
  case DecompositionKind::LinearNN:
    return {Gate::h(c),       Gate::t(a),       Gate::t(b),       Gate::t(c),
            Gate::cnot(a, c), Gate::tdg(c),     Gate::cnot(c, b), Gate::t(b),
            Gate::cnot(a, c), Gate::cnot(c, b), Gate::tdg(b),     Gate::cnot(a, c),
            Gate::cnot(c, b), Gate::tdg(b),     Gate::cnot(a, c), Gate::cnot(c, b),
            Gate::h(c)};
  }
  throw InvalidArgument("unknown decomposition style");
}

std::vector<Gate> decompose_swat(const SwatBlock& b, DecompositionStyle style) {
  const auto [swap, toffoli] = b.expand();
  auto out = decompose_swap(swap);
  for (auto& g : decompose_toffoli(toffoli, style)) {
    out.push_back(std::move(g));
  }
  return out;
}

Circuit decompose_circuit(const Circuit& c, DecompositionStyle style) {
  Circuit out(c.n_qubits(), c.labels());
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::SWAP) {
      out.append(decompose_swap(g));
    } else if (g.kind == GateKind::TOFFOLI) {
      out.append(decompose_toffoli(g, style));
    } else {
      out.add(g);
    }
  }
  return out;
}

std::vector<bool> simulate_classical(const Circuit& c, std::vector<bool> input) {
  if (input.size() != c.n_qubits()) {
    throw InvalidArgument("input has " + std::to_string(input.size()) +
                          " bits, circuit has " +
                          std::to_string(c.n_qubits()) + " qubits");
  }
  for (const auto& g : c.gates()) {
    const auto& q = g.qubits;
    switch (g.kind) {
    case GateKind::X:
      input[q[0]] = !input[q[0]];
      break;
    case GateKind::CNOT:
      if (input[q[0]]) {
        input[q[1]] = !input[q[1]];
      }
      break;
    case GateKind::SWAP: {
      const bool tmp = input[q[0]];
      input[q[0]] = input[q[1]];
      input[q[1]] = tmp;
      break;
    }
    case GateKind::TOFFOLI:
      if (input[q[0]] && input[q[1]]) {
        input[q[2]] = !input[q[2]];
      }
      break;
    default:
      throw InvalidArgument("classical simulation cannot apply " +
                            std::string(mnemonic(g.kind)));
    }
  }
  return input;
}

Eigen::MatrixXcd gates_unitary(std::size_t n_qubits,
                               const std::vector<Gate>& gates) {
  if (n_qubits > kMaxUnitaryQubits) {
    throw InvalidArgument("unitary simulation is limited to " +
                          std::to_string(kMaxUnitaryQubits) + " qubits");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& g : gates) {
    g.validate();
    for (auto q : g.qubits) {
      if (q >= n_qubits) {
        throw InvalidArgument("gate operand out of range");
      }
    }
    apply_rows(u, g);
  }
  return u;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  return gates_unitary(c.n_qubits(), c.gates());
}

double phase_aligned_distance(const Eigen::MatrixXcd& actual,
                              const Eigen::MatrixXcd& expected) {
  if (actual.rows() != expected.rows() || actual.cols() != expected.cols()) {
    throw InvalidArgument("unitaries differ in dimension");
  }
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  expected.cwiseAbs().maxCoeff(&row, &col);
  const auto ref = expected(row, col);
  const auto got = actual(row, col);
  if (std::abs(ref) == 0.0 || std::abs(got) == 0.0) {
    return (actual - expected).cwiseAbs().maxCoeff();
  }
  const auto phase = (got / std::abs(got)) / (ref / std::abs(ref));
  return (actual - phase * expected).cwiseAbs().maxCoeff();
}

bool equal_up_to_global_phase(const Eigen::MatrixXcd& actual,
                              const Eigen::MatrixXcd& expected,
                              double tolerance) {
  return phase_aligned_distance(actual, expected) < tolerance;
}

bool verify_synthesis(const Circuit& c, const EsopFunction& f,
                      std::size_t output_line,
                      const std::vector<bool>& leaf_init) {
  if (output_line >= c.n_qubits()) {
    return false;
  }
  if (!leaf_init.empty() && leaf_init.size() != c.n_qubits()) {
    throw InvalidArgument("leaf_init needs one bit per qubit");
  }
  std::vector<std::optional<std::size_t>> line_var(c.n_qubits());
  for (std::size_t q = 0; q < c.n_qubits(); ++q) {
    line_var[q] = f.vars().index_of(c.labels()[q]);
  }
  const auto table = to_truth_table(f);
  for (Assignment a = 0; a < table.size(); ++a) {
    std::vector<bool> state(c.n_qubits(), false);
    for (std::size_t q = 0; q < c.n_qubits(); ++q) {
      if (line_var[q]) {
        state[q] = ((a >> *line_var[q]) & 1U) != 0;
      } else if (!leaf_init.empty()) {
        state[q] = leaf_init[q];
      }
    }
    if (simulate_classical(c, std::move(state))[output_line] != table.get(a)) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>>
interaction_graph(const std::vector<Gate>& gates) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& g : gates) {
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      for (std::size_t j = i + 1; j < g.qubits.size(); ++j) {
        edges.emplace(std::min(g.qubits[i], g.qubits[j]),
                      std::max(g.qubits[i], g.qubits[j]));
      }
    }
  }
  return {edges.begin(), edges.end()};
}

} // namespace davio
