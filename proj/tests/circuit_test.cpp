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

#include <gtest/gtest.h>

#include <random>

namespace davio {
namespace {

// Permutation matrix of a classical map on n qubits, qubit 0 least
// significant.
template <typename Map>
Eigen::MatrixXcd permutation_matrix(std::size_t n, Map map) {
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(map(i), i) = 1.0;
  }
  return m;
}

Eigen::MatrixXcd toffoli_matrix(std::size_t c1, std::size_t c2,
                                std::size_t t) {
  return permutation_matrix(3, [=](std::size_t i) {
    const bool on = ((i >> c1) & 1U) != 0 && ((i >> c2) & 1U) != 0;
    return on ? i ^ (std::size_t{1} << t) : i;
  });
}

std::vector<bool> bits(std::size_t value, std::size_t n) {
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = ((value >> i) & 1U) != 0;
  }
  return out;
}

TEST(Gates, ArityAndNames) {
  EXPECT_EQ(arity(GateKind::TOFFOLI), 3U);
  EXPECT_EQ(arity(GateKind::SWAP), 2U);
  EXPECT_EQ(arity(GateKind::Tdg), 1U);
  EXPECT_EQ(mnemonic(GateKind::TOFFOLI), "ccx");
  EXPECT_EQ(parse_gate_kind("toffoli"), GateKind::TOFFOLI);
  EXPECT_EQ(parse_gate_kind("cx"), GateKind::CNOT);
  EXPECT_THROW((void)parse_gate_kind("u3"), InvalidArgument);
  EXPECT_THROW(Gate::toffoli(1, 1, 2).validate(), InvalidArgument);
  EXPECT_THROW((Gate{GateKind::CNOT, {0}}).validate(), InvalidArgument);
}

TEST(Circuit, RejectsOutOfRangeOperands) {
  Circuit c(2, {});
  EXPECT_THROW(c.add(Gate::cnot(0, 2)), InvalidArgument);
  c.add(Gate::swap(0, 1));
  EXPECT_EQ(c.count(GateKind::SWAP), 1U);
  EXPECT_EQ(c.labels().size(), 2U);
}

TEST(Unitary, SingleQubitBasics) {
  const auto x = gates_unitary(1, {Gate::x(0)});
  EXPECT_NEAR(std::abs(x(0, 1) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(x(1, 0) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(x(0, 0)), 0.0, 1e-12);
  // V is a square root of X.
  EXPECT_TRUE(equal_up_to_global_phase(gates_unitary(1, {Gate::v(0), Gate::v(0)}),
                                       x));
  EXPECT_TRUE(equal_up_to_global_phase(
      gates_unitary(1, {Gate::v(0), Gate::vdg(0)}),
      Eigen::MatrixXcd::Identity(2, 2)));
  // T^4 = Z = H X H.
  EXPECT_TRUE(equal_up_to_global_phase(
      gates_unitary(1, {Gate::t(0), Gate::t(0), Gate::t(0), Gate::t(0)}),
      gates_unitary(1, {Gate::h(0), Gate::x(0), Gate::h(0)})));
  // Global phase is ignored, relative phase is not.
  EXPECT_FALSE(equal_up_to_global_phase(gates_unitary(1, {Gate::t(0)}),
                                        Eigen::MatrixXcd::Identity(2, 2)));
}

TEST(Unitary, CnotIsLittleEndian) {
  const auto u = gates_unitary(2, {Gate::cnot(0, 1)});
  const auto expected = permutation_matrix(
      2, [](std::size_t i) { return (i & 1U) != 0 ? i ^ 2U : i; });
  EXPECT_LT(phase_aligned_distance(u, expected), 1e-12);
}

TEST(Decompose, SwapIsThreeCnots) {
  const auto seq = decompose_swap(Gate::swap(0, 2));
  ASSERT_EQ(seq.size(), 3U);
  for (const auto& g : seq) {
    EXPECT_EQ(g.kind, GateKind::CNOT);
  }
  const auto expected = permutation_matrix(3, [](std::size_t i) {
    const std::size_t b0 = i & 1U;
    const std::size_t b2 = (i >> 2) & 1U;
    return (i & 2U) | (b0 << 2) | b2;
  });
  EXPECT_LT(phase_aligned_distance(gates_unitary(3, seq), expected), 1e-12);
}

class ToffoliStyles : public ::testing::TestWithParam<DecompositionKind> {};

TEST_P(ToffoliStyles, MatchesToffoliUnitary) {
  const DecompositionStyle style{GetParam()};
  for (const auto& [c1, c2, t] :
       std::vector<std::array<std::size_t, 3>>{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}) {
    const auto seq = decompose_toffoli(Gate::toffoli(c1, c2, t), style);
    for (const auto& g : seq) {
      EXPECT_NE(g.kind, GateKind::TOFFOLI);
      EXPECT_NE(g.kind, GateKind::SWAP);
      EXPECT_LE(g.qubits.size(), 2U);
    }
    EXPECT_LE(phase_aligned_distance(gates_unitary(3, seq),
                                     toffoli_matrix(c1, c2, t)),
              1e-9)
        << style.to_string();
  }
}

TEST_P(ToffoliStyles, SwatDecompositionMatchesBlock) {
  const DecompositionStyle style{GetParam()};
  const SwatBlock block{0, 1, 2};
  const auto expanded = block.expand();
  const auto reference = gates_unitary(3, {expanded[0], expanded[1]});
  EXPECT_TRUE(
      equal_up_to_global_phase(gates_unitary(3, decompose_swat(block, style)),
                               reference));
}

INSTANTIATE_TEST_SUITE_P(All, ToffoliStyles,
                         ::testing::Values(DecompositionKind::QiskitStandard,
                                           DecompositionKind::Barenco,
                                           DecompositionKind::Amy,
                                           DecompositionKind::LinearNN));

TEST(Decompose, ConnectivityContracts) {
  const auto g = Gate::toffoli(0, 1, 2);
  using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
  EXPECT_EQ(interaction_graph(decompose_toffoli(g, {DecompositionKind::Barenco})),
            (Edges{{0, 1}, {0, 2}, {1, 2}}));
  // The nearest-neighbour form never couples the two controls directly.
  EXPECT_EQ(
      interaction_graph(decompose_toffoli(g, {DecompositionKind::LinearNN})),
      (Edges{{0, 2}, {1, 2}}));
}

TEST(Decompose, StyleNames) {
  for (const auto& s : DecompositionStyle::all()) {
    EXPECT_EQ(DecompositionStyle::parse(s.to_string()), s);
  }
  EXPECT_THROW((void)DecompositionStyle::parse("cliffordt"), InvalidArgument);
}

TEST(Simulate, ClassicalGates) {
  Circuit c(3, {});
  c.add(Gate::x(0));
  c.add(Gate::cnot(0, 1));
  c.add(Gate::toffoli(0, 1, 2));
  c.add(Gate::swap(0, 2));
  EXPECT_EQ(simulate_classical(c, {false, false, false}),
            (std::vector<bool>{true, true, true}));
  EXPECT_EQ(simulate_classical(c, {false, true, true}),
            (std::vector<bool>{true, false, true}));
  EXPECT_THROW((void)simulate_classical(c, {false}), InvalidArgument);
  c.add(Gate::h(0));
  EXPECT_THROW((void)simulate_classical(c, {false, false, false}),
               InvalidArgument);
}

TEST(Simulate, UnitaryAgreesWithClassicalOnPermutations) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> q(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c(4, {});
    for (int i = 0; i < 12; ++i) {
      std::size_t a = q(rng), b = q(rng), t = q(rng);
      if (a == b || b == t || a == t) {
        c.add(Gate::x(a));
      } else if (i % 3 == 0) {
        c.add(Gate::toffoli(a, b, t));
      } else if (i % 3 == 1) {
        c.add(Gate::swap(a, b));
      } else {
        c.add(Gate::cnot(a, t));
      }
    }
    const auto u = circuit_unitary(c);
    for (std::size_t in = 0; in < 16; ++in) {
      const auto out = simulate_classical(c, bits(in, 4));
      std::size_t idx = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        idx |= static_cast<std::size_t>(out[i]) << i;
      }
      EXPECT_NEAR(std::abs(u(idx, in) - 1.0), 0.0, 1e-12);
    }
  }
}

TEST(Simulate, UnitarySizeLimit) {
  Circuit c(kMaxUnitaryQubits + 1, {});
  EXPECT_THROW((void)circuit_unitary(c), InvalidArgument);
}

TEST(Swat, BlockSemantics) {
  // After SWAT, hi = lo' ^ ctrl * hi' and lo = hi'.
  const SwatBlock block{0, 1, 2};
  Circuit c(3, {});
  for (const auto& g : block.expand()) {
    c.add(g);
  }
  for (std::size_t in = 0; in < 8; ++in) {
    const auto s = bits(in, 3);
    const auto out = simulate_classical(c, s);
    EXPECT_EQ(out[0], s[1] != (s[2] && s[0]));
    EXPECT_EQ(out[1], s[0]);
    EXPECT_EQ(out[2], s[2]);
  }
  const auto located = find_swat_blocks(c);
  ASSERT_EQ(located.size(), 1U);
  EXPECT_EQ(located[0].block, block);
}

TEST(Synthesize, StructureForThreeLevels) {
  const auto l = symmetric_lattice(3, {false, false, true, true});
  const auto s = synthesize_from_lattice(l);
  EXPECT_EQ(s.circuit.n_qubits(), 7U);
  EXPECT_EQ(s.swats.size(), 6U);
  EXPECT_EQ(find_swat_blocks(s.circuit).size(), 6U);
  EXPECT_EQ(s.circuit.count(GateKind::X), 2U);
  EXPECT_EQ(s.circuit.labels(),
            (std::vector<std::string>{"a", "b", "c", "d0", "d1", "d2", "d3"}));
  for (const auto& b : s.swats) {
    EXPECT_EQ(b.data_lo, b.data_hi + 1);
    EXPECT_EQ(b.ctrl, b.data_hi + 2);
  }
}

TEST(Synthesize, AllTwoVariableFunctions) {
  const VarSet ab = VarSet::parse("a,b");
  for (unsigned table = 0; table < 16; ++table) {
    TruthTable t(2);
    for (Assignment a = 0; a < 4; ++a) {
      t.set(a, ((table >> a) & 1U) != 0);
    }
    const auto f = EsopFunction::from_truth_table(t, ab);
    const auto s = synthesize_from_lattice(build_lattice(f));
    EXPECT_TRUE(verify_synthesis(s.circuit, f, s.output_line, s.leaf_init))
        << f.to_string();
    EXPECT_EQ(s.swats.size(), s.n_levels * (s.n_levels + 1) / 2);
  }
}

TEST(Synthesize, RepeatedVariableAndRandom) {
  const VarSet abc = VarSet::parse("a,b,c");
  const auto f = parse_esop("a b ^ b c ^ a !c", abc);
  const auto s = synthesize_from_lattice(build_lattice(f));
  EXPECT_EQ(s.n_levels, 4U);
  EXPECT_EQ(s.swats.size(), 10U);
  EXPECT_TRUE(verify_synthesis(s.circuit, f, s.output_line, s.leaf_init));

  // Flipping the output breaks the check.
  Circuit broken = s.circuit;
  broken.add(Gate::x(s.output_line));
  EXPECT_FALSE(verify_synthesis(broken, f, s.output_line, s.leaf_init));

  std::mt19937_64 rng(11);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto vars = default_vars(n);
    for (int i = 0; i < 10; ++i) {
      const auto g = random_esop(vars, rng);
      const auto sg = synthesize_from_lattice(build_lattice(g, {}, 31));
      EXPECT_TRUE(verify_synthesis(sg.circuit, g, sg.output_line, sg.leaf_init))
          << g.to_string();
    }
  }
}

TEST(Synthesize, DecomposedCircuitIsEquivalent) {
  const auto f = parse_esop("a ^ b", VarSet::parse("a,b"));
  const auto s = synthesize_from_lattice(build_lattice(f));
  ASSERT_LE(s.circuit.n_qubits(), kMaxUnitaryQubits);
  const auto reference = circuit_unitary(s.circuit);
  for (const auto& style : DecompositionStyle::all()) {
    const auto d = decompose_circuit(s.circuit, style);
    EXPECT_EQ(d.count(GateKind::TOFFOLI), 0U);
    EXPECT_EQ(d.count(GateKind::SWAP), 0U);
    EXPECT_TRUE(equal_up_to_global_phase(circuit_unitary(d), reference))
        << style.to_string();
  }
}

TEST(Synthesize, LevelLimit) {
  const auto f = parse_esop("1", VarSet::parse("a"));
  const auto s = synthesize_from_lattice(build_lattice(f));
  EXPECT_EQ(s.n_levels, 0U);
  EXPECT_EQ(s.circuit.n_qubits(), 1U);
  EXPECT_TRUE(verify_synthesis(s.circuit, f, s.output_line, s.leaf_init));
}

} // namespace
} // namespace davio
