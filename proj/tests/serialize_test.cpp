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

#include "davio/serialize.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace davio {
namespace {

const VarSet kAbc = VarSet::parse("a,b,c");

TEST(Json, LatticeRoundTrip) {
  const auto f = parse_esop("a b ^ b c ^ a !c", kAbc);
  const auto l = build_lattice(f);
  const auto j = to_json(l);
  EXPECT_EQ(j["vars"], Json::parse(R"(["a","b","c"])"));
  EXPECT_EQ(j["level_vars"].size(), 4U);
  const auto back = lattice_from_json(j);
  EXPECT_EQ(back.level_vars(), l.level_vars());
  EXPECT_EQ(back.leaves(), l.leaves());
  ASSERT_EQ(back.levels().size(), l.levels().size());
  for (std::size_t k = 0; k < l.levels().size(); ++k) {
    for (std::size_t i = 0; i < l.levels()[k].size(); ++i) {
      EXPECT_EQ(back.levels()[k][i].residual, l.levels()[k][i].residual);
    }
  }
  EXPECT_EQ(to_json(back), j);
}

TEST(Json, CircuitRoundTrip) {
  const auto s = synthesize_from_lattice(symmetric_lattice(3, {0, 1, 0, 1}));
  const auto j = to_json(s.circuit);
  EXPECT_EQ(j["n_qubits"], 7);
  EXPECT_EQ(j["gates"][0]["kind"], "x");
  EXPECT_EQ(circuit_from_json(j), s.circuit);
  EXPECT_EQ(circuit_from_json(Json::parse(j.dump())), s.circuit);

  auto bad = j;
  bad["gates"][0]["qubits"] = Json::array({99});
  EXPECT_THROW((void)circuit_from_json(bad), InvalidArgument);
}

TEST(Json, LayoutRoundTrip) {
  for (const auto& g :
       {triangular_layout(2, 4), square_layout(3, 2), heavy_hex_layout(2, 1)}) {
    EXPECT_EQ(layout_from_json(to_json(g)), g);
  }
}

TEST(Json, ReportRoundTrip) {
  const auto s = synthesize_from_lattice(symmetric_lattice(4, {0, 0, 0, 0, 1}));
  for (auto kind :
       {LayoutKind::Triangular, LayoutKind::Square, LayoutKind::HeavyHex}) {
    const auto r = map_to_layout(kind, s.circuit, 4);
    const auto j = to_json(r);
    EXPECT_EQ(j["layout"], to_string(kind));
    EXPECT_EQ(j["total_swaps"], predicted_swaps(kind, 4));
    EXPECT_EQ(j["placement"][0][0], 0);
    const auto back = report_from_json(j);
    EXPECT_EQ(back.total_swaps, r.total_swaps);
    EXPECT_EQ(back.per_swat_connectivity, r.per_swat_connectivity);
    EXPECT_EQ(back.placement, r.placement);
    EXPECT_EQ(back.layout, r.layout);
    EXPECT_EQ(to_json(back), j);
    // A read-back report still routes.
    EXPECT_EQ(route_swat(s.circuit, back), route_swat(s.circuit, r));
  }
}

TEST(Text, QasmLayout) {
  Circuit c(3, {});
  c.add(Gate::x(0));
  c.add(Gate::toffoli(0, 1, 2));
  c.add(Gate::tdg(1));
  const auto q = to_qasm(c);
  EXPECT_EQ(q, "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n"
               "x q[0];\nccx q[0],q[1],q[2];\ntdg q[1];\n");
}

TEST(Text, DotOutputsAreGraphs) {
  const auto l = symmetric_lattice(2, {0, 1, 1});
  const auto s = synthesize_from_lattice(l);
  for (const auto& text : {to_dot(l), to_dot(square_layout(2, 2)),
                           to_dot(s.circuit)}) {
    EXPECT_NE(text.find("graph"), std::string::npos);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_NE(text.find('}'), std::string::npos);
  }
}

TEST(Sweep, CsvMatchesClosedForms) {
  const auto rows = run_sweep(
      1, 9, {LayoutKind::Square, LayoutKind::HeavyHex, LayoutKind::Triangular},
      4);
  ASSERT_EQ(rows.size(), 9U);
  std::istringstream csv(to_csv(rows));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "n,square,heavy_hex,triangular");
  for (std::size_t n = 1; n <= 9; ++n) {
    std::getline(csv, line);
    EXPECT_EQ(line, std::to_string(n) + "," +
                        std::to_string(predicted_swaps(LayoutKind::Square, n)) +
                        "," +
                        std::to_string(predicted_swaps(LayoutKind::HeavyHex, n)) +
                        ",0");
  }
}

TEST(Sweep, ThreadCountDoesNotChangeResult) {
  const std::vector<LayoutKind> kinds{LayoutKind::HeavyHex};
  EXPECT_EQ(to_csv(run_sweep(2, 8, kinds, 1)), to_csv(run_sweep(2, 8, kinds, 8)));
  EXPECT_EQ(to_csv(run_sweep(3, 3, kinds, 1)),
            "n,square,heavy_hex,triangular\n3,,10,\n");
  EXPECT_THROW((void)run_sweep(0, 3, kinds, 1), InvalidArgument);
  EXPECT_THROW((void)run_sweep(4, 3, kinds, 1), InvalidArgument);
}

} // namespace
} // namespace davio
