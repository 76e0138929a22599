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

#include "davio/mapper.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <limits>
#include <numeric>

namespace davio {
namespace {

Synthesis symmetric_synthesis(std::size_t n) {
  std::vector<bool> leaves(n + 1, false);
  leaves[n] = true;
  return synthesize_from_lattice(symmetric_lattice(n, leaves));
}

constexpr std::array<LayoutKind, 3> kKinds{
    LayoutKind::Triangular, LayoutKind::Square, LayoutKind::HeavyHex};

TEST(SwatCosts, Table) {
  EXPECT_EQ(swat_swap_cost(SwatConnectivity::FullTriangle), 0U);
  EXPECT_EQ(swat_swap_cost(SwatConnectivity::VShape), 0U);
  EXPECT_EQ(swat_swap_cost(SwatConnectivity::MissingTargetCtrl1), 4U);
  EXPECT_EQ(swat_swap_cost(SwatConnectivity::MissingTargetCtrl2), 2U);
  EXPECT_EQ(swat_cnot_cost(SwatConnectivity::MissingTargetCtrl1), 9U);
  EXPECT_EQ(swat_cnot_cost(SwatConnectivity::MissingTargetCtrl2), 4U);
  EXPECT_THROW((void)swat_swap_cost(SwatConnectivity::Disconnected),
               PlacementInfeasible);
  EXPECT_THROW((void)swat_cnot_cost(SwatConnectivity::Disconnected),
               PlacementInfeasible);
}

TEST(SwatCosts, Classification) {
  const auto tri = triangular_layout(2, 2); // 0,1 on row 0; 2,3 on row 1
  EXPECT_EQ(classify_swat(tri, 0, 1, 2), SwatConnectivity::FullTriangle);
  const auto sq = square_layout(3, 3);
  // Centre 4 with neighbours 1, 3, 5, 7; 0 touches 1 and 3.
  EXPECT_EQ(classify_swat(sq, 4, 1, 3), SwatConnectivity::VShape);
  EXPECT_EQ(classify_swat(sq, 1, 3, 0), SwatConnectivity::MissingTargetCtrl1);
  EXPECT_EQ(classify_swat(sq, 1, 0, 3), SwatConnectivity::MissingTargetCtrl2);
  EXPECT_EQ(classify_swat(sq, 0, 8, 4), SwatConnectivity::Disconnected);
}

TEST(ClosedForms, MatchEvaluatedPlacements) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto s = symmetric_synthesis(n);
    for (auto kind : kKinds) {
      const auto r = map_to_layout(kind, s.circuit, n);
      EXPECT_EQ(r.total_swaps, predicted_swaps(kind, n))
          << to_string(kind) << " n=" << n;
      EXPECT_EQ(r.per_swat_swaps.size(), n * (n + 1) / 2);
      EXPECT_EQ(std::accumulate(r.per_swat_swaps.begin(),
                                r.per_swat_swaps.end(), std::size_t{0}),
                r.total_swaps);
      EXPECT_EQ(std::accumulate(r.per_swat_cnots.begin(),
                                r.per_swat_cnots.end(), std::size_t{0}),
                r.total_extra_cnots);
      for (std::size_t i = 0; i < r.per_swat_swaps.size(); ++i) {
        const auto cost = r.per_swat_swaps[i];
        EXPECT_TRUE(cost == 0 || cost == 2 || cost == 4);
        EXPECT_EQ(cost, swat_swap_cost(r.per_swat_connectivity[i]));
        EXPECT_EQ(r.per_swat_cnots[i],
                  swat_cnot_cost(r.per_swat_connectivity[i]));
      }
      EXPECT_FALSE(r.bound_only);
      EXPECT_EQ(r.layout_kind, kind);
    }
  }
  EXPECT_EQ(predicted_swaps(LayoutKind::Square, 3), 8U);
  EXPECT_EQ(predicted_swaps(LayoutKind::Square, 4), 16U);
  EXPECT_EQ(predicted_swaps(LayoutKind::HeavyHex, 3), 10U);
  EXPECT_EQ(predicted_swaps(LayoutKind::Triangular, 9), 0U);
  EXPECT_THROW((void)predicted_swaps(LayoutKind::Square, 0), InvalidArgument);
}

TEST(ClosedForms, Monotone) {
  for (std::size_t n = 1; n < 30; ++n) {
    EXPECT_LE(predicted_swaps(LayoutKind::Square, n),
              predicted_swaps(LayoutKind::HeavyHex, n));
    EXPECT_LT(predicted_swaps(LayoutKind::Square, n),
              predicted_swaps(LayoutKind::Square, n + 1));
    EXPECT_LT(predicted_swaps(LayoutKind::HeavyHex, n),
              predicted_swaps(LayoutKind::HeavyHex, n + 1));
  }
}

TEST(HeavyHex, ExactlyOneFreeSwat) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto r = map_to_heavy_hex(symmetric_synthesis(n).circuit, n);
    EXPECT_EQ(std::count(r.per_swat_swaps.begin(), r.per_swat_swaps.end(), 0U),
              1)
        << "n=" << n;
    EXPECT_EQ(r.layout.count_triangles(), 0U);
  }
}

TEST(Triangular, EverySwatOnATriangle) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto r = map_to_triangular(symmetric_synthesis(n).circuit, n);
    for (auto c : r.per_swat_connectivity) {
      EXPECT_EQ(c, SwatConnectivity::FullTriangle);
    }
  }
}

// Smallest total over every injective placement of the 2n+1 lines on a
// square grid, found by depth-first search with cost pruning. SWAT costs
// are charged as soon as their three lines are placed.
std::size_t best_square_total(const Circuit& c, const LayoutGraph& grid) {
  const auto blocks = find_swat_blocks(c);
  std::vector<std::vector<SwatBlock>> ready(c.n_qubits());
  for (const auto& lb : blocks) {
    const auto q = lb.block.qubits();
    ready[*std::max_element(q.begin(), q.end())].push_back(lb.block);
  }
  std::vector<std::size_t> phys(c.n_qubits());
  std::vector<bool> used(grid.size(), false);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::function<void(std::size_t, std::size_t)> place =
      [&](std::size_t line, std::size_t cost) {
        if (cost >= best) {
          return;
        }
        if (line == c.n_qubits()) {
          best = cost;
          return;
        }
        for (std::size_t node = 0; node < grid.size(); ++node) {
          if (used[node]) {
            continue;
          }
          phys[line] = node;
          std::size_t extra = 0;
          bool feasible = true;
          for (const auto& b : ready[line]) {
            const auto conn = classify_swat(grid, phys[b.data_hi],
                                            phys[b.data_lo], phys[b.ctrl]);
            if (conn == SwatConnectivity::Disconnected) {
              feasible = false;
              break;
            }
            extra += swat_swap_cost(conn);
          }
          if (feasible) {
            used[node] = true;
            place(line + 1, cost + extra);
            used[node] = false;
          }
        }
      };
  place(0, 0);
  return best;
}

TEST(Square, LadderIsOptimalOnSmallGrids) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto s = symmetric_synthesis(n);
    const auto grid = square_layout(4, 4);
    EXPECT_EQ(best_square_total(s.circuit, grid),
              predicted_swaps(LayoutKind::Square, n))
        << "n=" << n;
  }
}

std::vector<bool> run_routed(const Circuit& routed, const Placement& p,
                             const std::vector<bool>& logical_in) {
  std::vector<bool> state(routed.n_qubits(), false);
  for (std::size_t i = 0; i < logical_in.size(); ++i) {
    state[p.physical[i]] = logical_in[i];
  }
  const auto out = simulate_classical(routed, state);
  std::vector<bool> logical(logical_in.size());
  for (std::size_t i = 0; i < logical.size(); ++i) {
    logical[i] = out[p.physical[i]];
  }
  return logical;
}

TEST(Routing, PreservesBehaviour) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto s = symmetric_synthesis(n);
    for (auto kind : kKinds) {
      const auto r = map_to_layout(kind, s.circuit, n);
      const auto routed = route_swat(s.circuit, r);
      EXPECT_EQ(routed.count(GateKind::SWAP),
                s.circuit.count(GateKind::SWAP) + r.total_swaps);
      EXPECT_EQ(routed.count(GateKind::TOFFOLI),
                s.circuit.count(GateKind::TOFFOLI));
      // Every two-qubit interaction lies on a coupler except Toffoli control
      // pairs, which the nearest-neighbour decomposition never couples.
      for (const auto& g : routed.gates()) {
        if (g.kind == GateKind::SWAP || g.kind == GateKind::CNOT) {
          EXPECT_TRUE(are_adjacent(r.layout, g.qubits[0], g.qubits[1]));
        } else if (g.kind == GateKind::TOFFOLI) {
          EXPECT_TRUE(are_adjacent(r.layout, g.qubits[0], g.qubits[2]));
          EXPECT_TRUE(are_adjacent(r.layout, g.qubits[1], g.qubits[2]));
        }
      }
      const std::size_t lines = s.circuit.n_qubits();
      for (std::size_t in = 0; in < (std::size_t{1} << lines); ++in) {
        std::vector<bool> input(lines);
        for (std::size_t i = 0; i < lines; ++i) {
          input[i] = ((in >> i) & 1U) != 0;
        }
        ASSERT_EQ(run_routed(routed, r.placement, input),
                  simulate_classical(s.circuit, input))
            << to_string(kind) << " n=" << n << " input=" << in;
      }
    }
  }
}

TEST(Routing, ThreeLevelSwapCounts) {
  const auto s = symmetric_synthesis(3);
  const auto sq = route_swat(s.circuit, map_to_square(s.circuit, 3));
  const auto hh = route_swat(s.circuit, map_to_heavy_hex(s.circuit, 3));
  EXPECT_EQ(sq.count(GateKind::SWAP) - s.circuit.count(GateKind::SWAP), 8U);
  EXPECT_EQ(hh.count(GateKind::SWAP) - s.circuit.count(GateKind::SWAP), 10U);
}

TEST(Routing, RejectsMismatchedReports) {
  const auto s3 = symmetric_synthesis(3);
  const auto s2 = symmetric_synthesis(2);
  const auto r3 = map_to_square(s3.circuit, 3);
  EXPECT_THROW((void)route_swat(s2.circuit, r3), InconsistentReport);

  auto tampered = r3;
  tampered.per_swat_swaps[0] = 4;
  tampered.per_swat_connectivity[0] = SwatConnectivity::MissingTargetCtrl1;
  EXPECT_THROW((void)route_swat(s3.circuit, tampered), InconsistentReport);

  auto shared = r3;
  shared.placement.physical[1] = shared.placement.physical[0];
  EXPECT_THROW((void)route_swat(s3.circuit, shared), InconsistentReport);

  auto truncated = r3;
  truncated.per_swat_swaps.pop_back();
  EXPECT_THROW((void)route_swat(s3.circuit, truncated), InconsistentReport);
}

TEST(Mapping, InputChecks) {
  const auto s = symmetric_synthesis(3);
  EXPECT_THROW((void)map_to_square(s.circuit, 2), InvalidArgument);
  EXPECT_THROW((void)map_to_square(s.circuit, 0), InvalidArgument);
  const auto grid = square_layout(2, 2);
  EXPECT_THROW(
      (void)evaluate_placement(s.circuit, grid, Placement{{0, 1, 2}}, 3),
      InvalidArgument);
  EXPECT_THROW((Placement{{0, 0}}).validate(grid), InvalidArgument);
  EXPECT_THROW((Placement{{0, 7}}).validate(grid), InvalidArgument);
}

TEST(Mapping, RepeatedVariablesGiveBounds) {
  const auto f = parse_esop("a b ^ b c ^ a !c", VarSet::parse("a,b,c"));
  const auto s = synthesize_from_lattice(build_lattice(f));
  ASSERT_EQ(s.n_levels, 4U);
  const auto r = map_to_square(s.circuit, s.n_levels);
  EXPECT_TRUE(r.bound_only);
  EXPECT_EQ(r.total_swaps, predicted_swaps(LayoutKind::Square, 4));
}

} // namespace
} // namespace davio
