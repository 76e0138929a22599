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

#include "davio/circuit.hpp"
#include "davio/layout.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace davio {

/// Adjacency of the three qubits of a placed SWAT block, with qubit 0 the
/// target (data_hi), qubit 1 data_lo and qubit 2 the control.
enum class SwatConnectivity {
  FullTriangle,       // all three pairs adjacent
  VShape,             // 0-1 and 0-2 adjacent, 1-2 missing
  MissingTargetCtrl1, // 0-1 missing, 0-2 and 1-2 adjacent
  MissingTargetCtrl2, // 0-2 missing, 0-1 and 1-2 adjacent
  Disconnected        // two or more pairs missing
};

[[nodiscard]] std::string to_string(SwatConnectivity conn);

/// Additional SWAPs needed to run one SWAT block: 0, 0, 4, 2. Throws
/// PlacementInfeasible for Disconnected.
[[nodiscard]] std::size_t swat_swap_cost(SwatConnectivity conn);
/// Additional CNOTs: 0, 0, 9, 4. Throws PlacementInfeasible for
/// Disconnected.
[[nodiscard]] std::size_t swat_cnot_cost(SwatConnectivity conn);

[[nodiscard]] SwatConnectivity classify_swat(const LayoutGraph& layout,
                                             std::size_t target,
                                             std::size_t lo,
                                             std::size_t ctrl);

/// Logical line i sits on physical node physical[i].
struct Placement {
  std::vector<std::size_t> physical;

  /// Throws InvalidArgument when two lines share a node or a node is
  /// outside the layout.
  void validate(const LayoutGraph& layout) const;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct MappingReport {
  LayoutKind layout_kind = LayoutKind::Triangular;
  LayoutGraph layout;
  std::size_t n_levels = 0;
  Placement placement;
  std::vector<SwatConnectivity> per_swat_connectivity;
  std::vector<std::size_t> per_swat_swaps;
  std::vector<std::size_t> per_swat_cnots;
  std::size_t total_swaps = 0;
  std::size_t total_extra_cnots = 0;
  /// Set when the lattice repeats a variable; the closed-form counts are
  /// then upper bounds rather than exact values.
  bool bound_only = false;
};

/// Costs every SWAT block of `circuit` under an explicit placement. This is
/// the only place costs are produced; the map_to_* functions choose the
/// layout and placement and delegate here.
[[nodiscard]] MappingReport evaluate_placement(const Circuit& circuit,
                                               const LayoutGraph& layout,
                                               Placement placement,
                                               std::size_t n_levels);

/// Two-row ladder on a triangular patch: every SWAT lands on a triangle.
[[nodiscard]] MappingReport map_to_triangular(const Circuit& circuit,
                                              std::size_t n_levels);
/// Two-row ladder on a (n+1) x 2 grid. SWATs starting on an even line get a
/// V-shape, the others miss the target-lo edge.
[[nodiscard]] MappingReport map_to_square(const Circuit& circuit,
                                          std::size_t n_levels);
/// Lines laid along one heavy-hex row with the last data line on a bridge
/// qubit; only the bottommost SWAT closes without extra SWAPs.
[[nodiscard]] MappingReport map_to_heavy_hex(const Circuit& circuit,
                                             std::size_t n_levels);
[[nodiscard]] MappingReport map_to_layout(LayoutKind kind,
                                          const Circuit& circuit,
                                          std::size_t n_levels);

/// Closed forms: triangular 0; square n^2 for even n and n^2-1 for odd n;
/// heavy-hex n^2+n-2.
[[nodiscard]] std::size_t predicted_swaps(LayoutKind kind, std::size_t n);

/// Rewrites the circuit onto the physical nodes of report.layout, inserting
/// the SWAP sequences each SWAT's connectivity requires. Line i of the
/// input ends up on report.placement.physical[i]; unused nodes are idle.
/// Throws InconsistentReport if the report was not made for this circuit.
[[nodiscard]] Circuit route_swat(const Circuit& circuit,
                                 const MappingReport& report);

} // namespace davio
