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

#include <algorithm>
#include <set>

namespace davio {

namespace {

void check_synthesized(const Circuit& circuit, std::size_t n_levels) {
  if (n_levels < 1) {
    throw InvalidArgument("mapping needs at least one lattice level");
  }
  if (circuit.n_qubits() != 2 * n_levels + 1) {
    throw InvalidArgument("circuit has " + std::to_string(circuit.n_qubits()) +
                          " qubits, a " + std::to_string(n_levels) +
                          "-level synthesis has " +
                          std::to_string(2 * n_levels + 1));
  }
}

bool repeats_variable(const Circuit& circuit, std::size_t n_levels) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n_levels; ++i) {
    if (!seen.insert(circuit.labels()[i]).second) {
      return true;
    }
  }
  return false;
}

// Lines alternate between the two rows of a ladder: even lines on row 0,
// odd lines on row 1, two lines per column.
Placement ladder(const LayoutGraph& layout, std::size_t n_lines) {
  Placement p;
  for (std::size_t line = 0; line < n_lines; ++line) {
    p.physical.push_back(layout.require_at(static_cast<int>(line / 2),
                                           static_cast<int>(line % 2)));
  }
  return p;
}

} // namespace

std::string to_string(SwatConnectivity conn) {
  switch (conn) {
  case SwatConnectivity::FullTriangle:
    return "full-triangle";
  case SwatConnectivity::VShape:
    return "v-shape";
  case SwatConnectivity::MissingTargetCtrl1:
    return "missing-target-lo";
  case SwatConnectivity::MissingTargetCtrl2:
    return "missing-target-ctrl";
  case SwatConnectivity::Disconnected:
    return "disconnected";
  }
  return "unknown";
}

std::size_t swat_swap_cost(SwatConnectivity conn) {
  switch (conn) {
  case SwatConnectivity::FullTriangle:
  case SwatConnectivity::VShape:
    return 0;
  case SwatConnectivity::MissingTargetCtrl1:
    return 4;
  case SwatConnectivity::MissingTargetCtrl2:
    return 2;
  case SwatConnectivity::Disconnected:
    break;
  }
  throw PlacementInfeasible("SWAT qubits are missing two or more couplings");
}

std::size_t swat_cnot_cost(SwatConnectivity conn) {
  switch (conn) {
  case SwatConnectivity::FullTriangle:
  case SwatConnectivity::VShape:
    return 0;
  case SwatConnectivity::MissingTargetCtrl1:
    return 9;
  case SwatConnectivity::MissingTargetCtrl2:
    return 4;
  case SwatConnectivity::Disconnected:
    break;
  }
  throw PlacementInfeasible("SWAT qubits are missing two or more couplings");
}

SwatConnectivity classify_swat(const LayoutGraph& layout, std::size_t target,
                               std::size_t lo, std::size_t ctrl) {
  const bool e01 = are_adjacent(layout, target, lo);
  const bool e02 = are_adjacent(layout, target, ctrl);
  const bool e12 = are_adjacent(layout, lo, ctrl);
  if (e01 && e02 && e12) {
    return SwatConnectivity::FullTriangle;
  }
  if (e01 && e02) {
    return SwatConnectivity::VShape;
  }
  if (e02 && e12) {
    return SwatConnectivity::MissingTargetCtrl1;
  }
  if (e01 && e12) {
    return SwatConnectivity::MissingTargetCtrl2;
  }
  return SwatConnectivity::Disconnected;
}

void Placement::validate(const LayoutGraph& layout) const {
  std::set<std::size_t> used;
  for (auto node : physical) {
    if (node >= layout.size()) {
      throw InvalidArgument("placement uses unknown node " +
                            std::to_string(node));
    }
    if (!used.insert(node).second) {
      throw InvalidArgument("placement puts two lines on node " +
                            std::to_string(node));
    }
  }
}

MappingReport evaluate_placement(const Circuit& circuit,
                                 const LayoutGraph& layout, Placement placement,
                                 std::size_t n_levels) {
  if (placement.physical.size() != circuit.n_qubits()) {
    throw InvalidArgument("placement must cover every circuit line");
  }
  placement.validate(layout);
  MappingReport report;
  report.layout_kind = layout.kind();
  report.layout = layout;
  report.n_levels = n_levels;
  for (const auto& located : find_swat_blocks(circuit)) {
    const auto& b = located.block;
    const auto conn = classify_swat(layout, placement.physical[b.data_hi],
                                    placement.physical[b.data_lo],
                                    placement.physical[b.ctrl]);
    report.per_swat_connectivity.push_back(conn);
    report.per_swat_swaps.push_back(swat_swap_cost(conn));
    report.per_swat_cnots.push_back(swat_cnot_cost(conn));
    report.total_swaps += report.per_swat_swaps.back();
    report.total_extra_cnots += report.per_swat_cnots.back();
  }
  report.placement = std::move(placement);
  report.bound_only =
      repeats_variable(circuit, std::min(n_levels, circuit.n_qubits()));
  return report;
}

MappingReport map_to_triangular(const Circuit& circuit, std::size_t n_levels) {
  check_synthesized(circuit, n_levels);
  const auto layout = triangular_layout(2, n_levels + 1);
  return evaluate_placement(circuit, layout,
                            ladder(layout, circuit.n_qubits()), n_levels);
}

MappingReport map_to_square(const Circuit& circuit, std::size_t n_levels) {
  check_synthesized(circuit, n_levels);
  const auto layout = square_layout(n_levels + 1, 2);
  return evaluate_placement(circuit, layout,
                            ladder(layout, circuit.n_qubits()), n_levels);
}

MappingReport map_to_heavy_hex(const Circuit& circuit, std::size_t n_levels) {
  check_synthesized(circuit, n_levels);
  const auto n = static_cast<int>(n_levels);
  // The bridge under line 2n-2 must fall on a column divisible by four.
  const int offset = n % 2 == 1 ? 0 : 2;
  const int last_col = offset + 2 * n - 1;
  const auto cells = static_cast<std::size_t>(std::max(1, (last_col + 3) / 4));
  const auto layout = heavy_hex_layout(cells, 1);
  Placement placement;
  for (int line = 0; line < 2 * n; ++line) {
    placement.physical.push_back(layout.require_at(offset + line, 0));
  }
  placement.physical.push_back(layout.require_at(offset + 2 * n - 2, 1));
  return evaluate_placement(circuit, layout, std::move(placement), n_levels);
}

MappingReport map_to_layout(LayoutKind kind, const Circuit& circuit,
                            std::size_t n_levels) {
  switch (kind) {
  case LayoutKind::Triangular:
    return map_to_triangular(circuit, n_levels);
  case LayoutKind::Square:
    return map_to_square(circuit, n_levels);
  case LayoutKind::HeavyHex:
    return map_to_heavy_hex(circuit, n_levels);
  }
  throw InvalidArgument("unknown layout kind");
}

std::size_t predicted_swaps(LayoutKind kind, std::size_t n) {
  if (n < 1) {
    throw InvalidArgument("predicted_swaps needs n >= 1");
  }
  switch (kind) {
  case LayoutKind::Triangular:
    return 0;
  case LayoutKind::Square:
    return n % 2 == 0 ? n * n : n * n - 1;
  case LayoutKind::HeavyHex:
    return n * n + n - 2;
  }
  throw InvalidArgument("unknown layout kind");
}

Circuit route_swat(const Circuit& circuit, const MappingReport& report) {
  const auto& layout = report.layout;
  const auto& phys = report.placement.physical;
  if (phys.size() != circuit.n_qubits()) {
    throw InconsistentReport("placement covers " + std::to_string(phys.size()) +
                             " lines, circuit has " +
                             std::to_string(circuit.n_qubits()));
  }
  try {
    report.placement.validate(layout);
  } catch (const InvalidArgument& e) {
    throw InconsistentReport(e.what());
  }
  const auto swats = find_swat_blocks(circuit);
  if (swats.size() != report.per_swat_swaps.size() ||
      swats.size() != report.per_swat_connectivity.size()) {
    throw InconsistentReport("report lists " +
                             std::to_string(report.per_swat_swaps.size()) +
                             " SWAT blocks, circuit has " +
                             std::to_string(swats.size()));
  }

  std::vector<std::string> labels(layout.size());
  for (std::size_t line = 0; line < phys.size(); ++line) {
    labels[phys[line]] = circuit.labels()[line];
  }
  Circuit out(layout.size(), std::move(labels));

  std::size_t next_swat = 0;
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (next_swat < swats.size() && swats[next_swat].gate_index == i) {
      const auto& b = swats[next_swat].block;
      const auto h = phys[b.data_hi];
      const auto l = phys[b.data_lo];
      const auto c = phys[b.ctrl];
      const auto conn = classify_swat(layout, h, l, c);
      if (conn != report.per_swat_connectivity[next_swat] ||
          swat_swap_cost(conn) != report.per_swat_swaps[next_swat]) {
        throw InconsistentReport("SWAT " + std::to_string(next_swat) +
                                 " does not match the report");
      }
      switch (conn) {
      case SwatConnectivity::FullTriangle:
      case SwatConnectivity::VShape:
        out.add(Gate::swap(h, l));
        out.add(Gate::toffoli(c, l, h));
        break;
      case SwatConnectivity::MissingTargetCtrl1:
        // Exchange h and l through c, then bring the target onto c.
        out.add(Gate::swap(h, c));
        out.add(Gate::swap(c, l));
        out.add(Gate::swap(h, c));
        out.add(Gate::swap(h, c));
        out.add(Gate::toffoli(h, l, c));
        out.add(Gate::swap(h, c));
        break;
      case SwatConnectivity::MissingTargetCtrl2:
        out.add(Gate::swap(h, l));
        out.add(Gate::swap(h, l));
        out.add(Gate::toffoli(c, h, l));
        out.add(Gate::swap(h, l));
        break;
      case SwatConnectivity::Disconnected:
        throw PlacementInfeasible("SWAT qubits are missing two couplings");
      }
      ++next_swat;
      ++i; // skip the Toffoli half of the block
      continue;
    }
    Gate g = gates[i];
    for (auto& q : g.qubits) {
      q = phys[q];
    }
    out.add(std::move(g));
  }
  return out;
}

} // namespace davio
