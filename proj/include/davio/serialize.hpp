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
#include "davio/lattice.hpp"
#include "davio/layout.hpp"
#include "davio/mapper.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace davio {

using Json = nlohmann::ordered_json;

/// {"vars", "level_vars", "levels", "leaves"}; levels hold residual text.
[[nodiscard]] Json to_json(const DavioLattice& lattice);
[[nodiscard]] DavioLattice lattice_from_json(const Json& j);

/// {"n_qubits", "labels", "gates": [{"kind", "qubits"}]}.
[[nodiscard]] Json to_json(const Circuit& circuit);
[[nodiscard]] Circuit circuit_from_json(const Json& j);

/// {"kind", "nodes": [{"id", "x", "y"}], "edges": [[a, b]]}.
[[nodiscard]] Json to_json(const LayoutGraph& layout);
[[nodiscard]] LayoutGraph layout_from_json(const Json& j);

/// {"layout", "n_levels", "placement": [[logical, physical]],
///  "per_swat_swaps", "total_swaps", "total_extra_cnots", "bound_only"}
/// followed by the per-SWAT CNOT and connectivity lists and the layout
/// graph so that a report can be read back on its own.
[[nodiscard]] Json to_json(const MappingReport& report);
[[nodiscard]] MappingReport report_from_json(const Json& j);

/// Ranked by level; nodes are labelled with their residual.
[[nodiscard]] std::string to_dot(const DavioLattice& lattice);
/// Undirected graph with pinned `pos` attributes.
[[nodiscard]] std::string to_dot(const LayoutGraph& layout);
/// Interaction graph of the circuit.
[[nodiscard]] std::string to_dot(const Circuit& circuit);

/// One gate per line after an OPENQASM header and `qreg q[N];`.
[[nodiscard]] std::string to_qasm(const Circuit& circuit);

struct SweepRow {
  std::size_t n = 0;
  std::optional<std::size_t> square;
  std::optional<std::size_t> heavy_hex;
  std::optional<std::size_t> triangular;
};

/// Maps the symmetric n-level circuit onto each requested layout for every
/// n in [n_min, n_max]. Rows are independent and computed on up to
/// `threads` threads; the result is ordered by n.
[[nodiscard]] std::vector<SweepRow> run_sweep(std::size_t n_min,
                                              std::size_t n_max,
                                              const std::vector<LayoutKind>& layouts,
                                              std::size_t threads);

/// Header "n,square,heavy_hex,triangular"; layouts not swept are empty.
[[nodiscard]] std::string to_csv(const std::vector<SweepRow>& rows);

} // namespace davio
