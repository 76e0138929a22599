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

#include "davio/error.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace davio {

enum class LayoutKind { Triangular, Square, HeavyHex };

[[nodiscard]] std::string to_string(LayoutKind kind);
/// Accepts "triangular", "square", "heavy-hex" (and "heavy_hex").
[[nodiscard]] LayoutKind parse_layout_kind(std::string_view text);

struct LayoutNode {
  std::size_t id = 0;
  int x = 0;
  int y = 0;

  friend bool operator==(const LayoutNode&, const LayoutNode&) = default;
};

/// Undirected coupling graph. Node ids are 0..size()-1 and edges are
/// stored as sorted (low, high) pairs without duplicates.
class LayoutGraph {
public:
  LayoutGraph() = default;
  LayoutGraph(LayoutKind kind, std::vector<LayoutNode> nodes,
              std::vector<std::pair<std::size_t, std::size_t>> edges);

  [[nodiscard]] LayoutKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] const std::vector<LayoutNode>& nodes() const noexcept {
    return nodes_;
  }
  [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>&
  edges() const noexcept {
    return edges_;
  }
  [[nodiscard]] const LayoutNode& node(std::size_t id) const;
  [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t id) const;
  [[nodiscard]] std::size_t degree(std::size_t id) const {
    return neighbors(id).size();
  }
  [[nodiscard]] std::optional<std::size_t> id_at(int x, int y) const noexcept;
  /// Like id_at but throws InvalidArgument.
  [[nodiscard]] std::size_t require_at(int x, int y) const;

  [[nodiscard]] bool is_connected() const;
  /// Number of 3-cycles.
  [[nodiscard]] std::size_t count_triangles() const;

  friend bool operator==(const LayoutGraph& a, const LayoutGraph& b) {
    return a.kind_ == b.kind_ && a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

private:
  void check_id(std::size_t id) const;

  LayoutKind kind_ = LayoutKind::Square;
  std::vector<LayoutNode> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Triangular grid in offset coordinates: rows are shifted by half a cell
/// on odd y, so every interior node has six neighbours. Node (x, y) has id
/// y * row_width + x.
[[nodiscard]] LayoutGraph triangular_layout(std::size_t rows,
                                            std::size_t row_width);

/// width x height grid; node (x, y) has id y * width + x.
[[nodiscard]] LayoutGraph square_layout(std::size_t width, std::size_t height);

/// Heavy-hex patch with cells_x by cells_y hexagons. Qubit rows sit at even
/// y; the bridge qubits between rows sit at odd y, every fourth column with
/// alternating offset. A single cell is a 12-cycle.
[[nodiscard]] LayoutGraph heavy_hex_layout(std::size_t cells_x,
                                           std::size_t cells_y);

/// Throws InvalidArgument for ids outside the graph.
[[nodiscard]] bool are_adjacent(const LayoutGraph& g, std::size_t a,
                                std::size_t b);

} // namespace davio
