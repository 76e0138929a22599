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

#include "davio/layout.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace davio {

namespace {

class Builder {
public:
  std::size_t add(int x, int y) {
    const auto id = nodes_.size();
    nodes_.push_back({id, x, y});
    index_[{x, y}] = id;
    return id;
  }

  [[nodiscard]] std::optional<std::size_t> at(int x, int y) const {
    const auto it = index_.find({x, y});
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  void connect(int x0, int y0, int x1, int y1) {
    const auto a = at(x0, y0);
    const auto b = at(x1, y1);
    if (a && b && *a != *b) {
      edges_.emplace(std::min(*a, *b), std::max(*a, *b));
    }
  }

  LayoutGraph finish(LayoutKind kind) {
    return {kind, std::move(nodes_), {edges_.begin(), edges_.end()}};
  }

private:
  std::vector<LayoutNode> nodes_;
  std::map<std::pair<int, int>, std::size_t> index_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

} // namespace

std::string to_string(LayoutKind kind) {
  switch (kind) {
  case LayoutKind::Triangular:
    return "triangular";
  case LayoutKind::Square:
    return "square";
  case LayoutKind::HeavyHex:
    return "heavy-hex";
  }
  return "unknown";
}

LayoutKind parse_layout_kind(std::string_view text) {
  if (text == "triangular") {
    return LayoutKind::Triangular;
  }
  if (text == "square") {
    return LayoutKind::Square;
  }
  if (text == "heavy-hex" || text == "heavy_hex") {
    return LayoutKind::HeavyHex;
  }
  throw InvalidArgument("unknown layout '" + std::string(text) + "'");
}

LayoutGraph::LayoutGraph(LayoutKind kind, std::vector<LayoutNode> nodes,
                         std::vector<std::pair<std::size_t, std::size_t>> edges)
    : kind_(kind), nodes_(std::move(nodes)), edges_(std::move(edges)),
      adjacency_(nodes_.size()) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id != i) {
      throw InvalidArgument("layout node ids must be 0..n-1 in order");
    }
  }
  for (auto& [a, b] : edges_) {
    if (a == b) {
      throw InvalidArgument("layout edges cannot be self-loops");
    }
    check_id(a);
    check_id(b);
    if (a > b) {
      std::swap(a, b);
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidArgument("layout edges must be unique");
  }
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
  }
}

void LayoutGraph::check_id(std::size_t id) const {
  if (id >= nodes_.size()) {
    throw InvalidArgument("unknown layout node " + std::to_string(id));
  }
}

const LayoutNode& LayoutGraph::node(std::size_t id) const {
  check_id(id);
  return nodes_[id];
}

const std::vector<std::size_t>& LayoutGraph::neighbors(std::size_t id) const {
  check_id(id);
  return adjacency_[id];
}

std::optional<std::size_t> LayoutGraph::id_at(int x, int y) const noexcept {
  for (const auto& n : nodes_) {
    if (n.x == x && n.y == y) {
      return n.id;
    }
  }
  return std::nullopt;
}

std::size_t LayoutGraph::require_at(int x, int y) const {
  if (auto id = id_at(x, y)) {
    return *id;
  }
  throw InvalidArgument("no layout node at (" + std::to_string(x) + ", " +
                        std::to_string(y) + ")");
}

bool LayoutGraph::is_connected() const {
  if (nodes_.empty()) {
    return true;
  }
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const auto id = stack.back();
    stack.pop_back();
    for (auto next : adjacency_[id]) {
      if (!seen[next]) {
        seen[next] = true;
        ++visited;
        stack.push_back(next);
      }
    }
  }
  return visited == nodes_.size();
}

std::size_t LayoutGraph::count_triangles() const {
  std::size_t count = 0;
  for (const auto& [a, b] : edges_) {
    for (auto c : adjacency_[b]) {
      if (c > b && std::binary_search(adjacency_[a].begin(),
                                      adjacency_[a].end(), c)) {
        ++count;
      }
    }
  }
  return count;
}

LayoutGraph triangular_layout(std::size_t rows, std::size_t row_width) {
  if (rows < 1 || row_width < 1) {
    throw InvalidArgument("triangular layout needs rows, row_width >= 1");
  }
  Builder b;
  const auto w = static_cast<int>(row_width);
  const auto h = static_cast<int>(rows);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      b.add(x, y);
    }
  }
  for (int y = 0; y < h; ++y) {
    // Odd rows are shifted right by half a cell.
    const int shift = (y % 2 == 0) ? -1 : 0;
    for (int x = 0; x < w; ++x) {
      b.connect(x, y, x + 1, y);
      b.connect(x, y, x + shift, y + 1);
      b.connect(x, y, x + shift + 1, y + 1);
    }
  }
  return b.finish(LayoutKind::Triangular);
}

LayoutGraph square_layout(std::size_t width, std::size_t height) {
  if (width < 2 || height < 2) {
    throw InvalidArgument("square layout needs width, height >= 2");
  }
  Builder b;
  const auto w = static_cast<int>(width);
  const auto h = static_cast<int>(height);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      b.add(x, y);
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      b.connect(x, y, x + 1, y);
      b.connect(x, y, x, y + 1);
    }
  }
  return b.finish(LayoutKind::Square);
}

LayoutGraph heavy_hex_layout(std::size_t cells_x, std::size_t cells_y) {
  if (cells_x < 1 || cells_y < 1) {
    throw InvalidArgument("heavy-hex layout needs cells_x, cells_y >= 1");
  }
  const auto cx = static_cast<int>(cells_x);
  const auto cy = static_cast<int>(cells_y);
  // Bridge columns between qubit rows r and r+1.
  const auto bridge_cols = [cx](int r) {
    std::vector<int> cols;
    for (int i = 0; i <= cx; ++i) {
      cols.push_back(4 * i + 2 * (r % 2));
    }
    return cols;
  };
  Builder b;
  for (int r = 0; r <= cy; ++r) {
    int lo = 1 << 30;
    int hi = -1;
    for (int s : {r - 1, r}) {
      if (s < 0 || s >= cy) {
        continue;
      }
      const auto cols = bridge_cols(s);
      lo = std::min(lo, cols.front());
      hi = std::max(hi, cols.back());
    }
    for (int x = lo; x <= hi; ++x) {
      b.add(x, 2 * r);
    }
    if (r < cy) {
      for (int x : bridge_cols(r)) {
        b.add(x, 2 * r + 1);
      }
    }
  }
  for (int r = 0; r <= cy; ++r) {
    for (int x = 0; x <= 4 * cx + 2; ++x) {
      b.connect(x, 2 * r, x + 1, 2 * r);
    }
    if (r < cy) {
      for (int x : bridge_cols(r)) {
        b.connect(x, 2 * r, x, 2 * r + 1);
        b.connect(x, 2 * r + 1, x, 2 * r + 2);
      }
    }
  }
  return b.finish(LayoutKind::HeavyHex);
}

bool are_adjacent(const LayoutGraph& g, std::size_t a, std::size_t b) {
  const auto& list = g.neighbors(a);
  (void)g.node(b);
  return std::binary_search(list.begin(), list.end(), b);
}

} // namespace davio
