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

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace davio {

namespace {

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw InvalidArgument(std::string("missing JSON field '") + name + "'");
  }
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad JSON field '") + name +
                          "': " + e.what());
  }
}

SwatConnectivity parse_connectivity(const std::string& text) {
  for (auto c : {SwatConnectivity::FullTriangle, SwatConnectivity::VShape,
                 SwatConnectivity::MissingTargetCtrl1,
                 SwatConnectivity::MissingTargetCtrl2,
                 SwatConnectivity::Disconnected}) {
    if (to_string(c) == text) {
      return c;
    }
  }
  throw InvalidArgument("unknown SWAT connectivity '" + text + "'");
}

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

} // namespace

Json to_json(const DavioLattice& lattice) {
  Json levels = Json::array();
  for (const auto& row : lattice.levels()) {
    Json nodes = Json::array();
    for (const auto& node : row) {
      nodes.push_back(node.residual.to_string());
    }
    levels.push_back(std::move(nodes));
  }
  Json leaves = Json::array();
  for (bool b : lattice.leaves()) {
    leaves.push_back(b ? 1 : 0);
  }
  Json j;
  j["vars"] = lattice.vars().names();
  j["level_vars"] = lattice.level_var_names();
  j["levels"] = std::move(levels);
  j["leaves"] = std::move(leaves);
  return j;
}

DavioLattice lattice_from_json(const Json& j) {
  const VarSet vars(field<std::vector<std::string>>(j, "vars"));
  std::vector<std::size_t> level_vars;
  for (const auto& name : field<std::vector<std::string>>(j, "level_vars")) {
    level_vars.push_back(vars.require(name));
  }
  const auto rows = field<std::vector<std::vector<std::string>>>(j, "levels");
  const auto leaves = field<std::vector<int>>(j, "leaves");
  std::vector<std::vector<LatticeNode>> levels;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::vector<LatticeNode> row;
    for (std::size_t i = 0; i < rows[k].size(); ++i) {
      LatticeNode node;
      node.level = k;
      node.position = i;
      node.residual = parse_esop(rows[k][i], vars);
      if (k + 1 < rows.size()) {
        node.left_child = i;
        node.right_child = i + 1;
      }
      row.push_back(std::move(node));
    }
    levels.push_back(std::move(row));
  }
  DavioLattice lattice(vars, std::move(level_vars), std::move(levels));
  const auto actual = lattice.leaves();
  if (actual.size() != leaves.size() ||
      !std::equal(actual.begin(), actual.end(), leaves.begin(),
                  [](bool a, int b) { return a == (b != 0); })) {
    throw InvalidArgument("lattice leaves do not match the last level");
  }
  return lattice;
}

Json to_json(const Circuit& circuit) {
  Json gates = Json::array();
  for (const auto& g : circuit.gates()) {
    Json entry;
    entry["kind"] = std::string(mnemonic(g.kind));
    entry["qubits"] = g.qubits;
    gates.push_back(std::move(entry));
  }
  Json j;
  j["n_qubits"] = circuit.n_qubits();
  j["labels"] = circuit.labels();
  j["gates"] = std::move(gates);
  return j;
}

Circuit circuit_from_json(const Json& j) {
  Circuit c(field<std::size_t>(j, "n_qubits"),
            field<std::vector<std::string>>(j, "labels"));
  for (const auto& entry : field<Json>(j, "gates")) {
    c.add({parse_gate_kind(field<std::string>(entry, "kind")),
           field<std::vector<std::size_t>>(entry, "qubits")});
  }
  return c;
}

Json to_json(const LayoutGraph& layout) {
  Json nodes = Json::array();
  for (const auto& n : layout.nodes()) {
    nodes.push_back({{"id", n.id}, {"x", n.x}, {"y", n.y}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : layout.edges()) {
    edges.push_back({a, b});
  }
  Json j;
  j["kind"] = to_string(layout.kind());
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j;
}

LayoutGraph layout_from_json(const Json& j) {
  std::vector<LayoutNode> nodes;
  for (const auto& n : field<Json>(j, "nodes")) {
    nodes.push_back({field<std::size_t>(n, "id"), field<int>(n, "x"),
                     field<int>(n, "y")});
  }
  return {parse_layout_kind(field<std::string>(j, "kind")), std::move(nodes),
          field<std::vector<std::pair<std::size_t, std::size_t>>>(j, "edges")};
}

Json to_json(const MappingReport& report) {
  Json placement = Json::array();
  for (std::size_t i = 0; i < report.placement.physical.size(); ++i) {
    placement.push_back({i, report.placement.physical[i]});
  }
  Json conn = Json::array();
  for (auto c : report.per_swat_connectivity) {
    conn.push_back(to_string(c));
  }
  Json j;
  j["layout"] = to_string(report.layout_kind);
  j["n_levels"] = report.n_levels;
  j["placement"] = std::move(placement);
  j["per_swat_swaps"] = report.per_swat_swaps;
  j["total_swaps"] = report.total_swaps;
  j["total_extra_cnots"] = report.total_extra_cnots;
  j["bound_only"] = report.bound_only;
  j["per_swat_extra_cnots"] = report.per_swat_cnots;
  j["per_swat_connectivity"] = std::move(conn);
  j["layout_graph"] = to_json(report.layout);
  return j;
}

MappingReport report_from_json(const Json& j) {
  MappingReport r;
  r.layout_kind = parse_layout_kind(field<std::string>(j, "layout"));
  r.n_levels = field<std::size_t>(j, "n_levels");
  const auto pairs =
      field<std::vector<std::pair<std::size_t, std::size_t>>>(j, "placement");
  r.placement.physical.assign(pairs.size(), 0);
  for (const auto& [logical, physical] : pairs) {
    if (logical >= pairs.size()) {
      throw InvalidArgument("placement logical index out of range");
    }
    r.placement.physical[logical] = physical;
  }
  r.per_swat_swaps = field<std::vector<std::size_t>>(j, "per_swat_swaps");
  r.total_swaps = field<std::size_t>(j, "total_swaps");
  r.total_extra_cnots = field<std::size_t>(j, "total_extra_cnots");
  r.bound_only = field<bool>(j, "bound_only");
  r.per_swat_cnots = field<std::vector<std::size_t>>(j, "per_swat_extra_cnots");
  for (const auto& c :
       field<std::vector<std::string>>(j, "per_swat_connectivity")) {
    r.per_swat_connectivity.push_back(parse_connectivity(c));
  }
  r.layout = layout_from_json(field<Json>(j, "layout_graph"));
  return r;
}

std::string to_dot(const DavioLattice& lattice) {
  std::ostringstream out;
  out << "digraph lattice {\n  node [shape=box];\n";
  const auto& levels = lattice.levels();
  for (std::size_t k = 0; k < levels.size(); ++k) {
    out << "  { rank=same;";
    for (std::size_t i = 0; i < levels[k].size(); ++i) {
      out << " n" << k << '_' << i << ';';
    }
    out << " }\n";
    for (const auto& node : levels[k]) {
      out << "  n" << k << '_' << node.position << " [label=\""
          << dot_escape(node.residual.to_string()) << "\"];\n";
    }
  }
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    const auto& var = lattice.vars().name(lattice.level_vars()[k]);
    for (const auto& node : levels[k]) {
      out << "  n" << k << '_' << node.position << " -> n" << k + 1 << '_'
          << *node.left_child << " [style=dashed];\n";
      out << "  n" << k << '_' << node.position << " -> n" << k + 1 << '_'
          << *node.right_child << " [label=\"" << dot_escape(var) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const LayoutGraph& layout) {
  std::ostringstream out;
  out << "graph \"" << to_string(layout.kind()) << "\" {\n"
      << "  node [shape=circle];\n";
  for (const auto& n : layout.nodes()) {
    out << "  q" << n.id << " [label=\"" << n.id << "\", pos=\"" << n.x << ','
        << -n.y << "!\"];\n";
  }
  for (const auto& [a, b] : layout.edges()) {
    out << "  q" << a << " -- q" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Circuit& circuit) {
  std::ostringstream out;
  out << "graph circuit {\n";
  for (std::size_t q = 0; q < circuit.n_qubits(); ++q) {
    out << "  q" << q << " [label=\"" << q;
    if (!circuit.labels()[q].empty()) {
      out << ':' << dot_escape(circuit.labels()[q]);
    }
    out << "\"];\n";
  }
  for (const auto& [a, b] : interaction_graph(circuit.gates())) {
    out << "  q" << a << " -- q" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.n_qubits() << "];\n";
  for (const auto& g : circuit.gates()) {
    out << mnemonic(g.kind) << ' ';
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      out << (i > 0 ? "," : "") << "q[" << g.qubits[i] << ']';
    }
    out << ";\n";
  }
  return out.str();
}

std::vector<SweepRow> run_sweep(std::size_t n_min, std::size_t n_max,
                                const std::vector<LayoutKind>& layouts,
                                std::size_t threads) {
  if (n_min < 1 || n_max < n_min) {
    throw InvalidArgument("sweep range must satisfy 1 <= n_min <= n_max");
  }
  if (n_max > kMaxVariables) {
    throw InvalidArgument("sweep supports n up to " +
                          std::to_string(kMaxVariables));
  }
  std::vector<SweepRow> rows(n_max - n_min + 1);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (auto idx = next++; idx < rows.size(); idx = next++) {
      try {
        const auto n = n_min + idx;
        std::vector<bool> leaves(n + 1, false);
        leaves[n] = true;
        const auto synth = synthesize_from_lattice(symmetric_lattice(n, leaves));
        SweepRow row;
        row.n = n;
        for (auto kind : layouts) {
          const auto total = map_to_layout(kind, synth.circuit, n).total_swaps;
          switch (kind) {
          case LayoutKind::Square:
            row.square = total;
            break;
          case LayoutKind::HeavyHex:
            row.heavy_hex = total;
            break;
          case LayoutKind::Triangular:
            row.triangular = total;
            break;
          }
        }
        rows[idx] = row;
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    }
  };
  const auto count = std::clamp<std::size_t>(threads, 1, rows.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < count; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,square,heavy_hex,triangular\n";
  const auto cell = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string{};
  };
  for (const auto& r : rows) {
    out << r.n << ',' << cell(r.square) << ',' << cell(r.heavy_hex) << ','
        << cell(r.triangular) << '\n';
  }
  return out.str();
}

} // namespace davio
