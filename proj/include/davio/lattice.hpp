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

#include "davio/boolfn.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace davio {

/// One node of a Positive Davio lattice. Node (k, i) has children (k+1, i)
/// and (k+1, i+1); leaves sit on the last level and have no children.
struct LatticeNode {
  std::size_t level = 0;
  std::size_t position = 0;
  EsopFunction residual;
  std::optional<std::size_t> left_child;  // position on level + 1
  std::optional<std::size_t> right_child; // position on level + 1

  [[nodiscard]] bool is_leaf() const noexcept { return !left_child; }
};

/// Leveled lattice where every node satisfies
///   residual = left.residual ^ v * right.residual
/// with v the expansion variable of the node's level. Level k holds k+1
/// nodes; the final level holds the constant leaves.
class DavioLattice {
public:
  DavioLattice() = default;
  DavioLattice(VarSet vars, std::vector<std::size_t> level_vars,
               std::vector<std::vector<LatticeNode>> levels);

  [[nodiscard]] const VarSet& vars() const noexcept { return vars_; }
  /// Number of expansion levels; the node rows number one more.
  [[nodiscard]] std::size_t n_levels() const noexcept {
    return level_vars_.size();
  }
  /// Variable index expanded at each level, root level first.
  [[nodiscard]] const std::vector<std::size_t>& level_vars() const noexcept {
    return level_vars_;
  }
  [[nodiscard]] std::vector<std::string> level_var_names() const;
  [[nodiscard]] const std::vector<std::vector<LatticeNode>>&
  levels() const noexcept {
    return levels_;
  }
  [[nodiscard]] const LatticeNode& root() const { return levels_.front()[0]; }
  /// Constant leaf values, position 0 first.
  [[nodiscard]] std::vector<bool> leaves() const;

private:
  VarSet vars_;
  std::vector<std::size_t> level_vars_;
  std::vector<std::vector<LatticeNode>> levels_;
};

enum class OrderingKind { FixedOrder, RoundRobin, ExhaustiveMinLevels };

/// How build_lattice picks the variable sequence.
///
/// FixedOrder cycles through the declared order, skipping variables the
/// function does not depend on, and stops at the first prefix that closes.
/// RoundRobin starts with one copy of every support variable and then adds
/// the copy that removes the most conflicting assignment pairs.
/// ExhaustiveMinLevels searches multiplicity vectors by increasing sum and
/// is limited to six support variables.
struct OrderingStrategy {
  OrderingKind kind = OrderingKind::ExhaustiveMinLevels;

  static OrderingStrategy parse(std::string_view name);
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const OrderingStrategy&,
                         const OrderingStrategy&) = default;
};

inline constexpr std::size_t kMaxExhaustiveVariables = 6;

struct JoinResult {
  EsopFunction middle;
  EsopFunction corrected_right;
};

/// Merges the right child x of a left parent with the left child y of its
/// right neighbour, whose right child is z:
///   middle = v x ^ !v y,  corrected_right = x ^ y ^ z.
[[nodiscard]] JoinResult join_children(const EsopFunction& x,
                                       const EsopFunction& y,
                                       const EsopFunction& z, std::size_t v);
[[nodiscard]] JoinResult join_children(const EsopFunction& x,
                                       const EsopFunction& y,
                                       const EsopFunction& z,
                                       std::string_view v);

/// 3 * support size, at least 1.
[[nodiscard]] std::size_t default_max_levels(const EsopFunction& f);

/// Expands f level by level with the Positive Davio rule, joining adjacent
/// nodes, until every node on the last level is constant. Throws
/// LevelBudgetExceeded when no sequence within max_levels closes.
[[nodiscard]] DavioLattice
build_lattice(const EsopFunction& f, OrderingStrategy strategy = {},
              std::optional<std::size_t> max_levels = std::nullopt);

/// Builds the lattice along an explicit level-variable sequence. Throws
/// LevelBudgetExceeded if the leaves are not constant.
[[nodiscard]] DavioLattice
build_lattice_with_sequence(const EsopFunction& f,
                            const std::vector<std::size_t>& sequence);

/// True when f factors through x -> sum_v multiplicity[v] * x_v, which is
/// exactly when a lattice with that many copies of each variable exists.
[[nodiscard]] bool
closes_with_multiplicities(const TruthTable& table,
                           const std::vector<std::size_t>& multiplicity);

/// Regular lattice over n variables with the given n+1 leaves; the result
/// is XOR over k of leaves[k] * e_k where e_k is the elementary symmetric
/// polynomial of degree k.
[[nodiscard]] DavioLattice symmetric_lattice(std::size_t n,
                                             const std::vector<bool>& leaves);
[[nodiscard]] DavioLattice symmetric_lattice(const VarSet& vars,
                                             const std::vector<bool>& leaves);

/// Default names a, b, c, ... for n variables.
[[nodiscard]] VarSet default_vars(std::size_t n);

/// Bottom-up evaluation with out = left ^ v * right at every node.
[[nodiscard]] bool evaluate_lattice(const DavioLattice& lattice, Assignment a);

} // namespace davio
