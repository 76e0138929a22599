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

#include "davio/lattice.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace davio {

namespace {

// A residual that depends only on the weighted count of the remaining
// level slots, stored as its value for each count 0..slots.
using WeightVector = std::vector<std::uint8_t>;

std::vector<std::size_t> support_of(const TruthTable& table) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < table.num_vars(); ++v) {
    const auto bit = Assignment{1} << v;
    for (Assignment a = 0; a < table.size(); ++a) {
      if ((a & bit) == 0 && table.get(a) != table.get(a | bit)) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

std::size_t weight_of(Assignment a, const std::vector<std::size_t>& mult) {
  std::size_t w = 0;
  for (std::size_t v = 0; v < mult.size(); ++v) {
    if (((a >> v) & 1U) != 0) {
      w += mult[v];
    }
  }
  return w;
}

// Number of (one, zero) assignment pairs that share a weight.
std::size_t conflicts(const TruthTable& table,
                      const std::vector<std::size_t>& mult) {
  std::size_t total = 0;
  for (auto m : mult) {
    total += m;
  }
  std::vector<std::size_t> ones(total + 1, 0);
  std::vector<std::size_t> zeros(total + 1, 0);
  for (Assignment a = 0; a < table.size(); ++a) {
    const auto w = weight_of(a, mult);
    (table.get(a) ? ones : zeros)[w] += 1;
  }
  std::size_t out = 0;
  for (std::size_t w = 0; w <= total; ++w) {
    out += ones[w] * zeros[w];
  }
  return out;
}

std::vector<std::size_t> multiplicities(std::size_t num_vars,
                                        const std::vector<std::size_t>& seq) {
  std::vector<std::size_t> mult(num_vars, 0);
  for (auto v : seq) {
    if (v >= num_vars) {
      throw InvalidArgument("level variable index " + std::to_string(v) +
                            " out of range");
    }
    ++mult[v];
  }
  return mult;
}

// Residual over slots [level, n) mapped back to the declared variables.
EsopFunction residual_function(const VarSet& vars, const WeightVector& g,
                               const std::vector<std::size_t>& seq,
                               std::size_t level) {
  std::vector<std::size_t> mult(vars.size(), 0);
  for (std::size_t s = level; s < seq.size(); ++s) {
    ++mult[seq[s]];
  }
  TruthTable table(vars.size());
  for (Assignment a = 0; a < table.size(); ++a) {
    table.set(a, g[weight_of(a, mult)] != 0);
  }
  return EsopFunction::from_truth_table(table, vars);
}

// Expands and joins level by level. At every level the right child of one
// parent and the left child of the next coincide, so the join keeps the
// shared child as the middle node and the right neighbour's right child
// as the corrected right node.
DavioLattice assemble(const VarSet& vars, const std::vector<std::size_t>& seq,
                      WeightVector root, const EsopFunction* root_function) {
  const auto n = seq.size();
  std::vector<std::vector<WeightVector>> rows;
  rows.push_back({std::move(root)});
  for (std::size_t k = 0; k < n; ++k) {
    const auto& parents = rows.back();
    const auto width = n - k; // child domain is 0..width-1
    std::vector<WeightVector> next;
    std::optional<WeightVector> carried_right;
    for (const auto& g : parents) {
      WeightVector left(width);
      WeightVector right(width);
      for (std::size_t w = 0; w < width; ++w) {
        left[w] = g[w];
        right[w] = static_cast<std::uint8_t>(g[w] ^ g[w + 1]);
      }
      if (!carried_right) {
        next.push_back(std::move(left));
      } else {
        // middle = v x ^ !v y collapses to x because x == y here.
        if (*carried_right != left) {
          throw std::logic_error("adjacent lattice children disagree");
        }
        next.push_back(std::move(*carried_right));
      }
      carried_right = std::move(right);
    }
    next.push_back(std::move(*carried_right));
    rows.push_back(std::move(next));
  }

  std::vector<std::vector<LatticeNode>> levels(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      LatticeNode node;
      node.level = k;
      node.position = i;
      if (k == 0 && root_function != nullptr) {
        node.residual = *root_function;
      } else if (k == n) {
        node.residual = rows[k][i][0] != 0 ? EsopFunction::one(vars)
                                           : EsopFunction::zero(vars);
      } else {
        node.residual = residual_function(vars, rows[k][i], seq, k);
      }
      if (k < n) {
        node.left_child = i;
        node.right_child = i + 1;
      }
      levels[k].push_back(std::move(node));
    }
  }
  return {vars, seq, std::move(levels)};
}

std::vector<std::size_t> cycle_sequence(const std::vector<std::size_t>& support,
                                        const std::vector<std::size_t>& mult) {
  std::vector<std::size_t> seq;
  for (std::size_t round = 1;; ++round) {
    bool any = false;
    for (auto v : support) {
      if (mult[v] >= round) {
        seq.push_back(v);
        any = true;
      }
    }
    if (!any) {
      return seq;
    }
  }
}

[[noreturn]] void budget_exceeded(std::size_t max_levels) {
  throw LevelBudgetExceeded("no lattice closes within " +
                            std::to_string(max_levels) + " levels");
}

std::vector<std::size_t> fixed_order_sequence(const TruthTable& table,
                                              const std::vector<std::size_t>& support,
                                              std::size_t max_levels) {
  std::vector<std::size_t> seq;
  std::vector<std::size_t> mult(table.num_vars(), 0);
  for (std::size_t len = 1; len <= max_levels; ++len) {
    const auto v = support[(len - 1) % support.size()];
    seq.push_back(v);
    ++mult[v];
    if (len >= support.size() && closes_with_multiplicities(table, mult)) {
      return seq;
    }
  }
  budget_exceeded(max_levels);
}

std::vector<std::size_t> round_robin_sequence(const TruthTable& table,
                                              const std::vector<std::size_t>& support,
                                              std::size_t max_levels) {
  if (support.size() > max_levels) {
    budget_exceeded(max_levels);
  }
  std::vector<std::size_t> seq = support;
  std::vector<std::size_t> mult(table.num_vars(), 0);
  std::vector<std::size_t> last_used(table.num_vars(), 0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    mult[support[i]] = 1;
    last_used[support[i]] = i;
  }
  while (!closes_with_multiplicities(table, mult)) {
    if (seq.size() == max_levels) {
      budget_exceeded(max_levels);
    }
    std::size_t best = support.front();
    auto best_conflicts = std::numeric_limits<std::size_t>::max();
    for (auto v : support) {
      ++mult[v];
      const auto c = conflicts(table, mult);
      --mult[v];
      if (c < best_conflicts ||
          (c == best_conflicts && last_used[v] < last_used[best])) {
        best = v;
        best_conflicts = c;
      }
    }
    ++mult[best];
    last_used[best] = seq.size();
    seq.push_back(best);
  }
  return seq;
}

// Visits multiplicity vectors with every entry >= 1 and the given sum in
// lexicographic order; stops at the first that closes.
bool first_closing(const TruthTable& table,
                   const std::vector<std::size_t>& support, std::size_t pos,
                   std::size_t remaining, std::vector<std::size_t>& mult) {
  const auto v = support[pos];
  if (pos + 1 == support.size()) {
    mult[v] = remaining;
    return closes_with_multiplicities(table, mult);
  }
  const auto others = support.size() - pos - 1;
  for (std::size_t m = 1; m + others <= remaining; ++m) {
    mult[v] = m;
    if (first_closing(table, support, pos + 1, remaining - m, mult)) {
      return true;
    }
  }
  mult[v] = 0;
  return false;
}

std::vector<std::size_t> exhaustive_sequence(const TruthTable& table,
                                             const std::vector<std::size_t>& support,
                                             std::size_t max_levels) {
  if (support.size() > kMaxExhaustiveVariables) {
    throw InvalidArgument("exhaustive-min-levels supports at most " +
                          std::to_string(kMaxExhaustiveVariables) +
                          " variables, function depends on " +
                          std::to_string(support.size()));
  }
  std::vector<std::size_t> mult(table.num_vars(), 0);
  for (auto total = support.size(); total <= max_levels; ++total) {
    if (first_closing(table, support, 0, total, mult)) {
      return cycle_sequence(support, mult);
    }
  }
  budget_exceeded(max_levels);
}

} // namespace

DavioLattice::DavioLattice(VarSet vars, std::vector<std::size_t> level_vars,
                           std::vector<std::vector<LatticeNode>> levels)
    : vars_(std::move(vars)), level_vars_(std::move(level_vars)),
      levels_(std::move(levels)) {
  if (levels_.size() != level_vars_.size() + 1) {
    throw InvalidArgument("lattice needs one node row per level plus leaves");
  }
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    if (levels_[k].size() != k + 1) {
      throw InvalidArgument("lattice level " + std::to_string(k) + " has " +
                            std::to_string(levels_[k].size()) +
                            " nodes, expected " + std::to_string(k + 1));
    }
  }
  for (auto v : level_vars_) {
    if (v >= vars_.size()) {
      throw InvalidArgument("level variable out of range");
    }
  }
}

std::vector<std::string> DavioLattice::level_var_names() const {
  std::vector<std::string> out;
  out.reserve(level_vars_.size());
  for (auto v : level_vars_) {
    out.push_back(vars_.name(v));
  }
  return out;
}

std::vector<bool> DavioLattice::leaves() const {
  std::vector<bool> out;
  for (const auto& node : levels_.back()) {
    const auto value = node.residual.constant_value();
    if (!value) {
      throw InvalidArgument("lattice leaf is not constant");
    }
    out.push_back(*value);
  }
  return out;
}

OrderingStrategy OrderingStrategy::parse(std::string_view name) {
  if (name == "fixed-order") {
    return {OrderingKind::FixedOrder};
  }
  if (name == "round-robin") {
    return {OrderingKind::RoundRobin};
  }
  if (name == "exhaustive-min-levels") {
    return {OrderingKind::ExhaustiveMinLevels};
  }
  throw InvalidArgument("unknown ordering strategy '" + std::string(name) +
                        "'");
}

std::string OrderingStrategy::to_string() const {
  switch (kind) {
  case OrderingKind::FixedOrder:
    return "fixed-order";
  case OrderingKind::RoundRobin:
    return "round-robin";
  case OrderingKind::ExhaustiveMinLevels:
    return "exhaustive-min-levels";
  }
  return "unknown";
}

JoinResult join_children(const EsopFunction& x, const EsopFunction& y,
                         const EsopFunction& z, std::size_t v) {
  const auto& vars = x.vars();
  if (v >= vars.size()) {
    throw UnknownVariableError("#" + std::to_string(v));
  }
  const Cube pos = Cube{}.with(v, Literal::Positive);
  const Cube neg = Cube{}.with(v, Literal::Negative);
  auto middle = x * pos ^ y * neg;
  auto corrected = x ^ y ^ z;
  return {std::move(middle), std::move(corrected)};
}

JoinResult join_children(const EsopFunction& x, const EsopFunction& y,
                         const EsopFunction& z, std::string_view v) {
  return join_children(x, y, z, x.vars().require(v));
}

std::size_t default_max_levels(const EsopFunction& f) {
  return std::max<std::size_t>(1, 3 * support_of(to_truth_table(f)).size());
}

bool closes_with_multiplicities(const TruthTable& table,
                                const std::vector<std::size_t>& multiplicity) {
  if (multiplicity.size() != table.num_vars()) {
    throw InvalidArgument("one multiplicity per variable expected");
  }
  std::size_t total = 0;
  for (auto m : multiplicity) {
    total += m;
  }
  std::vector<std::int8_t> seen(total + 1, -1);
  for (Assignment a = 0; a < table.size(); ++a) {
    const auto w = weight_of(a, multiplicity);
    const std::int8_t bit = table.get(a) ? 1 : 0;
    if (seen[w] == -1) {
      seen[w] = bit;
    } else if (seen[w] != bit) {
      return false;
    }
  }
  return true;
}

DavioLattice build_lattice_with_sequence(const EsopFunction& f,
                                         const std::vector<std::size_t>& sequence) {
  const auto table = to_truth_table(f);
  const auto mult = multiplicities(f.num_vars(), sequence);
  WeightVector root(sequence.size() + 1, 0);
  std::vector<bool> assigned(sequence.size() + 1, false);
  for (Assignment a = 0; a < table.size(); ++a) {
    const auto w = weight_of(a, mult);
    const std::uint8_t bit = table.get(a) ? 1 : 0;
    if (assigned[w] && root[w] != bit) {
      throw LevelBudgetExceeded("level sequence of length " +
                                std::to_string(sequence.size()) +
                                " leaves non-constant leaves");
    }
    assigned[w] = true;
    root[w] = bit;
  }
  return assemble(f.vars(), sequence, std::move(root), &f);
}

DavioLattice build_lattice(const EsopFunction& f, OrderingStrategy strategy,
                           std::optional<std::size_t> max_levels) {
  const auto budget = max_levels.value_or(default_max_levels(f));
  if (budget < 1) {
    throw InvalidArgument("max_levels must be at least 1");
  }
  const auto table = to_truth_table(f);
  const auto support = support_of(table);
  if (support.empty()) {
    return build_lattice_with_sequence(f, {});
  }
  std::vector<std::size_t> seq;
  switch (strategy.kind) {
  case OrderingKind::FixedOrder:
    seq = fixed_order_sequence(table, support, budget);
    break;
  case OrderingKind::RoundRobin:
    seq = round_robin_sequence(table, support, budget);
    break;
  case OrderingKind::ExhaustiveMinLevels:
    seq = exhaustive_sequence(table, support, budget);
    break;
  }
  return build_lattice_with_sequence(f, seq);
}

VarSet default_vars(std::size_t n) {
  if (n > kMaxVariables) {
    throw InvalidArgument("at most 16 variables are supported");
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.emplace_back(1, static_cast<char>('a' + i));
  }
  return VarSet(std::move(names));
}

DavioLattice symmetric_lattice(const VarSet& vars,
                               const std::vector<bool>& leaves) {
  const auto n = vars.size();
  if (n < 1) {
    throw InvalidArgument("symmetric lattice needs at least one level");
  }
  if (leaves.size() != n + 1) {
    throw InvalidArgument("symmetric lattice over " + std::to_string(n) +
                          " levels needs " + std::to_string(n + 1) +
                          " leaves, got " + std::to_string(leaves.size()));
  }
  // G(w) = XOR_k leaves[k] * C(w, k) mod 2.
  WeightVector root(n + 1, 0);
  for (std::size_t w = 0; w <= n; ++w) {
    for (std::size_t k = 0; k <= w; ++k) {
      if (leaves[k] && (k & ~w) == 0) {
        root[w] ^= 1;
      }
    }
  }
  std::vector<std::size_t> seq(n);
  for (std::size_t i = 0; i < n; ++i) {
    seq[i] = i;
  }
  return assemble(vars, seq, std::move(root), nullptr);
}

DavioLattice symmetric_lattice(std::size_t n, const std::vector<bool>& leaves) {
  return symmetric_lattice(default_vars(n), leaves);
}

bool evaluate_lattice(const DavioLattice& lattice, Assignment a) {
  const auto& levels = lattice.levels();
  std::vector<bool> row;
  for (const auto& leaf : levels.back()) {
    const auto value = leaf.residual.constant_value();
    if (!value) {
      throw InvalidArgument("lattice leaf is not constant");
    }
    row.push_back(*value);
  }
  for (std::size_t k = lattice.n_levels(); k-- > 0;) {
    const bool x = ((a >> lattice.level_vars()[k]) & 1U) != 0;
    std::vector<bool> up(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      up[i] = row[i] != (x && row[i + 1]);
    }
    row = std::move(up);
  }
  return row[0];
}

} // namespace davio
