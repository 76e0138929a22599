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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace davio {

/// Functions are limited to 16 inputs so truth tables stay at 64K entries.
inline constexpr std::size_t kMaxVariables = 16;

/// An input assignment; bit i holds the value of variable i.
using Assignment = std::uint32_t;

/// Ordered list of variable names shared by every function built over it.
///
/// Names follow the ESOP identifier grammar `[a-z][a-z0-9]*` so that every
/// function prints back into text that `parse_esop` accepts.
class VarSet {
public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);

  /// Splits a comma-separated list such as "a,b,c".
  static VarSet parse(std::string_view list);

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] bool empty() const noexcept { return names_.empty(); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept {
    return names_;
  }
  [[nodiscard]] const std::string& name(std::size_t index) const {
    return names_.at(index);
  }
  [[nodiscard]] std::optional<std::size_t>
  index_of(std::string_view name) const noexcept;
  /// Like index_of but throws UnknownVariableError.
  [[nodiscard]] std::size_t require(std::string_view name) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

private:
  std::vector<std::string> names_;
};

[[nodiscard]] bool is_identifier(std::string_view text) noexcept;

enum class Literal : std::uint8_t { Absent = 0, Positive = 1, Negative = 2 };

/// Product term with one three-valued literal per variable. The empty cube
/// is the constant 1.
class Cube {
public:
  constexpr Cube() = default;
  constexpr Cube(std::uint16_t positive, std::uint16_t negative)
      : pos_(positive), neg_(negative) {}

  [[nodiscard]] constexpr std::uint16_t positive_mask() const noexcept {
    return pos_;
  }
  [[nodiscard]] constexpr std::uint16_t negative_mask() const noexcept {
    return neg_;
  }
  [[nodiscard]] constexpr bool is_one() const noexcept {
    return pos_ == 0 && neg_ == 0;
  }
  [[nodiscard]] Literal literal(std::size_t var) const noexcept;
  /// Returns a copy with the literal on `var` replaced.
  [[nodiscard]] Cube with(std::size_t var, Literal lit) const noexcept;

  [[nodiscard]] constexpr bool evaluate(Assignment a) const noexcept {
    return (a & pos_) == pos_ && (a & neg_) == 0;
  }

  /// Lexicographic over the literal vector, Absent < Positive < Negative.
  friend std::strong_ordering operator<=>(const Cube& lhs,
                                          const Cube& rhs) noexcept;
  friend constexpr bool operator==(const Cube&, const Cube&) = default;

private:
  std::uint16_t pos_ = 0;
  std::uint16_t neg_ = 0;
};

/// Conjunction of two cubes, or nullopt when they contain x and !x.
[[nodiscard]] std::optional<Cube> multiply(const Cube& lhs, const Cube& rhs);

/// 2^n-entry truth table. Entry i is the value at assignment i.
class TruthTable {
public:
  TruthTable() : TruthTable(0) {}
  explicit TruthTable(std::size_t num_vars);

  [[nodiscard]] std::size_t num_vars() const noexcept { return num_vars_; }
  [[nodiscard]] std::size_t size() const noexcept {
    return std::size_t{1} << num_vars_;
  }
  [[nodiscard]] bool get(Assignment a) const {
    return ((words_[a >> 6] >> (a & 63)) & 1U) != 0;
  }
  void set(Assignment a, bool value);
  [[nodiscard]] std::size_t count_ones() const noexcept;
  [[nodiscard]] bool is_constant() const noexcept;

  TruthTable& operator^=(const TruthTable& rhs);
  friend TruthTable operator^(TruthTable lhs, const TruthTable& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  friend bool operator==(const TruthTable&, const TruthTable&) = default;

  /// Entries as a '0'/'1' string, assignment 0 first.
  [[nodiscard]] std::string to_string() const;

private:
  std::size_t num_vars_;
  std::vector<std::uint64_t> words_;
};

/// XOR of cubes over a VarSet. Duplicate cubes cancel on construction and
/// the cube list is kept sorted, so two functions with the same cube set
/// compare equal structurally. Semantic equality is `equivalent`.
class EsopFunction {
public:
  EsopFunction() = default;
  EsopFunction(VarSet vars, std::vector<Cube> cubes);

  static EsopFunction zero(VarSet vars) { return {std::move(vars), {}}; }
  static EsopFunction one(VarSet vars) { return {std::move(vars), {Cube{}}}; }
  static EsopFunction variable(VarSet vars, std::size_t index);
  /// Algebraic normal form of a truth table (positive literals only).
  static EsopFunction from_truth_table(const TruthTable& table, VarSet vars);

  [[nodiscard]] const VarSet& vars() const noexcept { return vars_; }
  [[nodiscard]] std::span<const Cube> cubes() const noexcept { return cubes_; }
  [[nodiscard]] std::size_t num_vars() const noexcept { return vars_.size(); }

  [[nodiscard]] bool evaluate(Assignment a) const noexcept;
  [[nodiscard]] bool depends_on(std::size_t var) const;
  /// Value of a constant function, nullopt otherwise.
  [[nodiscard]] std::optional<bool> constant_value() const;

  /// Text in the ESOP grammar, e.g. "1 ^ a !b ^ c".
  [[nodiscard]] std::string to_string() const;

  EsopFunction& operator^=(const EsopFunction& rhs);
  friend EsopFunction operator^(EsopFunction lhs, const EsopFunction& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  /// Multiplies every cube by `cube`.
  [[nodiscard]] EsopFunction operator*(const Cube& cube) const;

  /// Same VarSet and same normalized cube set.
  friend bool operator==(const EsopFunction&, const EsopFunction&) = default;

private:
  void normalize();

  VarSet vars_;
  std::vector<Cube> cubes_;
};

/// Parses the grammar
///   expr    := term ('^' term)*
///   term    := '0' | '1' | literal+
///   literal := '!'? [a-z][a-z0-9]*
/// with optional whitespace between tokens.
[[nodiscard]] EsopFunction parse_esop(std::string_view text,
                                      const VarSet& vars);

[[nodiscard]] TruthTable to_truth_table(const EsopFunction& f);

/// Truth-table equality over the same VarSet.
[[nodiscard]] bool equivalent(const EsopFunction& f, const EsopFunction& g);

/// Rewrites every !x as (1 ^ x) and cancels; the result is the unique
/// positive-polarity form of f.
[[nodiscard]] EsopFunction to_anf(const EsopFunction& f);

[[nodiscard]] EsopFunction cofactor(const EsopFunction& f, std::size_t var,
                                    bool polarity);
[[nodiscard]] EsopFunction cofactor(const EsopFunction& f,
                                    std::string_view var, bool polarity);

/// f = !v f_neg ^ v f_pos
struct ShannonPair {
  EsopFunction f_neg;
  EsopFunction f_pos;
};

/// f = f_neg ^ v f_diff
struct PositiveDavioPair {
  EsopFunction f_neg;
  EsopFunction f_diff;
};

/// f = f_pos ^ !v f_diff
struct NegativeDavioPair {
  EsopFunction f_pos;
  EsopFunction f_diff;
};

[[nodiscard]] ShannonPair shannon_expand(const EsopFunction& f,
                                         std::string_view var);
[[nodiscard]] PositiveDavioPair positive_davio_expand(const EsopFunction& f,
                                                      std::string_view var);
[[nodiscard]] NegativeDavioPair negative_davio_expand(const EsopFunction& f,
                                                      std::string_view var);
[[nodiscard]] ShannonPair shannon_expand(const EsopFunction& f,
                                         std::size_t var);
[[nodiscard]] PositiveDavioPair positive_davio_expand(const EsopFunction& f,
                                                      std::size_t var);
[[nodiscard]] NegativeDavioPair negative_davio_expand(const EsopFunction& f,
                                                      std::size_t var);

/// Set of popcounts k such that every assignment with k ones maps to 1.
class SymmetryIndexSet {
public:
  SymmetryIndexSet() = default;
  SymmetryIndexSet(std::size_t num_vars, std::vector<std::size_t> indices);

  [[nodiscard]] std::size_t num_vars() const noexcept { return num_vars_; }
  [[nodiscard]] bool contains(std::size_t k) const noexcept {
    return k <= num_vars_ && ((mask_ >> k) & 1U) != 0;
  }
  [[nodiscard]] std::vector<std::size_t> indices() const;
  /// Symmetric difference; XOR of the two symmetric functions.
  [[nodiscard]] SymmetryIndexSet operator^(const SymmetryIndexSet& rhs) const;

  friend bool operator==(const SymmetryIndexSet&,
                         const SymmetryIndexSet&) = default;

private:
  std::size_t num_vars_ = 0;
  std::uint32_t mask_ = 0;
};

[[nodiscard]] std::optional<SymmetryIndexSet>
symmetry_indices(const EsopFunction& f);

/// Positive-polarity ESOP of S^{indices}(vars).
[[nodiscard]] EsopFunction symmetric_function(const SymmetryIndexSet& indices,
                                              const VarSet& vars);

/// XOR of 1..max_cubes cubes, each literal absent, positive or negative
/// with equal odds. Deterministic for a given engine state.
[[nodiscard]] EsopFunction random_esop(const VarSet& vars, std::mt19937_64& rng,
                                       std::size_t max_cubes = 8);

} // namespace davio
