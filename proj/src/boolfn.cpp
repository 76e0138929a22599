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

#include "davio/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

namespace davio {

namespace {

void require_same_vars(const VarSet& lhs, const VarSet& rhs) {
  if (lhs != rhs) {
    throw InvalidArgument("functions are defined over different variable sets");
  }
}

void require_index(const VarSet& vars, std::size_t var) {
  if (var >= vars.size()) {
    throw UnknownVariableError("#" + std::to_string(var));
  }
}

// C(w, k) mod 2 is 1 iff the bits of k are a subset of the bits of w.
bool binomial_parity(std::size_t w, std::size_t k) noexcept {
  return (k & ~w) == 0;
}

} // namespace

bool is_identifier(std::string_view text) noexcept {
  if (text.empty() || text.front() < 'a' || text.front() > 'z') {
    return false;
  }
  return std::all_of(text.begin(), text.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  });
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw InvalidArgument("at most " + std::to_string(kMaxVariables) +
                          " variables are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!is_identifier(name)) {
      throw InvalidArgument("invalid variable name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw InvalidArgument("duplicate variable name '" + name + "'");
    }
  }
}

VarSet VarSet::parse(std::string_view list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto end = list.find(',', start);
    if (end == std::string_view::npos) {
      end = list.size();
    }
    auto item = list.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') {
      item.remove_prefix(1);
    }
    while (!item.empty() && item.back() == ' ') {
      item.remove_suffix(1);
    }
    if (!item.empty()) {
      names.emplace_back(item);
    }
    start = end + 1;
  }
  return VarSet(std::move(names));
}

std::optional<std::size_t>
VarSet::index_of(std::string_view name) const noexcept {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VarSet::require(std::string_view name) const {
  if (auto index = index_of(name)) {
    return *index;
  }
  throw UnknownVariableError(std::string(name));
}

// ---------------------------------------------------------------------------

Literal Cube::literal(std::size_t var) const noexcept {
  const auto bit = static_cast<std::uint16_t>(1U << var);
  if ((pos_ & bit) != 0) {
    return Literal::Positive;
  }
  if ((neg_ & bit) != 0) {
    return Literal::Negative;
  }
  return Literal::Absent;
}

Cube Cube::with(std::size_t var, Literal lit) const noexcept {
  const auto bit = static_cast<std::uint16_t>(1U << var);
  auto pos = static_cast<std::uint16_t>(pos_ & ~bit);
  auto neg = static_cast<std::uint16_t>(neg_ & ~bit);
  if (lit == Literal::Positive) {
    pos = static_cast<std::uint16_t>(pos | bit);
  } else if (lit == Literal::Negative) {
    neg = static_cast<std::uint16_t>(neg | bit);
  }
  return {pos, neg};
}

std::strong_ordering operator<=>(const Cube& lhs, const Cube& rhs) noexcept {
  const auto diff = static_cast<std::uint16_t>((lhs.pos_ ^ rhs.pos_) |
                                               (lhs.neg_ ^ rhs.neg_));
  if (diff == 0) {
    return std::strong_ordering::equal;
  }
  const auto var = static_cast<std::size_t>(std::countr_zero(diff));
  return static_cast<int>(lhs.literal(var)) <=>
         static_cast<int>(rhs.literal(var));
}

std::optional<Cube> multiply(const Cube& lhs, const Cube& rhs) {
  const auto pos =
      static_cast<std::uint16_t>(lhs.positive_mask() | rhs.positive_mask());
  const auto neg =
      static_cast<std::uint16_t>(lhs.negative_mask() | rhs.negative_mask());
  if ((pos & neg) != 0) {
    return std::nullopt;
  }
  return Cube{pos, neg};
}

// ---------------------------------------------------------------------------

TruthTable::TruthTable(std::size_t num_vars) : num_vars_(num_vars) {
  if (num_vars > kMaxVariables) {
    throw InvalidArgument("truth tables support at most 16 variables");
  }
  words_.assign(((std::size_t{1} << num_vars) + 63) / 64, 0);
}

void TruthTable::set(Assignment a, bool value) {
  const auto mask = std::uint64_t{1} << (a & 63);
  if (value) {
    words_[a >> 6] |= mask;
  } else {
    words_[a >> 6] &= ~mask;
  }
}

std::size_t TruthTable::count_ones() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool TruthTable::is_constant() const noexcept {
  const auto ones = count_ones();
  return ones == 0 || ones == size();
}

TruthTable& TruthTable::operator^=(const TruthTable& rhs) {
  if (num_vars_ != rhs.num_vars_) {
    throw InvalidArgument("truth tables differ in size");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= rhs.words_[i];
  }
  return *this;
}

std::string TruthTable::to_string() const {
  std::string out(size(), '0');
  for (std::size_t a = 0; a < size(); ++a) {
    if (get(static_cast<Assignment>(a))) {
      out[a] = '1';
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

EsopFunction::EsopFunction(VarSet vars, std::vector<Cube> cubes)
    : vars_(std::move(vars)), cubes_(std::move(cubes)) {
  const auto limit = static_cast<std::uint32_t>((1U << vars_.size()) - 1U);
  for (const auto& cube : cubes_) {
    if (((cube.positive_mask() | cube.negative_mask()) & ~limit) != 0 ||
        (cube.positive_mask() & cube.negative_mask()) != 0) {
      throw InvalidArgument("cube does not fit the variable set");
    }
  }
  normalize();
}

void EsopFunction::normalize() {
  std::sort(cubes_.begin(), cubes_.end());
  std::vector<Cube> kept;
  kept.reserve(cubes_.size());
  for (std::size_t i = 0; i < cubes_.size();) {
    std::size_t j = i;
    while (j < cubes_.size() && cubes_[j] == cubes_[i]) {
      ++j;
    }
    if ((j - i) % 2 == 1) {
      kept.push_back(cubes_[i]);
    }
    i = j;
  }
  cubes_ = std::move(kept);
}

EsopFunction EsopFunction::variable(VarSet vars, std::size_t index) {
  require_index(vars, index);
  return {std::move(vars), {Cube{}.with(index, Literal::Positive)}};
}

EsopFunction EsopFunction::from_truth_table(const TruthTable& table,
                                            VarSet vars) {
  if (table.num_vars() != vars.size()) {
    throw InvalidArgument("truth table size does not match the variable set");
  }
  // Moebius transform: coefficient of monomial S is XOR of f over subsets of S.
  std::vector<std::uint8_t> coeff(table.size());
  for (std::size_t a = 0; a < table.size(); ++a) {
    coeff[a] = table.get(static_cast<Assignment>(a)) ? 1 : 0;
  }
  for (std::size_t bit = 1; bit < table.size(); bit <<= 1) {
    for (std::size_t a = 0; a < table.size(); ++a) {
      if ((a & bit) != 0) {
        coeff[a] ^= coeff[a ^ bit];
      }
    }
  }
  std::vector<Cube> cubes;
  for (std::size_t a = 0; a < table.size(); ++a) {
    if (coeff[a] != 0) {
      cubes.emplace_back(static_cast<std::uint16_t>(a), std::uint16_t{0});
    }
  }
  return {std::move(vars), std::move(cubes)};
}

bool EsopFunction::evaluate(Assignment a) const noexcept {
  bool value = false;
  for (const auto& cube : cubes_) {
    value ^= cube.evaluate(a);
  }
  return value;
}

bool EsopFunction::depends_on(std::size_t var) const {
  require_index(vars_, var);
  const auto table = to_truth_table(*this);
  const auto bit = Assignment{1} << var;
  for (Assignment a = 0; a < table.size(); ++a) {
    if ((a & bit) == 0 && table.get(a) != table.get(a | bit)) {
      return true;
    }
  }
  return false;
}

std::optional<bool> EsopFunction::constant_value() const {
  const auto table = to_truth_table(*this);
  if (!table.is_constant()) {
    return std::nullopt;
  }
  return table.get(0);
}

std::string EsopFunction::to_string() const {
  if (cubes_.empty()) {
    return "0";
  }
  std::string out;
  for (std::size_t i = 0; i < cubes_.size(); ++i) {
    if (i > 0) {
      out += " ^ ";
    }
    const auto& cube = cubes_[i];
    if (cube.is_one()) {
      out += '1';
      continue;
    }
    bool first = true;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      const auto lit = cube.literal(v);
      if (lit == Literal::Absent) {
        continue;
      }
      if (!first) {
        out += ' ';
      }
      first = false;
      if (lit == Literal::Negative) {
        out += '!';
      }
      out += vars_.name(v);
    }
  }
  return out;
}

EsopFunction& EsopFunction::operator^=(const EsopFunction& rhs) {
  require_same_vars(vars_, rhs.vars_);
  cubes_.insert(cubes_.end(), rhs.cubes_.begin(), rhs.cubes_.end());
  normalize();
  return *this;
}

EsopFunction EsopFunction::operator*(const Cube& cube) const {
  std::vector<Cube> out;
  out.reserve(cubes_.size());
  for (const auto& c : cubes_) {
    if (auto product = multiply(c, cube)) {
      out.push_back(*product);
    }
  }
  return {vars_, std::move(out)};
}

// ---------------------------------------------------------------------------

namespace {

class EsopParser {
public:
  EsopParser(std::string_view text, const VarSet& vars)
      : text_(text), vars_(vars) {}

  EsopFunction parse() {
    std::vector<Cube> cubes;
    skip_space();
    if (at_end()) {
      throw SyntaxError("empty expression", pos_);
    }
    while (true) {
      if (auto cube = term()) {
        cubes.push_back(*cube);
      }
      skip_space();
      if (at_end()) {
        break;
      }
      if (text_[pos_] != '^') {
        throw SyntaxError(std::string("expected '^', found '") + text_[pos_] +
                              "'",
                          pos_);
      }
      ++pos_;
    }
    return {vars_, std::move(cubes)};
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                         text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  // nullopt for a term that is identically zero.
  std::optional<Cube> term() {
    skip_space();
    if (at_end()) {
      throw SyntaxError("expected a term", pos_);
    }
    const char c = text_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      return c == '1' ? std::optional<Cube>(Cube{}) : std::nullopt;
    }
    Cube cube;
    bool zero = false;
    bool any = false;
    while (true) {
      skip_space();
      if (at_end() || text_[pos_] == '^') {
        break;
      }
      bool negated = false;
      if (text_[pos_] == '!') {
        negated = true;
        ++pos_;
        skip_space();
      }
      if (at_end() || text_[pos_] < 'a' || text_[pos_] > 'z') {
        throw SyntaxError("expected a variable", pos_);
      }
      const auto name_start = pos_;
      while (!at_end() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                           (text_[pos_] >= '0' && text_[pos_] <= '9'))) {
        ++pos_;
      }
      const auto name = text_.substr(name_start, pos_ - name_start);
      const auto index = vars_.index_of(name);
      if (!index) {
        throw UnknownVariableError(std::string(name));
      }
      const auto lit = negated ? Literal::Negative : Literal::Positive;
      const auto existing = cube.literal(*index);
      if (existing != Literal::Absent && existing != lit) {
        zero = true;
      }
      cube = cube.with(*index, lit);
      any = true;
    }
    if (!any) {
      throw SyntaxError("expected a term", pos_);
    }
    return zero ? std::nullopt : std::optional<Cube>(cube);
  }

  std::string_view text_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
};

} // namespace

EsopFunction parse_esop(std::string_view text, const VarSet& vars) {
  return EsopParser(text, vars).parse();
}

// ---------------------------------------------------------------------------

TruthTable to_truth_table(const EsopFunction& f) {
  TruthTable table(f.num_vars());
  for (const auto& cube : f.cubes()) {
    // Enumerate the assignments covered by the cube and toggle them.
    const auto care = static_cast<Assignment>(cube.positive_mask() |
                                              cube.negative_mask());
    const auto free = static_cast<Assignment>((table.size() - 1) & ~care);
    Assignment sub = 0;
    do {
      const Assignment a = cube.positive_mask() | sub;
      table.set(a, !table.get(a));
      sub = (sub - free) & free;
    } while (sub != 0);
  }
  return table;
}

bool equivalent(const EsopFunction& f, const EsopFunction& g) {
  require_same_vars(f.vars(), g.vars());
  return to_truth_table(f) == to_truth_table(g);
}

EsopFunction to_anf(const EsopFunction& f) {
  std::vector<Cube> out;
  for (const auto& cube : f.cubes()) {
    // (prod pos) * prod_{i in neg} (1 ^ x_i) = XOR over subsets S of neg.
    const auto neg = cube.negative_mask();
    std::uint16_t sub = 0;
    do {
      out.emplace_back(static_cast<std::uint16_t>(cube.positive_mask() | sub),
                       std::uint16_t{0});
      sub = static_cast<std::uint16_t>((sub - neg) & neg);
    } while (sub != 0);
  }
  return {f.vars(), std::move(out)};
}

EsopFunction cofactor(const EsopFunction& f, std::size_t var, bool polarity) {
  require_index(f.vars(), var);
  std::vector<Cube> out;
  out.reserve(f.cubes().size());
  const auto keep = polarity ? Literal::Positive : Literal::Negative;
  for (const auto& cube : f.cubes()) {
    const auto lit = cube.literal(var);
    if (lit == Literal::Absent) {
      out.push_back(cube);
    } else if (lit == keep) {
      out.push_back(cube.with(var, Literal::Absent));
    }
  }
  return {f.vars(), std::move(out)};
}

EsopFunction cofactor(const EsopFunction& f, std::string_view var,
                      bool polarity) {
  return cofactor(f, f.vars().require(var), polarity);
}

ShannonPair shannon_expand(const EsopFunction& f, std::size_t var) {
  return {cofactor(f, var, false), cofactor(f, var, true)};
}

PositiveDavioPair positive_davio_expand(const EsopFunction& f,
                                        std::size_t var) {
  auto [neg, pos] = shannon_expand(f, var);
  auto diff = neg ^ pos;
  return {std::move(neg), std::move(diff)};
}

NegativeDavioPair negative_davio_expand(const EsopFunction& f,
                                        std::size_t var) {
  auto [neg, pos] = shannon_expand(f, var);
  auto diff = neg ^ pos;
  return {std::move(pos), std::move(diff)};
}

ShannonPair shannon_expand(const EsopFunction& f, std::string_view var) {
  return shannon_expand(f, f.vars().require(var));
}

PositiveDavioPair positive_davio_expand(const EsopFunction& f,
                                        std::string_view var) {
  return positive_davio_expand(f, f.vars().require(var));
}

NegativeDavioPair negative_davio_expand(const EsopFunction& f,
                                        std::string_view var) {
  return negative_davio_expand(f, f.vars().require(var));
}

// ---------------------------------------------------------------------------

SymmetryIndexSet::SymmetryIndexSet(std::size_t num_vars,
                                   std::vector<std::size_t> indices)
    : num_vars_(num_vars) {
  if (num_vars > kMaxVariables) {
    throw InvalidArgument("symmetry index set over too many variables");
  }
  for (auto k : indices) {
    if (k > num_vars) {
      throw InvalidArgument("symmetry index " + std::to_string(k) +
                            " out of range 0.." + std::to_string(num_vars));
    }
    mask_ |= 1U << k;
  }
}

std::vector<std::size_t> SymmetryIndexSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= num_vars_; ++k) {
    if (contains(k)) {
      out.push_back(k);
    }
  }
  return out;
}

SymmetryIndexSet
SymmetryIndexSet::operator^(const SymmetryIndexSet& rhs) const {
  if (num_vars_ != rhs.num_vars_) {
    throw InvalidArgument("symmetry index sets over different arities");
  }
  SymmetryIndexSet out;
  out.num_vars_ = num_vars_;
  out.mask_ = mask_ ^ rhs.mask_;
  return out;
}

std::optional<SymmetryIndexSet> symmetry_indices(const EsopFunction& f) {
  const auto table = to_truth_table(f);
  const auto n = f.num_vars();
  std::vector<int> value(n + 1, -1);
  for (Assignment a = 0; a < table.size(); ++a) {
    const auto k = static_cast<std::size_t>(std::popcount(a));
    const int bit = table.get(a) ? 1 : 0;
    if (value[k] == -1) {
      value[k] = bit;
    } else if (value[k] != bit) {
      return std::nullopt;
    }
  }
  std::vector<std::size_t> indices;
  for (std::size_t k = 0; k <= n; ++k) {
    if (value[k] == 1) {
      indices.push_back(k);
    }
  }
  return SymmetryIndexSet(n, std::move(indices));
}

EsopFunction symmetric_function(const SymmetryIndexSet& indices,
                                const VarSet& vars) {
  const auto n = vars.size();
  if (indices.num_vars() != n) {
    throw InvalidArgument("symmetry index set arity " +
                          std::to_string(indices.num_vars()) +
                          " does not match " + std::to_string(n) +
                          " variables");
  }
  // S(w) = XOR_k c_k C(w, k) with c_k = XOR_{j <= k} C(k, j) S(j); the
  // elementary symmetric polynomial e_k evaluates to C(popcount, k) mod 2.
  std::vector<Cube> cubes;
  for (std::size_t k = 0; k <= n; ++k) {
    bool coefficient = false;
    for (std::size_t j = 0; j <= k; ++j) {
      coefficient ^= binomial_parity(k, j) && indices.contains(j);
    }
    if (!coefficient) {
      continue;
    }
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) == k) {
        cubes.emplace_back(static_cast<std::uint16_t>(mask), std::uint16_t{0});
      }
    }
  }
  return {vars, std::move(cubes)};
}

EsopFunction random_esop(const VarSet& vars, std::mt19937_64& rng,
                         std::size_t max_cubes) {
  if (max_cubes < 1) {
    throw InvalidArgument("random_esop needs max_cubes >= 1");
  }
  std::uniform_int_distribution<std::size_t> count(1, max_cubes);
  std::uniform_int_distribution<int> literal(0, 2);
  std::vector<Cube> cubes;
  const auto n_cubes = count(rng);
  for (std::size_t i = 0; i < n_cubes; ++i) {
    Cube cube;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      cube = cube.with(v, static_cast<Literal>(literal(rng)));
    }
    cubes.push_back(cube);
  }
  return {vars, std::move(cubes)};
}

} // namespace davio
