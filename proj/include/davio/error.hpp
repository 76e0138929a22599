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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace davio {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed ESOP text. `position()` is the 0-based byte offset of the
/// offending character.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error("syntax error at " + std::to_string(position) + ": " + message),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class UnknownVariableError : public Error {
public:
  explicit UnknownVariableError(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}

  [[nodiscard]] const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

/// Raised when a lattice does not reach constant leaves within the level
/// budget, or when a synthesized circuit would exceed the qubit budget.
class LevelBudgetExceeded : public Error {
public:
  using Error::Error;
};

/// Contract violation on an argument: arity mismatch, wrong gate kind,
/// out-of-range index, dimension limit.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// No placement realizes a SWAT block with a supported connectivity pattern.
class PlacementInfeasible : public Error {
public:
  using Error::Error;
};

/// A mapping report does not belong to the circuit it is applied to.
class InconsistentReport : public Error {
public:
  using Error::Error;
};

} // namespace davio
