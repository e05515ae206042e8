// Copyright 2026 The weakval authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace weakval {

/// Common base so callers can catch every toolkit error at once.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Linear-algebra layer.

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class ZeroVector : public Error {
  public:
    using Error::Error;
};

class ConvergenceFailure : public Error {
  public:
    using Error::Error;
};

// Weak-measurement statistics layer.

/// The pre/post-selection overlap is too small for conditional statistics
/// to be defined.
class OrthogonalPostselection : public Error {
  public:
    using Error::Error;
};

class IncompleteBasis : public Error {
  public:
    using Error::Error;
};

/// The three-state overlap product vanishes, so its phase has no value.
class UndefinedTension : public Error {
  public:
    using Error::Error;
};

// Response / numerics layer.

class NumericalUnderflow : public Error {
  public:
    using Error::Error;
};

class InvalidRange : public Error {
  public:
    using Error::Error;
};

// Free-particle grid layer.

/// The grid cannot represent the chirp phases without aliasing.
class AliasedGrid : public Error {
  public:
    using Error::Error;
};

class ZeroAmplitude : public Error {
  public:
    using Error::Error;
};

class OutOfRange : public Error {
  public:
    using Error::Error;
};

// Scenario I/O layer.

/// Malformed scenario document. Reports a 1-based line/column when the
/// position is known, 0 otherwise.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what, std::size_t line = 0,
                        std::size_t column = 0)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed document that violates a semantic rule (dangling name,
/// dimension mismatch, zero state, ...).
class ValidationError : public Error {
  public:
    using Error::Error;
};

} // namespace weakval
