// Copyright 2026 The qlogic Authors
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

#ifndef QLOGIC_ERRORS_HPP
#define QLOGIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlogic {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: malformed file, ill-formed program, out-of-range argument.
/// The CLI maps these to exit code 2.
class InputError : public Error {
  public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// A numerical or structural invariant failed at runtime. The CLI maps these
/// to exit code 3 and emits no report.
class InvariantBreach : public Error {
  public:
    explicit InvariantBreach(const std::string& what) : Error(what) {}
};

/// Text input that could not be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public InputError {
  public:
    ParseError(const std::string& what, int line = 0) : InputError(what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

class DimensionMismatchError : public InputError {
  public:
    explicit DimensionMismatchError(const std::string& what) : InputError(what) {}
};

/// Two blocks of a Greechie diagram share two or more atoms.
class GreechieViolationError : public InputError {
  public:
    explicit GreechieViolationError(const std::string& what) : InputError(what) {}
};

class WrongLogicError : public InputError {
  public:
    explicit WrongLogicError(const std::string& what) : InputError(what) {}
};

/// Event atoms are not contained in a common block.
class InvalidEventError : public InputError {
  public:
    explicit InvalidEventError(const std::string& what) : InputError(what) {}
};

/// Conditioning event has (numerically) zero probability.
class ZeroProbabilityError : public InputError {
  public:
    explicit ZeroProbabilityError(const std::string& what) : InputError(what) {}
};

class UnboundedPolytopeError : public InputError {
  public:
    explicit UnboundedPolytopeError(const std::string& what) : InputError(what) {}
};

/// The state polytope of a logic is empty.
class InfeasibleLogicError : public InputError {
  public:
    explicit InfeasibleLogicError(const std::string& what) : InputError(what) {}
};

/// Projectors do not realize the required orthogonality pattern.
class OrthogonalityPatternError : public InputError {
  public:
    explicit OrthogonalityPatternError(const std::string& what) : InputError(what) {}
};

class NonOrthogonalError : public InputError {
  public:
    explicit NonOrthogonalError(const std::string& what) : InputError(what) {}
};

/// Random sampling kept producing degenerate draws; carries the seed context.
class DegenerateDrawError : public InvariantBreach {
  public:
    explicit DegenerateDrawError(const std::string& what) : InvariantBreach(what) {}
};

/// A probability table does not sum to 1 or has negative entries.
class MalformedBoxError : public InputError {
  public:
    explicit MalformedBoxError(const std::string& what) : InputError(what) {}
};

}  // namespace qlogic

#endif
