// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace lpcc {

// Simplex could not make progress (singular basis, cycling past the
// anti-cycling exit, iteration cap).  Callers retry from a scratch basis;
// if that also fails the error propagates.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what)
      : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class DimensionError : public std::logic_error {
 public:
  explicit DimensionError(const std::string& what) : std::logic_error(what) {}
};

// A complementarity pair is missing a finite bound required by the caller
// (big-M export needs both sides bounded).
class MissingBounds : public std::runtime_error {
 public:
  explicit MissingBounds(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace lpcc
