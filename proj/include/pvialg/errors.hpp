#pragma once

#include <stdexcept>
#include <string>

namespace pvialg {

/// Base class for every failure raised by the exact algebra layers.
class AlgebraError : public std::runtime_error {
 public:
  explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public AlgebraError {
 public:
  DivisionByZero() : AlgebraError("division by zero") {}
  explicit DivisionByZero(const std::string& what) : AlgebraError(what) {}
};

/// Operands live in different quadratic extensions or use different
/// parameter symbols.
class FieldMismatch : public AlgebraError {
 public:
  explicit FieldMismatch(const std::string& what) : AlgebraError(what) {}
};

/// Floating evaluation hit a pole or a branch point.
class EvaluationError : public AlgebraError {
 public:
  explicit EvaluationError(const std::string& what) : AlgebraError(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace pvialg
