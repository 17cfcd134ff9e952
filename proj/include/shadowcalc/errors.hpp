#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shadowcalc {

// Base for all recoverable errors raised by the library. The CLI maps
// SyntaxError to exit 2 and every other DomainError to exit 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Operands with different truncation orders.
class OrderMismatch : public DomainError {
 public:
  explicit OrderMismatch(const std::string& message) : DomainError("order_mismatch", message) {}
};

// An exponent left the window [-K, +K] on the low side (the high side is
// clipped and flagged as saturation instead).
class WindowExceeded : public DomainError {
 public:
  explicit WindowExceeded(const std::string& message) : DomainError("window_exceeded", message) {}
};

class DivisionByZero : public DomainError {
 public:
  explicit DivisionByZero(const std::string& message) : DomainError("division_by_zero", message) {}
};

// shadow() of an infinite element.
class NotFinite : public DomainError {
 public:
  explicit NotFinite(const std::string& message) : DomainError("not_finite", message) {}
};

// Expression evaluation failure; carries the byte offset of the offending
// node in the source text (npos for programmatically built trees).
class EvaluationError : public DomainError {
 public:
  EvaluationError(const std::string& message, std::size_t position)
      : DomainError("evaluation_error", message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NotDifferentiable : public DomainError {
 public:
  explicit NotDifferentiable(const std::string& message)
      : DomainError("not_differentiable", message) {}
};

class DegenerateInput : public DomainError {
 public:
  explicit DegenerateInput(const std::string& message) : DomainError("degenerate_input", message) {}
};

class NotAPolynomial : public DomainError {
 public:
  explicit NotAPolynomial(const std::string& message) : DomainError("not_a_polynomial", message) {}
};

// Grid too coarse to resolve a truncation level.
class ResolutionError : public DomainError {
 public:
  explicit ResolutionError(const std::string& message) : DomainError("resolution_error", message) {}
};

// Text that does not conform to a grammar. Carries the byte offset and what
// was expected there.
class SyntaxError : public DomainError {
 public:
  SyntaxError(std::size_t offset, const std::string& expected)
      : DomainError("syntax_error",
                    "syntax error at byte " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(expected) {}
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace shadowcalc
