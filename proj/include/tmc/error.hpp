#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tmc {

// Base of every error the library throws. Callers that only need a
// message can catch this; the CLI maps the subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (state strings, move tokens, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a precondition: bad dimensions,
// out-of-range line index, non-distinct cycle points and so on.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnsolvableState : public Error {
 public:
  using Error::Error;
};

// A search refused before starting because its dedup structures would not
// fit the configured memory budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::string estimate, std::uint64_t budget_bytes)
      : Error(std::move(what)), estimate_(std::move(estimate)), budget_bytes_(budget_bytes) {}

  // Decimal byte count; may exceed 64 bits for large boards.
  const std::string& estimate_bytes() const noexcept { return estimate_; }
  std::uint64_t budget_bytes() const noexcept { return budget_bytes_; }

 private:
  std::string estimate_;
  std::uint64_t budget_bytes_;
};

}  // namespace tmc
