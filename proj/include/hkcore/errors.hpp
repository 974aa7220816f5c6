#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hkcore {

/// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Precondition violated by the caller (unknown label, bad dimension, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when peeling cannot make progress or a deletion contradicts the
/// expected Betti bookkeeping. `residual_betti` is the global Betti vector at
/// the moment of failure.
class DiagnosticError : public std::runtime_error {
 public:
  enum class Kind { stuck_phase, proposition_violation, invariant_violation };

  DiagnosticError(Kind kind, const std::string& what, std::vector<long long> residual_betti)
      : std::runtime_error(what), kind_(kind), residual_(std::move(residual_betti)) {}

  Kind kind() const noexcept { return kind_; }
  const std::vector<long long>& residual_betti() const noexcept { return residual_; }

 private:
  Kind kind_;
  std::vector<long long> residual_;
};

}  // namespace hkcore
