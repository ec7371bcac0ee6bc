#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotpoly {

enum class ErrorKind {
  invalid_argument,
  parse_error,
  non_exact_division,
  not_symmetrizable,
  precondition,
  relation_violated,
  proof_mismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Domain error carrying a machine-readable kind; the CLI turns these into
// {"error": {"kind": ..., "detail": ...}} records.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace knotpoly
