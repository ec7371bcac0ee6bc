#include "knotpoly/error.hpp"

namespace knotpoly {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::parse_error: return "parse_error";
    case ErrorKind::non_exact_division: return "non_exact_division";
    case ErrorKind::not_symmetrizable: return "not_symmetrizable";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::relation_violated: return "relation_violated";
    case ErrorKind::proof_mismatch: return "proof_mismatch";
  }
  return "unknown";
}

}  // namespace knotpoly
