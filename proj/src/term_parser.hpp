#pragma once

// Shared tokenizer for the polynomial text formats (`c*t^e`, `c*M^i*L^j`).

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knotpoly/laurent.hpp"

namespace knotpoly::detail {

struct ParsedTerm {
  Integer coefficient{1};
  std::map<char, Exponent> powers;
};

/// Splits `text` into signed monomials over the single-letter `variables`.
/// Throws Error(parse_error) with the offending position on malformed input.
std::vector<ParsedTerm> parse_terms(std::string_view text,
                                    std::string_view variables);

/// Appends one monomial to `out`. `body` is the variable part ("" for a
/// constant); `first` controls whether the sign is written as a prefix.
void append_term(std::string& out, const Integer& coefficient,
                 const std::string& body, bool first);

}  // namespace knotpoly::detail
