#include "term_parser.hpp"

#include <cctype>
#include <limits>

#include "knotpoly/error.hpp"

namespace knotpoly::detail {
namespace {

class TermScanner {
 public:
  TermScanner(std::string_view text, std::string_view variables)
      : variables_(variables) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) compact_.push_back(c);
    }
  }

  std::vector<ParsedTerm> run() {
    if (compact_.empty()) fail("empty polynomial");
    std::vector<ParsedTerm> terms;
    bool first = true;
    while (pos_ < compact_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      ParsedTerm term = read_term();
      if (negative) term.coefficient = -term.coefficient;
      terms.push_back(std::move(term));
      first = false;
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < compact_.size() ? compact_[pos_] : '\0'; }

  bool is_variable(char c) const {
    return c != '\0' && variables_.find(c) != std::string_view::npos;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::parse_error,
                why + " at position " + std::to_string(pos_) + " in '" +
                    compact_ + "'");
  }

  ParsedTerm read_term() {
    ParsedTerm term;
    bool any_factor = false;
    while (true) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term.coefficient *= read_unsigned();
      } else if (is_variable(c)) {
        ++pos_;
        Exponent e = 1;
        if (peek() == '^') {
          ++pos_;
          e = read_exponent();
        }
        term.powers[c] += e;
      } else {
        if (!any_factor) fail("expected a coefficient or variable");
        break;
      }
      any_factor = true;
      if (peek() == '*') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())) &&
            !is_variable(peek())) {
          fail("dangling '*'");
        }
        continue;
      }
      // Juxtaposition (`2t^3`) continues the same monomial.
      char next = peek();
      if (!std::isdigit(static_cast<unsigned char>(next)) && !is_variable(next))
        break;
    }
    return term;
  }

  Integer read_unsigned() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(compact_.substr(start, pos_ - start));
  }

  Exponent read_exponent() {
    char close = '\0';
    if (peek() == '(') close = ')';
    if (peek() == '{') close = '}';
    if (close != '\0') ++pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    Integer magnitude = read_unsigned();
    if (magnitude > Integer(std::numeric_limits<Exponent>::max() / 2))
      fail("exponent out of range");
    if (close != '\0') {
      if (peek() != close) fail(std::string("expected '") + close + "'");
      ++pos_;
    }
    auto e = static_cast<Exponent>(magnitude);
    return negative ? -e : e;
  }

  std::string_view variables_;
  std::string compact_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text,
                                    std::string_view variables) {
  return TermScanner(text, variables).run();
}

void append_term(std::string& out, const Integer& coefficient,
                 const std::string& body, bool first) {
  const bool negative = coefficient < 0;
  const Integer magnitude = negative ? Integer(-coefficient) : coefficient;
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (body.empty()) {
    out += magnitude.str();
  } else if (magnitude == 1) {
    out += body;
  } else {
    out += magnitude.str();
    out += '*';
    out += body;
  }
}

}  // namespace knotpoly::detail
