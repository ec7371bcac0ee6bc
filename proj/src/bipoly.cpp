#include "knotpoly/bipoly.hpp"

#include <ostream>

#include "term_parser.hpp"

namespace knotpoly {
namespace {

void accumulate(BiPoly::TermMap& into, BiExponent e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

}  // namespace

BiPoly::BiPoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  if (!terms_.empty() && terms_.begin()->second < 0) {
    for (auto& [e, c] : terms_) c = -c;
  }
}

BiPoly BiPoly::constant(Integer c) { return monomial(std::move(c), 0, 0); }

BiPoly BiPoly::monomial(Integer c, Exponent m_exp, Exponent l_exp) {
  TermMap t;
  t.emplace(BiExponent{l_exp, m_exp}, std::move(c));
  return BiPoly(std::move(t));
}

bool BiPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == BiExponent{} &&
         terms_.begin()->second == 1;
}

Integer BiPoly::coefficient(Exponent m_exp, Exponent l_exp) const {
  auto it = terms_.find(BiExponent{l_exp, m_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

BiPoly operator*(const BiPoly& f, const BiPoly& g) {
  BiPoly::TermMap t;
  for (const auto& [ef, cf] : f.terms_) {
    for (const auto& [eg, cg] : g.terms_) {
      accumulate(t, BiExponent{ef.l_exp + eg.l_exp, ef.m_exp + eg.m_exp},
                 cf * cg);
    }
  }
  return BiPoly(std::move(t));
}

std::string to_string(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::string body;
    auto add = [&body](char var, Exponent x) {
      if (x == 0) return;
      if (!body.empty()) body += '*';
      body += var;
      if (x != 1) body += "^" + std::to_string(x);
    };
    add('M', e.m_exp);
    add('L', e.l_exp);
    detail::append_term(out, c, body, first);
    first = false;
  }
  return out;
}

BiPoly parse_bipoly(std::string_view text) {
  BiPoly::TermMap t;
  for (auto& term : detail::parse_terms(text, "ML")) {
    const BiExponent e{term.powers.contains('L') ? term.powers.at('L') : 0,
                       term.powers.contains('M') ? term.powers.at('M') : 0};
    accumulate(t, e, term.coefficient);
  }
  return BiPoly(std::move(t));
}

std::ostream& operator<<(std::ostream& os, const BiPoly& f) {
  return os << to_string(f);
}

}  // namespace knotpoly
