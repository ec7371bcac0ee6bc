#include "knotpoly/laurent.hpp"

#include <ostream>

#include "knotpoly/error.hpp"
#include "term_parser.hpp"

namespace knotpoly {
namespace {

void accumulate(LaurentPoly::TermMap& into, Exponent e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

}  // namespace

LaurentPoly::LaurentPoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::constant(Integer c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(Integer c, Exponent e) {
  TermMap t;
  if (c != 0) t.emplace(e, std::move(c));
  return LaurentPoly(std::move(t));
}

Integer LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::pair<Exponent, Exponent> LaurentPoly::span() const {
  if (terms_.empty())
    throw Error(ErrorKind::invalid_argument, "span of the zero polynomial");
  return {terms_.begin()->first, terms_.rbegin()->first};
}

Integer LaurentPoly::value_at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

bool LaurentPoly::is_mirror_symmetric() const {
  auto lo = terms_.begin();
  auto hi = terms_.rbegin();
  for (std::size_t i = 0; i < terms_.size(); ++i, ++lo, ++hi) {
    if (lo->first != -hi->first || lo->second != hi->second) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  TermMap t;
  for (const auto& [e, c] : terms_) t.emplace_hint(t.end(), e + k, c);
  LaurentPoly r;
  r.terms_ = std::move(t);
  return r;
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly r = f;
  for (const auto& [e, c] : g.terms_) accumulate(r.terms_, e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& f) {
  LaurentPoly r = f;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly r = f;
  for (const auto& [e, c] : g.terms_) accumulate(r.terms_, e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly r;
  for (const auto& [ef, cf] : f.terms_) {
    for (const auto& [eg, cg] : g.terms_) accumulate(r.terms_, ef + eg, cf * cg);
  }
  return r;
}

LaurentPoly dilate(const LaurentPoly& f, std::int64_t w) {
  if (w <= 0)
    throw Error(ErrorKind::invalid_argument,
                "dilation factor must be positive, got " + std::to_string(w));
  LaurentPoly::TermMap t;
  for (const auto& [e, c] : f.terms()) t.emplace_hint(t.end(), e * w, c);
  return LaurentPoly(std::move(t));
}

LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::invalid_argument, "division by zero");
  if (f.is_zero()) return {};

  const auto [g_lo, g_hi] = g.span();
  const Integer& g_lead = g.terms().rbegin()->second;
  // Every quotient exponent lies in [f_lo - g_lo, f_hi - g_hi].
  const Exponent lowest_quotient_exp = f.min_exponent() - g_lo;

  LaurentPoly::TermMap quotient;
  LaurentPoly remainder = f;
  while (!remainder.is_zero()) {
    const auto& [top_e, top_c] = *remainder.terms().rbegin();
    const Exponent qe = top_e - g_hi;
    if (qe < lowest_quotient_exp || top_c % g_lead != 0) {
      throw Error(ErrorKind::non_exact_division,
                  "(" + to_string(f) + ") is not divisible by (" +
                      to_string(g) + "); remainder " + to_string(remainder));
    }
    const Integer qc = top_c / g_lead;
    quotient.emplace(qe, qc);
    remainder = remainder - LaurentPoly::monomial(qc, qe) * g;
  }
  return LaurentPoly(std::move(quotient));
}

LaurentPoly symmetrize(const LaurentPoly& f) {
  if (f.is_zero())
    throw Error(ErrorKind::not_symmetrizable, "cannot symmetrize zero");
  const auto [lo, hi] = f.span();
  if ((lo + hi) % 2 != 0) {
    throw Error(ErrorKind::not_symmetrizable,
                "odd exponent span in " + to_string(f));
  }
  LaurentPoly r = f.shifted(-(lo + hi) / 2);
  if (!r.is_mirror_symmetric()) {
    throw Error(ErrorKind::not_symmetrizable,
                "no monomial shift of " + to_string(f) + " is palindromic");
  }
  const Integer at_one = r.value_at_one();
  if (at_one == 0) {
    throw Error(ErrorKind::not_symmetrizable,
                "value at t=1 vanishes for " + to_string(f));
  }
  return at_one < 0 ? -r : r;
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string body;
    if (e == 1) {
      body = "t";
    } else if (e != 0) {
      body = "t^" + std::to_string(e);
    }
    detail::append_term(out, c, body, first);
    first = false;
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text) {
  LaurentPoly::TermMap t;
  for (auto& term : detail::parse_terms(text, "t")) {
    const Exponent e = term.powers.contains('t') ? term.powers.at('t') : 0;
    accumulate(t, e, term.coefficient);
  }
  return LaurentPoly(std::move(t));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) {
  return os << to_string(f);
}

}  // namespace knotpoly
