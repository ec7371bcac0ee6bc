#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace knotpoly::cli {

Json knot_json(const TorusKnot& k) { return Json{{"a", k.a()}, {"b", k.b()}}; }

Json integer_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return n.str();
}

namespace {

std::string text_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.size() == 2 && v.contains("a") && v.contains("b")) {
    return "T(" + v["a"].dump() + "," + v["b"].dump() + ")";
  }
  return v.dump();
}

Json witness_json(const WindingResidueCheck& c) {
  if (c.violation == CoefficientViolation::none) return nullptr;
  Json coefficients = Json::array();
  for (const auto& x : c.coefficients) coefficients.push_back(integer_json(x));
  return Json{{"violation", to_string(c.violation)},
              {"exponents", c.exponents},
              {"coefficients", coefficients}};
}

Json rational_json(const Rational& r) { return to_string(r); }

std::string_view kind_name(Thinness::Kind k) {
  switch (k) {
    case Thinness::Kind::point: return "point";
    case Thinness::Kind::thin: return "thin";
    case Thinness::Kind::not_thin: return "not_thin";
  }
  return "?";
}

}  // namespace

std::string render(const Json& record, Format fmt) {
  if (fmt == Format::json) return record.dump();
  std::string line;
  for (const auto& [key, value] : record.items()) {
    if (!line.empty()) line += ' ';
    line += key + "=" + text_value(value);
  }
  return line;
}

std::vector<TorusKnot> torus_range(std::int64_t max) {
  std::vector<TorusKnot> out;
  for (std::int64_t p = 3; p <= max; ++p)
    for (std::int64_t q = 2; q < p; ++q)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

Record obstruct_record(std::int64_t a, std::int64_t b, std::int64_t w,
                       const Json& companion_label, const LaurentPoly& companion) {
  const ObstructionResult r = torus_pattern_obstruction(a, b, w, companion);
  Record rec;
  rec.category = std::string(to_string(r.verdict));
  rec.contradiction = r.verdict == ObstructionVerdict::not_obstructed;
  rec.body = Json{{"a", a},
                  {"b", b},
                  {"w", w},
                  {"companion", companion_label},
                  {"verdict", rec.category},
                  {"witness", r.check ? witness_json(*r.check) : Json(nullptr)},
                  {"reason", r.reason}};
  return rec;
}

Record lemma_record(std::int64_t a, std::int64_t b, std::int64_t w,
                    const Json& companion_label, const LaurentPoly& companion) {
  const WindingResidueCheck c = check_winding_residue(a, b, w, companion);
  Record rec;
  rec.category = std::string(to_string(c.violation));
  rec.contradiction = (c.violation == CoefficientViolation::none) != (w % b == 0);
  rec.body = Json{{"a", a},
                  {"b", b},
                  {"w", w},
                  {"companion", companion_label},
                  {"verdict", rec.category},
                  {"witness", witness_json(c)}};
  return rec;
}

Record lemma_sweep_record(std::int64_t a, std::int64_t b, std::int64_t w,
                          const TorusKnot& companion) {
  const LaurentPoly comp = alexander(companion);
  Record rec;
  rec.body = Json{{"a", a}, {"b", b}, {"w", w}, {"companion", knot_json(companion)}};
  try {
    const WindingResidueCheck c = check_winding_residue(a, b, w, comp);
    const AdmissibilityReport scan = lspace_admissible(
        satellite_alexander(SatelliteSpec(alexander(TorusKnot(a, b)), comp, w)));

    bool agree = false;
    switch (c.violation) {
      case CoefficientViolation::none:
        agree = scan.verdict == Admissibility::admissible;
        break;
      case CoefficientViolation::magnitude:
        agree = scan.verdict == Admissibility::fails_magnitude &&
                scan.witness_exponent == c.exponents.at(0);
        break;
      case CoefficientViolation::same_sign:
        agree = scan.verdict == Admissibility::fails_alternation &&
                scan.witness_exponent == c.exponents.at(1);
        break;
    }
    const bool expected = (c.violation == CoefficientViolation::none) == (w % b == 0);
    rec.category = std::string(to_string(c.violation));
    rec.contradiction = !(agree && expected);
    rec.body["verdict"] = rec.category;
    rec.body["witness"] = witness_json(c);
    rec.body["scan"] = to_string(scan.verdict);
    rec.body["scan_exponent"] =
        scan.witness_exponent ? Json(*scan.witness_exponent) : Json(nullptr);
    rec.body["agree"] = !rec.contradiction;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::proof_mismatch) throw;
    rec.category = "proof_mismatch";
    rec.contradiction = true;
    rec.body["verdict"] = rec.category;
    rec.body["detail"] = e.what();
    rec.body["agree"] = false;
  }
  return rec;
}

Record thinness_record(const TorusKnot& k) {
  const BiPoly f = enhanced_apoly(k);
  const Thinness t = thinness(f);
  const Rational expected(k.a() * k.b());
  const bool thin_ok = t.kind == Thinness::Kind::thin && t.slope == expected;
  const bool unique = detect_torus_from_apoly(f).unique;
  const bool detectable = detectability(k);

  Record rec;
  rec.category = std::string(kind_name(t.kind));
  rec.contradiction = !thin_ok || unique != detectable;
  rec.body = Json{{"knot", knot_json(k)},
                  {"apoly", to_string(f)},
                  {"thinness", rec.category},
                  {"slope", t.slope ? rational_json(*t.slope) : Json(nullptr)},
                  {"expected_slope", rational_json(expected)},
                  {"detect_unique", unique},
                  {"detectability", detectable},
                  {"ok", !rec.contradiction}};
  return rec;
}

Record torus_record(const TorusKnot& k) {
  const LaurentPoly f = alexander(k);
  const LaurentPoly lead = leading_form(k);
  const std::int64_t g = genus(k);
  const auto [lo, hi] = f.span();
  bool leading_ok = true;
  for (std::int64_t e = g - k.p() + 1; e <= g; ++e)
    leading_ok = leading_ok && f.coefficient(e) == lead.coefficient(e);
  const bool span_ok = lo == -g && hi == g;
  const bool admissible = lspace_admissible(f).verdict == Admissibility::admissible;

  Record rec;
  rec.category = admissible ? "admissible" : "not_admissible";
  rec.contradiction = !(leading_ok && span_ok && admissible);
  rec.body = Json{{"knot", knot_json(k)},
                  {"genus", g},
                  {"span_ok", span_ok},
                  {"leading_form_agrees", leading_ok},
                  {"admissible", admissible},
                  {"ok", !rec.contradiction}};
  return rec;
}

Record glue_record(int case_id, std::uint64_t seed, std::uint64_t index, double tol) {
  const GlueInstance g = sample_glue_instance(case_id, seed, index);
  const Extension e = construct_extension(g);
  const VerifyResult v = verify_extension(g, e, tol);
  Record rec;
  rec.category = v.ok ? "ok" : "failed";
  rec.contradiction = !v.ok;
  rec.body = Json{{"case", case_id},
                  {"index", index},
                  {"p", g.p()},
                  {"q", g.q()},
                  {"w", g.w()},
                  {"d", g.d()},
                  {"k", e.chosen_k ? Json(*e.chosen_k) : Json(nullptr)},
                  {"central_twist", e.central_twist_used},
                  {"residuals", v.residuals},
                  {"ok", v.ok}};
  if (!v.failed_equations.empty()) rec.body["failed_equations"] = v.failed_equations;
  return rec;
}

namespace {

class OrderedWriter {
 public:
  OrderedWriter(std::ostream& out, Format fmt, SweepSummary& summary)
      : out_(out), fmt_(fmt), summary_(summary) {}

  void submit(std::size_t index, Record record) {
    std::lock_guard lock(mutex_);
    pending_.emplace(index, std::move(record));
    while (!pending_.empty() && pending_.begin()->first == next_) {
      Record& r = pending_.begin()->second;
      out_ << render(r.body, fmt_) << '\n';
      ++summary_.total;
      ++summary_.counts[r.category];
      if (r.contradiction) ++summary_.contradictions;
      pending_.erase(pending_.begin());
      ++next_;
    }
  }

 private:
  std::ostream& out_;
  Format fmt_;
  SweepSummary& summary_;
  std::mutex mutex_;
  std::map<std::size_t, Record> pending_;
  std::size_t next_ = 0;
};

}  // namespace

SweepSummary run_ordered(std::size_t n, const std::function<Record(std::size_t)>& task,
                         unsigned jobs, Format fmt, std::ostream& out,
                         const std::vector<std::string>& categories) {
  SweepSummary summary;
  for (const auto& c : categories) summary.counts[c] = 0;
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));

  OrderedWriter writer(out, fmt, summary);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (!stop) {
      const std::size_t i = next++;
      if (i >= n) return;
      try {
        writer.submit(i, task(i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return summary;
}

}  // namespace knotpoly::cli
