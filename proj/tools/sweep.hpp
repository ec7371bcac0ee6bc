#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotpoly/knotpoly.hpp"

namespace knotpoly::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json };

struct Record {
  Json body;
  std::string category;
  bool contradiction = false;
};

struct SweepSummary {
  std::size_t total = 0;
  std::map<std::string, std::size_t> counts;
  std::size_t contradictions = 0;
};

Json knot_json(const TorusKnot& k);
Json integer_json(const Integer& n);

/// One line per record: compact JSON, or space separated key=value pairs.
std::string render(const Json& record, Format fmt);

/// Torus knots T(p,q) with 2 <= q < p <= max, gcd(p,q) = 1, ordered by (p,q).
std::vector<TorusKnot> torus_range(std::int64_t max);

Record obstruct_record(std::int64_t a, std::int64_t b, std::int64_t w,
                       const Json& companion_label, const LaurentPoly& companion);
Record lemma_record(std::int64_t a, std::int64_t b, std::int64_t w,
                    const Json& companion_label, const LaurentPoly& companion);
/// Lemma check cross-examined against an admissibility scan of the satellite
/// polynomial built separately.
Record lemma_sweep_record(std::int64_t a, std::int64_t b, std::int64_t w,
                          const TorusKnot& companion);
Record thinness_record(const TorusKnot& k);
Record torus_record(const TorusKnot& k);
Record glue_record(int case_id, std::uint64_t seed, std::uint64_t index, double tol);

/// Evaluates task(0..n-1) on `jobs` worker threads (0 = hardware
/// concurrency) and writes the records to `out` in index order as they
/// complete. `categories` are reported in the summary even when empty.
SweepSummary run_ordered(std::size_t n, const std::function<Record(std::size_t)>& task,
                         unsigned jobs, Format fmt, std::ostream& out,
                         const std::vector<std::string>& categories);

}  // namespace knotpoly::cli
