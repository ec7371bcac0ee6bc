#pragma once

#include <cstdint>

#include "knotpoly/repglue.hpp"

namespace knotpoly {

/// Draws a valid GlueInstance for case 1 (diagonal), 2 (Jordan block with a
/// w-th root) or 3 (eigenvalue -1 with w even).
///
/// The peripheral relation holds by construction. Every instance is seeded
/// from (seed, case_id, index) alone, so instance streams are identical no
/// matter how a sweep is split across threads.
GlueInstance sample_glue_instance(int case_id, std::uint64_t seed,
                                  std::uint64_t index);

}  // namespace knotpoly
