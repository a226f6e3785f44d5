#pragma once

#include <string>
#include <vector>

#include "gradr/io.hpp"
#include "gradr/rp.hpp"

namespace gradr {

/// Full ring report: support, lattice size, primes, maximal ideals, flags
/// with refutation witnesses, and one certificate per graded ideal.
Json analyze_ring(RingAnalysis& analysis);

/// Grad, prime/maximal status, graded principal and RP certificate of a
/// single graded ideal.
Json analyze_ideal(const IdealSet& I, RadicalCache& cache);

/// Re-derives every flag and re-verifies every witness in `report` against
/// `ring` from scratch. Returns one message per disagreement.
std::vector<std::string> replay_report(const RingPtr& ring, const Json& report);

}  // namespace gradr
