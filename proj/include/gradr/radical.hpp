#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gradr/ideal.hpp"

namespace gradr {

/// Result of computing the graded radical of a graded ideal, with the least
/// exponent that pushes each homogeneous root into the ideal.
struct RadicalComputation {
  IdealSet ideal;
  /// Homogeneous a (ascending) with a^n in I for some n >= 1.
  std::vector<Elem> homogeneous_roots;
  IdealSet radical;
  /// (a, least n with a^n in I), aligned with homogeneous_roots.
  std::vector<std::pair<Elem, std::uint32_t>> exponent_map;
  /// Set when the input was R itself; Grad(R) = R by convention.
  bool improper_input = false;
};

/// Graded radical. Throws NotGraded for a non-graded input.
RadicalComputation grad(const IdealSet& I);

bool is_graded_prime(const IdealSet& P);
/// Maximal among proper graded ideals. Throws NotProper for R.
bool is_graded_maximal(const IdealSet& P);

/// All graded primes, in lattice order.
std::vector<IdealSet> graded_primes(const RingPtr& ring);
std::vector<IdealSet> graded_primes(const std::vector<IdealSet>& lattice);

bool is_graded_field(const Ring& ring);
bool is_field(const Ring& ring);
bool is_graded_integral_domain(const Ring& ring);

/// Degrees g with R_g != 0.
std::vector<Degree> supp(const Ring& ring);

/// 1 in R_g R_{g^-1} for every g in the support.
bool first_strong_by_definition(const Ring& ring);
/// Support is a subgroup and R_g R_h = R_{gh} on it.
bool first_strong_by_characterization(const Ring& ring);
/// Both routes; throws CrossCheckFailure if they disagree.
bool is_first_strong(const Ring& ring);

/// One representative per nonzero homogeneous class of R/I, i.e. one element
/// from each coset (a + (I n R_g)) with a in R_g \ I.
std::vector<Elem> homogeneous_residues(const IdealSet& I);

}  // namespace gradr
