#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gradr/radical.hpp"

namespace gradr {

/// Per-ring memo of principal ideals and graded radicals. Not thread-safe;
/// use one per thread.
class RadicalCache {
 public:
  explicit RadicalCache(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const { return ring_; }
  /// <c> for homogeneous c.
  const IdealSet& principal(Elem c);
  const RadicalComputation& radical(const IdealSet& I);
  /// Small integer naming Grad(I); equal ids mean equal radicals.
  std::size_t radical_id(const IdealSet& I);
  std::size_t principal_radical_id(Elem c);

 private:
  std::size_t slot(const IdealSet& I);

  RingPtr ring_;
  std::unordered_map<std::uint32_t, IdealSet> principal_;
  std::unordered_map<std::uint32_t, std::size_t> principal_radical_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
  std::vector<IdealSet> ideals_;
  std::vector<RadicalComputation> radicals_;
  std::vector<std::size_t> radical_ids_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> radical_buckets_;
  std::vector<std::vector<Elem>> interned_;
};

/// Lattice, primes and radical memo of one ring, computed once.
class RingAnalysis {
 public:
  explicit RingAnalysis(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<IdealSet>& lattice() const { return lattice_; }
  const std::vector<IdealSet>& primes() const { return primes_; }
  RadicalCache& cache() { return cache_; }

 private:
  RingPtr ring_;
  std::vector<IdealSet> lattice_;
  std::vector<IdealSet> primes_;
  RadicalCache cache_;
};

/// Outcome of searching for c in h(R) with Grad(I) = Grad(<c>).
struct RpCertificate {
  IdealSet ideal;
  bool radically_principal = false;
  /// First witness in search order (members of I first, then the rest of
  /// h(R), each ascending).
  std::optional<Elem> witness;
  /// First witness lying in I.
  std::optional<Elem> witness_in_ideal;
  std::vector<Elem> all_witnesses;
  RadicalComputation radical;
};

RpCertificate rp_check(const IdealSet& I, RadicalCache& cache);
RpCertificate rp_check(const IdealSet& I);

/// Recomputes Grad(I) and Grad(<witness>) from scratch.
bool verify_certificate(const RpCertificate& cert);

/// Homogeneous c with <c> = I, or nullopt.
std::optional<Elem> is_graded_principal(const IdealSet& I, RadicalCache& cache);
std::optional<Elem> is_graded_principal(const IdealSet& I);

/// Every graded ideal is graded radically principal.
bool ring_rp_direct(RingAnalysis& a);
/// Every graded prime is graded radically principal.
bool ring_rp_via_primes(RingAnalysis& a);
/// For every graded prime P some homogeneous c in P avoids every graded
/// prime K with P not inside K.
bool avoidance_condition(RingAnalysis& a);
bool is_graded_principal_ring(RingAnalysis& a);

struct EquivalenceReport {
  bool direct = false;
  bool via_primes = false;
  bool avoidance = false;
};

/// Computes the three characterizations independently. Throws
/// CrossCheckFailure unless all three agree.
EquivalenceReport rp_equivalences(RingAnalysis& a);

/// If P lies in the union of `family`, returns some i with P inside
/// family[i]; nullopt if P is not covered. Throws NotPrime for non-prime
/// inputs and CrossCheckFailure if P is covered but inside no member.
std::optional<std::size_t> avoidance_property(const IdealSet& P,
                                              const std::vector<IdealSet>& family);

struct Prop25Report {
  bool preconditions_met = false;
  std::string note;
  Elem x{}, y{}, xy{};
  bool radicals_agree = false;
  bool product_rp_with_xy = false;
  bool intersection_rp_with_xy = false;

  bool ok() const {
    return preconditions_met && radicals_agree && product_rp_with_xy &&
           intersection_rp_with_xy;
  }
};

/// Checks Grad(IJ) = Grad(I n J) = Grad(I) n Grad(J) = Grad(<xy>) for the
/// in-ideal witnesses x of I and y of J, and that xy certifies IJ and I n J.
Prop25Report prop25_check(const IdealSet& I, const IdealSet& J, RadicalCache& cache);

}  // namespace gradr
