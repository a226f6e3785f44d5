#include "gradr/rp.hpp"

#include <algorithm>

#include "gradr/errors.hpp"

namespace gradr {

namespace {

std::size_t hash_elems(const std::vector<Elem>& v) {
  std::size_t h = v.size();
  for (Elem x : v) h = h * 1000003u ^ x.id;
  return h;
}

}  // namespace

const IdealSet& RadicalCache::principal(Elem c) {
  auto it = principal_.find(c.id);
  if (it != principal_.end()) return it->second;
  return principal_.emplace(c.id, ideal_from_homogeneous_gens(ring_, {&c, 1}))
      .first->second;
}

std::size_t RadicalCache::slot(const IdealSet& I) {
  if (I.ring() != ring_) throw RingMismatch("radical cache used with a foreign ring");
  auto& bucket = buckets_[hash_elems(I.elements())];
  for (auto i : bucket)
    if (ideals_[i].elements() == I.elements()) return i;
  const std::size_t s = ideals_.size();
  bucket.push_back(s);
  ideals_.push_back(I);
  radicals_.push_back(grad(I));

  const auto& rad = radicals_.back().radical.elements();
  auto& rb = radical_buckets_[hash_elems(rad)];
  std::size_t id = interned_.size();
  for (auto r : rb)
    if (interned_[r] == rad) id = r;
  if (id == interned_.size()) {
    rb.push_back(id);
    interned_.push_back(rad);
  }
  radical_ids_.push_back(id);
  return s;
}

const RadicalComputation& RadicalCache::radical(const IdealSet& I) {
  return radicals_[slot(I)];
}

std::size_t RadicalCache::radical_id(const IdealSet& I) { return radical_ids_[slot(I)]; }

std::size_t RadicalCache::principal_radical_id(Elem c) {
  auto it = principal_radical_.find(c.id);
  if (it != principal_radical_.end()) return it->second;
  const auto id = radical_id(principal(c));
  principal_radical_.emplace(c.id, id);
  return id;
}

RingAnalysis::RingAnalysis(RingPtr ring)
    : ring_(ring),
      lattice_(enumerate_graded_ideals(ring)),
      primes_(graded_primes(lattice_)),
      cache_(ring) {}

RpCertificate rp_check(const IdealSet& I, RadicalCache& cache) {
  if (!is_graded(I)) throw NotGraded("rp_check: ideal " + I.to_string() + " is not graded");
  const Ring& ring = *I.ring();
  RpCertificate cert{I, false, std::nullopt, std::nullopt, {}, cache.radical(I)};
  const auto target = cache.radical_id(I);

  auto consider = [&](Elem c) {
    if (cache.principal_radical_id(c) != target) return;
    cert.all_witnesses.push_back(c);
    if (!cert.witness) cert.witness = c;
    if (!cert.witness_in_ideal && I.contains(c)) cert.witness_in_ideal = c;
  };
  for (Elem c : ring.homogeneous_elements())
    if (I.contains(c)) consider(c);
  for (Elem c : ring.homogeneous_elements())
    if (!I.contains(c)) consider(c);
  cert.radically_principal = cert.witness.has_value();
  return cert;
}

RpCertificate rp_check(const IdealSet& I) {
  RadicalCache cache(I.ring());
  return rp_check(I, cache);
}

bool verify_certificate(const RpCertificate& cert) {
  const auto& ring = cert.ideal.ring();
  const auto rad = grad(cert.ideal).radical;
  auto check = [&](Elem c) {
    return ring->is_homogeneous(c) &&
           grad(ideal_from_homogeneous_gens(ring, {&c, 1})).radical == rad;
  };
  if (!cert.radically_principal) return !cert.witness && !cert.witness_in_ideal;
  if (!cert.witness || !check(*cert.witness)) return false;
  if (!cert.witness_in_ideal || !cert.ideal.contains(*cert.witness_in_ideal) ||
      !check(*cert.witness_in_ideal))
    return false;
  return true;
}

std::optional<Elem> is_graded_principal(const IdealSet& I, RadicalCache& cache) {
  if (!is_graded(I))
    throw NotGraded("is_graded_principal: ideal " + I.to_string() + " is not graded");
  const Ring& ring = *I.ring();
  for (Elem c : ring.homogeneous_elements()) {
    if (!I.contains(c)) continue;
    if (cache.principal(c).size() == I.size()) return c;
  }
  return std::nullopt;
}

std::optional<Elem> is_graded_principal(const IdealSet& I) {
  RadicalCache cache(I.ring());
  return is_graded_principal(I, cache);
}

bool ring_rp_direct(RingAnalysis& a) {
  for (const auto& I : a.lattice())
    if (!rp_check(I, a.cache()).radically_principal) return false;
  return true;
}

bool ring_rp_via_primes(RingAnalysis& a) {
  for (const auto& P : a.primes())
    if (!rp_check(P, a.cache()).radically_principal) return false;
  return true;
}

bool avoidance_condition(RingAnalysis& a) {
  const auto& primes = a.primes();
  const Ring& ring = *a.ring();
  for (const auto& P : primes) {
    std::vector<const IdealSet*> others;
    for (const auto& K : primes)
      if (!P.subset_of(K)) others.push_back(&K);
    bool found = false;
    for (Elem c : ring.homogeneous_elements()) {
      if (!P.contains(c)) continue;
      found = std::none_of(others.begin(), others.end(),
                           [&](const IdealSet* K) { return K->contains(c); });
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

bool is_graded_principal_ring(RingAnalysis& a) {
  for (const auto& I : a.lattice())
    if (!is_graded_principal(I, a.cache())) return false;
  return true;
}

EquivalenceReport rp_equivalences(RingAnalysis& a) {
  EquivalenceReport r{ring_rp_direct(a), ring_rp_via_primes(a), avoidance_condition(a)};
  if (r.direct != r.via_primes || r.direct != r.avoidance)
    throw CrossCheckFailure(
        "radically principal characterizations disagree on ring '" +
        a.ring()->name() + "': all ideals=" + (r.direct ? "true" : "false") +
        ", primes=" + (r.via_primes ? "true" : "false") +
        ", avoidance=" + (r.avoidance ? "true" : "false"));
  return r;
}

std::optional<std::size_t> avoidance_property(const IdealSet& P,
                                              const std::vector<IdealSet>& family) {
  if (!is_graded(P) || !is_graded_prime(P))
    throw NotPrime("avoidance_property: " + P.to_string() + " is not a graded prime");
  for (const auto& K : family) {
    if (K.ring() != P.ring()) throw RingMismatch("avoidance_property: foreign ideal");
    if (!is_graded(K) || !is_graded_prime(K))
      throw NotPrime("avoidance_property: " + K.to_string() + " is not a graded prime");
  }
  for (Elem x : P.elements()) {
    const bool covered = std::any_of(family.begin(), family.end(),
                                     [&](const IdealSet& K) { return K.contains(x); });
    if (!covered) return std::nullopt;
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    if (P.subset_of(family[i])) return i;
  throw CrossCheckFailure("graded prime " + P.to_string() +
                          " is covered by a family of graded primes but lies in "
                          "none of them");
}

Prop25Report prop25_check(const IdealSet& I, const IdealSet& J, RadicalCache& cache) {
  Prop25Report r;
  const Ring& ring = *I.ring();
  const auto ci = rp_check(I, cache);
  const auto cj = rp_check(J, cache);
  if (!ci.witness_in_ideal || !cj.witness_in_ideal) {
    r.note = "an input ideal is not graded radically principal";
    return r;
  }
  r.preconditions_met = true;
  r.x = *ci.witness_in_ideal;
  r.y = *cj.witness_in_ideal;
  r.xy = ring.mul(r.x, r.y);

  const auto IJ = ideal_product(I, J);
  const auto IcapJ = ideal_intersection(I, J);
  const auto rad_meet =
      ideal_intersection(cache.radical(I).radical, cache.radical(J).radical);
  const auto& rad_xy = cache.radical(cache.principal(r.xy)).radical;
  r.radicals_agree = cache.radical(IJ).radical == rad_xy &&
                     cache.radical(IcapJ).radical == rad_xy && rad_meet == rad_xy;

  auto certifies = [&](const IdealSet& K) {
    const auto c = rp_check(K, cache);
    return std::find(c.all_witnesses.begin(), c.all_witnesses.end(), r.xy) !=
           c.all_witnesses.end();
  };
  r.product_rp_with_xy = certifies(IJ);
  r.intersection_rp_with_xy = certifies(IcapJ);
  if (!r.ok()) r.note = "radical identities failed";
  return r;
}

}  // namespace gradr
