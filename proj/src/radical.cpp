#include "gradr/radical.hpp"

#include <algorithm>

#include "gradr/errors.hpp"

namespace gradr {

namespace {

void require_graded(const IdealSet& I, const char* op) {
  if (!is_graded(I)) throw NotGraded(std::string(op) + ": ideal " + I.to_string() +
                                     " is not graded");
}

// Additive span of {x*y : x basis of R_g, y basis of R_h}.
SubgroupBuilder component_product(const Ring& ring, std::size_t g, std::size_t h) {
  SubgroupBuilder b(ring);
  for (auto i : ring.component_basis(g))
    for (auto j : ring.component_basis(h))
      b.add(ring.mul(ring.basis(i), ring.basis(j)));
  return b;
}

}  // namespace

std::vector<Elem> homogeneous_residues(const IdealSet& I) {
  const Ring& ring = *I.ring();
  std::vector<Elem> reps;
  std::vector<char> seen(ring.size(), 0);
  for (std::size_t k = 0; k < ring.support().size(); ++k) {
    std::vector<Elem> slice;
    for (Elem x : ring.component_elements(k))
      if (I.contains(x)) slice.push_back(x);
    for (Elem a : ring.component_elements(k)) {
      if (I.contains(a) || seen[a.id]) continue;
      reps.push_back(a);
      for (Elem i : slice) seen[ring.add(a, i).id] = 1;
    }
  }
  return reps;
}

RadicalComputation grad(const IdealSet& I) {
  require_graded(I, "grad");
  const auto& ring = I.ring();
  RadicalComputation rc{I, {}, I, {}, I.is_whole_ring()};

  std::vector<char> is_root(ring->size(), 0);
  for (Elem a : ring->homogeneous_elements()) {
    const auto tail = ring->power_tail(a);
    for (std::size_t n = 0; n < tail.size(); ++n) {
      if (I.contains(tail[n])) {
        is_root[a.id] = 1;
        rc.homogeneous_roots.push_back(a);
        rc.exponent_map.emplace_back(a, static_cast<std::uint32_t>(n + 1));
        break;
      }
    }
  }

  // x is in Grad(I) iff each homogeneous component of x is a root.
  std::vector<Elem> members;
  const std::size_t degrees = ring->support().size();
  for (Elem x : ring->all_elements()) {
    bool in = true;
    if (ring->is_homogeneous(x)) {
      in = is_root[x.id];
    } else {
      for (std::size_t k = 0; k < degrees && in; ++k)
        in = is_root[ring->component_at(x, k).id];
    }
    if (in) members.push_back(x);
  }
  rc.radical = ideal_from_elements(ring, std::move(members));
  return rc;
}

bool is_graded_prime(const IdealSet& P) {
  require_graded(P, "is_graded_prime");
  if (!P.is_proper()) return false;
  const Ring& ring = *P.ring();
  const auto reps = homogeneous_residues(P);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i; j < reps.size(); ++j)
      if (P.contains(ring.mul(reps[i], reps[j]))) return false;
  return true;
}

bool is_graded_maximal(const IdealSet& P) {
  require_graded(P, "is_graded_maximal");
  if (!P.is_proper())
    throw NotProper("is_graded_maximal: the unit ideal is not proper");
  for (Elem a : homogeneous_residues(P))
    if (!extend(P, a).is_whole_ring()) return false;
  return true;
}

std::vector<IdealSet> graded_primes(const std::vector<IdealSet>& lattice) {
  std::vector<IdealSet> out;
  for (const auto& I : lattice)
    if (is_graded_prime(I)) out.push_back(I);
  return out;
}

std::vector<IdealSet> graded_primes(const RingPtr& ring) {
  return graded_primes(enumerate_graded_ideals(ring));
}

bool is_graded_field(const Ring& ring) {
  if (ring.is_zero_ring()) return false;
  for (Elem x : ring.homogeneous_elements())
    if (x != ring.zero() && !ring.is_unit(x)) return false;
  return true;
}

bool is_field(const Ring& ring) {
  if (ring.is_zero_ring()) return false;
  for (Elem x : ring.all_elements())
    if (x != ring.zero() && !ring.is_unit(x)) return false;
  return true;
}

bool is_graded_integral_domain(const Ring& ring) {
  if (ring.is_zero_ring()) return false;
  const auto& h = ring.homogeneous_elements();
  for (std::size_t i = 1; i < h.size(); ++i)
    for (std::size_t j = i; j < h.size(); ++j)
      if (ring.mul(h[i], h[j]) == ring.zero()) return false;
  return true;
}

std::vector<Degree> supp(const Ring& ring) {
  std::vector<Degree> out;
  for (std::size_t k = 0; k < ring.support().size(); ++k)
    if (ring.component_elements(k).size() > 1) out.push_back(ring.support()[k]);
  return out;
}

bool first_strong_by_definition(const Ring& ring) {
  const auto& G = ring.group();
  for (const auto& g : supp(ring)) {
    const auto k = *ring.support_index(g);
    const auto inv = ring.support_index(G.inverse(g));
    if (!inv) return false;
    if (!component_product(ring, k, *inv).contains(ring.one())) return false;
  }
  return true;
}

bool first_strong_by_characterization(const Ring& ring) {
  const auto& G = ring.group();
  const auto s = supp(ring);
  auto in_supp = [&](const Degree& d) {
    return std::binary_search(s.begin(), s.end(), d);
  };
  if (s.empty()) return true;
  if (!in_supp(G.identity())) return false;
  for (const auto& g : s) {
    if (!in_supp(G.inverse(g))) return false;
    for (const auto& h : s)
      if (!in_supp(G.op(g, h))) return false;
  }
  for (const auto& g : s) {
    for (const auto& h : s) {
      const auto prod = component_product(ring, *ring.support_index(g),
                                          *ring.support_index(h));
      const auto target = *ring.support_index(G.op(g, h));
      if (prod.size() != ring.component_elements(target).size()) return false;
    }
  }
  return true;
}

bool is_first_strong(const Ring& ring) {
  const bool by_def = first_strong_by_definition(ring);
  const bool by_char = first_strong_by_characterization(ring);
  if (by_def != by_char)
    throw CrossCheckFailure("first strong grading: definition says " +
                            std::string(by_def ? "true" : "false") +
                            ", characterization says " +
                            (by_char ? "true" : "false") + " on ring '" +
                            ring.name() + "'");
  return by_def;
}

}  // namespace gradr
