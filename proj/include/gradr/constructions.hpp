#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gradr/ideal.hpp"

namespace gradr {

/// Map of ring elements given as a full table, indexed by source element id.
struct RingMorphism {
  RingPtr source;
  RingPtr target;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x.id]; }
};

/// Additive, multiplicative, unital and degree-preserving checks. Returns
/// one message per failed property; empty means the table is a graded ring
/// morphism.
std::vector<std::string> verify_morphism(const RingMorphism& f);

/// Image ideal f(I)R' in the target.
IdealSet image_ideal(const RingMorphism& f, const IdealSet& I);

/// A finite commutative ring given by operation tables on ids 0..size-1.
struct FiniteRingTables {
  std::size_t size = 0;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> add;
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> mul;
  /// Nonzero homogeneous components: (degree, members including zero).
  std::vector<std::pair<Degree, std::vector<std::uint32_t>>> degree_partition;
  /// Optional label for a table element used as a basis generator.
  std::function<std::string(std::uint32_t)> label;
};

struct TablePresentation {
  RingPtr ring;
  /// coords[t] is the coefficient vector of table element t.
  std::vector<Coeffs> coords;

  Elem to_ring(std::uint32_t t) const { return ring->from_coeffs(coords[t]); }
};

/// Chooses homogeneous cyclic generators in each component, reads off the
/// structure constants and validates the result. Throws ValidationError if
/// the partition is not a direct sum or the tables are not a ring.
TablePresentation presentation_from_tables(const FiniteRingTables& tables,
                                           const GradingGroup& group,
                                           std::string name,
                                           std::size_t cap = kDefaultCap);

struct Quotient {
  RingPtr ring;
  RingMorphism projection;
};

/// R/I with (R/I)_g = (R_g + I)/I. Throws NotGraded or NotProper.
Quotient quotient(const IdealSet& I, std::string name = {});

struct Localization {
  RingPtr ring;
  RingMorphism canonical;
  /// Multiplicative closure of the supplied set, ascending.
  std::vector<Elem> multiplicative_set;
  /// 0 was in the closure, so the result is the zero ring.
  bool zero_ring = false;
};

/// S^-1 R for homogeneous S, graded by deg(a/s) = deg(a) - deg(s).
/// Throws NotHomogeneous.
Localization localize(const RingPtr& ring, std::span<const Elem> S,
                      std::string name = {});

struct Product {
  RingPtr ring;
  std::vector<RingMorphism> projections;
  /// Non-unital inclusions R_i -> R, indexed by factor element id.
  std::vector<std::vector<Elem>> injections;
};

/// R_1 x ... x R_n over a shared grading group. Throws GroupMismatch.
Product direct_product(const std::vector<RingPtr>& rings, std::string name = {});

/// As direct_product, but first regrades each factor over the product of
/// all grading groups when the groups differ.
Product direct_product_embedded(const std::vector<RingPtr>& rings,
                                std::string name = {});

/// Same ring, degrees placed at `offset` inside the larger group `target`.
RingPresentation embed_grading(const RingPresentation& p, const GradingGroup& target,
                               std::size_t offset);

// Builders.

/// K[X,Y]/<X^2, XY, Y^2> over F_p, Z-graded with deg x = deg y = 1.
RingPtr example_2_3(std::int64_t p);
/// F_p + u F_p with u^2 = 1, graded by Z/2 with deg u = 1.
RingPtr graded_field_F(std::int64_t p);
/// F_p[Z/n] graded by Z/n.
RingPtr group_ring(std::int64_t p, std::int64_t n);
/// ring[X]/<X^(d+1)> with deg X = degX in the grading group of `ring`.
RingPtr truncated_poly(const RingPtr& ring, std::int64_t d, const Degree& degX);
/// Z/n, trivially graded.
RingPtr cyclic(std::int64_t n);
/// Zero ring over the given group (empty basis).
RingPtr zero_ring(const GradingGroup& group, std::string name = "0");

}  // namespace gradr
