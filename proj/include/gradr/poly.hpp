#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradr/rp.hpp"

namespace gradr {

/// Polynomial in one indeterminate X over a finite graded ring, with X
/// homogeneous of degree degX. Only nonzero coefficients are stored.
class Poly {
 public:
  Poly(RingPtr ring, Degree degX);

  static Poly constant(RingPtr ring, Degree degX, Elem c);
  static Poly monomial(RingPtr ring, Degree degX, Elem c, std::uint32_t exponent);

  const RingPtr& ring() const { return ring_; }
  const Degree& degX() const { return degX_; }
  const std::map<std::uint32_t, Elem>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  Elem coeff(std::uint32_t k) const;
  Elem leading() const;
  void set(std::uint32_t k, Elem c);

  /// Components keyed by total degree deg(r) + i*degX.
  std::map<Degree, Poly> components() const;
  bool is_homogeneous() const;

  bool operator==(const Poly& other) const {
    return ring_ == other.ring_ && degX_ == other.degX_ && terms_ == other.terms_;
  }
  std::string to_string() const;

 private:
  RingPtr ring_;
  Degree degX_;
  std::map<std::uint32_t, Elem> terms_;
};

Poly poly_add(const Poly& f, const Poly& g);
Poly poly_sub(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_scale(const Poly& f, Elem c);
Poly poly_pow(const Poly& f, std::uint32_t k);
/// Constant coefficient.
Elem poly_eval0(const Poly& f);

struct Division {
  Poly quotient;
  Poly remainder;
};

/// f = q g + r with deg r < deg g. Throws NotDivisible unless the leading
/// coefficient of g is a unit.
Division poly_divide(const Poly& f, const Poly& g);

struct Membership {
  /// False means "no cofactors of degree <= bound", not non-membership.
  bool found = false;
  std::vector<Poly> cofactors;
  std::uint32_t bound = 0;
};

/// Looks for cofactors c_j of degree <= max_degree with sum c_j gens_j =
/// target, as an exact linear system over the additive group of the ring.
/// A found witness is recomposed before returning.
Membership bounded_membership(const Poly& target, const std::vector<Poly>& gens,
                              std::uint32_t max_degree);

struct SingleGenerator {
  Poly generator;
  /// generator = sum into[j] * gens[j]
  std::vector<Poly> into;
  /// gens[j] = back[j] * generator
  std::vector<Poly> back;
};

/// One generator of <gens> over a graded field of coefficients, by repeated
/// division; equality of ideals is certified by mutual bounded membership.
/// Throws Unsupported when the coefficients do not form a graded field or a
/// leading coefficient is not a unit.
SingleGenerator euclidean_single_generator(const std::vector<Poly>& gens);

struct Prop41Probe {
  bool found = false;
  std::optional<Poly> witness;
  /// a^n in <f>, X^m in <f>, f^k in <a, X>.
  std::uint32_t n = 0, m = 0, k = 0;
  bool constant_witness = false;
  std::size_t candidates_tried = 0;
  std::string note;
};

/// Bounded search for homogeneous f of X-degree <= max_degree with
/// Grad(<a, X>) = Grad(<f>) in R[X], every membership decided by
/// bounded_membership with exponents <= max_exponent.
Prop41Probe prop41_probe(const RingPtr& ring, Elem a, std::uint32_t max_exponent,
                         std::uint32_t max_degree, const Degree& degX);
Prop41Probe prop41_probe(const RingPtr& ring, Elem a, std::uint32_t max_exponent,
                         std::uint32_t max_degree);

struct Thm43Report {
  bool all_primes_maximal = false;
  bool graded_field = false;
  bool rp = false;
  /// R/P is a graded field for every graded prime P.
  bool prime_quotients_graded_fields = false;
};

Thm43Report thm43_report(RingAnalysis& analysis);

}  // namespace gradr
