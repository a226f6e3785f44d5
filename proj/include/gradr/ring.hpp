#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradr/group.hpp"

namespace gradr {

using Coeffs = std::vector<std::int64_t>;

inline constexpr std::size_t kDefaultCap = 65536;

/// One additive generator of the ring: a cyclic summand Z/order placed in a
/// single homogeneous component.
struct BasisEntry {
  std::string label;
  std::int64_t order = 0;
  Degree degree;
};

/// Finite commutative G-graded ring given by structure constants.
///
/// The additive group is Z/order_0 + ... + Z/order_{n-1}; `mul[i][j]` is the
/// coefficient vector of b_i * b_j and `one` the coefficient vector of unity.
/// A presentation with an empty basis is the zero ring.
struct RingPresentation {
  std::string name;
  GradingGroup group;
  std::vector<BasisEntry> basis;
  std::vector<std::vector<Coeffs>> mul;
  Coeffs one;

  std::size_t rank() const { return basis.size(); }
};

struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Number of elements, or nullopt if it exceeds `cap`.
std::optional<std::size_t> element_count(const RingPresentation& p,
                                         std::size_t cap = kDefaultCap);

/// Checks every ring and grading axiom on the basis. Throws CapExceeded if
/// the element count exceeds `cap`; every other problem is reported.
ValidationReport validate(const RingPresentation& p,
                          std::size_t cap = kDefaultCap);

/// Handle to an element of a particular Ring. Ids are the mixed-radix
/// encoding of the coefficient vector with coordinate 0 most significant, so
/// id order is lexicographic order on coefficients.
struct Elem {
  std::uint32_t id = 0;

  auto operator<=>(const Elem&) const = default;
  bool operator==(const Elem&) const = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Validated, immutable finite graded ring with enumerable elements.
/// All member functions are const and safe to call concurrently.
class Ring {
 public:
  /// Validates `p` and builds the element tables. Throws ValidationError
  /// listing every violation, or CapExceeded.
  static RingPtr create(RingPresentation p, std::size_t cap = kDefaultCap);

  const RingPresentation& presentation() const { return pres_; }
  const std::string& name() const { return pres_.name; }
  const GradingGroup& group() const { return pres_.group; }
  std::size_t rank() const { return pres_.rank(); }
  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }
  bool is_zero_ring() const { return size_ == 1; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return one_; }
  Elem basis(std::size_t i) const { return basis_elems_[i]; }

  Elem from_coeffs(std::span<const std::int64_t> c) const;
  Coeffs coeffs(Elem x) const;
  std::int64_t digit(Elem x, std::size_t i) const {
    return digits_[static_cast<std::size_t>(x.id) * rank() + i];
  }

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem scale(Elem x, std::int64_t k) const;
  Elem mul(Elem x, Elem y) const;
  Elem pow(Elem x, std::uint64_t k) const;

  std::vector<Elem> all_elements() const;

  /// Homogeneous components keyed by degree; the zero element has none.
  std::map<Degree, Elem> components(Elem x) const;
  bool is_homogeneous(Elem x) const { return deg_index_[x.id] != kMixed; }
  /// Degree of a nonzero homogeneous element; nullopt for 0 and for
  /// non-homogeneous elements.
  std::optional<Degree> degree_of(Elem x) const;
  /// Index into support() for nonzero homogeneous x, -1 for zero, -2 for
  /// non-homogeneous elements.
  int degree_index(Elem x) const { return deg_index_[x.id]; }

  /// Degrees g with R_g != 0, ascending.
  const std::vector<Degree>& support() const { return support_; }
  /// Elements of R_g (including 0) for g = support()[k], ascending.
  const std::vector<Elem>& component_elements(std::size_t k) const {
    return component_members_[k];
  }
  /// Basis indices of degree support()[k].
  const std::vector<std::size_t>& component_basis(std::size_t k) const {
    return component_basis_[k];
  }
  std::optional<std::size_t> support_index(const Degree& g) const;
  /// Homogeneous component of x in degree support()[k].
  Elem component_at(Elem x, std::size_t k) const;
  /// All of h(R), including 0, ascending.
  const std::vector<Elem>& homogeneous_elements() const { return homogeneous_; }

  /// Exhaustive search for y with x*y = 1.
  std::optional<Elem> is_unit(Elem x) const;

  /// Powers x, x^2, ..., x^mu where x^mu is the first power that recurs.
  /// If some power of x lies in an ideal, then x^mu does. Only defined for
  /// homogeneous x; computed once per ring.
  std::span<const Elem> power_tail(Elem x) const;

  std::string to_string(Elem x) const;

 private:
  Ring() = default;
  static constexpr int kZero = -1;
  static constexpr int kMixed = -2;

  Elem mul_direct(Elem x, Elem y) const;
  void build_power_tails() const;

  RingPresentation pres_;
  std::size_t cap_ = kDefaultCap;
  std::size_t size_ = 1;
  std::vector<std::int64_t> orders_;
  std::vector<std::uint32_t> strides_;
  std::vector<std::int64_t> digits_;
  std::vector<Elem> basis_elems_;
  Elem one_{};
  // Sparse structure constants: for each (i, j) the nonzero (k, c) pairs.
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> sparse_mul_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<int> deg_index_;
  std::vector<Degree> support_;
  std::vector<std::vector<Elem>> component_members_;
  std::vector<std::vector<std::size_t>> component_basis_;
  std::vector<Elem> homogeneous_;

  mutable std::once_flag power_once_;
  mutable std::vector<std::uint32_t> tail_offset_;
  mutable std::vector<Elem> tail_storage_;
};

/// Multiplies coefficient vectors using the structure constants of `p`
/// directly, without building a Ring. Used by validation.
Coeffs multiply_coeffs(const RingPresentation& p, const Coeffs& a,
                       const Coeffs& b);

}  // namespace gradr
