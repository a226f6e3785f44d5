#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradr/ring.hpp"

namespace gradr {

/// Incrementally grows an additive subgroup of a ring's additive group.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const Ring& ring);

  bool contains(Elem x) const {
    return (bits_[x.id >> 6] >> (x.id & 63)) & 1U;
  }
  /// Adds g and all of its sums with the current members. Returns false if
  /// g was already a member.
  bool add(Elem g);
  std::size_t size() const { return members_.size(); }
  const std::vector<Elem>& members() const { return members_; }
  /// The elements passed to add() that enlarged the subgroup.
  const std::vector<Elem>& generators() const { return generators_; }
  std::vector<Elem> sorted_members() const;
  std::vector<std::uint64_t> take_bits() { return std::move(bits_); }

 private:
  void insert(Elem x) {
    bits_[x.id >> 6] |= std::uint64_t{1} << (x.id & 63);
    members_.push_back(x);
  }

  const Ring* ring_;
  std::vector<std::uint64_t> bits_;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
};

/// An ideal stored as its canonical (ascending) element set. Optionally
/// carries the homogeneous generators it was built from.
class IdealSet {
 public:
  const RingPtr& ring() const { return ring_; }
  const std::vector<Elem>& elements() const { return elements_; }
  const std::optional<std::vector<Elem>>& generators() const { return generators_; }
  /// Elements generating the ideal as an additive group.
  const std::vector<Elem>& additive_generators() const { return additive_gens_; }

  bool contains(Elem x) const {
    return (bits_[x.id >> 6] >> (x.id & 63)) & 1U;
  }
  std::size_t size() const { return elements_.size(); }
  bool is_zero() const { return elements_.size() == 1; }
  bool is_whole_ring() const { return elements_.size() == ring_->size(); }
  bool is_proper() const { return !is_whole_ring(); }
  bool subset_of(const IdealSet& other) const;

  bool operator==(const IdealSet& other) const {
    return ring_ == other.ring_ && elements_ == other.elements_;
  }

  /// "<g1, g2>" when generators are known, otherwise the element list.
  std::string to_string() const;

  /// Wraps a finished subgroup. The caller guarantees it is an ideal.
  static IdealSet from_builder(RingPtr ring, SubgroupBuilder&& builder,
                               std::optional<std::vector<Elem>> gens);

 private:
  RingPtr ring_;
  std::vector<Elem> elements_;
  std::vector<std::uint64_t> bits_;
  std::vector<Elem> additive_gens_;
  std::optional<std::vector<Elem>> generators_;
};

IdealSet zero_ideal(const RingPtr& ring);
IdealSet unit_ideal(const RingPtr& ring);

/// Smallest ideal containing homogeneous `gens`. Throws NotHomogeneous.
IdealSet ideal_from_homogeneous_gens(const RingPtr& ring,
                                     std::span<const Elem> gens);

/// Smallest ideal containing arbitrary `gens`; need not be graded.
IdealSet ideal_from_arbitrary_gens(const RingPtr& ring, std::span<const Elem> gens);

/// Wraps an explicit element set. Throws InvalidArgument if it is not an
/// ideal.
IdealSet ideal_from_elements(const RingPtr& ring, std::vector<Elem> elements);

/// Smallest ideal containing I and a.
IdealSet extend(const IdealSet& I, Elem a);

/// True iff every homogeneous component of every member lies in I.
bool is_graded(const IdealSet& I);

IdealSet ideal_sum(const IdealSet& I, const IdealSet& J);
IdealSet ideal_product(const IdealSet& I, const IdealSet& J);
IdealSet ideal_intersection(const IdealSet& I, const IdealSet& J);

/// Greedy ascending list of homogeneous members generating a graded ideal.
std::vector<Elem> homogeneous_generators(const IdealSet& I);

/// Every graded ideal exactly once, ascending by canonical element list.
/// Found by closing {0} and R under I -> I + <a> for homogeneous a.
std::vector<IdealSet> enumerate_graded_ideals(const RingPtr& ring);

/// Nonzero homogeneous units of the identity degree.
std::vector<Elem> identity_degree_units(const Ring& ring);

}  // namespace gradr
