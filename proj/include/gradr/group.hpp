#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gradr {

/// An element of a finitely generated abelian grading group, one coordinate
/// per factor. Coordinates over cyclic factors are kept in [0, m).
struct Degree {
  std::vector<std::int64_t> coords;

  auto operator<=>(const Degree&) const = default;
  bool operator==(const Degree&) const = default;
};

/// G = Z^a x Z/m_1 x ... written as a list of factors; 0 marks a free factor.
class GradingGroup {
 public:
  GradingGroup() = default;
  explicit GradingGroup(std::vector<std::int64_t> factors);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }

  Degree identity() const;
  Degree op(const Degree& g, const Degree& h) const;
  Degree inverse(const Degree& g) const;
  /// g^k in multiplicative notation, i.e. k*g.
  Degree power(const Degree& g, std::int64_t k) const;
  Degree reduce(Degree g) const;

  bool is_identity(const Degree& g) const;
  /// Right length and every cyclic coordinate already reduced.
  bool contains(const Degree& g) const;
  bool has_free_factor() const;

  /// Generator of the first free factor, or the identity if there is none.
  Degree default_indeterminate_degree() const;

  std::string to_string(const Degree& g) const;

  bool operator==(const GradingGroup&) const = default;

 private:
  std::vector<std::int64_t> factors_;
};

/// Product group G_1 x ... x G_k with factor lists concatenated.
GradingGroup product_group(const std::vector<GradingGroup>& groups);

}  // namespace gradr
