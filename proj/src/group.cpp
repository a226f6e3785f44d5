#include "gradr/group.hpp"

#include <sstream>

#include "gradr/errors.hpp"

namespace gradr {

namespace {

std::int64_t reduce_coord(std::int64_t v, std::int64_t m) {
  if (m == 0) return v;
  v %= m;
  return v < 0 ? v + m : v;
}

}  // namespace

GradingGroup::GradingGroup(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
  for (auto m : factors_) {
    if (m < 0) throw InvalidArgument("grading group factor must be >= 0");
  }
}

Degree GradingGroup::identity() const {
  return Degree{std::vector<std::int64_t>(factors_.size(), 0)};
}

Degree GradingGroup::reduce(Degree g) const {
  if (g.coords.size() != factors_.size())
    throw InvalidArgument("degree has wrong length for grading group");
  for (std::size_t i = 0; i < factors_.size(); ++i)
    g.coords[i] = reduce_coord(g.coords[i], factors_[i]);
  return g;
}

Degree GradingGroup::op(const Degree& g, const Degree& h) const {
  Degree out = g;
  for (std::size_t i = 0; i < factors_.size(); ++i) out.coords[i] += h.coords[i];
  return reduce(std::move(out));
}

Degree GradingGroup::inverse(const Degree& g) const {
  Degree out = g;
  for (auto& c : out.coords) c = -c;
  return reduce(std::move(out));
}

Degree GradingGroup::power(const Degree& g, std::int64_t k) const {
  Degree out = g;
  for (auto& c : out.coords) c *= k;
  return reduce(std::move(out));
}

bool GradingGroup::is_identity(const Degree& g) const {
  for (auto c : g.coords)
    if (c != 0) return false;
  return true;
}

bool GradingGroup::contains(const Degree& g) const {
  if (g.coords.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] != 0 && (g.coords[i] < 0 || g.coords[i] >= factors_[i]))
      return false;
  }
  return true;
}

bool GradingGroup::has_free_factor() const {
  for (auto m : factors_)
    if (m == 0) return true;
  return false;
}

Degree GradingGroup::default_indeterminate_degree() const {
  Degree d = identity();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] == 0) {
      d.coords[i] = 1;
      break;
    }
  }
  return d;
}

std::string GradingGroup::to_string(const Degree& g) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (i) os << ',';
    os << g.coords[i];
  }
  os << ')';
  return os.str();
}

GradingGroup product_group(const std::vector<GradingGroup>& groups) {
  std::vector<std::int64_t> factors;
  for (const auto& g : groups)
    factors.insert(factors.end(), g.factors().begin(), g.factors().end());
  return GradingGroup(std::move(factors));
}

}  // namespace gradr
