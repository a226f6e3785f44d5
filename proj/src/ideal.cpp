#include "gradr/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "gradr/errors.hpp"

namespace gradr {

SubgroupBuilder::SubgroupBuilder(const Ring& ring)
    : ring_(&ring), bits_((ring.size() + 63) / 64, 0) {
  insert(ring.zero());
}

bool SubgroupBuilder::add(Elem g) {
  if (contains(g)) return false;
  generators_.push_back(g);
  const std::size_t old_size = members_.size();
  // Cosets H + k*g for k = 1, 2, ... until k*g falls back into H.
  Elem step = g;
  while (!contains(step)) {
    for (std::size_t i = 0; i < old_size; ++i) insert(ring_->add(members_[i], step));
    step = ring_->add(step, g);
  }
  return true;
}

std::vector<Elem> SubgroupBuilder::sorted_members() const {
  auto out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

IdealSet IdealSet::from_builder(RingPtr ring, SubgroupBuilder&& builder,
                                std::optional<std::vector<Elem>> gens) {
  IdealSet I;
  I.elements_ = builder.sorted_members();
  I.additive_gens_ = builder.generators();
  I.bits_ = builder.take_bits();
  I.generators_ = std::move(gens);
  I.ring_ = std::move(ring);
  return I;
}

bool IdealSet::subset_of(const IdealSet& other) const {
  if (size() > other.size()) return false;
  for (Elem x : elements_)
    if (!other.contains(x)) return false;
  return true;
}

std::string IdealSet::to_string() const {
  std::ostringstream os;
  if (generators_) {
    os << '<';
    for (std::size_t i = 0; i < generators_->size(); ++i) {
      if (i) os << ", ";
      os << ring_->to_string((*generators_)[i]);
    }
    os << '>';
    return os.str();
  }
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) os << ", ";
    os << ring_->to_string(elements_[i]);
  }
  os << '}';
  return os.str();
}

namespace {

void require_same_ring(const IdealSet& I, const IdealSet& J) {
  if (I.ring() != J.ring()) throw RingMismatch("ideals belong to different rings");
}

// Adds R*a to the subgroup: the span of b_i * a over the basis.
void add_principal(SubgroupBuilder& b, const Ring& ring, Elem a) {
  for (std::size_t i = 0; i < ring.rank(); ++i) b.add(ring.mul(ring.basis(i), a));
}

IdealSet closure(const RingPtr& ring, std::span<const Elem> gens,
                 std::optional<std::vector<Elem>> witness) {
  SubgroupBuilder b(*ring);
  for (Elem g : gens) add_principal(b, *ring, g);
  return IdealSet::from_builder(ring, std::move(b), std::move(witness));
}

}  // namespace

IdealSet zero_ideal(const RingPtr& ring) {
  return closure(ring, {}, std::vector<Elem>{});
}

IdealSet unit_ideal(const RingPtr& ring) {
  const Elem one = ring->one();
  return closure(ring, std::span<const Elem>(&one, 1), std::vector<Elem>{one});
}

IdealSet ideal_from_homogeneous_gens(const RingPtr& ring,
                                     std::span<const Elem> gens) {
  for (Elem g : gens) {
    if (!ring->is_homogeneous(g))
      throw NotHomogeneous("generator " + ring->to_string(g) + " is not homogeneous");
  }
  return closure(ring, gens, std::vector<Elem>(gens.begin(), gens.end()));
}

IdealSet ideal_from_arbitrary_gens(const RingPtr& ring, std::span<const Elem> gens) {
  return closure(ring, gens, std::nullopt);
}

IdealSet ideal_from_elements(const RingPtr& ring, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  SubgroupBuilder b(*ring);
  for (Elem x : elements) {
    if (x.id >= ring->size()) throw InvalidArgument("element out of range");
    b.add(x);
  }
  if (b.size() != elements.size())
    throw InvalidArgument("element set is not an additive subgroup");
  for (Elem g : b.generators())
    for (std::size_t i = 0; i < ring->rank(); ++i)
      if (!b.contains(ring->mul(ring->basis(i), g)))
        throw InvalidArgument("element set is not closed under multiplication");
  return IdealSet::from_builder(ring, std::move(b), std::nullopt);
}

IdealSet extend(const IdealSet& I, Elem a) {
  const auto& ring = I.ring();
  SubgroupBuilder b(*ring);
  for (Elem g : I.additive_generators()) b.add(g);
  add_principal(b, *ring, a);
  std::optional<std::vector<Elem>> gens;
  if (I.generators() && ring->is_homogeneous(a)) {
    gens = *I.generators();
    gens->push_back(a);
  }
  return IdealSet::from_builder(ring, std::move(b), std::move(gens));
}

bool is_graded(const IdealSet& I) {
  const Ring& ring = *I.ring();
  const std::size_t degrees = ring.support().size();
  for (Elem x : I.elements()) {
    if (ring.is_homogeneous(x)) continue;
    for (std::size_t k = 0; k < degrees; ++k)
      if (!I.contains(ring.component_at(x, k))) return false;
  }
  return true;
}

IdealSet ideal_sum(const IdealSet& I, const IdealSet& J) {
  require_same_ring(I, J);
  const auto& ring = I.ring();
  SubgroupBuilder b(*ring);
  for (Elem g : I.additive_generators()) b.add(g);
  for (Elem g : J.additive_generators()) b.add(g);
  std::optional<std::vector<Elem>> gens;
  if (I.generators() && J.generators()) {
    gens = *I.generators();
    gens->insert(gens->end(), J.generators()->begin(), J.generators()->end());
  }
  return IdealSet::from_builder(ring, std::move(b), std::move(gens));
}

IdealSet ideal_product(const IdealSet& I, const IdealSet& J) {
  require_same_ring(I, J);
  const auto& ring = I.ring();
  // Products of additive generators span IJ, and that span is already an
  // ideal because R*I is contained in I.
  SubgroupBuilder b(*ring);
  for (Elem g : I.additive_generators())
    for (Elem h : J.additive_generators()) b.add(ring->mul(g, h));
  std::optional<std::vector<Elem>> gens;
  if (I.generators() && J.generators()) {
    gens.emplace();
    for (Elem g : *I.generators())
      for (Elem h : *J.generators()) gens->push_back(ring->mul(g, h));
  }
  return IdealSet::from_builder(ring, std::move(b), std::move(gens));
}

IdealSet ideal_intersection(const IdealSet& I, const IdealSet& J) {
  require_same_ring(I, J);
  const auto& ring = I.ring();
  SubgroupBuilder b(*ring);
  for (Elem x : I.elements())
    if (J.contains(x)) b.add(x);
  return IdealSet::from_builder(ring, std::move(b), std::nullopt);
}

std::vector<Elem> homogeneous_generators(const IdealSet& I) {
  const auto& ring = *I.ring();
  SubgroupBuilder b(ring);
  std::vector<Elem> gens;
  for (Elem x : I.elements()) {
    if (!ring.is_homogeneous(x) || b.contains(x)) continue;
    gens.push_back(x);
    add_principal(b, ring, x);
  }
  return gens;
}

std::vector<Elem> identity_degree_units(const Ring& ring) {
  std::vector<Elem> units;
  const auto e = ring.support_index(ring.group().identity());
  if (!e) return units;
  for (Elem x : ring.component_elements(*e))
    if (x != ring.zero() && ring.is_unit(x)) units.push_back(x);
  return units;
}

std::vector<IdealSet> enumerate_graded_ideals(const RingPtr& ring) {
  std::vector<IdealSet> found;
  std::unordered_map<std::size_t, std::vector<std::size_t>> index;
  auto key = [](const IdealSet& I) {
    std::size_t h = I.size();
    for (Elem x : I.elements()) h = h * 1000003u ^ x.id;
    return h;
  };
  auto remember = [&](IdealSet I) {
    const auto k = key(I);
    auto& bucket = index[k];
    for (auto i : bucket)
      if (found[i] == I) return;
    bucket.push_back(found.size());
    found.push_back(std::move(I));
  };

  remember(zero_ideal(ring));
  remember(unit_ideal(ring));

  const auto units = identity_degree_units(*ring);
  const std::size_t degrees = ring->support().size();
  std::vector<char> visited(ring->size());
  for (std::size_t next = 0; next < found.size(); ++next) {
    if (found[next].is_whole_ring()) continue;
    const IdealSet I = found[next];
    std::fill(visited.begin(), visited.end(), 0);
    for (std::size_t k = 0; k < degrees; ++k) {
      std::vector<Elem> slice;
      for (Elem x : ring->component_elements(k))
        if (I.contains(x)) slice.push_back(x);
      for (Elem a : ring->component_elements(k)) {
        if (I.contains(a) || visited[a.id]) continue;
        remember(extend(I, a));
        // I + <a> = I + <u*a + i> for identity-degree units u and i in I of
        // the same degree.
        visited[a.id] = 1;
        for (Elem u : units) {
          const Elem ua = ring->mul(u, a);
          for (Elem i : slice) visited[ring->add(ua, i).id] = 1;
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const IdealSet& a, const IdealSet& b) {
    return a.elements() < b.elements();
  });
  return found;
}

}  // namespace gradr
