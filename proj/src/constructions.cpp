#include "gradr/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gradr/errors.hpp"

namespace gradr {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

using Table = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

std::uint32_t table_scale(const Table& add, std::uint32_t zero, std::uint32_t x,
                          std::int64_t k) {
  std::uint32_t acc = zero;
  std::uint32_t base = x;
  while (k > 0) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

struct CyclicGenerator {
  std::uint32_t element;
  std::int64_t order;
};

// Cyclic decomposition of a finite abelian group given by its member list.
// Works prime by prime; inside a p-group each new generator has maximal
// order modulo the span of the previous ones and the same order in the
// group, which makes the sum direct.
std::vector<CyclicGenerator> decompose(const std::vector<std::uint32_t>& members,
                                       const Table& add, std::uint32_t zero,
                                       std::size_t universe) {
  std::vector<CyclicGenerator> gens;
  const auto order = static_cast<std::int64_t>(members.size());
  for (auto [p, a] : factorize(order)) {
    std::int64_t pa = 1;
    for (int i = 0; i < a; ++i) pa *= p;
    std::vector<std::uint32_t> primary;
    for (auto x : members)
      if (table_scale(add, zero, x, pa) == zero) primary.push_back(x);
    std::sort(primary.begin(), primary.end());

    std::vector<char> in_span(universe, 0);
    std::vector<std::uint32_t> span{zero};
    in_span[zero] = 1;
    while (span.size() < primary.size()) {
      std::int64_t best_order = 0;
      std::uint32_t best = zero;
      for (auto y : primary) {
        if (in_span[y]) continue;
        std::int64_t q = 1;
        std::uint32_t z = y;
        while (!in_span[z]) {
          z = table_scale(add, zero, z, p);
          q *= p;
        }
        std::int64_t ord = 1;
        z = y;
        while (z != zero) {
          z = table_scale(add, zero, z, p);
          ord *= p;
        }
        if (ord == q && q > best_order) {
          best_order = q;
          best = y;
        }
      }
      if (best_order == 0)
        throw ValidationError("no direct complement found while decomposing a component");
      gens.push_back({best, best_order});
      const std::size_t old = span.size();
      std::uint32_t step = best;
      while (!in_span[step]) {
        for (std::size_t i = 0; i < old; ++i) {
          const auto s = add(span[i], step);
          in_span[s] = 1;
          span.push_back(s);
        }
        step = add(step, best);
      }
    }
  }
  return gens;
}

std::string default_name(const std::string& given, std::string fallback) {
  return given.empty() ? std::move(fallback) : given;
}

}  // namespace

std::vector<std::string> verify_morphism(const RingMorphism& f) {
  std::vector<std::string> failures;
  const Ring& S = *f.source;
  const Ring& T = *f.target;
  if (f.map.size() != S.size()) return {"table size differs from source size"};
  if (f(S.one()) != T.one()) failures.push_back("not unital");
  bool additive = true, multiplicative = true, graded = true;
  for (Elem x : S.all_elements()) {
    for (std::size_t i = 0; i < S.rank(); ++i) {
      const Elem b = S.basis(i);
      additive &= f(S.add(x, b)) == T.add(f(x), f(b));
      multiplicative &= f(S.mul(x, b)) == T.mul(f(x), f(b));
    }
    if (x != S.zero() && S.is_homogeneous(x) && f(x) != T.zero()) {
      const auto d = T.degree_of(f(x));
      graded &= d && *d == *S.degree_of(x);
    }
  }
  if (!additive) failures.push_back("not additive");
  if (!multiplicative) failures.push_back("not multiplicative");
  if (!graded) failures.push_back("not degree preserving");
  return failures;
}

IdealSet image_ideal(const RingMorphism& f, const IdealSet& I) {
  std::vector<Elem> gens;
  for (Elem g : I.additive_generators()) gens.push_back(f(g));
  auto out = ideal_from_arbitrary_gens(f.target, gens);
  return out;
}

TablePresentation presentation_from_tables(const FiniteRingTables& t,
                                           const GradingGroup& group,
                                           std::string name, std::size_t cap) {
  if (t.size > cap) throw CapExceeded("table ring exceeds the element cap");
  auto partition = t.degree_partition;
  std::stable_sort(partition.begin(), partition.end(), [&](auto& a, auto& b) {
    const bool ea = group.is_identity(a.first), eb = group.is_identity(b.first);
    if (ea != eb) return ea;
    return a.first < b.first;
  });

  RingPresentation p;
  p.name = std::move(name);
  p.group = group;
  std::vector<std::uint32_t> gens;
  for (const auto& [degree, members] : partition) {
    if (members.size() <= 1) continue;
    for (auto g : decompose(members, t.add, t.zero, t.size)) {
      const auto label =
          t.label ? t.label(g.element) : "e" + std::to_string(gens.size());
      p.basis.push_back({label, g.order, degree});
      gens.push_back(g.element);
    }
  }
  const std::size_t n = gens.size();

  // Coordinates of every element by odometer enumeration; a bijection
  // onto all ids proves the partition is a direct sum.
  std::vector<Coeffs> coords(t.size);
  std::vector<char> assigned(t.size, 0);
  std::size_t count = 0;
  Coeffs digits(n, 0);
  std::uint32_t x = t.zero;
  while (true) {
    if (assigned[x])
      throw ValidationError("degree partition is not a direct sum");
    assigned[x] = 1;
    coords[x] = digits;
    ++count;
    std::size_t k = n;
    while (k-- > 0) {
      x = t.add(x, gens[k]);
      if (++digits[k] < p.basis[k].order) break;
      digits[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  if (count != t.size)
    throw ValidationError("degree partition does not span the ring");

  p.mul.assign(n, std::vector<Coeffs>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.mul[i][j] = coords[t.mul(gens[i], gens[j])];
  p.one = coords[t.one];

  TablePresentation out{Ring::create(std::move(p), cap), std::move(coords)};
  const Ring& R = *out.ring;
  for (std::uint32_t e = 0; e < t.size; ++e) {
    const Elem xe = out.to_ring(e);
    for (std::size_t j = 0; j < n; ++j) {
      if (t.mul(e, gens[j]) != t.mul(gens[j], e) ||
          out.to_ring(t.mul(e, gens[j])) != R.mul(xe, R.basis(j)) ||
          out.to_ring(t.add(e, gens[j])) != R.add(xe, R.basis(j)))
        throw ValidationError("operation tables do not define a commutative ring");
    }
  }
  return out;
}

namespace {

struct Cosets {
  std::vector<std::uint32_t> class_of;
  std::vector<Elem> rep;
};

Cosets cosets(const Ring& R, const IdealSet& I) {
  Cosets c;
  c.class_of.assign(R.size(), UINT32_MAX);
  for (Elem x : R.all_elements()) {
    if (c.class_of[x.id] != UINT32_MAX) continue;
    const auto k = static_cast<std::uint32_t>(c.rep.size());
    c.rep.push_back(x);
    for (Elem i : I.elements()) c.class_of[R.add(x, i).id] = k;
  }
  return c;
}

FiniteRingTables coset_tables(const RingPtr& ring, const Cosets& c) {
  FiniteRingTables t;
  t.size = c.rep.size();
  t.zero = c.class_of[ring->zero().id];
  t.one = c.class_of[ring->one().id];
  t.add = [ring, &c](std::uint32_t a, std::uint32_t b) {
    return c.class_of[ring->add(c.rep[a], c.rep[b]).id];
  };
  t.mul = [ring, &c](std::uint32_t a, std::uint32_t b) {
    return c.class_of[ring->mul(c.rep[a], c.rep[b]).id];
  };
  return t;
}

}  // namespace

Quotient quotient(const IdealSet& I, std::string name) {
  if (!is_graded(I)) throw NotGraded("quotient: ideal " + I.to_string() + " is not graded");
  if (!I.is_proper()) throw NotProper("quotient: cannot divide by the unit ideal");
  const auto& ring = I.ring();
  const auto c = cosets(*ring, I);
  auto t = coset_tables(ring, c);

  std::map<std::uint32_t, std::string> labels;
  for (std::size_t k = 0; k < ring->support().size(); ++k) {
    std::vector<std::uint32_t> members;
    for (Elem x : ring->component_elements(k)) {
      const auto cls = c.class_of[x.id];
      members.push_back(cls);
      labels.emplace(cls, ring->to_string(x));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    t.degree_partition.emplace_back(ring->support()[k], std::move(members));
  }
  t.label = [&labels](std::uint32_t cls) { return labels.at(cls); };

  auto tp = presentation_from_tables(
      t, ring->group(), default_name(name, ring->name() + "/" + I.to_string()),
      ring->cap());
  Quotient q{tp.ring, {ring, tp.ring, {}}};
  q.projection.map.reserve(ring->size());
  for (Elem x : ring->all_elements()) q.projection.map.push_back(tp.to_ring(c.class_of[x.id]));
  return q;
}

RingPtr zero_ring(const GradingGroup& group, std::string name) {
  RingPresentation p;
  p.name = std::move(name);
  p.group = group;
  return Ring::create(std::move(p));
}

Localization localize(const RingPtr& ring, std::span<const Elem> S, std::string name) {
  const Ring& R = *ring;
  for (Elem s : S)
    if (!R.is_homogeneous(s))
      throw NotHomogeneous("localize: " + R.to_string(s) + " is not homogeneous");

  std::set<Elem> closure{R.one()};
  std::vector<Elem> frontier{R.one()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem a : frontier)
      for (Elem s : S) {
        const Elem b = R.mul(a, s);
        if (closure.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  Localization loc;
  loc.multiplicative_set.assign(closure.begin(), closure.end());
  name = default_name(name, R.name() + "[S^-1]");

  if (closure.count(R.zero())) {
    loc.zero_ring = true;
    loc.ring = zero_ring(R.group(), name);
    loc.canonical = {ring, loc.ring, std::vector<Elem>(R.size(), loc.ring->zero())};
    return loc;
  }

  // Kernel of a -> a/1. It is a graded ideal since S is homogeneous.
  std::vector<Elem> kernel;
  for (Elem a : R.all_elements()) {
    for (Elem u : loc.multiplicative_set) {
      if (R.mul(u, a) == R.zero()) {
        kernel.push_back(a);
        break;
      }
    }
  }
  const auto K = ideal_from_elements(ring, std::move(kernel));
  const auto c = cosets(R, K);
  auto t = coset_tables(ring, c);

  // Every s becomes invertible; a/s is the class b with (a, s) ~ (b, 1).
  std::map<std::uint32_t, std::uint32_t> inverse;
  for (Elem s : loc.multiplicative_set) {
    const auto cs = c.class_of[s.id];
    for (std::uint32_t k = 0; k < t.size; ++k) {
      if (t.mul(cs, k) == t.one) {
        inverse[s.id] = k;
        break;
      }
    }
    if (!inverse.count(s.id))
      throw CrossCheckFailure("localize: denominator " + R.to_string(s) +
                              " did not become a unit");
  }

  std::map<Degree, std::set<std::uint32_t>> parts;
  std::map<std::uint32_t, std::string> labels;
  const auto& G = R.group();
  for (Elem a : R.homogeneous_elements()) {
    if (a == R.zero()) continue;
    for (Elem s : loc.multiplicative_set) {
      const auto cls = t.mul(c.class_of[a.id], inverse[s.id]);
      const Elem b = c.rep[cls];
      const Elem diff = R.sub(a, R.mul(b, s));
      const bool related = std::any_of(
          loc.multiplicative_set.begin(), loc.multiplicative_set.end(),
          [&](Elem u) { return R.mul(u, diff) == R.zero(); });
      if (!related)
        throw CrossCheckFailure("localize: fraction " + R.to_string(a) + "/" +
                                R.to_string(s) + " is not equivalent to its class");
      if (cls == t.zero) continue;
      const Degree g = G.op(*R.degree_of(a), G.inverse(*R.degree_of(s)));
      auto& part = parts[g];
      part.insert(t.zero);
      part.insert(cls);
      labels.emplace(cls, s == R.one() ? R.to_string(a)
                                       : R.to_string(a) + "/" + R.to_string(s));
    }
  }
  for (auto& [g, members] : parts)
    t.degree_partition.emplace_back(g, std::vector<std::uint32_t>(members.begin(), members.end()));
  t.label = [&labels](std::uint32_t cls) { return labels.at(cls); };

  auto tp = presentation_from_tables(t, G, name, R.cap());
  loc.ring = tp.ring;
  loc.canonical = {ring, tp.ring, {}};
  loc.canonical.map.reserve(R.size());
  for (Elem x : R.all_elements()) loc.canonical.map.push_back(tp.to_ring(c.class_of[x.id]));
  return loc;
}

RingPresentation embed_grading(const RingPresentation& p, const GradingGroup& target,
                               std::size_t offset) {
  if (offset + p.group.rank() > target.rank())
    throw GroupMismatch("embed_grading: target group too small");
  for (std::size_t i = 0; i < p.group.rank(); ++i)
    if (target.factors()[offset + i] != p.group.factors()[i])
      throw GroupMismatch("embed_grading: factor mismatch at offset");
  RingPresentation out = p;
  out.group = target;
  for (auto& b : out.basis) {
    Degree d = target.identity();
    for (std::size_t i = 0; i < p.group.rank(); ++i)
      d.coords[offset + i] = b.degree.coords[i];
    b.degree = std::move(d);
  }
  return out;
}

Product direct_product(const std::vector<RingPtr>& rings, std::string name) {
  if (rings.empty()) throw InvalidArgument("direct_product: no factors");
  const auto& group = rings.front()->group();
  for (const auto& r : rings)
    if (r->group() != group)
      throw GroupMismatch("direct_product: factors have different grading groups");

  RingPresentation p;
  p.group = group;
  std::vector<std::size_t> offset;
  std::string joined;
  std::size_t cap = kDefaultCap;
  for (std::size_t f = 0; f < rings.size(); ++f) {
    offset.push_back(p.basis.size());
    cap = std::min(cap, rings[f]->cap());
    for (const auto& b : rings[f]->presentation().basis)
      p.basis.push_back({b.label + "_" + std::to_string(f + 1), b.order, b.degree});
    joined += (f ? " x " : "") + rings[f]->name();
  }
  p.name = default_name(name, joined);
  const std::size_t n = p.basis.size();
  p.mul.assign(n, std::vector<Coeffs>(n, Coeffs(n, 0)));
  p.one.assign(n, 0);
  for (std::size_t f = 0; f < rings.size(); ++f) {
    const auto& q = rings[f]->presentation();
    const auto o = offset[f];
    for (std::size_t i = 0; i < q.rank(); ++i) {
      p.one[o + i] = q.one[i];
      for (std::size_t j = 0; j < q.rank(); ++j)
        for (std::size_t k = 0; k < q.rank(); ++k) p.mul[o + i][o + j][o + k] = q.mul[i][j][k];
    }
  }

  Product out;
  out.ring = Ring::create(std::move(p), cap);
  const Ring& R = *out.ring;
  for (std::size_t f = 0; f < rings.size(); ++f) {
    const Ring& F = *rings[f];
    RingMorphism proj{out.ring, rings[f], {}};
    proj.map.reserve(R.size());
    for (Elem x : R.all_elements()) {
      Coeffs c(F.rank());
      for (std::size_t i = 0; i < F.rank(); ++i) c[i] = R.digit(x, offset[f] + i);
      proj.map.push_back(F.from_coeffs(c));
    }
    out.projections.push_back(std::move(proj));
    std::vector<Elem> inj;
    for (Elem y : F.all_elements()) {
      Coeffs c(R.rank(), 0);
      for (std::size_t i = 0; i < F.rank(); ++i) c[offset[f] + i] = F.digit(y, i);
      inj.push_back(R.from_coeffs(c));
    }
    out.injections.push_back(std::move(inj));
  }
  return out;
}

Product direct_product_embedded(const std::vector<RingPtr>& rings, std::string name) {
  if (rings.empty()) throw InvalidArgument("direct_product: no factors");
  const bool same = std::all_of(rings.begin(), rings.end(), [&](const RingPtr& r) {
    return r->group() == rings.front()->group();
  });
  if (same) return direct_product(rings, std::move(name));
  std::vector<GradingGroup> groups;
  for (const auto& r : rings) groups.push_back(r->group());
  const auto target = product_group(groups);
  std::vector<RingPtr> regraded;
  std::size_t offset = 0;
  for (const auto& r : rings) {
    regraded.push_back(Ring::create(embed_grading(r->presentation(), target, offset), r->cap()));
    offset += r->group().rank();
  }
  return direct_product(regraded, std::move(name));
}

RingPtr example_2_3(std::int64_t p) {
  if (!is_prime(p)) throw InvalidArgument("example_2_3: p must be prime");
  RingPresentation r;
  r.name = "example23_F" + std::to_string(p);
  r.group = GradingGroup({0});
  r.basis = {{"1", p, Degree{{0}}}, {"x", p, Degree{{1}}}, {"y", p, Degree{{1}}}};
  r.mul.assign(3, std::vector<Coeffs>(3, Coeffs(3, 0)));
  for (std::size_t i = 0; i < 3; ++i) {
    r.mul[0][i][i] = 1;
    r.mul[i][0][i] = 1;
  }
  r.one = {1, 0, 0};
  return Ring::create(std::move(r));
}

RingPtr graded_field_F(std::int64_t p) {
  if (!is_prime(p)) throw InvalidArgument("graded_field_F: p must be prime");
  RingPresentation r;
  r.name = "gradedfieldF_F" + std::to_string(p);
  r.group = GradingGroup({2});
  r.basis = {{"1", p, Degree{{0}}}, {"u", p, Degree{{1}}}};
  r.mul = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
  r.one = {1, 0};
  return Ring::create(std::move(r));
}

RingPtr group_ring(std::int64_t p, std::int64_t n) {
  if (!is_prime(p)) throw InvalidArgument("group_ring: p must be prime");
  if (n < 1) throw InvalidArgument("group_ring: n must be >= 1");
  RingPresentation r;
  r.name = "groupring_F" + std::to_string(p) + "_Z" + std::to_string(n);
  r.group = GradingGroup({n});
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t k = 0; k < un; ++k)
    r.basis.push_back({k == 0 ? "1" : k == 1 ? "g" : "g^" + std::to_string(k), p,
                       Degree{{static_cast<std::int64_t>(k)}}});
  r.mul.assign(un, std::vector<Coeffs>(un, Coeffs(un, 0)));
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) r.mul[i][j][(i + j) % un] = 1;
  r.one.assign(un, 0);
  r.one[0] = 1;
  return Ring::create(std::move(r));
}

RingPtr truncated_poly(const RingPtr& ring, std::int64_t d, const Degree& degX) {
  if (d < 0) throw InvalidArgument("truncated_poly: d must be >= 0");
  const auto& G = ring->group();
  if (!G.contains(degX)) throw InvalidArgument("truncated_poly: degX not in the grading group");
  const auto& q = ring->presentation();
  const std::size_t m = q.rank();
  const auto blocks = static_cast<std::size_t>(d) + 1;
  RingPresentation r;
  r.name = q.name + "[X]/X^" + std::to_string(d + 1);
  r.group = G;
  for (std::size_t k = 0; k < blocks; ++k) {
    const std::string xk = k == 0 ? "" : k == 1 ? "X" : "X^" + std::to_string(k);
    for (const auto& b : q.basis) {
      std::string label = k == 0 ? b.label : b.label == "1" ? xk : b.label + "*" + xk;
      r.basis.push_back({label, b.order,
                         G.op(b.degree, G.power(degX, static_cast<std::int64_t>(k)))});
    }
  }
  const std::size_t n = r.basis.size();
  r.mul.assign(n, std::vector<Coeffs>(n, Coeffs(n, 0)));
  for (std::size_t k = 0; k < blocks; ++k)
    for (std::size_t l = 0; k + l < blocks; ++l)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t t = 0; t < m; ++t)
            r.mul[k * m + i][l * m + j][(k + l) * m + t] = q.mul[i][j][t];
  r.one.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) r.one[i] = q.one[i];
  return Ring::create(std::move(r), ring->cap());
}

RingPtr cyclic(std::int64_t n) {
  if (n < 2) throw InvalidArgument("cyclic: n must be >= 2");
  RingPresentation r;
  r.name = "Z" + std::to_string(n);
  r.basis = {{"1", n, Degree{}}};
  r.mul = {{{1}}};
  r.one = {1};
  return Ring::create(std::move(r));
}

}  // namespace gradr
