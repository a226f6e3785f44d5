#include "gradr/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gradr/constructions.hpp"
#include "gradr/errors.hpp"
#include "gradr/modlinear.hpp"

namespace gradr {

Poly::Poly(RingPtr ring, Degree degX) : ring_(std::move(ring)), degX_(std::move(degX)) {
  if (!ring_->group().contains(degX_))
    throw InvalidArgument("degree of X is not an element of the grading group");
}

Poly Poly::constant(RingPtr ring, Degree degX, Elem c) {
  return monomial(std::move(ring), std::move(degX), c, 0);
}

Poly Poly::monomial(RingPtr ring, Degree degX, Elem c, std::uint32_t exponent) {
  Poly p(std::move(ring), std::move(degX));
  p.set(exponent, c);
  return p;
}

int Poly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first);
}

Elem Poly::coeff(std::uint32_t k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? ring_->zero() : it->second;
}

Elem Poly::leading() const {
  return terms_.empty() ? ring_->zero() : terms_.rbegin()->second;
}

void Poly::set(std::uint32_t k, Elem c) {
  if (c == ring_->zero())
    terms_.erase(k);
  else
    terms_[k] = c;
}

std::map<Degree, Poly> Poly::components() const {
  std::map<Degree, Poly> out;
  const auto& G = ring_->group();
  for (const auto& [k, c] : terms_) {
    for (const auto& [d, part] : ring_->components(c)) {
      const Degree total = G.op(d, G.power(degX_, k));
      auto it = out.try_emplace(total, ring_, degX_).first;
      it->second.set(k, part);
    }
  }
  return out;
}

bool Poly::is_homogeneous() const { return components().size() <= 1; }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto c = ring_->to_string(it->second);
    const bool compound = c.find('+') != std::string::npos;
    if (it->first == 0) {
      os << c;
      continue;
    }
    if (it->second != ring_->one()) os << (compound ? "(" + c + ")" : c) << '*';
    os << 'X';
    if (it->first > 1) os << '^' << it->first;
  }
  return os.str();
}

namespace {

void require_compatible(const Poly& f, const Poly& g) {
  if (f.ring() != g.ring() || f.degX() != g.degX())
    throw RingMismatch("polynomials over different rings or X-gradings");
}

}  // namespace

Poly poly_add(const Poly& f, const Poly& g) {
  require_compatible(f, g);
  Poly out = f;
  const Ring& R = *f.ring();
  for (const auto& [k, c] : g.terms()) out.set(k, R.add(out.coeff(k), c));
  return out;
}

Poly poly_sub(const Poly& f, const Poly& g) {
  require_compatible(f, g);
  Poly out = f;
  const Ring& R = *f.ring();
  for (const auto& [k, c] : g.terms()) out.set(k, R.sub(out.coeff(k), c));
  return out;
}

Poly poly_mul(const Poly& f, const Poly& g) {
  require_compatible(f, g);
  const Ring& R = *f.ring();
  Poly out(f.ring(), f.degX());
  for (const auto& [i, a] : f.terms())
    for (const auto& [j, b] : g.terms()) out.set(i + j, R.add(out.coeff(i + j), R.mul(a, b)));
  return out;
}

Poly poly_scale(const Poly& f, Elem c) {
  const Ring& R = *f.ring();
  Poly out(f.ring(), f.degX());
  for (const auto& [k, a] : f.terms()) out.set(k, R.mul(a, c));
  return out;
}

Poly poly_pow(const Poly& f, std::uint32_t k) {
  Poly out = Poly::constant(f.ring(), f.degX(), f.ring()->one());
  for (std::uint32_t i = 0; i < k; ++i) out = poly_mul(out, f);
  return out;
}

Elem poly_eval0(const Poly& f) { return f.coeff(0); }

Division poly_divide(const Poly& f, const Poly& g) {
  require_compatible(f, g);
  if (g.is_zero()) throw NotDivisible("division by the zero polynomial");
  const Ring& R = *f.ring();
  const auto inv = R.is_unit(g.leading());
  if (!inv)
    throw NotDivisible("leading coefficient " + R.to_string(g.leading()) +
                       " of the divisor is not a unit");
  Poly q(f.ring(), f.degX());
  Poly r = f;
  const int dg = g.degree();
  while (r.degree() >= dg) {
    const auto shift = static_cast<std::uint32_t>(r.degree() - dg);
    const Elem c = R.mul(r.leading(), *inv);
    q.set(shift, R.add(q.coeff(shift), c));
    r = poly_sub(r, poly_mul(Poly::monomial(f.ring(), f.degX(), c, shift), g));
  }
  if (poly_add(poly_mul(q, g), r) != f)
    throw CrossCheckFailure("division does not recompose");
  return {std::move(q), std::move(r)};
}

Membership bounded_membership(const Poly& target, const std::vector<Poly>& gens,
                              std::uint32_t max_degree) {
  for (const auto& g : gens) require_compatible(target, g);
  const RingPtr& ring = target.ring();
  const Ring& R = *ring;
  const std::size_t n = R.rank();
  Membership out;
  out.bound = max_degree;

  int top = target.degree();
  for (const auto& g : gens) top = std::max(top, g.degree() + static_cast<int>(max_degree));
  const std::size_t exps = top < 0 ? 0 : static_cast<std::size_t>(top) + 1;

  std::int64_t M = 1;
  for (const auto& b : R.presentation().basis) M = std::lcm(M, b.order);
  const std::size_t rows = exps * n;
  const std::size_t per_gen = (max_degree + 1) * n;
  const std::size_t cols = gens.size() * per_gen;

  IntMatrix A(rows, std::vector<std::int64_t>(cols, 0));
  std::vector<std::int64_t> rhs(rows, 0);
  auto scale_of = [&](std::size_t l) { return M / R.presentation().basis[l].order; };
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::uint32_t k = 0; k <= max_degree; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto col = j * per_gen + k * n + i;
        for (const auto& [e, c] : gens[j].terms()) {
          const Elem prod = R.mul(R.basis(i), c);
          for (std::size_t l = 0; l < n; ++l)
            A[(e + k) * n + l][col] = R.digit(prod, l) * scale_of(l);
        }
      }
    }
  }
  for (const auto& [e, c] : target.terms())
    for (std::size_t l = 0; l < n; ++l) rhs[e * n + l] = R.digit(c, l) * scale_of(l);

  const auto sol = solve_mod(std::move(A), std::move(rhs), M);
  if (!sol) return out;

  Poly sum(ring, target.degX());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Poly c(ring, target.degX());
    for (std::uint32_t k = 0; k <= max_degree; ++k) {
      Coeffs v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = (*sol)[j * per_gen + k * n + i];
      c.set(k, R.from_coeffs(v));
    }
    sum = poly_add(sum, poly_mul(c, gens[j]));
    out.cofactors.push_back(std::move(c));
  }
  if (sum != target) throw CrossCheckFailure("membership witness does not recompose");
  out.found = true;
  return out;
}

SingleGenerator euclidean_single_generator(const std::vector<Poly>& gens) {
  if (gens.empty()) throw InvalidArgument("euclidean_single_generator: no generators");
  const RingPtr& ring = gens.front().ring();
  if (!is_graded_field(*ring))
    throw Unsupported("euclidean_single_generator: coefficients are not a graded field");
  std::optional<Poly> acc;
  std::uint32_t total_degree = 0;
  for (const auto& g : gens) {
    require_compatible(gens.front(), g);
    if (g.is_zero()) continue;
    total_degree += static_cast<std::uint32_t>(g.degree());
    if (!acc) {
      acc = g;
      continue;
    }
    Poly a = *acc, b = g;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      if (!ring->is_unit(b.leading()))
        throw Unsupported("euclidean_single_generator: leading coefficient " +
                          ring->to_string(b.leading()) + " is not a unit");
      Poly r = poly_divide(a, b).remainder;
      a = std::move(b);
      b = std::move(r);
    }
    acc = std::move(a);
  }
  if (!acc) throw InvalidArgument("euclidean_single_generator: all generators are zero");
  const auto inv = ring->is_unit(acc->leading());
  if (!inv)
    throw Unsupported("euclidean_single_generator: leading coefficient " +
                      ring->to_string(acc->leading()) + " is not a unit");
  SingleGenerator out{poly_scale(*acc, *inv), {}, {}};

  const auto into = bounded_membership(out.generator, gens, std::max(1u, total_degree));
  if (!into.found)
    throw CrossCheckFailure("generator " + out.generator.to_string() +
                            " not certified inside the ideal");
  out.into = into.cofactors;
  for (const auto& g : gens) {
    const auto back = bounded_membership(g, {out.generator},
                                         static_cast<std::uint32_t>(std::max(0, g.degree())));
    if (!back.found)
      throw CrossCheckFailure("generator " + g.to_string() + " not certified in <" +
                              out.generator.to_string() + ">");
    out.back.push_back(back.cofactors.front());
  }
  return out;
}

namespace {

struct ProbeContext {
  const RingPtr& ring;
  const Degree& degX;
  Elem a;
  std::uint32_t max_exponent;
  std::uint32_t cofactor_bound;
};

// Smallest e in [1, max] with member(e), or 0.
template <typename F>
std::uint32_t first_exponent(std::uint32_t max, F&& member) {
  for (std::uint32_t e = 1; e <= max; ++e)
    if (member(e)) return e;
  return 0;
}

bool try_candidate(const ProbeContext& ctx, const Poly& f, Prop41Probe& out) {
  const auto& ring = ctx.ring;
  const Poly a = Poly::constant(ring, ctx.degX, ctx.a);
  const Poly X = Poly::monomial(ring, ctx.degX, ring->one(), 1);
  const auto n = first_exponent(ctx.max_exponent, [&](std::uint32_t e) {
    return bounded_membership(poly_pow(a, e), {f}, ctx.cofactor_bound).found;
  });
  if (!n) return false;
  const auto m = first_exponent(ctx.max_exponent, [&](std::uint32_t e) {
    return bounded_membership(poly_pow(X, e), {f}, ctx.cofactor_bound).found;
  });
  if (!m) return false;
  const auto k = first_exponent(ctx.max_exponent, [&](std::uint32_t e) {
    return bounded_membership(poly_pow(f, e), {a, X}, ctx.cofactor_bound).found;
  });
  if (!k) return false;
  out.found = true;
  out.witness = f;
  out.n = n;
  out.m = m;
  out.k = k;
  return true;
}

}  // namespace

Prop41Probe prop41_probe(const RingPtr& ring, Elem a, std::uint32_t max_exponent,
                         std::uint32_t max_degree, const Degree& degX) {
  const Ring& R = *ring;
  if (a == R.zero()) throw InvalidArgument("prop41_probe: a must be nonzero");
  if (!R.is_homogeneous(a))
    throw NotHomogeneous("prop41_probe: " + R.to_string(a) + " is not homogeneous");
  const auto& G = R.group();
  ProbeContext ctx{ring, degX, a, max_exponent, max_exponent + max_degree};
  Prop41Probe out;

  auto component = [&](const Degree& g) -> std::vector<Elem> {
    const auto k = R.support_index(g);
    if (!k) return {R.zero()};
    return R.component_elements(*k);
  };

  for (std::uint32_t d = 0; d <= max_degree && !out.found; ++d) {
    // Leading coefficient: unity first, then every other nonzero
    // homogeneous element ascending.
    std::vector<Elem> leads{R.one()};
    for (Elem c : R.homogeneous_elements())
      if (c != R.zero() && c != R.one()) leads.push_back(c);
    for (Elem lead : leads) {
      if (lead == R.zero()) continue;
      const Degree total = G.op(*R.degree_of(lead), G.power(degX, d));
      // Lower coefficients c_{d-1}, ..., c_0 from the matching components.
      std::vector<std::vector<Elem>> slots;
      for (std::uint32_t i = d; i-- > 0;)
        slots.push_back(component(G.op(total, G.inverse(G.power(degX, i)))));
      std::vector<std::size_t> pick(slots.size(), 0);
      while (true) {
        Poly f = Poly::monomial(ring, degX, lead, d);
        for (std::size_t s = 0; s < slots.size(); ++s)
          f.set(d - 1 - static_cast<std::uint32_t>(s), slots[s][pick[s]]);
        ++out.candidates_tried;
        if (try_candidate(ctx, f, out)) break;
        std::size_t s = slots.size();
        while (s-- > 0) {
          if (++pick[s] < slots[s].size()) break;
          pick[s] = 0;
        }
        if (s == static_cast<std::size_t>(-1)) break;
      }
      if (out.found) break;
    }
  }
  if (out.found) {
    out.constant_witness = out.witness->degree() == 0;
    out.note = out.constant_witness
                   ? "witness is a nonzero constant, as the degree argument requires "
                     "when a^n = g f"
                   : "witness has positive X-degree";
  } else {
    out.note = "no witness up to the given bounds (bounded verdict, not a refutation)";
  }
  return out;
}

Prop41Probe prop41_probe(const RingPtr& ring, Elem a, std::uint32_t max_exponent,
                         std::uint32_t max_degree) {
  return prop41_probe(ring, a, max_exponent, max_degree,
                      ring->group().default_indeterminate_degree());
}

Thm43Report thm43_report(RingAnalysis& analysis) {
  Thm43Report r;
  r.all_primes_maximal = true;
  r.prime_quotients_graded_fields = true;
  for (const auto& P : analysis.primes()) {
    r.all_primes_maximal &= is_graded_maximal(P);
    r.prime_quotients_graded_fields &= is_graded_field(*quotient(P).ring);
  }
  r.graded_field = is_graded_field(*analysis.ring());
  r.rp = ring_rp_direct(analysis);
  return r;
}

}  // namespace gradr
