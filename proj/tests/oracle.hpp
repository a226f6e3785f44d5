#pragma once

// Naive reference implementations used only by the tests. Everything here
// works on raw coefficient vectors straight from a presentation and shares
// no code with the kernel beyond the presentation struct itself.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gradr/ring.hpp"

namespace oracle {

using V = std::vector<std::int64_t>;
using Set = std::set<V>;

class NaiveRing {
 public:
  explicit NaiveRing(const gradr::RingPresentation& p) : p_(p) {
    const std::size_t n = p.basis.size();
    V v(n, 0);
    elems_.push_back(v);
    // Odometer with the last coordinate fastest, i.e. lexicographic order.
    for (;;) {
      bool carried_out = true;
      for (std::size_t i = n; i-- > 0;) {
        if (++v[i] < p.basis[i].order) {
          carried_out = false;
          break;
        }
        v[i] = 0;
      }
      if (carried_out) break;
      elems_.push_back(v);
    }
    for (std::size_t i = 0; i < n; ++i) {
      V b(n, 0);
      b[i] = 1;
      basis_.push_back(b);
    }
  }

  const std::vector<V>& elements() const { return elems_; }
  const std::vector<V>& basis() const { return basis_; }
  V zero() const { return V(p_.basis.size(), 0); }
  V one() const { return reduce(p_.one); }

  V reduce(V a) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto m = p_.basis[i].order;
      a[i] = ((a[i] % m) + m) % m;
    }
    return a;
  }
  V add(const V& a, const V& b) const {
    V c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return reduce(c);
  }
  V mul(const V& a, const V& b) const {
    const std::size_t n = a.size();
    V c(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (a[i] == 0 || b[j] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) c[k] += a[i] * b[j] * p_.mul[i][j][k];
      }
    return reduce(c);
  }
  V pow(const V& a, std::size_t k) const {
    V r = one();
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  /// Nonzero homogeneous components keyed by degree.
  std::map<gradr::Degree, V> components(const V& a) const {
    std::map<gradr::Degree, V> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      auto [it, fresh] = out.try_emplace(p_.basis[i].degree, zero());
      it->second[i] = a[i];
    }
    return out;
  }
  bool homogeneous(const V& a) const { return components(a).size() <= 1; }
  std::vector<V> homogeneous_elements() const {
    std::vector<V> h;
    for (const auto& a : elems_)
      if (homogeneous(a)) h.push_back(a);
    return h;
  }

  std::optional<V> inverse(const V& a) const {
    for (const auto& b : elems_)
      if (mul(a, b) == one()) return b;
    return std::nullopt;
  }

  /// Additive closure of a set of elements.
  Set span(const std::vector<V>& gens) const {
    Set s{zero()};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<V> cur(s.begin(), s.end());
      for (const auto& a : cur)
        for (const auto& g : gens)
          if (s.insert(add(a, g)).second) grew = true;
    }
    return s;
  }

  bool is_ideal(const Set& s) const {
    for (const auto& a : s) {
      for (const auto& b : s)
        if (!s.count(add(a, b))) return false;
      for (const auto& r : elems_)
        if (!s.count(mul(r, a))) return false;
    }
    return s.count(zero()) == 1;
  }

  bool is_graded(const Set& s) const {
    for (const auto& a : s)
      for (const auto& [g, c] : components(a))
        if (!s.count(c)) return false;
    return true;
  }

  /// Every additive subgroup, by breadth-first extension with one element.
  std::set<Set> subgroups() const {
    std::set<Set> seen{Set{zero()}};
    std::vector<Set> frontier{Set{zero()}};
    while (!frontier.empty()) {
      std::vector<Set> next;
      for (const auto& H : frontier)
        for (const auto& g : elems_) {
          if (H.count(g)) continue;
          std::vector<V> gens(H.begin(), H.end());
          gens.push_back(g);
          Set K = span(gens);
          if (seen.insert(K).second) next.push_back(std::move(K));
        }
      frontier = std::move(next);
    }
    return seen;
  }

  std::vector<Set> graded_ideals() const {
    std::vector<Set> out;
    for (const auto& H : subgroups())
      if (is_ideal(H) && is_graded(H)) out.push_back(H);
    return out;
  }

  /// Elements whose every homogeneous component has a power in I.
  Set graded_radical(const Set& I) const {
    Set out;
    const std::size_t bound = elems_.size() + 1;
    for (const auto& a : elems_) {
      bool ok = true;
      for (const auto& [g, c] : components(a)) {
        bool root = false;
        V pw = c;
        for (std::size_t k = 1; k <= bound && !root; ++k) {
          root = I.count(pw) == 1;
          pw = mul(pw, c);
        }
        ok = ok && root;
      }
      if (ok) out.insert(a);
    }
    return out;
  }

  bool is_graded_prime(const Set& P) const {
    if (P.size() == elems_.size()) return false;
    const auto h = homogeneous_elements();
    for (const auto& x : h)
      for (const auto& y : h)
        if (P.count(mul(x, y)) && !P.count(x) && !P.count(y)) return false;
    return true;
  }

  bool is_graded_field() const {
    if (elems_.size() == 1) return false;
    for (const auto& a : homogeneous_elements())
      if (a != zero() && !inverse(a)) return false;
    return true;
  }

  bool is_field() const {
    if (elems_.size() == 1) return false;
    for (const auto& a : elems_)
      if (a != zero() && !inverse(a)) return false;
    return true;
  }

  bool is_graded_domain() const {
    if (elems_.size() == 1) return false;
    const auto h = homogeneous_elements();
    for (const auto& x : h)
      for (const auto& y : h)
        if (x != zero() && y != zero() && mul(x, y) == zero()) return false;
    return true;
  }

  /// 1 in span(R_g R_{-g}) for every degree g carrying a nonzero element.
  bool is_first_strong(const gradr::GradingGroup& G) const {
    std::map<gradr::Degree, std::vector<V>> comp;
    for (const auto& a : homogeneous_elements())
      if (a != zero()) comp[components(a).begin()->first].push_back(a);
    for (const auto& [g, xs] : comp) {
      auto it = comp.find(G.inverse(g));
      if (it == comp.end()) return false;
      std::vector<V> prods;
      for (const auto& x : xs)
        for (const auto& y : it->second) prods.push_back(mul(x, y));
      if (!span(prods).count(one())) return false;
    }
    return true;
  }

 private:
  const gradr::RingPresentation& p_;
  std::vector<V> elems_;
  std::vector<V> basis_;
};

}  // namespace oracle
