#include "gradr/ring.hpp"

#include <algorithm>
#include <sstream>

#include "gradr/errors.hpp"

namespace gradr {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

void add_violation(ValidationReport& r, std::string axiom,
                   std::vector<std::size_t> idx, std::string detail) {
  r.violations.push_back({std::move(axiom), std::move(idx), std::move(detail)});
}

bool structurally_sound(const RingPresentation& p, ValidationReport& r) {
  const std::size_t n = p.rank();
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.basis[i].order < 2) {
      add_violation(r, "BasisOrder", {i}, "additive order must be >= 2");
      ok = false;
    }
    if (!p.group.contains(p.basis[i].degree)) {
      add_violation(r, "DegreeRange", {i},
                    "degree is not a reduced element of the grading group");
      ok = false;
    }
  }
  if (p.mul.size() != n) {
    add_violation(r, "Structure", {}, "multiplication table has wrong row count");
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p.mul[i].size() != n) {
      add_violation(r, "Structure", {i}, "multiplication table row has wrong length");
      return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (p.mul[i][j].size() != n) {
        add_violation(r, "Structure", {i, j}, "coefficient vector has wrong length");
        return false;
      }
    }
  }
  if (p.one.size() != n) {
    add_violation(r, "Structure", {}, "unity has wrong length");
    return false;
  }
  return ok;
}

}  // namespace

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.axiom;
    if (!v.indices.empty()) {
      os << '(';
      for (std::size_t k = 0; k < v.indices.size(); ++k) {
        if (k) os << ',';
        os << v.indices[k];
      }
      os << ')';
    }
    os << ": " << v.detail << '\n';
  }
  return os.str();
}

std::optional<std::size_t> element_count(const RingPresentation& p,
                                         std::size_t cap) {
  std::size_t count = 1;
  for (const auto& b : p.basis) {
    if (b.order < 1) return std::nullopt;
    if (count > cap / static_cast<std::size_t>(b.order)) return std::nullopt;
    count *= static_cast<std::size_t>(b.order);
  }
  if (count > cap) return std::nullopt;
  return count;
}

Coeffs multiply_coeffs(const RingPresentation& p, const Coeffs& a,
                       const Coeffs& b) {
  const std::size_t n = p.rank();
  Coeffs out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const auto& c = p.mul[i][j];
      for (std::size_t k = 0; k < n; ++k) out[k] += a[i] * b[j] * c[k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) out[k] = mod(out[k], p.basis[k].order);
  return out;
}

ValidationReport validate(const RingPresentation& p, std::size_t cap) {
  ValidationReport r;
  if (!structurally_sound(p, r)) return r;
  if (!element_count(p, cap))
    throw CapExceeded("ring '" + p.name + "' has more than " +
                      std::to_string(cap) + " elements");

  const std::size_t n = p.rank();
  const auto& G = p.group;
  auto order = [&](std::size_t i) { return p.basis[i].order; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        auto c = p.mul[i][j][k];
        if (c < 0 || c >= order(k))
          add_violation(r, "CoefficientRange", {i, j, k},
                        "structure constant not reduced modulo the order");
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (p.one[k] < 0 || p.one[k] >= order(k))
      add_violation(r, "CoefficientRange", {k}, "unity coefficient not reduced");
  }
  if (!r.ok()) return r;

  // order_i * b_i = 0 must force order_i * (b_i b_j) = 0.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if ((order(i) * p.mul[i][j][k]) % order(k) != 0)
          add_violation(r, "OrderCompatibility", {i, j, k},
                        "order of b_" + std::to_string(i) +
                            " does not annihilate coefficient of b_" +
                            std::to_string(k) + " in b_" + std::to_string(i) +
                            "*b_" + std::to_string(j));
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.mul[i][j] != p.mul[j][i])
        add_violation(r, "Commutativity", {i, j}, "b_i*b_j != b_j*b_i");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Degree target = G.op(p.basis[i].degree, p.basis[j].degree);
      for (std::size_t k = 0; k < n; ++k) {
        if (p.mul[i][j][k] != 0 && p.basis[k].degree != target) {
          add_violation(r, "GradingViolation", {i, j},
                        p.basis[i].label + "*" + p.basis[j].label +
                            " has a component on " + p.basis[k].label +
                            " of degree " + G.to_string(p.basis[k].degree) +
                            ", expected " + G.to_string(target));
          break;
        }
      }
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    if (p.one[k] != 0 && !G.is_identity(p.basis[k].degree))
      add_violation(r, "UnityDegree", {k},
                    "unity has a component outside the identity degree");
  }
  for (std::size_t i = 0; i < n; ++i) {
    Coeffs e(n, 0);
    e[i] = 1;
    if (multiply_coeffs(p, p.one, e) != e)
      add_violation(r, "UnityIdentity", {i}, "one*b_i != b_i");
  }

  if (r.ok()) {
    std::vector<Coeffs> unit(n, Coeffs(n, 0));
    for (std::size_t i = 0; i < n; ++i) unit[i][i] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          auto lhs = multiply_coeffs(p, p.mul[i][j], unit[k]);
          auto rhs = multiply_coeffs(p, unit[i], p.mul[j][k]);
          if (lhs != rhs)
            add_violation(r, "Associativity", {i, j, k},
                          "(b_i*b_j)*b_k != b_i*(b_j*b_k)");
        }
  }
  return r;
}

RingPtr Ring::create(RingPresentation p, std::size_t cap) {
  auto report = validate(p, cap);
  if (!report.ok())
    throw ValidationError("invalid presentation '" + p.name + "':\n" +
                          report.to_string());

  std::shared_ptr<Ring> r(new Ring());
  r->pres_ = std::move(p);
  r->cap_ = cap;
  const auto& pres = r->pres_;
  const std::size_t n = pres.rank();

  r->size_ = *element_count(pres, cap);
  r->orders_.resize(n);
  r->strides_.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) r->orders_[i] = pres.basis[i].order;
  for (std::size_t i = n; i-- > 1;)
    r->strides_[i - 1] = r->strides_[i] * static_cast<std::uint32_t>(r->orders_[i]);

  r->digits_.resize(r->size_ * n);
  for (std::size_t id = 0; id < r->size_; ++id) {
    std::size_t rest = id;
    for (std::size_t i = n; i-- > 0;) {
      r->digits_[id * n + i] = static_cast<std::int64_t>(rest % r->orders_[i]);
      rest /= r->orders_[i];
    }
  }

  r->basis_elems_.resize(n);
  for (std::size_t i = 0; i < n; ++i) r->basis_elems_[i] = Elem{r->strides_[i]};
  r->one_ = r->from_coeffs(pres.one);

  r->sparse_mul_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (pres.mul[i][j][k] != 0)
          r->sparse_mul_[i * n + j].emplace_back(k, pres.mul[i][j][k]);

  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = pres.basis[i].degree;
    if (std::find(r->support_.begin(), r->support_.end(), d) == r->support_.end())
      r->support_.push_back(d);
  }
  std::sort(r->support_.begin(), r->support_.end());
  std::vector<int> basis_deg(n);
  r->component_basis_.resize(r->support_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::lower_bound(r->support_.begin(), r->support_.end(),
                               pres.basis[i].degree);
    basis_deg[i] = static_cast<int>(it - r->support_.begin());
    r->component_basis_[basis_deg[i]].push_back(i);
  }

  r->deg_index_.assign(r->size_, kZero);
  r->component_members_.assign(r->support_.size(), {});
  for (std::size_t id = 0; id < r->size_; ++id) {
    int d = kZero;
    for (std::size_t i = 0; i < n; ++i) {
      if (r->digits_[id * n + i] == 0) continue;
      if (d == kZero) {
        d = basis_deg[i];
      } else if (d != basis_deg[i]) {
        d = kMixed;
        break;
      }
    }
    r->deg_index_[id] = d;
    const Elem e{static_cast<std::uint32_t>(id)};
    if (d == kZero) {
      for (auto& members : r->component_members_) members.push_back(e);
    } else if (d >= 0) {
      r->component_members_[d].push_back(e);
    }
    if (d != kMixed) r->homogeneous_.push_back(e);
  }

  constexpr std::size_t kTableLimit = 512;
  if (r->size_ <= kTableLimit) {
    r->mul_table_.resize(r->size_ * r->size_);
    for (std::uint32_t x = 0; x < r->size_; ++x)
      for (std::uint32_t y = x; y < r->size_; ++y) {
        auto z = r->mul_direct(Elem{x}, Elem{y}).id;
        r->mul_table_[x * r->size_ + y] = z;
        r->mul_table_[y * r->size_ + x] = z;
      }
  }
  return r;
}

Elem Ring::from_coeffs(std::span<const std::int64_t> c) const {
  if (c.size() != rank())
    throw InvalidArgument("coefficient vector has length " +
                          std::to_string(c.size()) + ", ring rank is " +
                          std::to_string(rank()));
  std::uint32_t id = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    id += static_cast<std::uint32_t>(mod(c[i], orders_[i])) * strides_[i];
  return Elem{id};
}

Coeffs Ring::coeffs(Elem x) const {
  const auto* d = &digits_[static_cast<std::size_t>(x.id) * rank()];
  return Coeffs(d, d + rank());
}

Elem Ring::add(Elem x, Elem y) const {
  const std::size_t n = rank();
  const auto* a = &digits_[static_cast<std::size_t>(x.id) * n];
  const auto* b = &digits_[static_cast<std::size_t>(y.id) * n];
  std::uint32_t id = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto s = a[i] + b[i];
    if (s >= orders_[i]) s -= orders_[i];
    id += static_cast<std::uint32_t>(s) * strides_[i];
  }
  return Elem{id};
}

Elem Ring::neg(Elem x) const {
  const std::size_t n = rank();
  const auto* a = &digits_[static_cast<std::size_t>(x.id) * n];
  std::uint32_t id = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto s = a[i] == 0 ? 0 : orders_[i] - a[i];
    id += static_cast<std::uint32_t>(s) * strides_[i];
  }
  return Elem{id};
}

Elem Ring::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem Ring::scale(Elem x, std::int64_t k) const {
  const std::size_t n = rank();
  const auto* a = &digits_[static_cast<std::size_t>(x.id) * n];
  std::uint32_t id = 0;
  for (std::size_t i = 0; i < n; ++i)
    id += static_cast<std::uint32_t>(mod(mod(k, orders_[i]) * a[i], orders_[i])) *
          strides_[i];
  return Elem{id};
}

Elem Ring::mul_direct(Elem x, Elem y) const {
  const std::size_t n = rank();
  const auto* a = &digits_[static_cast<std::size_t>(x.id) * n];
  const auto* b = &digits_[static_cast<std::size_t>(y.id) * n];
  std::int64_t acc[64] = {};
  std::vector<std::int64_t> big;
  std::int64_t* out = acc;
  if (n > 64) {
    big.assign(n, 0);
    out = big.data();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const auto ab = a[i] * b[j];
      for (const auto& [k, c] : sparse_mul_[i * n + j]) out[k] += ab * c;
    }
  }
  std::uint32_t id = 0;
  for (std::size_t k = 0; k < n; ++k)
    id += static_cast<std::uint32_t>(out[k] % orders_[k]) * strides_[k];
  return Elem{id};
}

Elem Ring::mul(Elem x, Elem y) const {
  if (!mul_table_.empty()) return Elem{mul_table_[x.id * size_ + y.id]};
  return mul_direct(x, y);
}

Elem Ring::pow(Elem x, std::uint64_t k) const {
  Elem result = one_;
  Elem base = x;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<Elem> Ring::all_elements() const {
  std::vector<Elem> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = Elem{static_cast<std::uint32_t>(i)};
  return out;
}

std::map<Degree, Elem> Ring::components(Elem x) const {
  std::map<std::size_t, Coeffs> by_index;
  const std::size_t n = rank();
  for (std::size_t k = 0; k < support_.size(); ++k) {
    Coeffs c(n, 0);
    bool nonzero = false;
    for (auto i : component_basis_[k]) {
      c[i] = digit(x, i);
      nonzero |= c[i] != 0;
    }
    if (nonzero) by_index.emplace(k, std::move(c));
  }
  std::map<Degree, Elem> out;
  for (auto& [k, c] : by_index) out.emplace(support_[k], from_coeffs(c));
  return out;
}

std::optional<Degree> Ring::degree_of(Elem x) const {
  const int d = deg_index_[x.id];
  if (d < 0) return std::nullopt;
  return support_[d];
}

std::optional<std::size_t> Ring::support_index(const Degree& g) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), g);
  if (it == support_.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - support_.begin());
}

Elem Ring::component_at(Elem x, std::size_t k) const {
  std::uint32_t id = 0;
  for (auto i : component_basis_[k])
    id += static_cast<std::uint32_t>(digit(x, i)) * strides_[i];
  return Elem{id};
}

std::optional<Elem> Ring::is_unit(Elem x) const {
  for (std::uint32_t y = 0; y < size_; ++y)
    if (mul(x, Elem{y}) == one_) return Elem{y};
  return std::nullopt;
}

void Ring::build_power_tails() const {
  tail_offset_.assign(size_ + 1, 0);
  std::vector<std::uint32_t> stamp(size_, 0);
  std::vector<std::uint32_t> pos(size_, 0);
  std::uint32_t cur = 0;
  std::vector<std::vector<Elem>> tails(size_);
  for (Elem x : homogeneous_) {
    ++cur;
    std::vector<Elem> seq;
    Elem p = x;
    std::uint32_t k = 1;
    while (stamp[p.id] != cur) {
      stamp[p.id] = cur;
      pos[p.id] = k++;
      seq.push_back(p);
      p = mul(p, x);
    }
    seq.resize(pos[p.id]);
    tails[x.id] = std::move(seq);
  }
  for (std::size_t i = 0; i < size_; ++i) {
    tail_offset_[i + 1] = tail_offset_[i] + static_cast<std::uint32_t>(tails[i].size());
    tail_storage_.insert(tail_storage_.end(), tails[i].begin(), tails[i].end());
  }
}

std::span<const Elem> Ring::power_tail(Elem x) const {
  if (!is_homogeneous(x))
    throw NotHomogeneous("power_tail requires a homogeneous element, got " +
                         to_string(x));
  std::call_once(power_once_, [this] { build_power_tails(); });
  return std::span<const Elem>(tail_storage_.data() + tail_offset_[x.id],
                               tail_offset_[x.id + 1] - tail_offset_[x.id]);
}

std::string Ring::to_string(Elem x) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto c = digit(x, i);
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (c != 1) os << c << '*';
    os << pres_.basis[i].label;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace gradr
