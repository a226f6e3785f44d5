#include "gradr/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "gradr/constructions.hpp"
#include "gradr/errors.hpp"
#include "gradr/poly.hpp"
#include "gradr/rp.hpp"

namespace gradr {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Up to k distinct indices from [0, n), ascending. All of them when n <= k.
std::vector<std::size_t> sample(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  if (n <= k) return idx;
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> d(i, n - 1);
    std::swap(idx[i], idx[d(rng)]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

struct RingContext {
  const CorpusEntry* entry;
  std::unique_ptr<RingAnalysis> analysis;
  std::optional<bool> rp;

  RingAnalysis& a() {
    if (!analysis) analysis = std::make_unique<RingAnalysis>(entry->ring);
    return *analysis;
  }
  bool ring_rp() {
    if (!rp) rp = ring_rp_direct(a());
    return *rp;
  }
};

/// Records outcomes for one group on one ring.
class Recorder {
 public:
  Recorder(GroupResult& g, const CorpusEntry& e) : g_(g), e_(e) {}

  void check(bool ok, const std::string& detail, Json data = Json()) {
    if (ok) {
      ++g_.pass;
      return;
    }
    fail(detail, std::move(data));
  }
  void fail(const std::string& detail, Json data = Json()) {
    ++g_.fail;
    Json inst;
    inst["recipe"] = e_.recipe;
    inst["presentation"] = presentation_to_json(e_.presentation);
    if (!data.is_null()) inst["data"] = std::move(data);
    g_.failures.push_back({e_.name, detail, std::move(inst)});
  }
  void skip() { ++g_.skip; }
  GroupResult& group() { return g_; }

 private:
  GroupResult& g_;
  const CorpusEntry& e_;
};

Json ideal_data(const IdealSet& I) { return Json{{"ideal", ideal_to_json(I)}}; }

IdealSet intersection_of_primes_over(const IdealSet& I, const std::vector<IdealSet>& primes) {
  IdealSet acc = unit_ideal(I.ring());
  for (const auto& P : primes)
    if (I.subset_of(P)) acc = ideal_intersection(acc, P);
  return acc;
}

using GroupFn = std::function<void(RingContext&, Recorder&, const SuiteOptions&,
                                   std::mt19937_64&, const std::vector<CorpusEntry>&)>;

void group_validate(RingContext& ctx, Recorder& rec, const SuiteOptions&, std::mt19937_64&,
                    const std::vector<CorpusEntry>&) {
  const auto report = validate(ctx.entry->presentation);
  rec.check(report.ok(), "presentation violates the ring axioms",
            Json{{"violations", report.to_string()}});
  if (!ctx.entry->ring) return;
  const Ring& R = *ctx.entry->ring;
  for (Elem x : R.all_elements()) {
    Elem sum = R.zero();
    bool single_degree = true;
    for (const auto& [g, c] : R.components(x)) {
      sum = R.add(sum, c);
      single_degree = single_degree && R.degree_of(c) == g;
    }
    rec.check(sum == x && single_degree, "homogeneous decomposition does not round-trip",
              Json{{"element", R.coeffs(x)}});
  }
  const auto& h = R.homogeneous_elements();
  for (Elem x : h)
    for (Elem y : h) {
      const Elem xy = R.mul(x, y);
      if (xy == R.zero()) continue;
      const bool ok = R.is_homogeneous(xy) &&
                      *R.degree_of(xy) == R.group().op(*R.degree_of(x), *R.degree_of(y));
      if (!ok) rec.fail("product of homogeneous elements has the wrong degree",
                        Json{{"x", R.coeffs(x)}, {"y", R.coeffs(y)}});
    }
  rec.check(true, "");
}

void group_ideal_closure(RingContext& ctx, Recorder& rec, const SuiteOptions&,
                         std::mt19937_64& rng, const std::vector<CorpusEntry>&) {
  const auto& L = ctx.a().lattice();
  std::set<std::vector<Elem>> members;
  for (const auto& I : L) members.insert(I.elements());
  for (const auto& I : L) {
    const auto gens = homogeneous_generators(I);
    rec.check(ideal_from_homogeneous_gens(ctx.entry->ring, gens) == I,
              "graded ideal differs from the ideal of its homogeneous members", ideal_data(I));
  }
  const std::size_t n = L.size();
  for (std::size_t p : sample(n * n, 200, rng)) {
    const auto& I = L[p / n];
    const auto& J = L[p % n];
    for (const auto& K : {ideal_sum(I, J), ideal_product(I, J), ideal_intersection(I, J)})
      rec.check(is_graded(K) && members.count(K.elements()) == 1,
                "sum/product/intersection left the graded lattice",
                Json{{"I", ideal_to_json(I)}, {"J", ideal_to_json(J)}});
  }
}

void group_radical(RingContext& ctx, Recorder& rec, const SuiteOptions&, std::mt19937_64& rng,
                   const std::vector<CorpusEntry>&) {
  auto& a = ctx.a();
  const auto& L = a.lattice();
  for (const auto& I : L) {
    const auto& rad = a.cache().radical(I).radical;
    rec.check(I.subset_of(rad), "ideal not inside its radical", ideal_data(I));
    rec.check(is_graded(rad), "radical not graded", ideal_data(I));
    rec.check(grad(rad).radical == rad, "radical not idempotent", ideal_data(I));
    rec.check(rad == intersection_of_primes_over(I, a.primes()),
              "radical differs from the intersection of primes containing the ideal",
              ideal_data(I));
  }
  const std::size_t n = L.size();
  for (std::size_t p : sample(n * n, 200, rng)) {
    const auto& I = L[p / n];
    const auto& J = L[p % n];
    if (!I.subset_of(J)) continue;
    rec.check(a.cache().radical(I).radical.subset_of(a.cache().radical(J).radical),
              "radical not monotone", Json{{"I", ideal_to_json(I)}, {"J", ideal_to_json(J)}});
  }
}

void group_witness_in_ideal(RingContext& ctx, Recorder& rec, const SuiteOptions&,
                            std::mt19937_64&, const std::vector<CorpusEntry>&) {
  auto& a = ctx.a();
  for (const auto& I : a.lattice()) {
    const auto cert = rp_check(I, a.cache());
    if (!cert.radically_principal) {
      rec.skip();
      continue;
    }
    rec.check(cert.witness_in_ideal && I.contains(*cert.witness_in_ideal),
              "positive certificate without a witness inside the ideal", ideal_data(I));
    rec.check(verify_certificate(cert), "certificate does not re-verify", ideal_data(I));
    if (cert.witness_in_ideal && cert.radical.radical == I) {
      const Elem c = *cert.witness_in_ideal;
      rec.check(grad(ideal_from_homogeneous_gens(ctx.entry->ring, {&c, 1})).radical == I,
                "radical ideal differs from the radical of its in-ideal witness",
                ideal_data(I));
    }
  }
}

void group_products(RingContext& ctx, Recorder& rec, const SuiteOptions& opt,
                    std::mt19937_64& rng, const std::vector<CorpusEntry>&) {
  auto& a = ctx.a();
  const auto& L = a.lattice();
  std::uniform_int_distribution<std::size_t> d(0, L.size() - 1);
  for (std::size_t t = 0; t < opt.pairs_per_ring; ++t) {
    const auto& I = L[d(rng)];
    const auto& J = L[d(rng)];
    const auto r = prop25_check(I, J, a.cache());
    rec.check(r.ok(), "radicals of product and intersection: " + r.note,
              Json{{"I", ideal_to_json(I)}, {"J", ideal_to_json(J)}});
  }
}

void group_quotients(RingContext& ctx, Recorder& rec, const SuiteOptions& opt,
                     std::mt19937_64& rng, const std::vector<CorpusEntry>&) {
  std::vector<const IdealSet*> proper;
  for (const auto& I : ctx.a().lattice())
    if (I.is_proper()) proper.push_back(&I);
  const bool rp = ctx.ring_rp();
  for (std::size_t i : sample(proper.size(), opt.quotients_per_ring, rng)) {
    const auto q = quotient(*proper[i]);
    const auto failures = verify_morphism(q.projection);
    rec.check(failures.empty(), "projection is not a graded ring morphism",
              ideal_data(*proper[i]));
    RingAnalysis qa(q.ring);
    const bool qrp = ring_rp_direct(qa);
    rec.check(!rp || qrp, "quotient of a radically principal ring is not radically principal",
              ideal_data(*proper[i]));
  }
}

void group_cohen(RingContext& ctx, Recorder& rec, const SuiteOptions&, std::mt19937_64&,
                 const std::vector<CorpusEntry>&) {
  auto& a = ctx.a();
  const bool direct = ctx.ring_rp();
  const bool primes = ring_rp_via_primes(a);
  if (direct != primes) rec.group().cross_check = true;
  rec.check(direct == primes, "ring-level and prime-level radical principality disagree",
            Json{{"direct", direct}, {"via_primes", primes}});
}

void group_localizations(RingContext& ctx, Recorder& rec, const SuiteOptions& opt,
                         std::mt19937_64& rng, const std::vector<CorpusEntry>&) {
  const auto& ring = ctx.entry->ring;
  const Ring& R = *ring;
  const bool rp = ctx.ring_rp();
  std::vector<Elem> candidates;
  for (Elem x : R.homogeneous_elements())
    if (x != R.zero()) candidates.push_back(x);
  std::vector<std::vector<Elem>> sets{{R.one()}};
  for (std::size_t i : sample(candidates.size(), opt.localizations_per_ring, rng))
    sets.push_back({candidates[i]});
  if (candidates.size() >= 2) {
    std::uniform_int_distribution<std::size_t> d(0, candidates.size() - 1);
    sets.push_back({candidates[d(rng)], candidates[d(rng)]});
  }
  for (const auto& S : sets) {
    Json sdata = Json::array();
    for (Elem s : S) sdata.push_back(R.coeffs(s));
    const auto loc = localize(ring, S);
    rec.check(verify_morphism(loc.canonical).empty(),
              "canonical map is not a graded ring morphism", Json{{"S", sdata}});
    RingAnalysis la(loc.ring);
    rec.check(!rp || ring_rp_direct(la),
              "localization of a radically principal ring is not radically principal",
              Json{{"S", sdata}});
    RadicalCache cache(ring);
    for (Elem c : R.homogeneous_elements()) {
      const auto& pc = cache.principal(c);
      const auto lhs = image_ideal(loc.canonical, cache.radical(pc).radical);
      const auto rhs = grad(image_ideal(loc.canonical, pc)).radical;
      rec.check(lhs == rhs, "localized radical differs from radical of localized ideal",
                Json{{"S", sdata}, {"c", R.coeffs(c)}});
    }
  }
}

void group_direct_products(RingContext& ctx, Recorder& rec, const SuiteOptions& opt,
                           std::mt19937_64&, const std::vector<CorpusEntry>& corpus) {
  const auto& ring = ctx.entry->ring;
  // Partners: the ring itself and the next valid corpus ring.
  std::vector<RingPtr> partners{ring};
  const auto self = static_cast<std::size_t>(ctx.entry - corpus.data());
  for (std::size_t k = 1; k < corpus.size(); ++k) {
    const auto& other = corpus[(self + k) % corpus.size()];
    if (other.ring) {
      partners.push_back(other.ring);
      break;
    }
  }
  const bool rp = ctx.ring_rp();
  for (const auto& other : partners) {
    if (ring->size() * other->size() > opt.max_product_size) {
      rec.skip();
      continue;
    }
    const auto prod = direct_product_embedded({ring, other});
    for (const auto& pi : prod.projections)
      rec.check(verify_morphism(pi).empty(), "projection is not a graded ring morphism",
                Json{{"partner", other->name()}});
    RingAnalysis pa(prod.ring);
    RingAnalysis oa(other);
    rec.check(ring_rp_direct(pa) == (rp && ring_rp_direct(oa)),
              "product radically principal differs from all factors radically principal",
              Json{{"partner", other->name()}});

    // Graded primes of the product are the preimages of a factor prime.
    std::set<std::vector<Elem>> expected;
    const RingAnalysis* factors[2] = {&ctx.a(), &oa};
    for (std::size_t i = 0; i < 2; ++i)
      for (const auto& K : factors[i]->primes()) {
        std::vector<Elem> pre;
        for (Elem x : prod.ring->all_elements())
          if (K.contains(prod.projections[i](x))) pre.push_back(x);
        expected.insert(pre);
      }
    std::set<std::vector<Elem>> actual;
    for (const auto& P : pa.primes()) actual.insert(P.elements());
    rec.check(actual == expected, "graded primes of the product are not factor preimages",
              Json{{"partner", other->name()}});
  }
}

void group_avoidance_condition(RingContext& ctx, Recorder& rec, const SuiteOptions&,
                               std::mt19937_64&, const std::vector<CorpusEntry>&) {
  const bool direct = ctx.ring_rp();
  const bool avoid = avoidance_condition(ctx.a());
  if (direct != avoid) rec.group().cross_check = true;
  rec.check(direct == avoid, "avoidance condition disagrees with radical principality",
            Json{{"direct", direct}, {"avoidance", avoid}});
}

void group_avoidance_property(RingContext& ctx, Recorder& rec, const SuiteOptions& opt,
                              std::mt19937_64& rng, const std::vector<CorpusEntry>&) {
  const auto& primes = ctx.a().primes();
  const std::size_t n = primes.size();
  std::vector<std::uint64_t> masks;
  if (n < 63 && (std::uint64_t{1} << n) <= opt.avoidance_families) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) masks.push_back(m);
  } else {
    std::uniform_int_distribution<std::uint64_t> d;
    for (std::size_t t = 0; t < opt.avoidance_families; ++t)
      masks.push_back(n >= 64 ? d(rng) : d(rng) & ((std::uint64_t{1} << n) - 1));
  }
  for (const auto& P : primes)
    for (std::uint64_t m : masks) {
      std::vector<IdealSet> family;
      for (std::size_t i = 0; i < n && i < 64; ++i)
        if ((m >> i) & 1U) family.push_back(primes[i]);
      bool covered = true;
      for (Elem x : P.elements())
        covered = covered && std::any_of(family.begin(), family.end(),
                                         [&](const IdealSet& K) { return K.contains(x); });
      const auto idx = avoidance_property(P, family);
      const bool ok = covered ? (idx && P.subset_of(family[*idx])) : !idx;
      rec.check(ok, "prime covered by a union of primes lies in none of them",
                Json{{"P", ideal_to_json(P)}, {"family_mask", m}});
    }
}

void group_finitely_many_primes(RingContext& ctx, Recorder& rec, const SuiteOptions&,
                                std::mt19937_64&, const std::vector<CorpusEntry>&) {
  rec.check(ctx.ring_rp(), "finite ring is not graded radically principal");
}

void group_first_strong(RingContext& ctx, Recorder& rec, const SuiteOptions&,
                        std::mt19937_64&, const std::vector<CorpusEntry>&) {
  const Ring& R = *ctx.entry->ring;
  const bool by_def = first_strong_by_definition(R);
  const bool by_char = first_strong_by_characterization(R);
  if (by_def != by_char) rec.group().cross_check = true;
  rec.check(by_def == by_char, "first strong definition and characterization disagree");
  if (is_graded_field(R))
    rec.check(by_def, "graded field is not first strongly graded");
}

void group_principal(RingContext& ctx, Recorder& rec, const SuiteOptions&, std::mt19937_64&,
                     const std::vector<CorpusEntry>&) {
  auto& a = ctx.a();
  for (const auto& I : a.lattice()) {
    if (!is_graded_principal(I, a.cache())) {
      rec.skip();
      continue;
    }
    rec.check(rp_check(I, a.cache()).radically_principal,
              "graded principal ideal is not radically principal", ideal_data(I));
  }
  if (is_graded_principal_ring(a))
    rec.check(ctx.ring_rp(), "graded principal ring is not radically principal");
}

void group_domain_collapse(RingContext& ctx, Recorder& rec, const SuiteOptions&,
                           std::mt19937_64&, const std::vector<CorpusEntry>&) {
  const Ring& R = *ctx.entry->ring;
  if (is_graded_integral_domain(R))
    rec.check(is_graded_field(R), "finite graded integral domain is not a graded field");
  for (const auto& P : ctx.a().primes()) {
    const auto q = quotient(P);
    rec.check(is_graded_integral_domain(*q.ring),
              "quotient by a graded prime is not a graded integral domain", ideal_data(P));
    if (is_graded_maximal(P))
      rec.check(is_graded_field(*q.ring),
                "quotient by a graded maximal ideal is not a graded field", ideal_data(P));
  }
}

void group_primes_maximal(RingContext& ctx, Recorder& rec, const SuiteOptions&,
                          std::mt19937_64&, const std::vector<CorpusEntry>&) {
  const auto r = thm43_report(ctx.a());
  rec.check(r.all_primes_maximal, "graded prime that is not graded maximal");
  rec.check(r.prime_quotients_graded_fields, "quotient by a graded prime is not a graded field");
}

struct GroupDef {
  const char* name;
  const char* description;
  GroupFn fn;
  /// Needs a valid ring; otherwise the instance is skipped.
  bool needs_ring;
};

const std::vector<GroupDef>& group_defs() {
  static const std::vector<GroupDef> defs{
      {"validate", "presentations satisfy the ring axioms; decomposition round-trips",
       group_validate, false},
      {"ideal_closure", "graded lattice closed under sum, product, intersection",
       group_ideal_closure, true},
      {"radical", "Grad(I) = intersection of graded primes over I; idempotent, graded, monotone",
       group_radical, true},
      {"prop2.4", "positive certificates carry a witness inside the ideal",
       group_witness_in_ideal, true},
      {"prop2.5", "Grad(IJ) = Grad(I n J) = Grad(I) n Grad(J) = Grad(<xy>)", group_products,
       true},
      {"prop2.6", "quotients of radically principal rings are radically principal",
       group_quotients, true},
      {"thm2.7", "every graded ideal RP iff every graded prime RP", group_cohen, true},
      {"cor2.8", "localization preserves RP and commutes with Grad(<c>)", group_localizations,
       true},
      {"cor2.10", "product RP iff every factor RP; product primes are factor preimages",
       group_direct_products, true},
      {"thm2.11", "RP iff every graded prime avoids the primes not containing it",
       group_avoidance_condition, true},
      {"cor2.12", "graded prime inside a union of graded primes lies in one of them",
       group_avoidance_property, true},
      {"cor2.13", "finitely many graded primes forces RP", group_finitely_many_primes, true},
      {"first_strong", "definition and characterization agree; graded fields qualify",
       group_first_strong, true},
      {"principal", "graded principal implies radically principal", group_principal, true},
      {"domain_collapse", "finite graded domains are graded fields; R/P is a graded domain",
       group_domain_collapse, true},
      {"thm4.3", "every graded prime is graded maximal", group_primes_maximal, true},
  };
  return defs;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& suite_groups() {
  static const auto names = [] {
    std::vector<std::pair<std::string, std::string>> v;
    for (const auto& d : group_defs()) v.emplace_back(d.name, d.description);
    return v;
  }();
  return names;
}

bool SuiteResult::passed() const {
  return std::all_of(groups.begin(), groups.end(),
                     [](const GroupResult& g) { return g.passed(); });
}

const GroupResult* SuiteResult::group(const std::string& name) const {
  for (const auto& g : groups)
    if (g.name == name) return &g;
  return nullptr;
}

Json SuiteResult::to_json() const {
  Json j;
  j["rings"] = rings;
  j["passed"] = passed();
  Json gs = Json::array();
  for (const auto& g : groups) {
    Json gj;
    gj["name"] = g.name;
    gj["description"] = g.description;
    gj["passed"] = g.passed();
    gj["pass"] = g.pass;
    gj["fail"] = g.fail;
    gj["skip"] = g.skip;
    gj["cross_check_failure"] = g.cross_check;
    gj["seconds"] = g.seconds;
    Json fs = Json::array();
    for (const auto& f : g.failures)
      fs.push_back(Json{{"ring", f.ring}, {"detail", f.detail}, {"instance", f.instance}});
    gj["failures"] = std::move(fs);
    gs.push_back(std::move(gj));
  }
  j["groups"] = std::move(gs);
  return j;
}

SuiteResult run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options) {
  std::vector<const GroupDef*> selected;
  for (const auto& name : options.only) {
    const auto& defs = group_defs();
    auto it = std::find_if(defs.begin(), defs.end(),
                           [&](const GroupDef& d) { return name == d.name; });
    if (it == defs.end()) throw InvalidArgument("unknown suite group '" + name + "'");
  }
  for (const auto& d : group_defs())
    if (options.only.empty() ||
        std::find(options.only.begin(), options.only.end(), d.name) != options.only.end())
      selected.push_back(&d);

  SuiteResult result;
  result.rings = corpus.size();
  for (const auto* d : selected) {
    GroupResult g;
    g.name = d->name;
    g.description = d->description;
    result.groups.push_back(std::move(g));
  }

  for (const auto& entry : corpus) {
    RingContext ctx{&entry, nullptr, std::nullopt};
    for (std::size_t gi = 0; gi < selected.size(); ++gi) {
      const auto* def = selected[gi];
      auto& g = result.groups[gi];
      Recorder rec(g, entry);
      if (def->needs_ring && !entry.ring) {
        rec.skip();
        continue;
      }
      std::mt19937_64 rng(options.seed ^ fnv1a(entry.name + "/" + def->name));
      const auto t0 = std::chrono::steady_clock::now();
      try {
        def->fn(ctx, rec, options, rng, corpus);
      } catch (const CrossCheckFailure& e) {
        g.cross_check = true;
        rec.fail(std::string("cross-check failure: ") + e.what());
      } catch (const CapExceeded&) {
        rec.skip();
      } catch (const Error& e) {
        rec.fail(std::string("unexpected error: ") + e.what());
      }
      g.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  }
  return result;
}

}  // namespace gradr
