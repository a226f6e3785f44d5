#include "gradr/report.hpp"

#include <chrono>
#include <set>

#include "gradr/errors.hpp"
#include "gradr/poly.hpp"

namespace gradr {

namespace {

Json generators_json(const IdealSet& I) {
  Json j = Json::array();
  for (Elem g : homogeneous_generators(I)) j.push_back(I.ring()->coeffs(g));
  return j;
}

Json ideal_summary(const IdealSet& I) {
  return Json{{"generators", generators_json(I)}, {"elements", ideal_to_json(I)}};
}

std::optional<Elem> homogeneous_non_unit(const Ring& R) {
  for (Elem x : R.homogeneous_elements())
    if (x != R.zero() && !R.is_unit(x)) return x;
  return std::nullopt;
}

std::optional<Elem> non_unit(const Ring& R) {
  for (Elem x : R.all_elements())
    if (x != R.zero() && !R.is_unit(x)) return x;
  return std::nullopt;
}

std::optional<std::pair<Elem, Elem>> homogeneous_zero_divisors(const Ring& R) {
  const auto& h = R.homogeneous_elements();
  for (Elem x : h) {
    if (x == R.zero()) continue;
    for (Elem y : h)
      if (y != R.zero() && R.mul(x, y) == R.zero()) return std::pair{x, y};
  }
  return std::nullopt;
}

/// Smallest degree g in the support with 1 outside span(R_g R_{g^-1}).
std::optional<Degree> first_strong_obstruction(const Ring& R) {
  for (std::size_t k = 0; k < R.support().size(); ++k) {
    const Degree& g = R.support()[k];
    const auto inv = R.support_index(R.group().inverse(g));
    if (!inv) return g;
    SubgroupBuilder span(R);
    for (Elem a : R.component_elements(k))
      for (Elem b : R.component_elements(*inv)) span.add(R.mul(a, b));
    if (!span.contains(R.one())) return g;
  }
  return std::nullopt;
}

std::vector<Elem> elems_from_json(const Ring& R, const Json& j) {
  std::vector<Elem> out;
  for (const auto& v : j) out.push_back(elem_from_json(R, v));
  return out;
}

}  // namespace

Json analyze_ideal(const IdealSet& I, RadicalCache& cache) {
  const Ring& R = *I.ring();
  Json j;
  j["generators"] = generators_json(I);
  j["elements"] = ideal_to_json(I);
  j["graded"] = is_graded(I);
  if (!j["graded"].get<bool>()) {
    // Not graded: none of the graded notions apply.
    return j;
  }
  j["proper"] = I.is_proper();
  j["graded_prime"] = is_graded_prime(I);
  j["graded_maximal"] = I.is_proper() ? Json(is_graded_maximal(I)) : Json();
  auto gp = is_graded_principal(I, cache);
  j["graded_principal_witness"] = gp ? Json(R.coeffs(*gp)) : Json();
  j["certificate"] = certificate_to_json(rp_check(I, cache));
  return j;
}

Json analyze_ring(RingAnalysis& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const RingPtr& ring = a.ring();
  const Ring& R = *ring;
  Json j;
  j["ring"] = R.name();
  j["group"] = R.group().factors();
  j["element_count"] = R.size();
  Json s = Json::array();
  for (const auto& g : supp(R)) s.push_back(degree_to_json(g));
  j["supp"] = std::move(s);
  j["graded_ideal_count"] = a.lattice().size();

  Json primes = Json::array();
  for (const auto& P : a.primes()) primes.push_back(ideal_summary(P));
  j["graded_primes"] = std::move(primes);
  Json maximal = Json::array();
  for (const auto& I : a.lattice())
    if (I.is_proper() && is_graded_maximal(I)) maximal.push_back(ideal_summary(I));
  j["graded_maximal"] = std::move(maximal);

  const auto eq = rp_equivalences(a);
  Json flags;
  flags["graded_field"] = is_graded_field(R);
  flags["field"] = is_field(R);
  flags["graded_integral_domain"] = is_graded_integral_domain(R);
  flags["first_strong"] = is_first_strong(R);
  flags["graded_principal_ring"] = is_graded_principal_ring(a);
  flags["graded_radically_principal_ring"] = eq.direct;
  j["flags"] = std::move(flags);
  j["equivalences"] = Json{{"direct", eq.direct}, {"via_primes", eq.via_primes},
                           {"avoidance", eq.avoidance}};

  // Refutation witnesses for negative flags.
  Json ref = Json::object();
  if (R.is_zero_ring()) {
    ref["zero_ring"] = true;
  } else {
    if (auto x = homogeneous_non_unit(R)) ref["graded_field"] = R.coeffs(*x);
    if (auto x = non_unit(R)) ref["field"] = R.coeffs(*x);
    if (auto p = homogeneous_zero_divisors(R))
      ref["graded_integral_domain"] = Json::array({R.coeffs(p->first), R.coeffs(p->second)});
  }
  if (auto g = first_strong_obstruction(R)) ref["first_strong"] = degree_to_json(*g);
  for (const auto& I : a.lattice())
    if (!is_graded_principal(I, a.cache())) {
      ref["graded_principal_ring"] = generators_json(I);
      break;
    }
  j["refutations"] = std::move(ref);

  Json ideals = Json::array();
  for (const auto& I : a.lattice()) ideals.push_back(analyze_ideal(I, a.cache()));
  j["ideals"] = std::move(ideals);
  const auto t43 = thm43_report(a);
  j["prime_quotients"] = Json{{"all_primes_maximal", t43.all_primes_maximal},
                              {"quotients_graded_fields", t43.prime_quotients_graded_fields}};
  j["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return j;
}

std::vector<std::string> replay_report(const RingPtr& ring, const Json& report) {
  std::vector<std::string> bad;
  const Ring& R = *ring;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  try {
    expect(report.at("element_count").get<std::size_t>() == R.size(), "element_count");
    std::vector<Degree> reported_supp;
    for (const auto& d : report.at("supp")) reported_supp.push_back(degree_from_json(d));
    expect(reported_supp == supp(R), "supp");

    // Primes: each listed ideal is regenerated from its generators and must
    // be a graded prime with the listed elements; the count must match.
    std::set<std::vector<Elem>> listed;
    for (const auto& p : report.at("graded_primes")) {
      auto gens = elems_from_json(R, p.at("generators"));
      auto P = ideal_from_homogeneous_gens(ring, gens);
      expect(P.elements() == elems_from_json(R, p.at("elements")), "prime elements");
      expect(is_graded_prime(P), "listed prime is not a graded prime");
      listed.insert(P.elements());
    }
    const auto primes = graded_primes(ring);
    expect(listed.size() == primes.size(), "graded prime count");
    for (const auto& m : report.at("graded_maximal")) {
      auto M = ideal_from_homogeneous_gens(ring, elems_from_json(R, m.at("generators")));
      expect(M.is_proper() && is_graded_maximal(M), "listed maximal ideal is not maximal");
    }

    const auto& flags = report.at("flags");
    const auto& ref = report.at("refutations");
    auto check_flag = [&](const char* name, bool actual) {
      expect(flags.at(name).get<bool>() == actual, std::string("flag ") + name);
    };
    check_flag("graded_field", is_graded_field(R));
    check_flag("field", is_field(R));
    check_flag("graded_integral_domain", is_graded_integral_domain(R));
    check_flag("first_strong", is_first_strong(R));
    if (!R.is_zero_ring()) {
      if (ref.contains("graded_field")) {
        Elem x = elem_from_json(R, ref["graded_field"]);
        expect(R.is_homogeneous(x) && x != R.zero() && !R.is_unit(x),
               "graded_field refutation");
      }
      if (ref.contains("field")) {
        Elem x = elem_from_json(R, ref["field"]);
        expect(x != R.zero() && !R.is_unit(x), "field refutation");
      }
      if (ref.contains("graded_integral_domain")) {
        Elem x = elem_from_json(R, ref["graded_integral_domain"].at(0));
        Elem y = elem_from_json(R, ref["graded_integral_domain"].at(1));
        expect(R.is_homogeneous(x) && R.is_homogeneous(y) && x != R.zero() &&
                   y != R.zero() && R.mul(x, y) == R.zero(),
               "graded_integral_domain refutation");
      }
    }
    if (ref.contains("graded_principal_ring")) {
      auto I = ideal_from_homogeneous_gens(ring, elems_from_json(R, ref["graded_principal_ring"]));
      expect(!is_graded_principal(I), "graded_principal_ring refutation");
      expect(!flags.at("graded_principal_ring").get<bool>(), "flag graded_principal_ring");
    }

    // Certificates: every RP verdict is re-established from the witness with
    // fresh radical computations.
    bool all_rp = true;
    std::size_t graded_count = 0;
    for (const auto& entry : report.at("ideals")) {
      auto I = ideal_from_elements(ring, elems_from_json(R, entry.at("elements")));
      if (!entry.at("graded").get<bool>()) {
        expect(!is_graded(I), "ideal reported non-graded is graded");
        continue;
      }
      ++graded_count;
      expect(is_graded(I), "ideal reported graded is not graded");
      expect(entry.at("graded_prime").get<bool>() == is_graded_prime(I), "ideal prime flag");
      const auto& gpw = entry.at("graded_principal_witness");
      if (!gpw.is_null()) {
        Elem c = elem_from_json(R, gpw);
        expect(R.is_homogeneous(c) && ideal_from_homogeneous_gens(ring, {&c, 1}) == I,
               "graded principal witness");
      }
      const auto& cert = entry.at("certificate");
      const bool positive = cert.at("status").get<std::string>() == "RadicallyPrincipal";
      all_rp = all_rp && positive;
      if (positive) {
        const auto rad = grad(I).radical;
        for (const char* key : {"witness", "witness_in_ideal"}) {
          Elem c = elem_from_json(R, cert.at(key));
          expect(R.is_homogeneous(c), std::string(key) + " not homogeneous");
          expect(grad(ideal_from_homogeneous_gens(ring, {&c, 1})).radical == rad,
                 std::string(key) + " does not certify " + I.to_string());
          if (std::string(key) == "witness_in_ideal")
            expect(I.contains(c), "witness_in_ideal outside the ideal");
        }
        expect(elems_from_json(R, cert.at("radical").at("radical")) == rad.elements(),
               "reported radical");
      }
    }
    const auto lattice_size = enumerate_graded_ideals(ring).size();
    expect(graded_count == lattice_size, "graded ideal count");
    expect(report.at("graded_ideal_count").get<std::size_t>() == lattice_size,
           "graded_ideal_count");
    expect(flags.at("graded_radically_principal_ring").get<bool>() == all_rp,
           "flag graded_radically_principal_ring");
  } catch (const Json::exception& e) {
    bad.push_back(std::string("malformed report: ") + e.what());
  }
  return bad;
}

}  // namespace gradr
