#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gradr/constructions.hpp"
#include "gradr/errors.hpp"
#include "gradr/rp.hpp"
#include "helpers.hpp"

using namespace gradr;
using testing_support::el;
using testing_support::gens;

TEST(RpCheck, NilpotentExample) {
  auto R = example_2_3(2);
  const auto P = gens(R, {{0, 1, 0}, {0, 0, 1}});
  auto c = rp_check(P);
  ASSERT_TRUE(c.radically_principal);
  EXPECT_EQ(*c.witness, R->zero());
  EXPECT_EQ(*c.witness_in_ideal, R->zero());

  auto whole = rp_check(unit_ideal(R));
  ASSERT_TRUE(whole.radically_principal);
  EXPECT_EQ(*whole.witness, R->one());

  auto x = rp_check(gens(R, {{0, 1, 0}}));
  ASSERT_TRUE(x.radically_principal);
  EXPECT_EQ(*x.witness, R->zero());
}

TEST(RpCheck, AllWitnessesAreExactlyTheCertifyingElements) {
  auto R = example_2_3(3);
  RadicalCache cache(R);
  for (const auto& I : enumerate_graded_ideals(R)) {
    const auto c = rp_check(I, cache);
    const auto& rad = grad(I).radical;
    std::vector<Elem> want;
    for (Elem h : R->homogeneous_elements())
      if (grad(ideal_from_homogeneous_gens(R, {&h, 1})).radical == rad) want.push_back(h);
    auto got = c.all_witnesses;
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, want);
  }
}

TEST(RpCheck, RejectsNonGraded) {
  auto F = graded_field_F(3);
  const Elem a = el(F, {1, 1});
  EXPECT_THROW(rp_check(ideal_from_arbitrary_gens(F, {&a, 1})), NotGraded);
}

TEST(RpCheck, TamperedCertificateFailsVerification) {
  auto R = example_2_3(2);
  auto c = rp_check(gens(R, {{0, 1, 0}}));
  ASSERT_TRUE(verify_certificate(c));
  c.witness = R->one();
  EXPECT_FALSE(verify_certificate(c));
}

TEST(RpCheck, CertificatesSoundOnCorpus) {
  for (const auto& e : testing_support::corpus()) {
    RingAnalysis a(e.ring);
    for (const auto& I : a.lattice()) {
      const auto c = rp_check(I, a.cache());
      ASSERT_TRUE(c.radically_principal) << e.name;
      ASSERT_TRUE(verify_certificate(c)) << e.name;
      ASSERT_TRUE(c.witness_in_ideal && I.contains(*c.witness_in_ideal)) << e.name;
      // Literal form for radical ideals: I is the radical of <c>.
      if (grad(I).radical == I) {
        const Elem w = *c.witness_in_ideal;
        ASSERT_EQ(grad(ideal_from_homogeneous_gens(e.ring, {&w, 1})).radical, I) << e.name;
      }
    }
  }
}

TEST(GradedPrincipal, Examples) {
  auto R = example_2_3(2);
  EXPECT_FALSE(is_graded_principal(gens(R, {{0, 1, 0}, {0, 0, 1}})));
  EXPECT_EQ(is_graded_principal(gens(R, {{0, 1, 0}})), el(R, {0, 1, 0}));
  EXPECT_EQ(is_graded_principal(zero_ideal(R)), R->zero());
}

TEST(GradedPrincipal, ImpliesRadicallyPrincipal) {
  for (const auto& e : testing_support::corpus()) {
    RingAnalysis a(e.ring);
    for (const auto& I : a.lattice())
      if (auto c = is_graded_principal(I, a.cache())) {
        EXPECT_EQ(ideal_from_homogeneous_gens(e.ring, {&*c, 1}), I);
        EXPECT_TRUE(rp_check(I, a.cache()).radically_principal);
      }
  }
}

TEST(RingLevel, NilpotentExampleAndGradedField) {
  RingAnalysis a(example_2_3(2));
  EXPECT_TRUE(ring_rp_direct(a));
  EXPECT_TRUE(ring_rp_via_primes(a));
  EXPECT_TRUE(avoidance_condition(a));
  EXPECT_FALSE(is_graded_principal_ring(a));
  RingAnalysis f(graded_field_F(3));
  EXPECT_TRUE(ring_rp_direct(f));
  EXPECT_TRUE(ring_rp_via_primes(f));
  EXPECT_TRUE(is_graded_principal_ring(f));
}

TEST(RingLevel, AvoidanceConditionExamples) {
  RingAnalysis z6(cyclic(6));
  EXPECT_TRUE(avoidance_condition(z6));
  RingAnalysis f2f2(direct_product({cyclic(2), cyclic(2)}).ring);
  EXPECT_TRUE(avoidance_condition(f2f2));
}

TEST(RingLevel, ThreeCharacterizationsAgreeOnCorpus) {
  for (const auto& e : testing_support::corpus()) {
    RingAnalysis a(e.ring);
    const auto r = rp_equivalences(a);
    EXPECT_TRUE(r.direct && r.via_primes && r.avoidance) << e.name;
  }
  for (const auto& e : random_corpus(11, 30)) {
    RingAnalysis a(e.ring);
    const auto r = rp_equivalences(a);
    EXPECT_TRUE(r.direct && r.via_primes && r.avoidance) << e.name;
  }
}

TEST(AvoidanceProperty, Examples) {
  auto R = example_2_3(2);
  const auto P = gens(R, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(avoidance_property(P, {P}), 0u);
  auto Z6 = cyclic(6);
  EXPECT_FALSE(avoidance_property(gens(Z6, {{2}}), {gens(Z6, {{3}})}).has_value());
  EXPECT_THROW(avoidance_property(zero_ideal(R), {P}), NotPrime);
  EXPECT_THROW(avoidance_property(P, {zero_ideal(R)}), NotPrime);
}

TEST(AvoidanceProperty, AllPrimeFamiliesOnCorpus) {
  for (const auto& e : testing_support::corpus()) {
    const auto primes = graded_primes(e.ring);
    if (primes.size() > 8) continue;
    for (const auto& P : primes)
      for (std::uint32_t m = 0; m < (1u << primes.size()); ++m) {
        std::vector<IdealSet> family;
        for (std::size_t i = 0; i < primes.size(); ++i)
          if ((m >> i) & 1U) family.push_back(primes[i]);
        bool covered = true;
        for (Elem x : P.elements()) {
          bool hit = false;
          for (const auto& K : family) hit = hit || K.contains(x);
          covered = covered && hit;
        }
        const auto idx = avoidance_property(P, family);
        EXPECT_EQ(idx.has_value(), covered) << e.name;
        if (idx) EXPECT_TRUE(P.subset_of(family[*idx])) << e.name;
      }
  }
}

TEST(ProductRadicals, NilpotentExample) {
  auto R = example_2_3(2);
  RadicalCache cache(R);
  const auto I = gens(R, {{0, 1, 0}});
  const auto J = gens(R, {{0, 0, 1}});
  const auto r = prop25_check(I, J, cache);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.xy, R->zero());
  const auto w = prop25_check(unit_ideal(R), unit_ideal(R), cache);
  EXPECT_TRUE(w.ok());
  EXPECT_EQ(w.xy, R->one());
}

TEST(ProductRadicals, RandomPairsOnCorpus) {
  std::mt19937_64 rng(5);
  std::size_t pairs = 0;
  for (const auto& e : testing_support::corpus()) {
    RingAnalysis a(e.ring);
    const auto& L = a.lattice();
    std::uniform_int_distribution<std::size_t> d(0, L.size() - 1);
    for (int t = 0; t < 6; ++t) {
      const auto r = prop25_check(L[d(rng)], L[d(rng)], a.cache());
      EXPECT_TRUE(r.ok()) << e.name << ": " << r.note;
      ++pairs;
    }
  }
  EXPECT_GE(pairs, 200u);
}

TEST(RadicalCache, IdsIdentifyEqualRadicals) {
  auto R = example_2_3(3);
  RadicalCache cache(R);
  const auto L = enumerate_graded_ideals(R);
  for (const auto& I : L)
    for (const auto& J : L)
      EXPECT_EQ(cache.radical_id(I) == cache.radical_id(J),
                grad(I).radical == grad(J).radical);
}
