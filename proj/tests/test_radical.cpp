#include <gtest/gtest.h>

#include <algorithm>

#include "gradr/constructions.hpp"
#include "gradr/errors.hpp"
#include "gradr/radical.hpp"
#include "helpers.hpp"

using namespace gradr;
using testing_support::el;
using testing_support::gens;
using testing_support::to_set;

TEST(Grad, NilpotentExample) {
  auto R = example_2_3(2);
  const auto P = gens(R, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(grad(zero_ideal(R)).radical, P);
  EXPECT_EQ(grad(gens(R, {{0, 1, 0}})).radical, P);
  const auto whole = grad(unit_ideal(R));
  EXPECT_TRUE(whole.radical.is_whole_ring());
  EXPECT_TRUE(whole.improper_input);
}

TEST(Grad, RejectsNonGraded) {
  auto F = graded_field_F(3);
  const Elem a = el(F, {1, 1});
  EXPECT_THROW(grad(ideal_from_arbitrary_gens(F, {&a, 1})), NotGraded);
}

TEST(Grad, ExponentMapIsLeast) {
  for (const auto& e : testing_support::corpus()) {
    if (e.ring->size() > 1024) continue;
    const Ring& R = *e.ring;
    for (const auto& I : enumerate_graded_ideals(e.ring)) {
      const auto rc = grad(I);
      ASSERT_EQ(rc.exponent_map.size(), rc.homogeneous_roots.size());
      for (const auto& [a, n] : rc.exponent_map) {
        ASSERT_GE(n, 1u);
        ASSERT_TRUE(I.contains(R.pow(a, n))) << e.name;
        if (n > 1) ASSERT_FALSE(I.contains(R.pow(a, n - 1))) << e.name;
      }
    }
  }
}

TEST(Grad, MatchesPowerOracle) {
  for (const auto& e : testing_support::small_corpus(64)) {
    oracle::NaiveRing N(e.ring->presentation());
    for (const auto& I : enumerate_graded_ideals(e.ring))
      ASSERT_EQ(to_set(grad(I).radical), N.graded_radical(to_set(I))) << e.name;
  }
}

TEST(Grad, Properties) {
  for (const auto& e : testing_support::corpus()) {
    const auto L = enumerate_graded_ideals(e.ring);
    const auto primes = graded_primes(L);
    for (const auto& I : L) {
      const auto rad = grad(I).radical;
      ASSERT_TRUE(I.subset_of(rad)) << e.name;
      ASSERT_TRUE(is_graded(rad)) << e.name;
      ASSERT_EQ(grad(rad).radical, rad) << e.name;
      IdealSet meet = unit_ideal(e.ring);
      for (const auto& P : primes)
        if (I.subset_of(P)) meet = ideal_intersection(meet, P);
      ASSERT_EQ(rad, meet) << e.name << " " << I.to_string();
    }
    if (L.size() > 40) continue;
    for (const auto& I : L)
      for (const auto& J : L)
        if (I.subset_of(J)) ASSERT_TRUE(grad(I).radical.subset_of(grad(J).radical));
  }
}

TEST(Prime, Examples) {
  auto R = example_2_3(2);
  EXPECT_TRUE(is_graded_prime(gens(R, {{0, 1, 0}, {0, 0, 1}})));
  EXPECT_FALSE(is_graded_prime(zero_ideal(R)));
  EXPECT_FALSE(is_graded_prime(unit_ideal(R)));
  EXPECT_TRUE(is_graded_prime(zero_ideal(graded_field_F(3))));
}

TEST(Maximal, Examples) {
  auto R = example_2_3(2);
  EXPECT_TRUE(is_graded_maximal(gens(R, {{0, 1, 0}, {0, 0, 1}})));
  EXPECT_FALSE(is_graded_maximal(gens(R, {{0, 1, 0}})));
  EXPECT_TRUE(is_graded_maximal(zero_ideal(graded_field_F(3))));
  EXPECT_THROW(is_graded_maximal(unit_ideal(R)), NotProper);
}

TEST(GradedPrimes, Examples) {
  auto R = example_2_3(2);
  auto ps = graded_primes(R);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0], gens(R, {{0, 1, 0}, {0, 0, 1}}));
  auto F = graded_field_F(3);
  auto pf = graded_primes(F);
  ASSERT_EQ(pf.size(), 1u);
  EXPECT_TRUE(pf[0].is_zero());
  auto Z6 = cyclic(6);
  auto pz = graded_primes(Z6);
  ASSERT_EQ(pz.size(), 2u);
  EXPECT_EQ(pz[0], gens(Z6, {{2}}));
  EXPECT_EQ(pz[1], gens(Z6, {{3}}));
}

TEST(GradedPrimes, MatchOracle) {
  for (const auto& e : testing_support::small_corpus(64)) {
    oracle::NaiveRing N(e.ring->presentation());
    const auto oracle_lattice = N.graded_ideals();
    for (const auto& I : enumerate_graded_ideals(e.ring)) {
      ASSERT_EQ(is_graded_prime(I), N.is_graded_prime(to_set(I))) << e.name;
      if (!I.is_proper()) continue;
      // Maximal among proper graded ideals, by the oracle lattice.
      bool maximal = true;
      const auto Is = to_set(I);
      for (const auto& J : oracle_lattice)
        if (J.size() < N.elements().size() && J.size() > I.size() &&
            std::includes(J.begin(), J.end(), Is.begin(), Is.end()))
          maximal = false;
      ASSERT_EQ(is_graded_maximal(I), maximal) << e.name;
    }
  }
}

TEST(FieldPredicates, Examples) {
  auto F = graded_field_F(3);
  EXPECT_TRUE(is_graded_field(*F));
  EXPECT_FALSE(is_field(*F));
  EXPECT_TRUE(is_graded_integral_domain(*F));
  EXPECT_FALSE(is_graded_field(*example_2_3(2)));
  auto F5 = cyclic(5);
  EXPECT_TRUE(is_graded_field(*F5));
  EXPECT_TRUE(is_field(*F5));
  EXPECT_TRUE(is_graded_integral_domain(*F5));
  auto Z = zero_ring(GradingGroup({0}));
  EXPECT_FALSE(is_graded_field(*Z));
  EXPECT_FALSE(is_field(*Z));
  EXPECT_FALSE(is_graded_integral_domain(*Z));
}

TEST(FieldPredicates, GradedFieldZeroDivisorPair) {
  auto F = graded_field_F(3);
  const Elem a = el(F, {1, 1});
  const Elem b = el(F, {1, 2});  // 1 - u
  EXPECT_EQ(F->mul(a, b), F->zero());
  EXPECT_FALSE(F->is_unit(a));
}

TEST(FieldPredicates, MatchOracle) {
  for (const auto& e : testing_support::small_corpus(64)) {
    oracle::NaiveRing N(e.ring->presentation());
    EXPECT_EQ(is_graded_field(*e.ring), N.is_graded_field()) << e.name;
    EXPECT_EQ(is_field(*e.ring), N.is_field()) << e.name;
    EXPECT_EQ(is_graded_integral_domain(*e.ring), N.is_graded_domain()) << e.name;
    EXPECT_EQ(is_first_strong(*e.ring), N.is_first_strong(e.ring->group())) << e.name;
  }
}

TEST(FirstStrong, Examples) {
  auto F = graded_field_F(3);
  EXPECT_EQ(supp(*F), (std::vector<Degree>{Degree{{0}}, Degree{{1}}}));
  EXPECT_TRUE(is_first_strong(*F));
  auto R = example_2_3(2);
  EXPECT_EQ(supp(*R), (std::vector<Degree>{Degree{{0}}, Degree{{1}}}));
  EXPECT_FALSE(is_first_strong(*R));
  EXPECT_TRUE(is_first_strong(*group_ring(2, 3)));
}

TEST(FirstStrong, BothRoutesAgreeOnCorpus) {
  for (const auto& e : testing_support::corpus()) {
    EXPECT_EQ(first_strong_by_definition(*e.ring), first_strong_by_characterization(*e.ring))
        << e.name;
    if (is_graded_field(*e.ring)) EXPECT_TRUE(is_first_strong(*e.ring)) << e.name;
  }
}

TEST(DomainCollapse, FiniteGradedDomainsAreGradedFields) {
  for (const auto& e : testing_support::corpus()) {
    if (is_graded_integral_domain(*e.ring)) EXPECT_TRUE(is_graded_field(*e.ring)) << e.name;
    for (const auto& P : graded_primes(e.ring)) {
      const auto q = quotient(P);
      EXPECT_TRUE(is_graded_integral_domain(*q.ring)) << e.name;
      if (is_graded_maximal(P)) EXPECT_TRUE(is_graded_field(*q.ring)) << e.name;
    }
  }
}

TEST(HomogeneousResidues, OnePerNonzeroClass) {
  auto R = example_2_3(3);
  auto I = gens(R, {{0, 1, 0}});
  // R/<x> has nonzero homogeneous classes: 2 in degree 0, 2 in degree 1.
  EXPECT_EQ(homogeneous_residues(I).size(), 4u);
}
