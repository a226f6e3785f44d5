#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gradr/constructions.hpp"
#include "gradr/errors.hpp"
#include "gradr/ideal.hpp"
#include "helpers.hpp"

using namespace gradr;
using testing_support::el;
using testing_support::gens;
using testing_support::to_set;

TEST(IdealFromHomogeneousGens, NilpotentExample) {
  auto R = example_2_3(2);
  EXPECT_EQ(to_set(gens(R, {{0, 1, 0}})), (oracle::Set{{0, 0, 0}, {0, 1, 0}}));
  EXPECT_TRUE(gens(R, {{1, 0, 0}}).is_whole_ring());
  EXPECT_EQ(to_set(gens(R, {{0, 1, 0}, {0, 0, 1}})),
            (oracle::Set{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}}));
}

TEST(IdealFromHomogeneousGens, RejectsMixedGenerator) {
  auto R = example_2_3(2);
  EXPECT_THROW(gens(R, {{1, 1, 0}}), NotHomogeneous);
}

TEST(IdealFromArbitraryGens, Examples) {
  auto F = graded_field_F(3);
  const Elem a = el(F, {1, 1});
  auto I = ideal_from_arbitrary_gens(F, {&a, 1});
  EXPECT_EQ(to_set(I), (oracle::Set{{0, 0}, {1, 1}, {2, 2}}));
  EXPECT_FALSE(is_graded(I));
  EXPECT_TRUE(ideal_from_arbitrary_gens(F, {}).is_zero());
  auto R = example_2_3(2);
  const Elem b = el(R, {1, 1, 0});
  EXPECT_TRUE(ideal_from_arbitrary_gens(R, {&b, 1}).is_whole_ring());
}

TEST(IsGraded, Examples) {
  auto F = graded_field_F(3);
  EXPECT_FALSE(is_graded(ideal_from_elements(F, {el(F, {0, 0}), el(F, {1, 1}), el(F, {2, 2})})));
  EXPECT_TRUE(is_graded(zero_ideal(F)));
  auto R = example_2_3(2);
  EXPECT_TRUE(is_graded(gens(R, {{0, 1, 1}})));
}

TEST(IdealFromElements, RejectsNonIdeal) {
  auto R = example_2_3(2);
  EXPECT_THROW(ideal_from_elements(R, {R->zero(), el(R, {0, 1, 0}), el(R, {0, 0, 1})}),
               InvalidArgument);
  EXPECT_THROW(ideal_from_elements(R, {R->zero(), R->one()}), InvalidArgument);
}

TEST(IdealArithmetic, NilpotentExample) {
  auto R = example_2_3(2);
  auto X = gens(R, {{0, 1, 0}});
  auto Y = gens(R, {{0, 0, 1}});
  EXPECT_EQ(ideal_sum(X, Y), gens(R, {{0, 1, 0}, {0, 0, 1}}));
  EXPECT_TRUE(ideal_product(X, Y).is_zero());
  EXPECT_TRUE(ideal_intersection(X, Y).is_zero());
  for (const auto& K : {ideal_sum(X, Y), ideal_product(X, Y), ideal_intersection(X, Y)})
    EXPECT_TRUE(is_graded(K));
}

TEST(IdealArithmetic, RingMismatch) {
  auto R = example_2_3(2);
  auto S = example_2_3(2);
  EXPECT_THROW(ideal_sum(zero_ideal(R), zero_ideal(S)), RingMismatch);
}

TEST(IdealArithmetic, ProductMatchesOracle) {
  for (const auto& e : testing_support::small_corpus(32)) {
    const auto L = enumerate_graded_ideals(e.ring);
    oracle::NaiveRing N(e.ring->presentation());
    for (const auto& I : L)
      for (const auto& J : L) {
        std::vector<oracle::V> prods;
        for (auto x : to_set(I))
          for (auto y : to_set(J)) prods.push_back(N.mul(x, y));
        ASSERT_EQ(to_set(ideal_product(I, J)), N.span(prods)) << e.name;
        oracle::Set meet;
        for (auto x : to_set(I))
          if (to_set(J).count(x)) meet.insert(x);
        ASSERT_EQ(to_set(ideal_intersection(I, J)), meet) << e.name;
      }
  }
}

TEST(Lattice, NilpotentExampleAndFields) {
  auto R = example_2_3(2);
  const auto L = enumerate_graded_ideals(R);
  ASSERT_EQ(L.size(), 6u);
  std::set<oracle::Set> got;
  for (const auto& I : L) got.insert(to_set(I));
  std::set<oracle::Set> want;
  for (auto I : {zero_ideal(R), gens(R, {{0, 1, 0}}), gens(R, {{0, 0, 1}}), gens(R, {{0, 1, 1}}),
                 gens(R, {{0, 1, 0}, {0, 0, 1}}), unit_ideal(R)})
    want.insert(to_set(I));
  EXPECT_EQ(got, want);
  EXPECT_EQ(enumerate_graded_ideals(graded_field_F(3)).size(), 2u);
  EXPECT_EQ(enumerate_graded_ideals(cyclic(5)).size(), 2u);
}

TEST(Lattice, SortedByCanonicalElementList) {
  for (const auto& e : testing_support::corpus()) {
    const auto L = enumerate_graded_ideals(e.ring);
    for (std::size_t i = 1; i < L.size(); ++i)
      ASSERT_LT(L[i - 1].elements(), L[i].elements()) << e.name;
  }
}

// The BFS lattice equals the graded ideals among all additive subgroups.
TEST(Lattice, MatchesSubgroupOracle) {
  std::size_t checked = 0;
  for (const auto& e : testing_support::small_corpus(64)) {
    oracle::NaiveRing N(e.ring->presentation());
    std::set<oracle::Set> want;
    for (auto& I : N.graded_ideals()) want.insert(I);
    std::set<oracle::Set> got;
    for (const auto& I : enumerate_graded_ideals(e.ring)) got.insert(to_set(I));
    EXPECT_EQ(got, want) << e.name;
    ++checked;
  }
  EXPECT_GE(checked, 20u);
}

TEST(Lattice, ClosedUnderSumProductIntersection) {
  for (const auto& e : testing_support::corpus()) {
    if (e.ring->size() > 1024) continue;
    const auto L = enumerate_graded_ideals(e.ring);
    std::set<std::vector<Elem>> members;
    for (const auto& I : L) members.insert(I.elements());
    for (const auto& I : L)
      for (const auto& J : L)
        for (const auto& K : {ideal_sum(I, J), ideal_product(I, J), ideal_intersection(I, J)}) {
          ASSERT_TRUE(is_graded(K)) << e.name;
          ASSERT_TRUE(members.count(K.elements())) << e.name;
        }
  }
}

TEST(Lattice, EachIdealGeneratedByItsHomogeneousMembers) {
  for (const auto& e : testing_support::corpus())
    for (const auto& I : enumerate_graded_ideals(e.ring)) {
      std::vector<Elem> h;
      for (Elem x : I.elements())
        if (e.ring->is_homogeneous(x)) h.push_back(x);
      ASSERT_EQ(ideal_from_homogeneous_gens(e.ring, h), I) << e.name;
      const auto g = homogeneous_generators(I);
      ASSERT_EQ(ideal_from_homogeneous_gens(e.ring, g), I) << e.name;
    }
}

TEST(Lattice, ContainsZeroAndSitsInsideR) {
  for (const auto& e : testing_support::corpus()) {
    const auto L = enumerate_graded_ideals(e.ring);
    ASSERT_FALSE(L.empty());
    EXPECT_TRUE(L.front().is_zero()) << e.name;
    EXPECT_EQ(std::count_if(L.begin(), L.end(),
                            [](const IdealSet& I) { return I.is_whole_ring(); }),
              1)
        << e.name;
    for (const auto& I : L) {
      EXPECT_TRUE(I.contains(e.ring->zero()));
      EXPECT_TRUE(zero_ideal(e.ring).subset_of(I));
    }
  }
}

TEST(Lattice, CapExceeded) {
  auto R = truncated_poly(example_2_3(2), 3, Degree{{1}});
  auto p = R->presentation();
  EXPECT_THROW(Ring::create(p, 4095), CapExceeded);
}

TEST(Extend, AddsOneElement) {
  auto R = example_2_3(3);
  auto I = extend(zero_ideal(R), el(R, {0, 1, 0}));
  EXPECT_EQ(I.size(), 3u);
  EXPECT_EQ(extend(I, el(R, {0, 0, 1})).size(), 9u);
}

TEST(IdentityDegreeUnits, GradedField) {
  auto F = graded_field_F(3);
  EXPECT_EQ(identity_degree_units(*F).size(), 2u);
}
