#include <gtest/gtest.h>

#include <algorithm>

#include "gradr/constructions.hpp"
#include "gradr/errors.hpp"
#include "gradr/ring.hpp"
#include "helpers.hpp"

using namespace gradr;
using testing_support::el;

namespace {

bool has_violation(const ValidationReport& r, const std::string& axiom,
                   std::vector<std::size_t> indices) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) {
    return v.axiom == axiom && v.indices == indices;
  });
}

}  // namespace

TEST(Validate, NilpotentExampleIsValid) {
  auto p = example_2_3(2)->presentation();
  EXPECT_TRUE(validate(p).ok());
  EXPECT_EQ(*element_count(p), 8u);
}

TEST(Validate, DegreeMismatchIsGradingViolation) {
  auto p = example_2_3(2)->presentation();
  p.mul[1][1] = {0, 0, 1};  // x*x = y, but deg y = 1 while deg x^2 = 2
  const auto r = validate(p);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_violation(r, "GradingViolation", {1, 1}));
  EXPECT_NE(r.to_string().find("GradingViolation"), std::string::npos);
}

TEST(Validate, OrderCompatibility) {
  RingPresentation p;
  p.name = "bad";
  p.group = GradingGroup();
  p.basis = {{"1", 4, Degree{}}, {"t", 2, Degree{}}};
  // t*t = 1: then 0 = (2t)t = 2 in a slot of order 4.
  p.mul = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
  p.one = {1, 0};
  const auto r = validate(p);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(),
                          [](const Violation& v) { return v.axiom == "OrderCompatibility"; }));
}

TEST(Validate, CommutativityAndUnity) {
  auto p = example_2_3(3)->presentation();
  p.mul[1][2] = {0, 1, 0};
  p.mul[2][1] = {0, 0, 0};
  EXPECT_TRUE(has_violation(validate(p), "Commutativity", {1, 2}));
  auto q = example_2_3(3)->presentation();
  q.one = {1, 1, 0};
  const auto r = validate(q);
  EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(), [](const Violation& v) {
    return v.axiom == "UnityDegree" || v.axiom == "UnityIdentity";
  }));
}

TEST(Validate, AssociativityFailureDetected) {
  // Z/2 span of 1, a, b with a*a = b, a*b = a, b*b = 0 is not associative:
  // (a*a)*b = b*b = 0 but a*(a*b) = a*a = b.
  RingPresentation p;
  p.name = "nonassoc";
  p.group = GradingGroup();
  p.basis = {{"1", 2, Degree{}}, {"a", 2, Degree{}}, {"b", 2, Degree{}}};
  p.mul = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
           {{0, 1, 0}, {0, 0, 1}, {0, 1, 0}},
           {{0, 0, 1}, {0, 1, 0}, {0, 0, 0}}};
  p.one = {1, 0, 0};
  const auto r = validate(p);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().axiom, "Associativity");
}

TEST(Validate, CapExceeded) {
  auto p = example_2_3(5)->presentation();
  EXPECT_THROW(validate(p, 100), CapExceeded);
  EXPECT_THROW(Ring::create(p, 100), CapExceeded);
  EXPECT_NO_THROW(Ring::create(p, 125));
}

TEST(Validate, CreateRejectsInvalid) {
  auto p = example_2_3(2)->presentation();
  p.mul[1][1] = {0, 0, 1};
  EXPECT_THROW(Ring::create(p), ValidationError);
}

TEST(Validate, AllCorpusPresentationsValid) {
  for (const auto& e : testing_support::corpus())
    EXPECT_TRUE(validate(e.ring->presentation()).ok()) << e.name;
}

TEST(Elements, Counts) {
  EXPECT_EQ(example_2_3(2)->all_elements().size(), 8u);
  EXPECT_EQ(graded_field_F(3)->all_elements().size(), 9u);
  EXPECT_EQ(cyclic(2)->all_elements().size(), 2u);
}

TEST(Elements, EnumerationIsLexicographic) {
  auto R = example_2_3(3);
  Coeffs prev;
  bool first = true;
  for (Elem x : R->all_elements()) {
    auto c = R->coeffs(x);
    if (!first) EXPECT_LT(prev, c);
    prev = c;
    first = false;
  }
}

TEST(Components, NilpotentExample) {
  auto R = example_2_3(2);
  auto c = R->components(el(R, {1, 1, 0}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.at(Degree{{0}}), R->one());
  EXPECT_EQ(c.at(Degree{{1}}), el(R, {0, 1, 0}));
  EXPECT_TRUE(R->components(R->zero()).empty());
}

TEST(Components, GradedField) {
  auto F = graded_field_F(3);
  auto c = F->components(el(F, {2, 1}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.at(Degree{{0}}), el(F, {2, 0}));
  EXPECT_EQ(c.at(Degree{{1}}), el(F, {0, 1}));
}

TEST(Homogeneity, NilpotentExample) {
  auto R = example_2_3(2);
  EXPECT_TRUE(R->is_homogeneous(el(R, {0, 1, 1})));
  EXPECT_EQ(R->degree_of(el(R, {0, 1, 1})), Degree{{1}});
  EXPECT_FALSE(R->is_homogeneous(el(R, {1, 1, 0})));
  EXPECT_TRUE(R->is_homogeneous(R->zero()));
  EXPECT_FALSE(R->degree_of(R->zero()).has_value());
}

TEST(Units, GradedFieldAndNilpotentExample) {
  auto F = graded_field_F(3);
  auto inv = F->is_unit(el(F, {0, 1}));
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, el(F, {0, 1}));
  EXPECT_FALSE(F->is_unit(el(F, {1, 1})));
  auto R = example_2_3(2);
  EXPECT_FALSE(R->is_unit(el(R, {0, 1, 0})));
  auto inv2 = R->is_unit(el(R, {1, 1, 0}));
  ASSERT_TRUE(inv2);
  EXPECT_EQ(*inv2, el(R, {1, 1, 0}));
}

TEST(Elements, ToString) {
  auto R = example_2_3(3);
  EXPECT_EQ(R->to_string(R->zero()), "0");
  EXPECT_EQ(R->to_string(el(R, {1, 1, 0})), "1+x");
  EXPECT_EQ(R->to_string(el(R, {0, 0, 2})), "2*y");
}

TEST(Elements, FromCoeffsReducesAndChecksLength) {
  auto R = example_2_3(3);
  EXPECT_EQ(el(R, {4, -1, 3}), el(R, {1, 2, 0}));
  EXPECT_THROW(R->from_coeffs(Coeffs{1, 0}), InvalidArgument);
}

TEST(PowerTail, DetectsEventualCycle) {
  auto R = cyclic(12);
  auto tail = R->power_tail(el(R, {2}));
  // 2, 4, 8, 4, ... : 4 = 2^2 is the first power that comes back.
  std::vector<Elem> t(tail.begin(), tail.end());
  EXPECT_EQ(t, (std::vector<Elem>{el(R, {2}), el(R, {4})}));
  auto E = example_2_3(2);
  EXPECT_THROW(E->power_tail(el(E, {1, 1, 0})), NotHomogeneous);
}

// Arithmetic agrees with the naive oracle on every small corpus ring.
TEST(Properties, ArithmeticMatchesOracle) {
  for (const auto& e : testing_support::small_corpus()) {
    const auto& R = *e.ring;
    oracle::NaiveRing N(R.presentation());
    ASSERT_EQ(N.elements().size(), R.size()) << e.name;
    for (Elem x : R.all_elements()) {
      EXPECT_EQ(R.coeffs(x), N.elements()[x.id]) << e.name;
      for (Elem y : R.all_elements()) {
        ASSERT_EQ(R.coeffs(R.add(x, y)), N.add(R.coeffs(x), R.coeffs(y))) << e.name;
        ASSERT_EQ(R.coeffs(R.mul(x, y)), N.mul(R.coeffs(x), R.coeffs(y))) << e.name;
      }
    }
  }
}

TEST(Properties, DecompositionRoundTripsAndMerges) {
  for (const auto& e : testing_support::corpus()) {
    const auto& R = *e.ring;
    if (R.size() > 1024) continue;
    for (Elem x : R.all_elements()) {
      Elem sum = R.zero();
      for (const auto& [g, c] : R.components(x)) {
        ASSERT_NE(c, R.zero());
        ASSERT_EQ(R.degree_of(c), g);
        sum = R.add(sum, c);
      }
      ASSERT_EQ(sum, x) << e.name;
    }
    // components(x + y) merges componentwise.
    const auto all = R.all_elements();
    for (std::size_t i = 0; i < all.size(); i += 7)
      for (std::size_t j = 0; j < all.size(); j += 11) {
        auto cx = R.components(all[i]);
        for (const auto& [g, c] : R.components(all[j])) {
          auto [it, fresh] = cx.try_emplace(g, c);
          if (!fresh) it->second = R.add(it->second, c);
        }
        std::erase_if(cx, [&](const auto& kv) { return kv.second == R.zero(); });
        ASSERT_EQ(cx, R.components(R.add(all[i], all[j]))) << e.name;
      }
  }
}

TEST(Properties, HomogeneousProductsHaveProductDegree) {
  for (const auto& e : testing_support::corpus()) {
    const auto& R = *e.ring;
    if (R.size() > 1024) continue;
    for (Elem x : R.homogeneous_elements())
      for (Elem y : R.homogeneous_elements()) {
        const Elem xy = R.mul(x, y);
        if (xy == R.zero()) continue;
        ASSERT_TRUE(R.is_homogeneous(xy)) << e.name;
        ASSERT_EQ(*R.degree_of(xy), R.group().op(*R.degree_of(x), *R.degree_of(y))) << e.name;
      }
  }
}

TEST(Properties, UnitsMatchOracle) {
  for (const auto& e : testing_support::small_corpus()) {
    const auto& R = *e.ring;
    oracle::NaiveRing N(R.presentation());
    for (Elem x : R.all_elements())
      ASSERT_EQ(R.is_unit(x).has_value(), N.inverse(R.coeffs(x)).has_value()) << e.name;
  }
}

TEST(ZeroRing, IsRepresentable) {
  auto Z = zero_ring(GradingGroup({0}));
  EXPECT_EQ(Z->size(), 1u);
  EXPECT_TRUE(Z->is_zero_ring());
  EXPECT_EQ(Z->one(), Z->zero());
}
