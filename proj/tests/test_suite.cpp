#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "gradr/errors.hpp"
#include "gradr/io.hpp"
#include "gradr/suite.hpp"
#include "helpers.hpp"

using namespace gradr;

namespace {

Json without_timing(Json j) {
  for (auto& g : j["groups"]) g.erase("seconds");
  return j;
}

}  // namespace

TEST(Suite, AllGroupsPassOnStandardCorpus) {
  const auto r = run_suite(testing_support::corpus(), SuiteOptions{});
  EXPECT_EQ(r.groups.size(), suite_groups().size());
  for (const auto& g : r.groups) {
    EXPECT_TRUE(g.passed()) << g.name << ": " << (g.failures.empty() ? "" : g.failures[0].detail);
    EXPECT_GT(g.pass, 0u) << g.name;
  }
  EXPECT_TRUE(r.passed());
}

TEST(Suite, DeterministicUnderSeed) {
  SuiteOptions o;
  o.seed = 42;
  o.only = {"prop2.5", "cor2.10", "thm2.11"};
  const auto a = run_suite(testing_support::corpus(), o).to_json();
  const auto b = run_suite(testing_support::corpus(), o).to_json();
  EXPECT_EQ(without_timing(a), without_timing(b));
}

TEST(Suite, OnlySelectsGroups) {
  SuiteOptions o;
  o.only = {"thm2.7"};
  const auto r = run_suite(testing_support::corpus(), o);
  ASSERT_EQ(r.groups.size(), 1u);
  EXPECT_EQ(r.groups[0].name, "thm2.7");
  EXPECT_NE(r.group("thm2.7"), nullptr);
  EXPECT_EQ(r.group("radical"), nullptr);
  o.only = {"no_such_group"};
  EXPECT_THROW(run_suite(testing_support::corpus(), o), InvalidArgument);
}

TEST(Suite, CorruptedEntryFailsValidate) {
  auto corpus = testing_support::corpus();
  CorpusEntry bad;
  bad.name = "broken";
  bad.presentation = example_2_3(2)->presentation();
  bad.presentation.basis[0].degree = Degree{{1}};
  bad.invalid_reason = "GradingViolation";
  corpus.push_back(bad);
  SuiteOptions o;
  o.only = {"validate", "thm2.7"};
  const auto r = run_suite(corpus, o);
  EXPECT_FALSE(r.group("validate")->passed());
  EXPECT_TRUE(r.group("thm2.7")->passed());
  EXPECT_FALSE(r.passed());
}

TEST(RandomCorpus, DeterministicBoundedValid) {
  const auto a = random_corpus(5, 12);
  const auto b = random_corpus(5, 12);
  ASSERT_EQ(a.size(), 12u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_NE(a[i].ring, nullptr);
    EXPECT_LE(a[i].ring->size(), 4096u);
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(presentation_to_json(a[i].presentation), presentation_to_json(b[i].presentation));
    EXPECT_TRUE(validate(a[i].presentation).ok()) << a[i].name;
  }
}

TEST(BundledCorpus, MatchesGeneratedCorpus) {
  const auto dir = std::filesystem::path(GRADR_SOURCE_DIR) / "corpus";
  const auto loaded = load_corpus_dir(dir);
  const auto& generated = testing_support::corpus();
  ASSERT_EQ(loaded.size(), generated.size());
  for (const auto& g : generated) {
    const auto it = std::find_if(loaded.begin(), loaded.end(),
                                 [&](const CorpusEntry& e) { return e.name == g.name; });
    ASSERT_NE(it, loaded.end()) << g.name;
    ASSERT_NE(it->ring, nullptr) << g.name << ": " << it->invalid_reason;
    EXPECT_EQ(presentation_to_json(it->presentation), presentation_to_json(g.presentation));
  }
}
