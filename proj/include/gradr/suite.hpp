#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gradr/corpus.hpp"
#include "gradr/io.hpp"

namespace gradr {

struct SuiteOptions {
  /// Group names to run; empty runs every group.
  std::vector<std::string> only;
  std::uint64_t seed = 1;
  /// Random graded-ideal pairs per ring for the product/intersection check.
  std::size_t pairs_per_ring = 8;
  /// Proper graded ideals quotiented per ring (all of them when fewer).
  std::size_t quotients_per_ring = 8;
  /// Homogeneous multiplicative sets localized per ring.
  std::size_t localizations_per_ring = 4;
  /// Largest product ring built for the product checks.
  std::size_t max_product_size = 4096;
  /// Prime families tried per prime in the avoidance sweep when the full
  /// power set is larger.
  std::size_t avoidance_families = 256;
};

struct SuiteFailure {
  std::string ring;
  std::string detail;
  /// Full instance: presentation, recipe and the offending data.
  Json instance;
};

struct GroupResult {
  std::string name;
  std::string description;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  /// Some failure came from two independent computations disagreeing.
  bool cross_check = false;
  double seconds = 0;
  std::vector<SuiteFailure> failures;

  bool passed() const { return fail == 0; }
};

struct SuiteResult {
  std::size_t rings = 0;
  std::vector<GroupResult> groups;

  bool passed() const;
  const GroupResult* group(const std::string& name) const;
  Json to_json() const;
};

/// (name, description) of every group, in run order.
const std::vector<std::pair<std::string, std::string>>& suite_groups();

/// Runs the selected groups over `corpus`. Throws InvalidArgument for an
/// unknown group name.
SuiteResult run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options);

}  // namespace gradr
