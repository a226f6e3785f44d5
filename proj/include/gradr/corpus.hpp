#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gradr/ring.hpp"

namespace gradr {

struct CorpusEntry {
  std::string name;
  RingPresentation presentation;
  /// Null when the presentation failed validation.
  RingPtr ring;
  std::string invalid_reason;
  /// How the ring was obtained, e.g. "quotient(example23_F2, <x>)".
  std::string recipe;
};

/// Fixed list of builder outputs and one- or two-layer constructions over
/// them, all at most 4096 elements.
std::vector<CorpusEntry> standard_corpus();

/// `count` rings from builders composed with at most two random layers of
/// quotient / product / localization, each at most `max_size` elements.
/// Deterministic in `seed`.
std::vector<CorpusEntry> random_corpus(std::uint64_t seed, std::size_t count,
                                       std::size_t max_size = 4096);

/// Every *.json ring file in `dir`, sorted by file name. Presentations that
/// fail validation are kept with a null ring and the violation listing.
std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir,
                                         std::size_t cap = kDefaultCap);

}  // namespace gradr
