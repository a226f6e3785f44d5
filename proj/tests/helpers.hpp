#pragma once

#include <string>
#include <vector>

#include "gradr/constructions.hpp"
#include "gradr/corpus.hpp"
#include "oracle.hpp"

namespace testing_support {

inline const std::vector<gradr::CorpusEntry>& corpus() {
  static const auto c = gradr::standard_corpus();
  return c;
}

/// Corpus rings small enough for the brute-force oracle.
inline std::vector<gradr::CorpusEntry> small_corpus(std::size_t max_size = 64) {
  std::vector<gradr::CorpusEntry> out;
  for (const auto& e : corpus())
    if (e.ring->size() <= max_size) out.push_back(e);
  return out;
}

inline oracle::Set to_set(const gradr::IdealSet& I) {
  oracle::Set s;
  for (auto x : I.elements()) s.insert(I.ring()->coeffs(x));
  return s;
}

inline gradr::Elem el(const gradr::RingPtr& r, gradr::Coeffs c) { return r->from_coeffs(c); }

inline gradr::IdealSet gens(const gradr::RingPtr& r, std::vector<gradr::Coeffs> cs) {
  std::vector<gradr::Elem> e;
  for (auto& c : cs) e.push_back(r->from_coeffs(c));
  return gradr::ideal_from_homogeneous_gens(r, e);
}

}  // namespace testing_support
