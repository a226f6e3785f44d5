#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gradr {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Solves A x = b over Z/modulus by diagonalizing A with unimodular row and
/// column operations (extended-gcd pivots). Returns one solution, or nullopt
/// when the system is inconsistent. All arithmetic is exact.
std::optional<std::vector<std::int64_t>> solve_mod(IntMatrix A,
                                                   std::vector<std::int64_t> b,
                                                   std::int64_t modulus);

}  // namespace gradr
