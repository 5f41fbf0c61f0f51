#pragma once

#include <cstdint>
#include <vector>

#include "lmvt/instance.hpp"

namespace lmvt {

// Enumeration caps for the reference oracles. Exceeding one throws
// TooLargeForOracleError instead of starting an open-ended search.
struct OracleLimits {
  std::uint64_t max_assignments = 10'000'000;
  std::uint64_t max_partition_sum = 1'000'000;
};

// Exhaustive search over all (n+1)^B slot assignments, wasted slots
// included. Assignments are enumerated in lexicographic order over slots
// with kUnassigned first, so ties resolve deterministically. Used as the
// ground-truth oracle for the dynamic programs.
SolveReport brute_force_opt(const Instance& inst, const OracleLimits& limits = {});

// Classic subset-sum sweep: can `items` be split into two halves of equal
// sum? Items must be positive; the total must stay within
// limits.max_partition_sum.
bool partition_decide(const std::vector<Bits>& items, const OracleLimits& limits = {});

}  // namespace lmvt
