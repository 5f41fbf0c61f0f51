#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lmvt/errors.hpp"
#include "lmvt/rational.hpp"

namespace lmvt {

using Bits = std::uint64_t;

// Target vector over videos: entry i is a bit count for video i.
using TxVector = std::vector<Bits>;

// Per-entry cap on transmission rates. Keeps any single row sum within
// 64 bits for every feasible slot count.
inline constexpr Bits kMaxRate = 0xFFFF'FFFFull;

// Cap on a row sum (b_i^max). Leaves headroom so downstream signed
// arithmetic on bit counts never overflows.
inline constexpr Bits kMaxRowSum = Bits(1) << 62;

// Slot value marking a deliberately wasted slot.
inline constexpr std::int32_t kUnassigned = -1;

// Affine map from received bits to lead time: lead(b) = alpha * b + beta.
// The slope must be nonnegative so more bits never reduce lead.
struct LeadFunction {
  Rational alpha{1};
  Rational beta{0};

  bool is_identity() const { return alpha == Rational(1) && beta == Rational(0); }
};

// One entry per slot: the receiving video's index, or kUnassigned.
struct Allocation {
  std::vector<std::int32_t> assign;
};

// n videos, B slots, and an n x B rate matrix: rates[i][j] bits reach
// video i if slot j is assigned to it.
struct Instance {
  std::size_t n = 0;
  std::size_t B = 0;
  std::vector<std::vector<Bits>> rates;
  LeadFunction lead;
};

// Throws InstanceShapeError on inconsistent dimensions, out-of-range
// entries, or a negative lead slope; CapacityError if a row sum exceeds
// kMaxRowSum.
void validate_instance(const Instance& inst);

// Builds and validates an instance from its rate matrix.
Instance make_instance(std::vector<std::vector<Bits>> rates, LeadFunction lead = {});

enum class Algorithm { exact, fptas, greedy, brute };

const char* algorithm_name(Algorithm a);

// Result of one solver run. For the fptas, value is the grid objective and
// true_value the exact objective of the reconstructed allocation; all other
// solvers report the exact objective in value.
struct SolveReport {
  Bits value = 0;
  Allocation allocation;
  std::uint64_t states_visited = 0;
  std::size_t layers = 0;
  double elapsed_ms = 0.0;
  Algorithm algorithm = Algorithm::exact;
  std::optional<Bits> true_value;
  std::optional<Rational> epsilon;
};

// Bits received per video under an allocation. Length mismatches throw
// InstanceShapeError; video indices outside [0, n) other than kUnassigned
// throw InvalidAllocationError.
std::vector<Bits> bits_received(const Instance& inst, const Allocation& a);

// min_i of bits_received.
Bits objective(const Instance& inst, const Allocation& a);

// Row sums: the most bits each video can ever receive. Throws
// CapacityError if a sum leaves 64 bits.
std::vector<Bits> b_max(const Instance& inst);

// Whether every video's lead reaches threshold k when each receives at
// least `value` bits, i.e. lead(value) >= k. Exact rational comparison.
bool decide_lead(const Instance& inst, Bits value, const Rational& k);

}  // namespace lmvt
