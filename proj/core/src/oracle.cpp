#include "lmvt/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>

namespace lmvt {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// (n+1)^B, or nullopt if it exceeds cap.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp,
                                         std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t e = 0; e < exp; ++e) {
    if (out > cap / base) return std::nullopt;
    out *= base;
  }
  return out;
}

// (min, total, vector) ordering used to break objective ties. Strictly
// better means: larger min, then larger total, then lexicographically
// larger bit vector.
bool strictly_better(const std::vector<Bits>& bits, Bits min_v, unsigned __int128 total,
                     const std::vector<Bits>& best_bits, Bits best_min,
                     unsigned __int128 best_total) {
  if (min_v != best_min) return min_v > best_min;
  if (total != best_total) return total > best_total;
  return std::lexicographical_compare(best_bits.begin(), best_bits.end(),
                                      bits.begin(), bits.end());
}

}  // namespace

SolveReport brute_force_opt(const Instance& inst, const OracleLimits& limits) {
  validate_instance(inst);
  auto start = Clock::now();

  auto count = checked_pow(inst.n + 1, inst.B, limits.max_assignments);
  if (!count)
    throw TooLargeForOracleError("(n+1)^B exceeds the oracle cap of " +
                                 std::to_string(limits.max_assignments) +
                                 " assignments");

  std::vector<std::int32_t> digits(inst.B, kUnassigned);
  std::vector<Bits> bits(inst.n, 0);

  std::vector<std::int32_t> best_assign;
  std::vector<Bits> best_bits;
  Bits best_min = 0;
  unsigned __int128 best_total = 0;
  bool have_best = false;
  std::uint64_t visited = 0;

  const auto last_video = static_cast<std::int32_t>(inst.n) - 1;
  for (;;) {
    ++visited;
    std::fill(bits.begin(), bits.end(), 0);
    for (std::size_t j = 0; j < inst.B; ++j)
      if (digits[j] != kUnassigned) {
        auto v = static_cast<std::size_t>(digits[j]);
        bits[v] += inst.rates[v][j];
      }
    Bits min_v = *std::min_element(bits.begin(), bits.end());
    unsigned __int128 total = 0;
    for (Bits b : bits) total += b;
    if (!have_best ||
        strictly_better(bits, min_v, total, best_bits, best_min, best_total)) {
      have_best = true;
      best_assign = digits;
      best_bits = bits;
      best_min = min_v;
      best_total = total;
    }

    // Odometer step: rightmost slot cycles fastest through
    // kUnassigned, 0, ..., n-1.
    std::size_t j = inst.B;
    while (j > 0) {
      --j;
      if (digits[j] == last_video) {
        digits[j] = kUnassigned;
        if (j == 0) goto done;
      } else {
        ++digits[j];
        break;
      }
    }
  }
done:

  SolveReport report;
  report.value = best_min;
  report.allocation.assign = std::move(best_assign);
  report.states_visited = visited;
  report.layers = inst.B;
  report.elapsed_ms = ms_since(start);
  report.algorithm = Algorithm::brute;
  return report;
}

bool partition_decide(const std::vector<Bits>& items, const OracleLimits& limits) {
  Bits total = 0;
  for (Bits x : items) {
    if (x == 0) throw Error("partition items must be positive");
    Bits next = total + x;
    if (next < total) throw CapacityError("partition sum overflows 64 bits");
    total = next;
  }
  if (total > limits.max_partition_sum)
    throw TooLargeForOracleError("partition sum exceeds the oracle cap of " +
                                 std::to_string(limits.max_partition_sum));
  if (total % 2 != 0) return false;
  const Bits target = total / 2;

  // reach[s] after processing a prefix: some sub-multiset sums to s.
  const std::size_t words = static_cast<std::size_t>(target / 64) + 1;
  std::vector<std::uint64_t> reach(words, 0);
  reach[0] = 1;
  for (Bits x : items) {
    if (x > target) continue;
    const std::size_t word_shift = static_cast<std::size_t>(x / 64);
    const unsigned bit_shift = static_cast<unsigned>(x % 64);
    for (std::size_t w = words; w-- > word_shift;) {
      std::uint64_t shifted = reach[w - word_shift] << bit_shift;
      if (bit_shift != 0 && w > word_shift)
        shifted |= reach[w - word_shift - 1] >> (64 - bit_shift);
      reach[w] |= shifted;
    }
  }
  return (reach[target / 64] >> (target % 64)) & 1;
}

}  // namespace lmvt
