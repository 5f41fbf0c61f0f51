#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace lmvt::cli {

struct GenArgs {
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> B;
  std::uint64_t max_rate = 100;
  std::uint64_t seed = 0;
  std::optional<std::string> from_partition;  // comma list "x1,x2,..."
};

struct SolveArgs {
  std::string input;  // path, or "-" for standard input
  std::string algo;   // exact | fptas | greedy | brute
  std::optional<std::string> epsilon;  // "p/q", fptas only
  std::optional<std::string> delta;    // "p/q", fptas only, alternative
  std::uint64_t state_budget = 5'000'000;
};

struct BenchArgs {
  std::string suite;     // ratio | states (same schema; records intent)
  std::string n_range;   // "lo:hi" inclusive, or a single "k"
  std::string B_range;
  std::string epsilons;  // comma list of "p/q"
  std::uint64_t trials = 10;
  std::uint64_t seed = 0;
};

// Each command writes its result to `out` and returns the process exit
// code (0 ok; bench returns 1 if any trial violates the guaranteed bound).
// Usage and input errors surface as exceptions for main to map onto the
// 0/2/3 exit contract.
int cmd_gen(const GenArgs& args, std::ostream& out);
int cmd_solve(const SolveArgs& args, std::ostream& out);
int cmd_bench(const BenchArgs& args, std::ostream& out);

}  // namespace lmvt::cli
