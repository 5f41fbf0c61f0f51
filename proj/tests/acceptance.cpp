// Acceptance gate: one line per criterion, exit 0 only if all pass.

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <string>
#include <vector>

#include <lmvt/lmvt.hpp>

#include "json.hpp"
#include "support/process.hpp"
#include "support/reference.hpp"

using namespace lmvt;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  bool ok = true;
  std::string note;
};

std::string fmt(const char* format, auto... args) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

// Criterion 1: the exact solver equals the brute-force oracle on a seeded
// family of at least 300 instances, and every allocation re-evaluates.
Result criterion_exact_vs_oracle() {
  auto rng = testing::seeded_rng({101, 1});
  int count = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t B = 1; B <= 6; ++B) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto inst = testing::random_instance(rng, n, B, 6);
        const auto exact = solve_exact(inst);
        const auto oracle = brute_force_opt(inst);
        if (exact.value != oracle.value)
          return {false, fmt("value mismatch at n=%zu B=%zu trial=%d: "
                             "exact %" PRIu64 " vs oracle %" PRIu64,
                             n, B, trial, exact.value, oracle.value)};
        if (objective(inst, exact.allocation) != exact.value)
          return {false, fmt("exact allocation does not re-evaluate at "
                             "n=%zu B=%zu trial=%d", n, B, trial)};
        if (objective(inst, oracle.allocation) != oracle.value)
          return {false, fmt("oracle allocation does not re-evaluate at "
                             "n=%zu B=%zu trial=%d", n, B, trial)};
        ++count;
      }
    }
  }
  return {true, fmt("%d instances", count)};
}

// Criterion 2: the rounded value stays within [opt/(1+eps)^B, opt] with
// zero violations; the linear Lemma 4 bound is reported, not asserted.
Result criterion_guaranteed_bound() {
  auto rng = testing::seeded_rng({101, 2});
  const std::vector<Rational> epsilons = {{1, 10}, {1, 2}, {1, 1}};
  int trials = 0, linear_held = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t B = 1; B <= 6; ++B) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto inst = testing::random_instance(rng, n, B, 6);
        const auto exact = solve_exact(inst);
        for (const auto& eps : epsilons) {
          const auto fast = solve_fptas(inst, Epsilon(eps));
          if (fast.value > exact.value)
            return {false, fmt("rounded value exceeds optimum at n=%zu B=%zu "
                               "trial=%d eps=%s",
                               n, B, trial, eps.str().c_str())};
          if (!meets_geometric_bound(fast.value, exact.value, Epsilon(eps),
                                     inst.B))
            return {false, fmt("geometric bound violated at n=%zu B=%zu "
                               "trial=%d eps=%s: %" PRIu64 " vs opt %" PRIu64,
                               n, B, trial, eps.str().c_str(), fast.value,
                               exact.value)};
          linear_held += meets_linear_bound(fast.value, exact.value,
                                            Epsilon(eps), inst.B);
          ++trials;
        }
      }
    }
  }
  return {true, fmt("%d trials, zero violations; linear 1/(1+eps*B) bound "
                    "held in %.1f%%",
                    trials, 100.0 * linear_held / trials)};
}

// Criterion 3: grid rows stay logarithmic, per-layer frontiers stay within
// the grid product, and rounding compresses the state count on at least
// 90% of instances whose every row sum reaches 32.
Result criterion_state_compression() {
  auto rng = testing::seeded_rng({101, 3});
  const Epsilon eps{Rational(1, 2)};
  int eligible = 0, compressed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = testing::random_instance(rng, 2, 8, 50);
    const auto caps = b_max(inst);
    const auto grid = build_grid(inst, eps);

    std::uint64_t product = 1;
    for (std::size_t i = 0; i < inst.n; ++i) {
      const auto size = grid.rows[i].size();
      if (size >= 2) {
        // size <= log_1.5(b+1) + 2, checked exactly: 3^(size-2) <= (b+1)*2^(size-2)
        unsigned long long pow3 = 1, pow2 = 1;
        for (std::size_t k = 0; k + 2 < size; ++k) {
          pow3 *= 3;
          pow2 *= 2;
        }
        if (pow3 > (caps[i] + 1) * pow2)
          return {false, fmt("grid row %zu has %zu entries, above the "
                             "log bound for b_max %" PRIu64,
                             i, size, caps[i])};
      }
      product *= size;
    }

    auto layer = initial_layer(inst);
    for (std::size_t m = 0; m < inst.B; ++m) {
      layer = fptas_advance_layer(inst, grid, layer);
      if (layer.frontier.size() > product)
        return {false, fmt("frontier %zu exceeds grid product %" PRIu64
                           " at layer %zu (trial %d)",
                           layer.frontier.size(), product, m + 1, trial)};
    }

    const auto exact = solve_exact(inst);
    const auto fast = solve_fptas(inst, eps);
    if (*std::min_element(caps.begin(), caps.end()) >= 32) {
      ++eligible;
      compressed += fast.states_visited < exact.states_visited;
    }
  }
  if (eligible == 0) return {false, "no instance reached b_max 32"};
  if (10 * compressed < 9 * eligible)
    return {false, fmt("compression on only %d of %d eligible instances",
                       compressed, eligible)};
  return {true, fmt("states shrank on %d of %d eligible instances",
                    compressed, eligible)};
}

// Criterion 4: partition_decide agrees with the reduction solved exactly,
// and every yes-instance yields a witness with two equal halves.
Result criterion_reduction() {
  auto rng = testing::seeded_rng({101, 4});
  int count = 0, yes_cases = 0;
  for (int trial = 0; trial < 120; ++trial) {
    PartitionInstance p;
    const std::size_t size = 1 + rng() % 10;
    for (std::size_t j = 0; j < size; ++j) p.items.push_back(1 + rng() % 12);

    const Bits U = partition_sum(p);
    const bool direct = partition_decide(p.items);
    const auto [inst, k] = partition_to_lmvt(p);
    const auto exact = solve_exact(inst);
    const bool via_solver = decide_lead(inst, exact.value, k);
    if (direct != via_solver)
      return {false, fmt("trial %d: partition_decide says %d, reduction "
                         "says %d", trial, direct, via_solver)};
    if (via_solver) {
      ++yes_cases;
      const auto [subset, complement] =
          lmvt_to_partition_witness(p, exact.allocation);
      Bits left = 0, right = 0;
      for (Bits x : subset) left += x;
      for (Bits x : complement) right += x;
      if (2 * left != U || 2 * right != U)
        return {false, fmt("trial %d: witness halves %" PRIu64 "/%" PRIu64
                           " do not split U=%" PRIu64, trial, left, right, U)};
    }
    ++count;
  }
  return {true, fmt("%d multisets, %d yes-instances certified", count,
                    yes_cases)};
}

// Criterion 5: the constant-rate formula matches the exact solver on every
// (n, B, c) with n, B <= 6 and c <= 5.
Result criterion_constant_rate() {
  int count = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t B = 1; B <= 6; ++B) {
      for (Bits c = 0; c <= 5; ++c) {
        const auto inst =
            make_instance(std::vector<std::vector<Bits>>(n, std::vector<Bits>(B, c)));
        if (constant_rate_opt(n, B, c) != solve_exact(inst).value)
          return {false, fmt("mismatch at n=%zu B=%zu c=%" PRIu64, n, B, c)};
        ++count;
      }
    }
  }
  return {true, fmt("%d cells, exhaustive", count)};
}

// Criterion 6: psi is bounded, monotone, loses less than one rounding step,
// and fixes integral powers.
Result criterion_psi() {
  const std::vector<Rational> epsilons = {{1, 10}, {1, 3}, {1, 2}, {1, 1}};
  for (const auto& eps : epsilons) {
    const Epsilon e{eps};
    Bits prev = 0;
    for (std::int64_t t = -5; t <= 1000; ++t) {
      const Bits v = psi(t, e);
      if (v > static_cast<Bits>(std::max<std::int64_t>(0, t)))
        return {false, fmt("psi(%" PRId64 ", %s) = %" PRIu64 " exceeds t",
                           t, eps.str().c_str(), v)};
      if (v < prev)
        return {false, fmt("psi not monotone at t=%" PRId64 " eps=%s", t,
                           eps.str().c_str())};
      if (t >= 1 &&
          t * eps.den >= static_cast<std::int64_t>(v + 1) * (eps.num + eps.den))
        return {false, fmt("psi(%" PRId64 ", %s) = %" PRIu64
                           " below t/(1+eps) - 1", t, eps.str().c_str(), v)};
      prev = v;
    }
  }
  const Epsilon one{Rational(1)};
  for (std::int64_t p2 = 1; p2 <= 512; p2 *= 2)
    if (psi(p2, one) != static_cast<Bits>(p2))
      return {false, fmt("psi(%" PRId64 ", 1/1) is not a fixed point", p2)};
  if (psi(8, one) != 8) return {false, "psi(8, 1/1) != 8"};
  return {true, "t in [-5, 1000] over four epsilons, plus power fixed points"};
}

// Criterion 7: the gen | solve pipeline is byte-deterministic (modulo the
// wall-clock field) and its reported values re-evaluate exactly.
Result criterion_cli_round_trip() {
  const std::string cli = LMVT_CLI_PATH;
  const std::string gen_cmd = cli + " gen --n 3 --B 5 --max-rate 9 --seed 42";

  const auto gen1 = testing::run_command(gen_cmd);
  const auto gen2 = testing::run_command(gen_cmd);
  if (gen1.exit_code != 0 || gen2.exit_code != 0)
    return {false, "gen exited nonzero"};
  if (gen1.output.empty() || gen1.output != gen2.output)
    return {false, "gen output is not byte-identical across runs"};

  const Json inst_json = Json::parse(gen1.output);
  const auto inst = make_instance(
      inst_json.at("rates").get<std::vector<std::vector<Bits>>>());

  for (const std::string& algo : {std::string("exact"),
                                  std::string("fptas --epsilon 1/2")}) {
    const std::string cmd = gen_cmd + " | " + cli + " solve --input - --algo " + algo;
    const auto run1 = testing::run_command(cmd);
    const auto run2 = testing::run_command(cmd);
    if (run1.exit_code != 0 || run2.exit_code != 0)
      return {false, "solve exited nonzero for " + algo};
    if (testing::drop_lines_containing(run1.output, "elapsed_ms") !=
        testing::drop_lines_containing(run2.output, "elapsed_ms"))
      return {false, "solve output differs across runs for " + algo};

    const Json report = Json::parse(run1.output);
    Allocation a;
    for (const Json& cell : report.at("allocation"))
      a.assign.push_back(cell.is_null() ? kUnassigned
                                        : cell.get<std::int32_t>());
    const Bits expected = report.contains("true_value")
                              ? report.at("true_value").get<Bits>()
                              : report.at("value").get<Bits>();
    if (objective(inst, a) != expected)
      return {false, "reported value does not re-evaluate for " + algo};
  }
  return {true, "gen and solve byte-stable; values re-evaluate exactly"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    Result (*run)();
  };
  const Criterion criteria[] = {
      {"AC1 exact solver equals the brute-force oracle", criterion_exact_vs_oracle},
      {"AC2 fptas geometric guarantee", criterion_guaranteed_bound},
      {"AC3 rounded state compression", criterion_state_compression},
      {"AC4 partition reduction correctness", criterion_reduction},
      {"AC5 constant-rate formula", criterion_constant_rate},
      {"AC6 psi rounding properties", criterion_psi},
      {"AC7 CLI round-trip determinism", criterion_cli_round_trip},
  };

  int passed = 0;
  for (const auto& c : criteria) {
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("unexpected exception: ") + e.what()};
    }
    std::printf("%s: %s (%s)\n", c.label, r.ok ? "PASS" : "FAIL",
                r.note.c_str());
    passed += r.ok;
  }
  std::printf("acceptance: %d/7 criteria passed\n", passed);
  return passed == 7 ? 0 : 1;
}
