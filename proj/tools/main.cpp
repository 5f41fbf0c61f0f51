#include <iostream>

#include "CLI11.hpp"

#include <lmvt/errors.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"max-min slot allocation for multiple video transmission"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 ok, 2 usage or malformed input, 3 resource limits.");

  lmvt::cli::GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Emit an instance as JSON on stdout");
  auto* opt_n = gen->add_option("--n", gen_args.n, "Number of videos");
  auto* opt_b = gen->add_option("--B", gen_args.B, "Number of slots");
  auto* opt_mr = gen->add_option("--max-rate", gen_args.max_rate,
                                 "Rates drawn uniformly from [0, max-rate]")
                     ->capture_default_str();
  auto* opt_seed =
      gen->add_option("--seed", gen_args.seed, "PRNG seed; output is deterministic")
          ->capture_default_str();
  auto* opt_fp = gen->add_option(
      "--from-partition", gen_args.from_partition,
      "Comma list of positive integers; emits the two-video reduction "
      "instance with its threshold k");
  opt_fp->excludes(opt_n)->excludes(opt_b)->excludes(opt_mr)->excludes(opt_seed);

  lmvt::cli::SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Run one solver, report as JSON");
  solve->add_option("--input", solve_args.input,
                    "Instance JSON path, or - for stdin")
      ->required();
  solve->add_option("--algo", solve_args.algo, "Solver to run")
      ->required()
      ->check(CLI::IsMember({"exact", "fptas", "greedy", "brute"}));
  auto* opt_eps = solve->add_option("--epsilon", solve_args.epsilon,
                                    "Approximation parameter p/q (fptas only)");
  auto* opt_delta = solve->add_option(
      "--delta", solve_args.delta,
      "Relative loss target p/q in (0,1); mapped to the largest epsilon "
      "whose geometric guarantee meets it (fptas only)");
  opt_eps->excludes(opt_delta);
  solve->add_option("--state-budget", solve_args.state_budget,
                    "Frontier state cap (assignment cap for brute)")
      ->capture_default_str();

  lmvt::cli::BenchArgs bench_args;
  auto* bench = app.add_subcommand(
      "bench", "Sweep exact vs fptas over random instances, CSV on stdout");
  bench->add_option("--suite", bench_args.suite, "ratio or states")
      ->required()
      ->check(CLI::IsMember({"ratio", "states"}));
  bench->add_option("--n-range", bench_args.n_range, "Videos, inclusive lo:hi")
      ->required();
  bench->add_option("--B-range", bench_args.B_range, "Slots, inclusive lo:hi")
      ->required();
  bench->add_option("--epsilons", bench_args.epsilons,
                    "Comma list of p/q epsilons")
      ->required();
  bench->add_option("--trials", bench_args.trials, "Instances per (n, B) cell")
      ->capture_default_str();
  bench->add_option("--seed", bench_args.seed, "Sweep seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return lmvt::cli::cmd_gen(gen_args, std::cout);
    if (solve->parsed()) return lmvt::cli::cmd_solve(solve_args, std::cout);
    return lmvt::cli::cmd_bench(bench_args, std::cout);
  } catch (const lmvt::StateBudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const lmvt::TooLargeForOracleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const lmvt::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
