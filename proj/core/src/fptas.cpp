#include "lmvt/fptas.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "layer_step.hpp"

namespace lmvt {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

mpz_class mpz_of(Bits v) { return mpz_class(static_cast<unsigned long>(v)); }

Bits bits_of(const mpz_class& v) { return static_cast<Bits>(v.get_ui()); }

// More grid entries per row than any frontier could visit within a sane
// state budget.
constexpr std::size_t kMaxGridEntries = std::size_t(1) << 22;

}  // namespace

Epsilon::Epsilon(Rational v) : value(v) {
  if (!v.positive()) throw Error("epsilon must be positive");
}

Bits psi(std::int64_t t, const Epsilon& eps) {
  if (t <= 0) return 0;
  // Largest e with (1+eps)^e <= t, tracked as num/den = ((q+p)/q)^e.
  const mpz_class growth = mpz_class(eps.p()) + eps.q();
  mpz_class num = 1, den = 1;
  for (;;) {
    mpz_class next_num = num * growth;
    mpz_class next_den = den * eps.q();
    if (next_num > t * next_den) break;
    num = std::move(next_num);
    den = std::move(next_den);
  }
  mpz_class floor_v = num / den;
  return bits_of(floor_v);
}

ValueGrid build_grid(const Instance& inst, const Epsilon& eps) {
  validate_instance(inst);
  const auto caps = b_max(inst);
  const double log_growth =
      std::log1p(static_cast<double>(eps.p()) / static_cast<double>(eps.q()));

  ValueGrid grid;
  grid.rows.resize(inst.n);
  const mpz_class growth = mpz_class(eps.p()) + eps.q();
  for (std::size_t i = 0; i < inst.n; ++i) {
    auto& row = grid.rows[i];
    row.push_back(0);
    if (caps[i] == 0) continue;
    // Entry count is about log_{1+eps}(b_max); refuse absurdly fine grids
    // before grinding through huge power towers.
    const double estimate =
        std::log(static_cast<double>(caps[i]) + 1.0) / log_growth;
    if (estimate > static_cast<double>(kMaxGridEntries))
      throw CapacityError("value grid for row " + std::to_string(i) +
                          " would exceed " + std::to_string(kMaxGridEntries) +
                          " entries; use a coarser epsilon");
    // Floors of all powers (1+eps)^e <= b_max, deduplicated: exactly the
    // image of psi over [1, b_max].
    const mpz_class cap = mpz_of(caps[i]);
    mpz_class num = 1, den = 1;
    while (num <= cap * den) {
      mpz_class floor_v = num / den;
      Bits entry = bits_of(floor_v);
      if (entry > row.back()) row.push_back(entry);
      num *= growth;
      den *= eps.q();
    }
    // The cap itself closes the row. Without it every value in
    // (psi(b_max), b_max] would snap below b_max/(1+eps) and the geometric
    // guarantee would break at the boundary (rates [[2]], eps=1/10: the bare
    // psi image {0,1} forces value 1 against optimum 2).
    if (row.back() < caps[i]) row.push_back(caps[i]);
  }
  return grid;
}

Bits snap_down(std::int64_t v, std::span<const Bits> row) {
  if (row.empty() || row.front() != 0)
    throw Error("grid row must be nonempty and start at 0");
  if (v <= 0) return 0;
  const Bits uv = static_cast<Bits>(v);
  if (uv >= row.back()) return row.back();
  auto it = std::upper_bound(row.begin(), row.end(), uv);
  return *(it - 1);
}

LayerSet fptas_advance_layer(const Instance& inst, const ValueGrid& grid,
                             const LayerSet& prev) {
  validate_instance(inst);
  if (grid.rows.size() != inst.n)
    throw InstanceShapeError("grid must have one row per video");
  if (prev.layer_index >= inst.B)
    throw InstanceShapeError("layer index must be below B to advance");
  if (prev.frontier.size() > UINT32_MAX)
    throw CapacityError("frontier too large to index");
  const std::size_t slot = prev.layer_index;

  std::vector<detail::Candidate> candidates;
  candidates.reserve(prev.frontier.size() * (inst.n + 1));
  for (std::size_t p = 0; p < prev.frontier.size(); ++p) {
    const TxVector& base = prev.frontier[p];
    const auto parent = static_cast<std::uint32_t>(p);
    candidates.push_back({base, parent, kUnassigned});
    for (std::size_t i = 0; i < inst.n; ++i) {
      TxVector grown = base;
      grown[i] = snap_down(static_cast<std::int64_t>(grown[i] + inst.rates[i][slot]),
                           grid.rows[i]);
      candidates.push_back({std::move(grown), parent, static_cast<std::int32_t>(i)});
    }
  }
  return detail::pareto_layer(prev.layer_index + 1, std::move(candidates));
}

SolveReport solve_fptas(const Instance& inst, const Epsilon& eps,
                        const DpOptions& options) {
  auto start = Clock::now();
  const ValueGrid grid = build_grid(inst, eps);

  std::vector<LayerSet> layers;
  layers.reserve(inst.B + 1);
  layers.push_back(initial_layer(inst));

  std::uint64_t states = 1;
  for (std::size_t m = 1; m <= inst.B; ++m) {
    layers.push_back(fptas_advance_layer(inst, grid, layers.back()));
    states += layers.back().frontier.size();
    if (states > options.state_budget)
      throw StateBudgetError("rounded frontier exceeded the budget of " +
                             std::to_string(options.state_budget) +
                             " states after layer " + std::to_string(m));
  }

  const std::size_t pick = detail::best_index(layers.back().frontier);

  SolveReport report;
  const TxVector& best = layers.back().frontier[pick];
  report.value = *std::min_element(best.begin(), best.end());
  report.allocation = detail::reconstruct(layers, pick);
  report.states_visited = states;
  report.layers = inst.B;
  report.elapsed_ms = ms_since(start);
  report.algorithm = Algorithm::fptas;
  report.true_value = objective(inst, report.allocation);
  report.epsilon = eps.value;
  return report;
}

bool meets_geometric_bound(Bits value, Bits reference, const Epsilon& eps,
                           std::size_t layers) {
  // value * (q+p)^layers >= reference * q^layers
  mpz_class growth_pow, den_pow;
  mpz_class growth = mpz_class(eps.p()) + eps.q();
  mpz_pow_ui(growth_pow.get_mpz_t(), growth.get_mpz_t(),
             static_cast<unsigned long>(layers));
  mpz_class den(eps.q());
  mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(),
             static_cast<unsigned long>(layers));
  return mpz_of(value) * growth_pow >= mpz_of(reference) * den_pow;
}

bool meets_linear_bound(Bits value, Bits reference, const Epsilon& eps,
                        std::size_t layers) {
  // value * (q + p*layers) >= reference * q
  mpz_class slack = mpz_class(eps.p()) * static_cast<unsigned long>(layers) + eps.q();
  return mpz_of(value) * slack >= mpz_of(reference) * eps.q();
}

Rational epsilon_for_delta(const Rational& delta, std::size_t B) {
  if (!delta.positive() || delta >= Rational(1))
    throw Error("delta must lie strictly between 0 and 1");
  if (B == 0) throw Error("delta mapping needs at least one slot");

  // Largest a with (d+a)^B * (q-p) <= q * d^B, i.e. (1+a/d)^B <= 1/(1-delta).
  const mpz_class p(delta.num), q(delta.den);
  const mpz_class margin = q - p;
  for (std::int64_t d = 1'000'000; d <= 1'000'000'000'000; d *= 1000) {
    mpz_class d_pow;
    mpz_class dz(d);
    mpz_pow_ui(d_pow.get_mpz_t(), dz.get_mpz_t(), static_cast<unsigned long>(B));
    const mpz_class budget = q * d_pow;
    auto fits = [&](std::int64_t a) {
      mpz_class base = dz + a;
      mpz_class base_pow;
      mpz_pow_ui(base_pow.get_mpz_t(), base.get_mpz_t(),
                 static_cast<unsigned long>(B));
      return base_pow * margin <= budget;
    };
    if (!fits(1)) continue;
    std::int64_t lo = 1, hi = 2;
    constexpr std::int64_t a_cap = std::int64_t(1) << 55;
    while (hi < a_cap && fits(hi)) {
      lo = hi;
      hi *= 2;
    }
    while (hi - lo > 1) {
      std::int64_t mid = lo + (hi - lo) / 2;
      if (fits(mid)) lo = mid;
      else hi = mid;
    }
    return Rational(lo, d);
  }
  throw Error("delta too small to map onto a positive epsilon");
}

}  // namespace lmvt
