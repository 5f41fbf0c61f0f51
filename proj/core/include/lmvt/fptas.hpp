#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lmvt/exact_dp.hpp"
#include "lmvt/instance.hpp"
#include "lmvt/rational.hpp"

namespace lmvt {

// Approximation parameter, an exact positive rational.
struct Epsilon {
  Rational value;

  explicit Epsilon(Rational v);
  std::int64_t p() const { return value.num; }  // numerator, >= 1
  std::int64_t q() const { return value.den; }  // denominator, >= 1
};

// Geometric rounding: floor of the largest power (1+eps)^e not exceeding t,
// or 0 for t < 1. Computed exactly in arbitrary precision; the cost grows
// with log_{1+eps}(t).
Bits psi(std::int64_t t, const Epsilon& eps);

// Per-video rounded value scale: {0}, the image of psi over [1, b_i^max],
// and b_i^max itself; strictly increasing, rows[i].back() == b_i^max. The
// cap entry keeps snapping exact at the top of the row, which the geometric
// guarantee needs; in between, consecutive entries g < g' satisfy
// g' <= g*(1+eps) + 1 for unit-numerator eps, so snap_down never loses more
// than a (1+eps) factor on any reachable value.
struct ValueGrid {
  std::vector<std::vector<Bits>> rows;
};

// Builds the grid for an instance. Throws CapacityError if a row would
// need more entries than the solver could ever visit.
ValueGrid build_grid(const Instance& inst, const Epsilon& eps);

// Largest grid entry <= max(0, v). Every grid entry is its own snap. The
// row must be a grid row: nonempty, strictly increasing, starting at 0.
Bits snap_down(std::int64_t v, std::span<const Bits> row);

// advance_layer on the rounded scale: each grown coordinate snaps down to
// its video's grid row, so frontier sizes stay bounded by the grid.
LayerSet fptas_advance_layer(const Instance& inst, const ValueGrid& grid,
                             const LayerSet& prev);

// Rounded-grid solver. The report's value is the grid objective (a lower
// bound on the optimum); true_value re-evaluates the reconstructed
// allocation exactly.
SolveReport solve_fptas(const Instance& inst, const Epsilon& eps,
                        const DpOptions& options = {});

// Exact check of value * (1+eps)^layers >= reference. This is the
// per-layer compounded guarantee the rounded solver is tested against;
// it holds by construction whenever eps has numerator 1.
bool meets_geometric_bound(Bits value, Bits reference, const Epsilon& eps,
                           std::size_t layers);

// Exact check of value * (1 + eps*layers) >= reference: the linearized
// bound. Reported empirically; not guaranteed by construction.
bool meets_linear_bound(Bits value, Bits reference, const Epsilon& eps,
                        std::size_t layers);

// Largest epsilon = a/d (d a power of ten) with (1+eps)^B <= 1/(1-delta),
// so a relative loss target delta in (0,1) over B layers maps onto the
// geometric guarantee. Throws Error if no positive epsilon fits.
Rational epsilon_for_delta(const Rational& delta, std::size_t B);

}  // namespace lmvt
