#pragma once

#include <cstdint>
#include <vector>

#include "lmvt/instance.hpp"

namespace lmvt {

// Knobs for the layered dynamic programs. The budget bounds the cumulative
// number of frontier vectors across all layers.
struct DpOptions {
  std::uint64_t state_budget = 5'000'000;
};

// Componentwise t1 <= t2: whatever t2 certifies reachable, t1 does too, so
// t1 carries no extra information. Throws InstanceShapeError on length
// mismatch.
bool dominated_by(const TxVector& t1, const TxVector& t2);

// Pareto frontier of bit vectors reachable with the first layer_index
// slots. Vectors are kept in lexicographically descending order; parent
// and decision link each vector to the previous layer for reconstruction.
struct LayerSet {
  std::size_t layer_index = 0;
  std::vector<TxVector> frontier;
  std::vector<std::uint32_t> parent;
  std::vector<std::int32_t> decision;  // video index, or kUnassigned
};

// Layer 0: only the all-zero vector is reachable.
LayerSet initial_layer(const Instance& inst);

// One slot transition: every frontier vector spawns a wasted-slot copy and
// one child per video (bits grown by that video's rate in the next slot),
// then dominated vectors are filtered out.
LayerSet advance_layer(const Instance& inst, const LayerSet& prev);

// Exact max-min solver over all B layers. Ties between optimal vectors are
// broken by larger total, then by lexicographically larger vector. Throws
// StateBudgetError when the cumulative frontier size exceeds the budget.
SolveReport solve_exact(const Instance& inst, const DpOptions& options = {});

}  // namespace lmvt
