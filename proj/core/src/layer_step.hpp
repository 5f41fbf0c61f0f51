#pragma once

#include <cstdint>
#include <vector>

#include "lmvt/exact_dp.hpp"

// Frontier machinery shared by the exact and rounded dynamic programs.
// Internal to the library.
namespace lmvt::detail {

struct Candidate {
  TxVector vec;
  std::uint32_t parent;
  std::int32_t decision;
};

// Stable-sorts candidates lexicographically descending and keeps the Pareto
// maxima. In that order a kept vector can never be dominated by a later
// candidate, so one forward scan suffices; equal vectors collapse onto the
// first generated one, keeping predecessor links deterministic.
LayerSet pareto_layer(std::size_t layer_index, std::vector<Candidate>&& candidates);

// Index of the frontier vector with the largest minimum, then the largest
// total. Scanning in the frontier's lex-descending order makes the first
// such index also the lexicographically largest vector.
std::size_t best_index(const std::vector<TxVector>& frontier);

// Follows parent links from entry `index` of the last layer back to layer
// 0, emitting one slot decision per layer.
Allocation reconstruct(const std::vector<LayerSet>& layers, std::size_t index);

}  // namespace lmvt::detail
