#include "lmvt/exact_dp.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "layer_step.hpp"

namespace lmvt {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

bool dominated_by(const TxVector& t1, const TxVector& t2) {
  if (t1.size() != t2.size())
    throw InstanceShapeError("Tx vectors must have equal length");
  for (std::size_t i = 0; i < t1.size(); ++i)
    if (t1[i] > t2[i]) return false;
  return true;
}

LayerSet initial_layer(const Instance& inst) {
  validate_instance(inst);
  LayerSet layer;
  layer.layer_index = 0;
  layer.frontier.push_back(TxVector(inst.n, 0));
  layer.parent.push_back(0);
  layer.decision.push_back(kUnassigned);
  return layer;
}

LayerSet advance_layer(const Instance& inst, const LayerSet& prev) {
  validate_instance(inst);
  if (prev.layer_index >= inst.B)
    throw InstanceShapeError("layer index must be below B to advance");
  if (prev.frontier.size() > UINT32_MAX)
    throw CapacityError("frontier too large to index");
  const std::size_t slot = prev.layer_index;  // consuming slot number slot+1
  const auto caps = b_max(inst);

  std::vector<detail::Candidate> candidates;
  candidates.reserve(prev.frontier.size() * (inst.n + 1));
  for (std::size_t p = 0; p < prev.frontier.size(); ++p) {
    const TxVector& base = prev.frontier[p];
    const auto parent = static_cast<std::uint32_t>(p);
    candidates.push_back({base, parent, kUnassigned});
    for (std::size_t i = 0; i < inst.n; ++i) {
      TxVector grown = base;
      grown[i] = std::min(grown[i] + inst.rates[i][slot], caps[i]);
      candidates.push_back({std::move(grown), parent, static_cast<std::int32_t>(i)});
    }
  }
  return detail::pareto_layer(prev.layer_index + 1, std::move(candidates));
}

SolveReport solve_exact(const Instance& inst, const DpOptions& options) {
  auto start = Clock::now();
  std::vector<LayerSet> layers;
  layers.reserve(inst.B + 1);
  layers.push_back(initial_layer(inst));

  std::uint64_t states = 1;
  for (std::size_t m = 1; m <= inst.B; ++m) {
    layers.push_back(advance_layer(inst, layers.back()));
    states += layers.back().frontier.size();
    if (states > options.state_budget)
      throw StateBudgetError("exact frontier exceeded the budget of " +
                             std::to_string(options.state_budget) +
                             " states after layer " + std::to_string(m) +
                             "; the fptas solver trades accuracy for space");
  }

  const std::size_t pick = detail::best_index(layers.back().frontier);

  SolveReport report;
  const TxVector& best = layers.back().frontier[pick];
  report.value = *std::min_element(best.begin(), best.end());
  report.allocation = detail::reconstruct(layers, pick);
  report.states_visited = states;
  report.layers = inst.B;
  report.elapsed_ms = ms_since(start);
  report.algorithm = Algorithm::exact;
  return report;
}

}  // namespace lmvt
