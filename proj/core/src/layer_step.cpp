#include "layer_step.hpp"

#include <algorithm>

namespace lmvt::detail {

namespace {

bool lex_greater(const TxVector& a, const TxVector& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

LayerSet pareto_layer(std::size_t layer_index, std::vector<Candidate>&& candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return lex_greater(a.vec, b.vec);
                   });

  LayerSet out;
  out.layer_index = layer_index;
  const std::size_t n = candidates.empty() ? 0 : candidates.front().vec.size();

  if (n == 2) {
    // All kept vectors have a first coordinate >= the candidate's, so the
    // candidate is dominated iff some kept second coordinate covers its own.
    Bits max_second = 0;
    bool any = false;
    for (auto& c : candidates) {
      if (any && c.vec[1] <= max_second) continue;
      max_second = c.vec[1];
      any = true;
      out.frontier.push_back(std::move(c.vec));
      out.parent.push_back(c.parent);
      out.decision.push_back(c.decision);
    }
    return out;
  }

  for (auto& c : candidates) {
    bool dominated = false;
    for (const auto& kept : out.frontier) {
      dominated = true;
      for (std::size_t i = 0; i < n; ++i)
        if (c.vec[i] > kept[i]) {
          dominated = false;
          break;
        }
      if (dominated) break;
    }
    if (dominated) continue;
    out.frontier.push_back(std::move(c.vec));
    out.parent.push_back(c.parent);
    out.decision.push_back(c.decision);
  }
  return out;
}

std::size_t best_index(const std::vector<TxVector>& frontier) {
  std::size_t best = 0;
  Bits best_min = 0;
  unsigned __int128 best_total = 0;
  for (std::size_t idx = 0; idx < frontier.size(); ++idx) {
    const TxVector& v = frontier[idx];
    Bits min_v = *std::min_element(v.begin(), v.end());
    unsigned __int128 total = 0;
    for (Bits b : v) total += b;
    if (idx == 0 || min_v > best_min ||
        (min_v == best_min && total > best_total)) {
      best = idx;
      best_min = min_v;
      best_total = total;
    }
  }
  return best;
}

Allocation reconstruct(const std::vector<LayerSet>& layers, std::size_t index) {
  Allocation alloc;
  alloc.assign.resize(layers.size() - 1, kUnassigned);
  for (std::size_t m = layers.size() - 1; m > 0; --m) {
    alloc.assign[m - 1] = layers[m].decision[index];
    index = layers[m].parent[index];
  }
  return alloc;
}

}  // namespace lmvt::detail
