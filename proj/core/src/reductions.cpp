#include "lmvt/reductions.hpp"

#include <chrono>
#include <limits>
#include <string>

namespace lmvt {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

Bits partition_sum(const PartitionInstance& p) {
  Bits total = 0;
  for (Bits x : p.items) {
    if (x == 0) throw Error("partition items must be positive");
    Bits next = total + x;
    if (next < total) throw CapacityError("partition sum overflows 64 bits");
    total = next;
  }
  return total;
}

PartitionReduction partition_to_lmvt(const PartitionInstance& p) {
  if (p.items.empty()) throw InstanceShapeError("partition needs at least one item");
  const Bits total = partition_sum(p);
  if (total > static_cast<Bits>(std::numeric_limits<std::int64_t>::max()))
    throw CapacityError("partition sum exceeds the rational threshold range");
  for (Bits x : p.items)
    if (x > kMaxRate) throw InstanceShapeError("partition item exceeds the rate cap");

  // Both videos see item j's value in slot j, so an assignment is exactly a
  // two-coloring of the items; min bits reaches U/2 iff the halves tie.
  PartitionReduction out;
  out.instance = make_instance({p.items, p.items});
  out.k = Rational(static_cast<std::int64_t>(total), 2);
  return out;
}

PartitionWitness lmvt_to_partition_witness(const PartitionInstance& p,
                                           const Allocation& a) {
  if (a.assign.size() != p.items.size())
    throw InstanceShapeError("allocation must have one entry per item");
  PartitionWitness w;
  for (std::size_t j = 0; j < p.items.size(); ++j) {
    switch (a.assign[j]) {
      case 0: w.subset.push_back(p.items[j]); break;
      case 1: w.complement.push_back(p.items[j]); break;
      case kUnassigned:
        throw InvalidWitnessError("slot " + std::to_string(j) +
                                  " is unassigned; every item needs a side");
      default:
        throw InvalidAllocationError("slot " + std::to_string(j) +
                                     " references video " +
                                     std::to_string(a.assign[j]));
    }
  }
  return w;
}

Bits constant_rate_opt(std::size_t n, std::size_t B, Bits c) {
  if (n == 0) throw InstanceShapeError("constant-rate optimum needs n >= 1");
  if (B == 0) throw InstanceShapeError("constant-rate optimum needs B >= 1");
  const Bits slots_each = B / n;
  if (c != 0 && slots_each > std::numeric_limits<Bits>::max() / c)
    throw CapacityError("constant-rate optimum overflows 64 bits");
  return slots_each * c;
}

SolveReport solve_greedy(const Instance& inst) {
  validate_instance(inst);
  auto start = Clock::now();

  std::vector<Bits> bits(inst.n, 0);
  Allocation alloc;
  alloc.assign.resize(inst.B, kUnassigned);
  for (std::size_t j = 0; j < inst.B; ++j) {
    // Poorest video that actually gains from this slot; ties to the lowest
    // index. Both choices are conventions, not tuned behavior.
    std::size_t pick = inst.n;
    for (std::size_t i = 0; i < inst.n; ++i) {
      if (inst.rates[i][j] == 0) continue;
      if (pick == inst.n || bits[i] < bits[pick]) pick = i;
    }
    if (pick == inst.n) continue;
    alloc.assign[j] = static_cast<std::int32_t>(pick);
    bits[pick] += inst.rates[pick][j];
  }

  SolveReport report;
  report.value = objective(inst, alloc);
  report.allocation = std::move(alloc);
  report.states_visited = inst.B;
  report.layers = inst.B;
  report.elapsed_ms = ms_since(start);
  report.algorithm = Algorithm::greedy;
  return report;
}

}  // namespace lmvt
