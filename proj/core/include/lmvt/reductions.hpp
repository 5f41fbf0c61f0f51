#pragma once

#include <vector>

#include "lmvt/instance.hpp"
#include "lmvt/rational.hpp"

namespace lmvt {

// Partition input: a nonempty multiset of positive integers.
struct PartitionInstance {
  std::vector<Bits> items;
};

// Checked total of the items. Throws CapacityError on 64-bit overflow.
Bits partition_sum(const PartitionInstance& p);

// Two-video instance whose slots are the items, with both videos receiving
// item j's value from slot j. The half-sum threshold makes the decision
// questions coincide: max-min reaches k iff the items split evenly.
struct PartitionReduction {
  Instance instance;
  Rational k;
};

PartitionReduction partition_to_lmvt(const PartitionInstance& p);

// Item values routed to video 0 and video 1 by an allocation of the
// reduced instance.
struct PartitionWitness {
  std::vector<Bits> subset;
  std::vector<Bits> complement;
};

// Decodes an allocation into the two halves. Every slot must be assigned
// (InvalidWitnessError otherwise) to a valid video (InvalidAllocationError).
PartitionWitness lmvt_to_partition_witness(const PartitionInstance& p,
                                           const Allocation& a);

// Optimum when every rate equals c: hand each video floor(B/n) slots.
Bits constant_rate_opt(std::size_t n, std::size_t B, Bits c);

// Baseline heuristic: give each slot to the currently poorest video that
// gains from it (ties to the lowest index); waste the slot when nobody
// gains. No approximation guarantee.
SolveReport solve_greedy(const Instance& inst);

}  // namespace lmvt
