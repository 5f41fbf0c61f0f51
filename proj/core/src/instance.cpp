#include "lmvt/instance.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <string>

namespace lmvt {

void validate_instance(const Instance& inst) {
  if (inst.n == 0) throw InstanceShapeError("instance needs at least one video");
  if (inst.B == 0) throw InstanceShapeError("instance needs at least one slot");
  if (inst.rates.size() != inst.n)
    throw InstanceShapeError("rate matrix must have n rows");
  for (std::size_t i = 0; i < inst.n; ++i) {
    const auto& row = inst.rates[i];
    if (row.size() != inst.B)
      throw InstanceShapeError("rate row " + std::to_string(i) + " must have B entries");
    Bits sum = 0;
    for (Bits r : row) {
      if (r > kMaxRate)
        throw InstanceShapeError("rate entry exceeds the per-slot cap in row " +
                                 std::to_string(i));
      sum += r;  // cannot wrap: B * kMaxRate needs B > 2^32 rows of max entries
      if (sum > kMaxRowSum)
        throw CapacityError("row sum exceeds the supported bit-count range in row " +
                            std::to_string(i));
    }
  }
  if (inst.lead.alpha.num < 0)
    throw InstanceShapeError("lead slope must be nonnegative");
}

Instance make_instance(std::vector<std::vector<Bits>> rates, LeadFunction lead) {
  Instance inst;
  inst.n = rates.size();
  inst.B = rates.empty() ? 0 : rates.front().size();
  inst.rates = std::move(rates);
  inst.lead = lead;
  validate_instance(inst);
  return inst;
}

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::exact: return "exact";
    case Algorithm::fptas: return "fptas";
    case Algorithm::greedy: return "greedy";
    case Algorithm::brute: return "brute";
  }
  return "unknown";
}

std::vector<Bits> bits_received(const Instance& inst, const Allocation& a) {
  if (inst.rates.size() != inst.n)
    throw InstanceShapeError("rate matrix must have n rows");
  if (a.assign.size() != inst.B)
    throw InstanceShapeError("allocation must have one entry per slot");
  std::vector<Bits> out(inst.n, 0);
  for (std::size_t j = 0; j < inst.B; ++j) {
    std::int32_t v = a.assign[j];
    if (v == kUnassigned) continue;
    if (v < 0 || static_cast<std::size_t>(v) >= inst.n)
      throw InvalidAllocationError("slot " + std::to_string(j) +
                                   " references video " + std::to_string(v));
    const auto& row = inst.rates[static_cast<std::size_t>(v)];
    if (row.size() != inst.B)
      throw InstanceShapeError("rate row " + std::to_string(v) + " must have B entries");
    out[static_cast<std::size_t>(v)] += row[j];
  }
  return out;
}

Bits objective(const Instance& inst, const Allocation& a) {
  auto bits = bits_received(inst, a);
  return *std::min_element(bits.begin(), bits.end());
}

std::vector<Bits> b_max(const Instance& inst) {
  if (inst.rates.size() != inst.n)
    throw InstanceShapeError("rate matrix must have n rows");
  std::vector<Bits> out(inst.n, 0);
  for (std::size_t i = 0; i < inst.n; ++i) {
    for (Bits r : inst.rates[i]) {
      Bits next = out[i] + r;
      if (next < out[i]) throw CapacityError("row sum overflows 64 bits");
      out[i] = next;
    }
  }
  return out;
}

bool decide_lead(const Instance& inst, Bits value, const Rational& k) {
  // alpha * value + beta >= k, cleared of denominators:
  // alpha.num * value * beta.den * k.den + beta.num * alpha.den * k.den
  //   >= k.num * alpha.den * beta.den
  const Rational& alpha = inst.lead.alpha;
  const Rational& beta = inst.lead.beta;
  mpz_class v(static_cast<unsigned long>(value));
  mpz_class lhs = mpz_class(alpha.num) * v * beta.den * k.den +
                  mpz_class(beta.num) * alpha.den * k.den;
  mpz_class rhs = mpz_class(k.num) * alpha.den * beta.den;
  return lhs >= rhs;
}

}  // namespace lmvt
