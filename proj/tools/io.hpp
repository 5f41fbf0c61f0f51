#pragma once

#include <optional>
#include <string>

#include <lmvt/instance.hpp>
#include <lmvt/rational.hpp>

#include "json.hpp"

namespace lmvt::cli {

using Json = nlohmann::ordered_json;

// On-disk instance: the solver input plus the optional decision threshold.
struct InstanceFile {
  Instance instance;
  std::optional<Rational> k;
};

// Keys emitted in order: n, B, rates, lead (only when not the identity),
// k (only when present). Rationals serialize as "p/q".
Json instance_to_json(const InstanceFile& file);

// Strict inverse of instance_to_json: integer fields must be nonnegative
// integers, rates must be an n-by-B grid, rationals must parse. Unknown
// keys are ignored. Throws lmvt errors or nlohmann parse errors on bad
// input; the resulting instance is validated.
InstanceFile instance_from_json(const Json& j);

// Keys in order: algorithm, value, true_value (when present), allocation
// (UNASSIGNED as null), states_visited, elapsed_ms, epsilon (when present),
// decision (when supplied).
Json report_to_json(const SolveReport& report, std::optional<bool> decision);

// Reads a whole file, or standard input when path is "-".
std::string read_input(const std::string& path);

}  // namespace lmvt::cli
