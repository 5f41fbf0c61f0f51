#include "io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <lmvt/errors.hpp>

namespace lmvt::cli {

namespace {

std::uint64_t u64_field(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0)
      throw InstanceShapeError(std::string(what) + " must be nonnegative");
    return static_cast<std::uint64_t>(v);
  }
  throw InstanceShapeError(std::string(what) + " must be an integer");
}

Rational rational_field(const Json& j, const char* what) {
  if (!j.is_string())
    throw InstanceShapeError(std::string(what) + " must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

}  // namespace

Json instance_to_json(const InstanceFile& file) {
  const Instance& inst = file.instance;
  Json j;
  j["n"] = inst.n;
  j["B"] = inst.B;
  Json rates = Json::array();
  for (const auto& row : inst.rates) rates.push_back(row);
  j["rates"] = std::move(rates);
  if (!inst.lead.is_identity()) {
    Json lead;
    lead["alpha"] = inst.lead.alpha.str();
    lead["beta"] = inst.lead.beta.str();
    j["lead"] = std::move(lead);
  }
  if (file.k) j["k"] = file.k->str();
  return j;
}

InstanceFile instance_from_json(const Json& j) {
  if (!j.is_object()) throw InstanceShapeError("instance must be a JSON object");
  InstanceFile file;
  Instance& inst = file.instance;
  inst.n = u64_field(j.at("n"), "n");
  inst.B = u64_field(j.at("B"), "B");

  const Json& rates = j.at("rates");
  if (!rates.is_array())
    throw InstanceShapeError("rates must be an array of rows");
  inst.rates.reserve(rates.size());
  for (const Json& row : rates) {
    if (!row.is_array())
      throw InstanceShapeError("each rates row must be an array");
    std::vector<Bits> out;
    out.reserve(row.size());
    for (const Json& cell : row) out.push_back(u64_field(cell, "rate"));
    inst.rates.push_back(std::move(out));
  }

  if (auto it = j.find("lead"); it != j.end()) {
    if (!it->is_object())
      throw InstanceShapeError("lead must be an object with alpha and beta");
    inst.lead.alpha = rational_field(it->at("alpha"), "alpha");
    inst.lead.beta = rational_field(it->at("beta"), "beta");
  }
  if (auto it = j.find("k"); it != j.end())
    file.k = rational_field(*it, "k");

  validate_instance(inst);
  return file;
}

Json report_to_json(const SolveReport& report, std::optional<bool> decision) {
  Json j;
  j["algorithm"] = algorithm_name(report.algorithm);
  j["value"] = report.value;
  if (report.true_value) j["true_value"] = *report.true_value;
  Json alloc = Json::array();
  for (auto a : report.allocation.assign) {
    if (a == kUnassigned)
      alloc.push_back(nullptr);
    else
      alloc.push_back(a);
  }
  j["allocation"] = std::move(alloc);
  j["states_visited"] = report.states_visited;
  j["elapsed_ms"] = report.elapsed_ms;
  if (report.epsilon) j["epsilon"] = report.epsilon->str();
  if (decision) j["decision"] = *decision;
  return j;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return std::move(buffer).str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

}  // namespace lmvt::cli
