#include "minorfree/report.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace minorfree {

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char ch : field) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

std::string csv_value(const nlohmann::json& v) {
  if (v.is_string()) return csv_escape(v.get<std::string>());
  return csv_escape(v.dump());
}

}  // namespace

void ExperimentReport::add_record(nlohmann::json record) {
  records.push_back(std::move(record));
}

void ExperimentReport::write_jsonl(std::ostream& os) const {
  nlohmann::json header = nlohmann::json::object();
  header["kind"] = "header";
  header["tool_version"] = kToolVersion;
  header["subcommand"] = subcommand;
  header["parameters"] = parameters;
  os << header.dump() << "\n";
  for (const nlohmann::json& record : records) {
    nlohmann::json line = record;
    line["kind"] = "run";
    os << line.dump() << "\n";
  }
  nlohmann::json tail = aggregate;
  tail["kind"] = "aggregate";
  os << tail.dump() << "\n";
}

void ExperimentReport::write_csv(std::ostream& os) const {
  os << "# tool_version=" << kToolVersion << " subcommand=" << subcommand
     << "\n";
  os << "# parameters=" << parameters.dump() << "\n";
  std::set<std::string> keys;
  for (const nlohmann::json& record : records) {
    for (const auto& item : record.items()) keys.insert(item.key());
  }
  bool first = true;
  for (const std::string& key : keys) {
    if (!first) os << ",";
    os << csv_escape(key);
    first = false;
  }
  os << "\n";
  for (const nlohmann::json& record : records) {
    first = true;
    for (const std::string& key : keys) {
      if (!first) os << ",";
      first = false;
      const auto it = record.find(key);
      if (it != record.end()) os << csv_value(*it);
    }
    os << "\n";
  }
  os << "# aggregate=" << aggregate.dump() << "\n";
}

void ExperimentReport::write(std::ostream& os,
                             const std::string& format) const {
  if (format == "jsonl") {
    write_jsonl(os);
  } else if (format == "csv") {
    write_csv(os);
  } else {
    throw std::invalid_argument("unknown report format: " + format);
  }
}

nlohmann::json counter_json(const QueryCounter& counter) {
  return nlohmann::json{
      {"neighbor", counter.neighbor_queries},
      {"degree", counter.degree_queries},
      {"random_neighbor", counter.random_neighbor_queries},
      {"total", counter.total()},
  };
}

nlohmann::json ground_truth_json(const GroundTruth& truth) {
  nlohmann::json j;
  j["family"] = family_name(truth.family);
  j["n"] = truth.n;
  j["seed"] = truth.seed;
  if (truth.is_hamiltonian.has_value()) {
    j["is_hamiltonian"] = *truth.is_hamiltonian;
  }
  if (!truth.planted_ham_order.empty()) {
    j["planted_ham_order"] = truth.planted_ham_order;
  }
  if (truth.certified_ham_distance.has_value()) {
    j["certified_ham_distance"] = *truth.certified_ham_distance;
  }
  if (truth.msf_weight.has_value()) {
    j["msf_weight_micro"] = *truth.msf_weight;
  }
  return j;
}

}  // namespace minorfree
