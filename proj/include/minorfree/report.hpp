#ifndef MINORFREE_REPORT_HPP
#define MINORFREE_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "minorfree/generators.hpp"
#include "minorfree/graph.hpp"

// Machine-readable experiment reports: one header object, one record per
// run, one trailing aggregate.  Replaying (subcommand, parameters, seed)
// reproduces every record byte-identically; every report embeds enough
// parameters to re-run without the original command line.

namespace minorfree {

inline constexpr const char* kToolVersion = "0.1.0";

struct ExperimentReport {
  std::string subcommand;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<nlohmann::json> records;
  nlohmann::json aggregate = nlohmann::json::object();

  void add_record(nlohmann::json record);

  // One JSON object per line: {"kind":"header",...}, then one
  // {"kind":"run",...} per record, then {"kind":"aggregate",...}.
  void write_jsonl(std::ostream& os) const;

  // Flat CSV over the union of record keys (sorted); nested values are
  // serialized JSON.  Header metadata becomes leading comment lines.
  void write_csv(std::ostream& os) const;

  void write(std::ostream& os, const std::string& format) const;
};

nlohmann::json counter_json(const QueryCounter& counter);
nlohmann::json ground_truth_json(const GroundTruth& truth);

}  // namespace minorfree

#endif  // MINORFREE_REPORT_HPP
