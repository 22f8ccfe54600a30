#pragma once

// JSON input formats and the reports printed by the command-line tool.
//
// Subgroup:  {"alphabet":["a","b"], "generators":["b","aa",...]}
//        or  {"alphabet":["a","b"], "degree":4, "action":{"a":[...],"b":[...]}, "base":0}
// Partition: {"alphabet":["a","b"], "parts":[{"subgroup":{...}, "rep":"a"}, ...]}
//
// Rationals are written as strings "p/q" in lowest terms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsgon/partition.hpp"
#include "hsgon/schreier.hpp"

namespace hsgon {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

// A missing alphabet defaults to `fallback`, or to ["a","b"] without one.
SchreierGraph parse_subgroup(const Json& doc, const std::optional<Alphabet>& fallback = std::nullopt);
// Parts in file order, not yet verified.
std::vector<CosetPart> parse_partition(const Json& doc);

Json alphabet_json(const Alphabet& alphabet);
Json subgroup_json(const SchreierGraph& graph);
Json partition_json(const CosetPartition& partition);

Json graph_report(const SchreierGraph& graph);
Json census_report(const CosetPartition& partition, unsigned k_max,
                   std::uint64_t guard = kDefaultStateGuard);

struct AnalyzeOptions {
  unsigned k_max = 8;
  std::string svg_dir;  // empty: no drawings
  std::size_t max_terms = 20;
};

struct Analysis {
  Json report;
  // Messages of StructureViolation findings, which the report also records.
  std::vector<std::string> violations;
};

Analysis analyze(const CosetPartition& partition, const AnalyzeOptions& options = {});

}  // namespace hsgon
