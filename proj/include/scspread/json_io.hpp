#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "scspread/bounds.hpp"
#include "scspread/counting.hpp"
#include "scspread/cycles.hpp"
#include "scspread/protograph.hpp"
#include "scspread/search.hpp"

namespace scspread {

using nlohmann::json;

// Big integers are serialized as decimal strings so downstream JSON
// consumers never face values above 2^53.
std::string to_decimal_string(const BigInt& value);

void to_json(json& j, const BaseGraph& base);
void from_json(const json& j, BaseGraph& base);

void to_json(json& j, const CouplingPattern& pattern);
CouplingPattern coupling_pattern_from_json(const json& j);

void to_json(json& j, const PartitionMatrix& p);
PartitionMatrix partition_matrix_from_json(const json& j);

void to_json(json& j, const CycleCandidate& c);
CycleCandidate cycle_candidate_from_json(const json& j);

void to_json(json& j, const CycleCensus& census);
void to_json(json& j, const GirthResult& girth);
void to_json(json& j, const LoadProfile& profile);
void to_json(json& j, const HittingSetLoad& hit);
void to_json(json& j, const ScaledRational& ratio);
void to_json(json& j, const ClllMtComparison& cmp);
void to_json(json& j, const BoundReport& report);
void to_json(json& j, const CountingBound& bound);
void to_json(json& j, const FractionEstimate& estimate);
void to_json(json& j, const SearchResult& result);
void to_json(json& j, const VerifyReport& report);

struct StructureFile {
    HarmfulStructureSet hset{std::vector<std::vector<CycleCandidate>>{}};
    std::vector<std::string> warnings;
};

// Parses a structure file: a JSON list of structures, each a list of
// candidates {"rows": [...], "cols": [...]}. Candidates are canonicalized
// and range-checked against `base`; duplicate candidates within a structure
// and duplicate structures are dropped with a warning.
StructureFile load_structures(const json& j, const BaseGraph& base);
StructureFile load_structures_file(const std::string& path, const BaseGraph& base);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace scspread
