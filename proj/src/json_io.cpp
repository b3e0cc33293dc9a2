#include "scspread/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace scspread {

std::string to_decimal_string(const BigInt& value) { return value.str(); }

void to_json(json& j, const BaseGraph& base) {
    j = json{{"gamma", base.gamma}, {"kappa", base.kappa}};
}

void from_json(const json& j, BaseGraph& base) {
    base = make_base_graph(j.at("gamma").get<int>(), j.at("kappa").get<int>());
}

void to_json(json& j, const CouplingPattern& pattern) {
    j = json{{"values", pattern.values()}};
}

CouplingPattern coupling_pattern_from_json(const json& j) {
    if (j.is_array()) return CouplingPattern(j.get<std::vector<int>>());
    return CouplingPattern(j.at("values").get<std::vector<int>>());
}

void to_json(json& j, const PartitionMatrix& p) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(p.gamma()));
    for (int i = 0; i < p.gamma(); ++i) {
        rows[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(p.kappa()));
        for (int jj = 0; jj < p.kappa(); ++jj) rows[static_cast<std::size_t>(i)].push_back(p(i, jj));
    }
    j = json{{"gamma", p.gamma()}, {"kappa", p.kappa()}, {"entries", rows}};
}

PartitionMatrix partition_matrix_from_json(const json& j) {
    const int gamma = j.at("gamma").get<int>();
    const int kappa = j.at("kappa").get<int>();
    const auto rows = j.at("entries").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rows.size()) != gamma)
        throw std::invalid_argument("partition matrix json: row count does not match gamma");
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(gamma) * static_cast<std::size_t>(kappa));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != kappa)
            throw std::invalid_argument("partition matrix json: row length does not match kappa");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return PartitionMatrix(gamma, kappa, std::move(entries));
}

void to_json(json& j, const CycleCandidate& c) {
    j = json{{"rows", c.rows}, {"cols", c.cols}};
}

CycleCandidate cycle_candidate_from_json(const json& j) {
    return make_canonical(j.at("rows").get<std::vector<int>>(),
                          j.at("cols").get<std::vector<int>>());
}

void to_json(json& j, const CycleCensus& census) {
    j = json{{"g", census.g},
             {"total", census.total_candidates},
             {"active", census.active_count}};
    if (census.active_list) j["examples"] = *census.active_list;
}

void to_json(json& j, const GirthResult& girth) {
    j = json{{"cap", girth.cap}, {"display", girth.to_string()}};
    if (girth.girth)
        j["girth"] = *girth.girth;
    else
        j["girth"] = nullptr;
}

void to_json(json& j, const LoadProfile& profile) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(profile.gamma));
    for (int i = 0; i < profile.gamma; ++i)
        rows[static_cast<std::size_t>(i)] =
            std::vector<int>(profile.per_edge.begin() + static_cast<std::ptrdiff_t>(i) * profile.kappa,
                             profile.per_edge.begin() + static_cast<std::ptrdiff_t>(i + 1) * profile.kappa);
    j = json{{"gamma", profile.gamma},
             {"kappa", profile.kappa},
             {"per_edge", rows},
             {"max_load", profile.max_load}};
}

void to_json(json& j, const HittingSetLoad& hit) {
    j = json{{"exact", hit.exact},
             {"lower", hit.lower},
             {"upper", hit.upper},
             {"witness_size", hit.witness.size()},
             {"nodes_explored", hit.nodes_explored}};
    if (hit.exact) j["value"] = hit.upper;
}

void to_json(json& j, const ScaledRational& ratio) {
    j = json{{"num", ratio.num},
             {"den", ratio.den},
             {"e_power", ratio.e_power},
             {"decimal", ratio.value()},
             {"display", ratio.to_string()}};
}

void to_json(json& j, const ClllMtComparison& cmp) {
    j = json{{"gamma", cmp.gamma},
             {"kappa", cmp.kappa},
             {"this_work_bound", cmp.this_work_bound},
             {"dependency_degree", cmp.dependency_degree},
             {"num_4cycles", cmp.num_4cycles},
             {"c_clll_ratio", cmp.c_clll_ratio},
             {"m_clll", cmp.m_clll},
             {"m_mt", cmp.m_mt},
             {"m_clll_asymptotic", cmp.m_clll_asymptotic},
             {"m_mt_asymptotic", cmp.m_mt_asymptotic},
             {"af_count_at_this_work", to_decimal_string(cmp.af_count_at_this_work)},
             {"clll_count_at_m_clll", cmp.clll_count},
             {"af_count_at_m_clll", to_decimal_string(cmp.af_count_at_m_clll)},
             {"mt_count_at_m_mt", cmp.mt_count},
             {"af_count_at_m_mt", to_decimal_string(cmp.af_count_at_m_mt)}};
}

void to_json(json& j, const BoundReport& report) {
    j = json{{"gamma", report.gamma},
             {"kappa", report.kappa},
             {"w_union", report.w_union},
             {"girth6_bound", report.girth6_bound},
             {"girth8_bound", report.girth8_bound}};
    j["w_hit"] = report.w_hit ? json(*report.w_hit) : json(nullptr);
    if (report.lit_lower_bounds)
        j["lit_lower_bounds"] = json{{"break_4cycles", report.lit_lower_bounds->first},
                                     {"break_4_and_6cycles", report.lit_lower_bounds->second}};
    else
        j["lit_lower_bounds"] = nullptr;
    j["comparison"] = report.comparison ? json(*report.comparison) : json(nullptr);
}

void to_json(json& j, const CountingBound& bound) {
    j = json{{"degree", bound.degree},
             {"q", bound.q},
             {"r", bound.r},
             {"bound", to_decimal_string(bound.bound)},
             {"grid_total", to_decimal_string(bound.grid_total)}};
}

void to_json(json& j, const FractionEstimate& estimate) {
    j = json{{"fraction", estimate.fraction},
             {"wilson99", json::array({estimate.wilson_low, estimate.wilson_high})},
             {"samples", estimate.samples},
             {"valid", estimate.valid},
             {"seed", estimate.seed}};
}

void to_json(json& j, const SearchResult& result) {
    j = json{{"found", result.found},
             {"conclusive", result.conclusive},
             {"nodes_explored", result.nodes_explored},
             {"certificate", result.certificate}};
    j["p"] = result.p ? json(*result.p) : json(nullptr);
}

void to_json(json& j, const VerifyReport& report) {
    j = json{{"ok", report.ok},
             {"certificate", report.certificate},
             {"violations", report.violations}};
}

StructureFile load_structures(const json& j, const BaseGraph& base) {
    if (!j.is_array())
        throw std::invalid_argument("structure file: top level must be a list of structures");
    StructureFile file;
    std::vector<std::vector<CycleCandidate>> structures;
    std::set<std::vector<CycleCandidate>> seen_structures;
    for (std::size_t s = 0; s < j.size(); ++s) {
        const auto& js = j[s];
        if (!js.is_array())
            throw std::invalid_argument("structure file: structure " + std::to_string(s) +
                                        " must be a list of candidates");
        std::vector<CycleCandidate> structure;
        std::set<CycleCandidate> seen;
        for (const auto& jc : js) {
            CycleCandidate c = cycle_candidate_from_json(jc);
            if (!seen.insert(c).second) {
                file.warnings.push_back("structure " + std::to_string(s) +
                                        ": duplicate candidate dropped");
                continue;
            }
            structure.push_back(std::move(c));
        }
        if (structure.empty())
            throw std::invalid_argument("structure file: structure " + std::to_string(s) +
                                        " has no fundamental cycles");
        std::vector<CycleCandidate> key = structure;
        std::sort(key.begin(), key.end());
        if (!seen_structures.insert(key).second) {
            file.warnings.push_back("structure " + std::to_string(s) + ": duplicate structure dropped");
            continue;
        }
        structures.push_back(std::move(structure));
    }
    file.hset = HarmfulStructureSet(std::move(structures));
    file.hset.check_in_range(base);
    return file;
}

StructureFile load_structures_file(const std::string& path, const BaseGraph& base) {
    return load_structures(read_json_file(path), base);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace scspread
