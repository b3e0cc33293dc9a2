// Command-line front end: bound, count, construct, search, verify, girth.
// Every subcommand is a thin adapter over the library; JSON output mirrors
// the module result types field for field.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "scspread/alist.hpp"
#include "scspread/bounds.hpp"
#include "scspread/counting.hpp"
#include "scspread/cycles.hpp"
#include "scspread/errors.hpp"
#include "scspread/json_io.hpp"
#include "scspread/protograph.hpp"
#include "scspread/search.hpp"

namespace {

using scspread::json;

scspread::CouplingPattern parse_pattern(const std::string& text) {
    try {
        const std::string prefix = "consecutive:";
        if (text.rfind(prefix, 0) == 0)
            return scspread::CouplingPattern::consecutive(std::stoi(text.substr(prefix.size())));
        std::vector<int> values;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) values.push_back(std::stoi(item));
        return scspread::CouplingPattern(std::move(values));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("--pattern: " + std::string(e.what()));
    }
}

scspread::HarmfulStructureSet resolve_target(const std::string& target,
                                             const scspread::BaseGraph& base) {
    if (target == "girth6") return scspread::HarmfulStructureSet::girth6_target(base);
    if (target == "girth8") return scspread::HarmfulStructureSet::girth8_target(base);
    auto file = scspread::load_structures_file(target, base);
    for (const auto& warning : file.warnings) std::cerr << "warning: " << warning << "\n";
    return std::move(file.hset);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void render_table(const json& j, const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            render_table(value, prefix.empty() ? key : prefix + "." + key, rows);
        return;
    }
    std::string text;
    if (j.is_null())
        text = "-";
    else if (j.is_string())
        text = j.get<std::string>();
    else if (j.is_number_float())
        text = format_double(j.get<double>());
    else if (j.is_array() && j.size() <= 8 &&
             (j.empty() || !j[0].is_structured())) {
        for (std::size_t k = 0; k < j.size(); ++k)
            text += (k ? " " : "") +
                    (j[k].is_number_float() ? format_double(j[k].get<double>()) : j[k].dump());
    } else if (j.is_array()) {
        text = "[" + std::to_string(j.size()) + " entries]";
    } else {
        text = j.dump();
    }
    rows.emplace_back(prefix, text);
}

void emit(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    render_table(j, "", rows);
    std::size_t width = 0;
    for (const auto& [key, value] : rows) width = std::max(width, key.size());
    for (const auto& [key, value] : rows)
        std::cout << key << std::string(width - key.size() + 2, ' ') << value << "\n";
}

// Aligned mirror of the published this-work / CLLL / MT paragraph.
void emit_comparison_table(const scspread::ClllMtComparison& cmp) {
    auto big = [](const scspread::BigInt& v) { return format_double(v.convert_to<double>()); };
    std::printf("\n4-cycle elimination at lifting degree 1 (%d x %d, %lld candidate cycles)\n",
                cmp.gamma, cmp.kappa, cmp.num_4cycles);
    std::printf("%-26s %-14s %-14s %-14s\n", "", "this-work", "CLLL", "MT");
    std::printf("%-26s %-14lld %-14lld %-14lld\n", "memory requirement", cmp.this_work_bound,
                cmp.m_clll, cmp.m_mt);
    std::printf("%-26s %-14s %-14s %-14s\n", "count at own memory",
                big(cmp.af_count_at_this_work).c_str(), format_double(cmp.clll_count).c_str(),
                format_double(cmp.mt_count).c_str());
    std::printf("%-26s %-14s %-14s %-14s\n", "AF count at same memory", "-",
                big(cmp.af_count_at_m_clll).c_str(), big(cmp.af_count_at_m_mt).c_str());
}

struct CommonArgs {
    int gamma = 0;
    int kappa = 0;
    std::string format = "json";
    int threads = 1;
};

void add_dims(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--gamma", args.gamma, "check-node types")->required();
    cmd->add_option("--kappa", args.kappa, "variable-node types")->required();
}

void add_format(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
}

void add_threads(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--threads", args.threads, "worker thread cap")
        ->envname("SC_SPREAD_THREADS")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
}

int run(CLI::App& app, int argc, char** argv) {
    app.require_subcommand(1);

    CommonArgs args;

    // bound
    auto* bound = app.add_subcommand("bound", "memory-sufficiency bound report");
    std::string bound_target = "girth6";
    std::int64_t hit_budget = 10'000'000;
    add_dims(bound, args);
    bound->add_option("--target", bound_target, "girth6 | girth8 | structures file");
    bound->add_option("--hit-budget", hit_budget, "hitting-set search node budget")
        ->capture_default_str();
    add_format(bound, args);

    // count
    auto* count = app.add_subcommand("count", "assignment-count lower bound");
    std::string count_target = "girth6";
    std::optional<long long> count_mt;
    std::optional<std::string> count_pattern;
    bool count_oracle = false;
    std::int64_t oracle_budget = 100'000'000;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    add_dims(count, args);
    count->add_option("--mt", count_mt, "m_t: the pattern has m_t + 1 admissible indices");
    count->add_option("--pattern", count_pattern,
                      "coupling pattern, 'consecutive:M' or comma list (default consecutive:m_t)");
    count->add_option("--target", count_target, "girth6 | girth8 | structures file");
    count->add_flag("--oracle", count_oracle, "also run the exhaustive oracle");
    count->add_option("--budget", oracle_budget, "exhaustive oracle budget")->capture_default_str();
    count->add_option("--samples", samples, "Monte-Carlo sample count (0 = off)")
        ->capture_default_str();
    count->add_option("--seed", seed, "Monte-Carlo seed")->capture_default_str();
    add_threads(count, args);
    add_format(count, args);

    // construct
    auto* construct = app.add_subcommand("construct", "explicit product assignment and H_SC");
    int length = 10;
    std::string out_matrix, out_alist, emit_kind = "json";
    add_dims(construct, args);
    construct->add_option("--length", length, "coupling length L")->capture_default_str();
    construct->add_option("--out-matrix", out_matrix, "write the partition matrix JSON here");
    construct->add_option("--out-alist", out_alist, "write the H_SC alist here");
    construct->add_option("--emit", emit_kind, "stdout payload")
        ->check(CLI::IsMember({"json", "alist"}))
        ->capture_default_str();
    add_format(construct, args);

    // search
    auto* search = app.add_subcommand("search", "find a structure-breaking assignment");
    std::string search_pattern;
    std::string search_target = "girth6";
    std::string strategy = "backtracking";
    std::int64_t node_budget = 10'000'000;
    std::uint64_t search_seed = 0;
    std::string search_out;
    add_dims(search, args);
    search->add_option("--pattern", search_pattern, "'consecutive:M' or comma list")->required();
    search->add_option("--target", search_target, "girth6 | girth8 | structures file");
    search->add_option("--strategy", strategy, "search strategy")
        ->check(CLI::IsMember({"backtracking", "random", "explicit"}))
        ->capture_default_str();
    search->add_option("--node-budget", node_budget, "search node budget")->capture_default_str();
    search->add_option("--seed", search_seed, "random strategy seed")->capture_default_str();
    search->add_option("--out-matrix", search_out, "write the found matrix JSON here");
    add_threads(search, args);
    add_format(search, args);

    // verify
    auto* verify = app.add_subcommand("verify", "check a partition matrix against a target");
    std::string verify_matrix;
    std::string verify_target = "girth6";
    std::optional<std::string> verify_pattern;
    add_dims(verify, args);
    verify->add_option("--matrix", verify_matrix, "partition matrix JSON file")->required();
    verify->add_option("--pattern", verify_pattern,
                       "coupling pattern (default consecutive:max entry)");
    verify->add_option("--target", verify_target, "girth6 | girth8 | structures file");
    add_format(verify, args);

    // girth
    auto* girth = app.add_subcommand("girth", "Tanner girth of an alist matrix");
    std::string alist_path;
    int cap = 12;
    girth->add_option("--alist", alist_path, "alist file, or - for stdin")->required();
    girth->add_option("--cap", cap, "truncation cap")
        ->check(CLI::IsMember({4, 6, 8, 10, 12}))
        ->capture_default_str();
    add_threads(girth, args);
    add_format(girth, args);

    app.parse(argc, argv);

    if (bound->parsed()) {
        const auto base = scspread::make_base_graph(args.gamma, args.kappa);
        const auto hset = resolve_target(bound_target, base);
        const auto report = scspread::make_bound_report(base, hset, hit_budget);
        emit(report, args.format);
        if (args.format == "table" && report.comparison) emit_comparison_table(*report.comparison);
        return 0;
    }

    if (count->parsed()) {
        const auto base = scspread::make_base_graph(args.gamma, args.kappa);
        std::optional<scspread::CouplingPattern> pattern;
        if (count_pattern) pattern = parse_pattern(*count_pattern);
        if (!count_mt && !pattern)
            throw std::invalid_argument("count: --mt or --pattern is required");
        if (count_mt && pattern && pattern->mt() != *count_mt)
            throw std::invalid_argument("count: --mt disagrees with --pattern");
        const long long mt = count_mt ? *count_mt : pattern->mt();
        if (!pattern) pattern = scspread::CouplingPattern::consecutive(static_cast<int>(mt));

        const auto hset = resolve_target(count_target, base);
        scspread::CountingBound counting;
        if (count_target == "girth6") {
            counting = scspread::c4_counting_bound(args.gamma, args.kappa, mt);
        } else {
            const int w = scspread::union_load(base, hset);
            if (mt < w)
                throw std::domain_error("count: requires m_t >= union load W = " +
                                        std::to_string(w));
            counting = scspread::general_af_bound(
                base.edge_count(), mt,
                static_cast<long long>(hset.fundamental_cycle_union().size()));
        }
        json out{{"counting_bound", counting}};
        if (count_oracle)
            out["exhaustive"] =
                scspread::exhaustive_count_valid(base, *pattern, hset, oracle_budget, args.threads);
        if (samples > 0)
            out["monte_carlo"] =
                scspread::monte_carlo_fraction(base, *pattern, hset, samples, seed, args.threads);
        emit(out, args.format);
        return 0;
    }

    if (construct->parsed()) {
        const auto base = scspread::make_base_graph(args.gamma, args.kappa);
        const auto p = scspread::explicit_product_assignment(base);
        const int memory = p.max_entry();
        const auto pattern = scspread::CouplingPattern::consecutive(memory);
        const auto h = scspread::build_sc_matrix(scspread::spread_edges(base, p, pattern), length);
        if (!out_matrix.empty()) scspread::write_json_file(out_matrix, p);
        if (!out_alist.empty()) scspread::write_alist_file(out_alist, h);
        if (emit_kind == "alist") {
            scspread::write_alist(std::cout, h);
            return 0;
        }
        json out{{"p", p},
                 {"memory", memory},
                 {"coupling_length", length},
                 {"sc_rows", h.rows()},
                 {"sc_cols", h.cols()},
                 {"nnz", h.nnz()}};
        emit(out, args.format);
        return 0;
    }

    if (search->parsed()) {
        const auto base = scspread::make_base_graph(args.gamma, args.kappa);
        scspread::SearchConfig cfg{parse_pattern(search_pattern),
                                   resolve_target(search_target, base)};
        cfg.node_budget = node_budget;
        cfg.seed = search_seed;
        cfg.threads = args.threads;
        if (strategy == "random")
            cfg.strategy = scspread::SearchStrategy::random_sampling;
        else if (strategy == "explicit")
            cfg.strategy = scspread::SearchStrategy::explicit_product;
        const auto result = scspread::search_assignment(base, cfg);
        if (result.p && !search_out.empty()) scspread::write_json_file(search_out, *result.p);
        emit(result, args.format);
        return result.found ? 0 : 1;
    }

    if (verify->parsed()) {
        const auto base = scspread::make_base_graph(args.gamma, args.kappa);
        const auto p = scspread::partition_matrix_from_json(scspread::read_json_file(verify_matrix));
        const auto pattern = verify_pattern
                                 ? parse_pattern(*verify_pattern)
                                 : scspread::CouplingPattern::consecutive(p.max_entry());
        const auto report =
            scspread::verify_assignment(base, p, pattern, resolve_target(verify_target, base));
        emit(report, args.format);
        return report.ok ? 0 : 1;
    }

    if (girth->parsed()) {
        const auto h = alist_path == "-" ? scspread::read_alist(std::cin)
                                         : scspread::read_alist_file(alist_path);
        json out = scspread::tanner_girth(h, cap, args.threads);
        out["rows"] = h.rows();
        out["cols"] = h.cols();
        emit(out, args.format);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"design and verification toolkit for spatially-coupled LDPC protographs"};
    try {
        return run(app, argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const scspread::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
