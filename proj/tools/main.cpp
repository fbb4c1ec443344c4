// Command-line front end: every analysis is a subcommand over a node/edge
// dataset. Outputs are pure functions of (dataset bytes, flags); nothing
// here may print timings, pointers, or anything else nondeterministic.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "genealogy/closeness.hpp"
#include "genealogy/graph.hpp"
#include "genealogy/io.hpp"
#include "genealogy/stats.hpp"

namespace fs = std::filesystem;
using namespace genealogy;

namespace {

struct RunConfig {
    std::string nodes_path;
    std::string edges_path;
    double h = -1.0;
    std::string subset = "laureates"; // laureates | field | all
    std::string field;
    int max_n = 0; // 0 = auto (graph depth; neighborhood defaults to 2)
    bool prior_only = false;
    int top = 20;
    std::string out_dir;
    unsigned threads = 0;
};

/// Bad flag combinations that CLI11 cannot catch itself; exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt6(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

fs::path out_path(const RunConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.out_dir);
    return fs::path(cfg.out_dir) / name;
}

GenealogyGraph load(const RunConfig& cfg) {
    const DatasetManifest manifest{cfg.nodes_path, cfg.edges_path, 1, std::nullopt};
    std::vector<Diagnostic> warnings;
    auto g = load_dataset(manifest, &warnings);
    for (const auto& w : warnings)
        std::cerr << "warning: " << w.path << ":" << w.line << ": " << w.message << "\n";
    return g;
}

HolderParams make_params(const GenealogyGraph& g, const RunConfig& cfg) {
    HolderParams params;
    params.h = cfg.h;
    if (cfg.subset == "all") {
        for (const auto& id : g.ids()) params.subset.insert(id);
    } else if (cfg.subset == "field") {
        const auto field = field_from_name(cfg.field);
        if (!field) throw UsageError("--subset field requires --field physics|chemistry|medicine|economics");
        for (const auto& id : g.laureate_ids())
            for (const Prize& p : g.scholar(id).prizes)
                if (p.field == *field) {
                    params.subset.insert(id);
                    break;
                }
    } else {
        for (const auto& id : g.laureate_ids()) params.subset.insert(id);
    }
    return params;
}

ReportOptions make_report_options(const RunConfig& cfg) {
    ReportOptions options;
    options.max_n = cfg.max_n;
    options.threads = cfg.threads;
    return options;
}

int cmd_validate(const RunConfig& cfg) {
    const auto g = load(cfg);
    std::printf("%zu nodes, %zu edges, %zu laureates\n", g.node_count(), g.edge_count(),
                g.laureate_count());
    const auto census = g.weak_components();
    std::printf("components: %zu\n", census.components.size());
    std::string histogram;
    for (const auto& [count, mult] : census.histogram) {
        if (!histogram.empty()) histogram += ' ';
        histogram += std::to_string(count) + ":" + std::to_string(mult);
    }
    std::printf("laureate histogram: %s\n", histogram.c_str());
    std::printf("max depth: %d\n", g.max_depth());
    return 0;
}

int cmd_closeness(const RunConfig& cfg, const std::string& direction) {
    const auto g = load(cfg);
    const auto report = closeness_report(g, make_params(g, cfg), make_report_options(cfg));

    auto value_of = [&](const ClosenessRow& row) {
        if (direction == "out") return row.out_closeness;
        if (direction == "in") return row.in_closeness;
        if (direction == "cross") return row.cross_closeness;
        return row.total_closeness;
    };
    std::vector<const ClosenessRow*> ranked;
    for (const auto& row : report.rows) ranked.push_back(&row);
    std::stable_sort(ranked.begin(), ranked.end(),
                     [&](const ClosenessRow* a, const ClosenessRow* b) {
                         if (value_of(*a) != value_of(*b)) return value_of(*a) > value_of(*b);
                         return a->id < b->id;
                     });
    const std::size_t shown = std::min<std::size_t>(ranked.size(),
                                                    cfg.top > 0 ? static_cast<std::size_t>(cfg.top)
                                                                : ranked.size());
    std::printf("rank id out in cross total\n");
    for (std::size_t k = 0; k < shown; ++k)
        std::printf("%zu %s %s %s %s %s\n", k + 1, ranked[k]->id.c_str(),
                    fmt6(ranked[k]->out_closeness).c_str(), fmt6(ranked[k]->in_closeness).c_str(),
                    fmt6(ranked[k]->cross_closeness).c_str(),
                    fmt6(ranked[k]->total_closeness).c_str());

    const auto csv = out_path(cfg, "closeness.csv");
    write_closeness_csv(report, csv);
    std::printf("wrote %s\n", csv.string().c_str());
    return 0;
}

void print_table(const CrossTable& table, const char* title) {
    std::printf("%s\n", title);
    std::printf("field physics chemistry medicine economics any none\n");
    for (int r = 0; r < kFieldCount; ++r) {
        std::printf("%s", std::string(field_name(static_cast<PrizeField>(r))).c_str());
        for (int c = 0; c < kFieldCount; ++c) std::printf(" %zu", table.cells[r][c]);
        std::printf(" %zu %zu\n", table.any[r], table.none[r]);
    }
}

int cmd_tables(const RunConfig& cfg) {
    const auto g = load(cfg);
    const auto proximate = cross_table(g, TableKind::Proximate);
    const auto distal = cross_table(g, TableKind::Distal);
    const auto summary = ancestry_summary(g);

    print_table(proximate, "proximate (advisor field x student field)");
    print_table(distal, "distal (ancestor field x descendant field)");

    static constexpr const char* kScopeNames[] = {"any", "physics", "chemistry", "medicine",
                                                  "economics"};
    std::printf("laureate ancestors, mean (se):");
    for (std::size_t s = 0; s < AncestrySummary::kScopes; ++s)
        if (summary.ancestors[s])
            std::printf(" %s=%s (%s)", kScopeNames[s], fmt6(summary.ancestors[s]->mean).c_str(),
                        fmt6(summary.ancestors[s]->se).c_str());
    std::printf("\nlaureate descendants, mean (se):");
    for (std::size_t s = 0; s < AncestrySummary::kScopes; ++s)
        if (summary.descendants[s])
            std::printf(" %s=%s (%s)", kScopeNames[s], fmt6(summary.descendants[s]->mean).c_str(),
                        fmt6(summary.descendants[s]->se).c_str());
    std::printf("\n");

    // Welch's t on per-laureate ancestor counts, field vs field
    std::vector<std::vector<double>> counts(kFieldCount);
    for (const auto& id : g.laureate_ids()) {
        double n = 0;
        for (const auto& a : g.ancestors(id))
            if (!g.scholar(a).prizes.empty()) n += 1;
        std::set<PrizeField> fields;
        for (const Prize& p : g.scholar(id).prizes) fields.insert(p.field);
        for (const PrizeField f : fields) counts[static_cast<std::size_t>(f)].push_back(n);
    }
    for (int a = 0; a < kFieldCount; ++a)
        for (int b = a + 1; b < kFieldCount; ++b) {
            std::printf("welch t, ancestors %s vs %s: ",
                        std::string(field_name(static_cast<PrizeField>(a))).c_str(),
                        std::string(field_name(static_cast<PrizeField>(b))).c_str());
            try {
                const auto r = welch_t(counts[a], counts[b]);
                std::printf("t=%s dof=%s\n", fmt6(r.t).c_str(), fmt6(r.dof).c_str());
            } catch (const DegenerateGroupError&) {
                std::printf("skipped (degenerate groups)\n");
            }
        }

    for (const auto& [table, name] :
         {std::pair{&proximate, "table_proximate.csv"}, std::pair{&distal, "table_distal.csv"}}) {
        const auto path = out_path(cfg, name);
        write_cross_table_csv(*table, path);
        std::printf("wrote %s\n", path.string().c_str());
    }
    const auto summary_path = out_path(cfg, "ancestry_summary.csv");
    write_ancestry_summary_csv(summary, summary_path);
    std::printf("wrote %s\n", summary_path.string().c_str());
    return 0;
}

int cmd_trends(const RunConfig& cfg, const std::string& metric_name) {
    const auto g = load(cfg);
    const auto metric = cohort_metric_from_name(metric_name);
    if (!metric) throw UsageError("unknown metric: " + metric_name);
    const auto series = cohort_series(g, *metric, cfg.prior_only);
    std::printf("metric=%s points=%zu slope=%s\n", metric_name.c_str(), series.points.size(),
                fmt6(series.trend_slope).c_str());
    const auto csv = out_path(cfg, "trend_" + metric_name + ".csv");
    write_cohort_series_csv(series, csv);
    std::printf("wrote %s\n", csv.string().c_str());
    if (series.points.empty()) {
        std::printf("no points, svg skipped\n");
        return 0;
    }
    const auto svg = out_path(cfg, "trend_" + metric_name + ".svg");
    export_svg_scatter(series, svg);
    std::printf("wrote %s\n", svg.string().c_str());
    return 0;
}

int cmd_pairs(const RunConfig& cfg) {
    const auto g = load(cfg);
    const auto counts = laureate_pair_counts(g);
    std::printf("direct=%zu direct_same_field=%zu transitive=%zu transitive_same_field=%zu\n",
                counts.direct, counts.direct_same_field, counts.transitive,
                counts.transitive_same_field);
    const auto csv = out_path(cfg, "pairs.csv");
    std::string content = "direct,direct_same_field,transitive,transitive_same_field\n";
    content += std::to_string(counts.direct) + "," + std::to_string(counts.direct_same_field) +
               "," + std::to_string(counts.transitive) + "," +
               std::to_string(counts.transitive_same_field) + "\n";
    std::ofstream out(csv, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing: " + csv.string());
    out << content;
    std::printf("wrote %s\n", csv.string().c_str());
    return 0;
}

int cmd_nca(const RunConfig& cfg, const std::vector<std::string>& ids, bool all_laureates) {
    const auto g = load(cfg);
    std::set<std::string> subset(ids.begin(), ids.end());
    if (all_laureates)
        for (const auto& id : g.laureate_ids()) subset.insert(id);
    if (subset.empty()) throw UsageError("nca needs --ids or --laureates");
    const auto result = g.nearest_common_ancestor(subset);
    if (!result) {
        std::printf("no common ancestor\n");
        return 0;
    }
    std::printf("nca=%s max_distance=%u sum_distance=%llu\n", result->id.c_str(),
                result->max_distance, static_cast<unsigned long long>(result->sum_distance));
    return 0;
}

int cmd_neighborhood(const RunConfig& cfg, const std::string& id, bool lineage_only) {
    const auto g = load(cfg);
    const int max_n = cfg.max_n > 0 ? cfg.max_n : 2; // siblings and cousins by default
    const auto entries = kinship_neighborhood(g, id, max_n, lineage_only);
    std::printf("kin of %s within %d generations: %zu\n", id.c_str(), max_n, entries.size());
    for (const auto& e : entries)
        std::printf("%s n=%d H=%s\n", e.id.c_str(), e.n, fmt6(e.h).c_str());
    const auto csv = out_path(cfg, "neighborhood_" + id + ".csv");
    std::string content = "id,n,h\n";
    for (const auto& e : entries)
        content += e.id + "," + std::to_string(e.n) + "," + fmt6(e.h) + "\n";
    std::ofstream out(csv, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing: " + csv.string());
    out << content;
    std::printf("wrote %s\n", csv.string().c_str());
    return 0;
}

int cmd_classify(const RunConfig& cfg) {
    const auto g = load(cfg);
    const auto classes = tie_classification(g);
    std::map<TieClass, std::size_t> tally;
    for (const auto& [id, cls] : classes) ++tally[cls];
    std::printf("no_ties=%zu peers_only=%zu has_laureate_ancestor=%zu unconnected=%zu\n",
                tally[TieClass::NoTies], tally[TieClass::PeersOnly],
                tally[TieClass::HasLaureateAncestor], tally[TieClass::Unconnected]);
    const auto csv = out_path(cfg, "classify.csv");
    std::string content = "id,class\n";
    for (const auto& [id, cls] : classes)
        content += id + "," + std::string(tie_class_name(cls)) + "\n";
    std::ofstream out(csv, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing: " + csv.string());
    out << content;
    std::printf("wrote %s\n", csv.string().c_str());
    return 0;
}

int cmd_export(const RunConfig& cfg, const std::string& format, bool uniform, double scale,
               const std::string& component_of, const std::string& subtree_of) {
    const auto g = load(cfg);
    const auto report = closeness_report(g, make_params(g, cfg), make_report_options(cfg));
    RenderSpec spec;
    spec.size_rule = uniform ? SizeRule::Uniform : SizeRule::TotalCloseness;
    spec.scale_factor = scale;
    if (!component_of.empty()) {
        std::set<std::string> keep;
        const auto comp = g.component_of(g.index_of(component_of));
        for (const NodeIndex v : g.component_members(comp)) keep.insert(g.id_of(v));
        spec.filter = std::move(keep);
    } else if (!subtree_of.empty()) {
        auto keep = g.descendants(subtree_of);
        keep.insert(subtree_of);
        spec.filter = std::move(keep);
    }
    if (format == "dot") {
        const auto path = out_path(cfg, "graph.dot");
        export_dot(g, report, spec, path);
        std::printf("wrote %s\n", path.string().c_str());
    } else {
        const auto path = out_path(cfg, "graph.graphml");
        export_graphml(g, report, spec, path);
        std::printf("wrote %s\n", path.string().c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"academic advisor-advisee genealogy analytics"};
    app.set_help_flag("--help", "print usage"); // frees -h/--h for the exponent
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--nodes", cfg.nodes_path, "node CSV/JSON file");
    app.add_option("--edges", cfg.edges_path, "edge CSV/JSON file");
    app.add_option("--h", cfg.h, "Hölder exponent (default -1, harmonic)");
    app.add_option("--subset", cfg.subset, "closeness subset J")
        ->check(CLI::IsMember({"laureates", "field", "all"}));
    app.add_option("--field", cfg.field, "prize field for --subset field");
    app.add_option("--max-n", cfg.max_n, "generation cap for cross measures (0 = auto)");
    app.add_flag("--prior-only", cfg.prior_only, "count only relatives awarded strictly earlier");
    app.add_option("--top", cfg.top, "rows to print in rankings");
    app.add_option("--out", cfg.out_dir, "output directory (default: $GENEALOGY_OUT or .)");
    app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");

    auto* validate = app.add_subcommand("validate", "parse, build, and report dataset shape");
    auto* closeness = app.add_subcommand("closeness", "rank nodes by closeness to the subset");
    std::string direction = "all";
    closeness->add_option("--direction", direction, "out|in|cross|all")
        ->check(CLI::IsMember({"out", "in", "cross", "all"}));
    auto* tables = app.add_subcommand("tables", "field-by-field pair tables and ancestry summary");
    auto* trends = app.add_subcommand("trends", "per-award-year cohort series");
    std::string metric = "anc_per_laureate";
    trends->add_option("--metric", metric, "cohort metric")
        ->check(CLI::IsMember({"anc_per_laureate", "desc_per_laureate", "frac_anc_other_field",
                               "frac_desc_other_field", "frac_no_ancestry", "frac_no_ties"}));
    auto* pairs = app.add_subcommand("pairs", "laureate advisor/ancestor pair counts");
    auto* nca = app.add_subcommand("nca", "nearest common ancestor of a set of nodes");
    std::vector<std::string> nca_ids;
    bool nca_laureates = false;
    nca->add_option("--ids", nca_ids, "comma-separated node ids")->delimiter(',');
    nca->add_flag("--laureates", nca_laureates, "use every laureate as the target set");
    auto* neighborhood = app.add_subcommand("neighborhood", "kinship neighborhood of one node");
    std::string neighborhood_id;
    bool lineage_only = false;
    neighborhood->add_option("--id", neighborhood_id, "node id")->required();
    neighborhood->add_flag("--lineage-only", lineage_only,
                           "keep only laureates and ancestors of laureates");
    auto* classify = app.add_subcommand("classify", "laureate tie classification");
    auto* exporter = app.add_subcommand("export", "graph export for visualization");
    std::string format = "dot";
    exporter->add_option("--format", format, "dot|graphml")
        ->check(CLI::IsMember({"dot", "graphml"}));
    bool uniform = false;
    double scale = 1.0;
    std::string component_of, subtree_of;
    exporter->add_flag("--uniform-size", uniform, "ignore closeness when sizing nodes");
    exporter->add_option("--scale", scale, "node size scale factor");
    exporter->add_option("--filter-component", component_of,
                         "render only the weak component containing this id");
    exporter->add_option("--filter-subtree", subtree_of,
                         "render only this id and its descendants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cfg.h == 0.0) {
        std::cerr << "error: --h must be nonzero (the geometric-mean limit is unsupported)\n";
        return 2;
    }
    if (cfg.out_dir.empty()) {
        const char* env = std::getenv("GENEALOGY_OUT");
        cfg.out_dir = env && *env ? env : ".";
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(cfg);
        if (app.got_subcommand(closeness)) return cmd_closeness(cfg, direction);
        if (app.got_subcommand(tables)) return cmd_tables(cfg);
        if (app.got_subcommand(trends)) return cmd_trends(cfg, metric);
        if (app.got_subcommand(pairs)) return cmd_pairs(cfg);
        if (app.got_subcommand(nca)) return cmd_nca(cfg, nca_ids, nca_laureates);
        if (app.got_subcommand(neighborhood))
            return cmd_neighborhood(cfg, neighborhood_id, lineage_only);
        if (app.got_subcommand(classify)) return cmd_classify(cfg);
        if (app.got_subcommand(exporter))
            return cmd_export(cfg, format, uniform, scale, component_of, subtree_of);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
