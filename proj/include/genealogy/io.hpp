#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "genealogy/closeness.hpp"
#include "genealogy/graph.hpp"
#include "genealogy/stats.hpp"
#include "genealogy/types.hpp"

namespace genealogy {

struct Diagnostic {
    std::string path;
    std::size_t line = 0;
    std::string message;
};

struct ParsedNodes {
    std::vector<Scholar> scholars;
    std::vector<Diagnostic> warnings;
};

struct ParsedEdges {
    std::vector<Edge> edges;
    std::vector<Diagnostic> warnings;
};

/// Node file: UTF-8 CSV with header "id,name,prizes"; the prizes cell holds
/// semicolon-separated "field:year" tokens and may be empty. A ".json" path
/// selects the JSON mirror: {"nodes": [{"id","name","prizes":[{"field","year"}]}]}.
/// Throws ParseError (malformed row, unknown field, year < 1901) and IoError.
ParsedNodes parse_nodes(const std::filesystem::path& path);

/// Edge file: UTF-8 CSV with header "advisor_id,student_id"; the JSON mirror
/// is {"edges": [{"advisor","student"}]}. Duplicate edges are dropped with a
/// warning; self loops throw SelfLoopError.
ParsedEdges parse_edges(const std::filesystem::path& path);

/// Splits one CSV record, honoring double-quoted cells with "" escapes.
std::vector<std::string> split_csv_line(std::string_view line);

struct DatasetManifest {
    std::filesystem::path nodes_path;
    std::filesystem::path edges_path;
    int format_version = 1;
    std::optional<std::string> checksum; // fnv1a-64 hex of nodes bytes + edges bytes
};

/// 64-bit FNV-1a of a file's raw bytes, lowercase hex.
std::string fnv1a_file_hex(const std::filesystem::path& path);

/// Parses both files and builds the graph; optional checksum and format
/// version are verified first. Parse warnings are appended to *warnings.
GenealogyGraph load_dataset(const DatasetManifest& manifest,
                            std::vector<Diagnostic>* warnings = nullptr);

enum class SizeRule { TotalCloseness, Uniform };

/// Rendering conventions for the graph exports. Laureates are filled by
/// field (medicine red, physics blue, chemistry green, economics lightblue),
/// everyone else default_color. Node diameter is scale_factor *
/// total_closeness inches under SizeRule::TotalCloseness, never below
/// kMinNodeSize; Uniform uses 0.5 * scale_factor for every node.
struct RenderSpec {
    std::map<PrizeField, std::string> color_map = default_colors();
    std::string default_color = "grey";
    SizeRule size_rule = SizeRule::TotalCloseness;
    double scale_factor = 1.0;
    /// Ids to render; nullopt renders all nodes. Edges are kept only when
    /// both endpoints are rendered.
    std::optional<std::set<std::string>> filter;

    static std::map<PrizeField, std::string> default_colors();
    static constexpr double kMinNodeSize = 0.1;
};

/// Byte-stable DOT digraph, nodes and edges ordered by id.
void export_dot(const GenealogyGraph& g, const ClosenessReport& report, const RenderSpec& spec,
                const std::filesystem::path& path);

/// Byte-stable GraphML document carrying five node attributes: field,
/// prizes, out_closeness, in_closeness, cross_closeness.
void export_graphml(const GenealogyGraph& g, const ClosenessReport& report,
                    const RenderSpec& spec, const std::filesystem::path& path);

struct GraphmlNode {
    std::string id;
    std::string field;  // semicolon-joined distinct fields, "" for none
    std::string prizes; // "field:year;..." tokens
    double out_closeness = 0, in_closeness = 0, cross_closeness = 0;
};

struct GraphmlData {
    std::vector<GraphmlNode> nodes;
    std::vector<std::pair<std::string, std::string>> edges; // advisor, student
};

/// Reads documents produced by export_graphml (not a general GraphML parser).
GraphmlData import_graphml(const std::filesystem::path& path);

// Table/series CSV writers. Fixed headers, floats at six significant
// digits, byte-stable for fixed input.
void write_cross_table_csv(const CrossTable& table, const std::filesystem::path& path);
void write_ancestry_summary_csv(const AncestrySummary& summary, const std::filesystem::path& path);
void write_cohort_series_csv(const CohortSeries& series, const std::filesystem::path& path);
void write_closeness_csv(const ClosenessReport& report, const std::filesystem::path& path);

/// Self-contained SVG scatter of value against award year with the OLS trend
/// line overlaid (omitted for a single point). Throws EmptySeriesError.
void export_svg_scatter(const CohortSeries& series, const std::filesystem::path& path);

} // namespace genealogy
