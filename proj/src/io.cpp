#include "genealogy/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace genealogy {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing: " + path.string());
    out << content;
    if (!out) throw IoError("write failed: " + path.string());
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        std::string line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

std::string strip_bom(std::string s) {
    if (s.rfind("\xEF\xBB\xBF", 0) == 0) s.erase(0, 3);
    return s;
}

bool is_json_path(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".json";
}

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    return 1 + static_cast<std::size_t>(
                   std::count(text.begin(), text.begin() + std::min(byte, text.size()), '\n'));
}

int parse_year(const std::string& path, std::size_t line, std::string_view token) {
    int year = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), year);
    if (ec != std::errc{} || ptr != token.data() + token.size() || year < kMinPrizeYear)
        throw BadYearError(path, line, std::string(token));
    return year;
}

std::vector<Prize> parse_prizes_cell(const std::string& path, std::size_t line,
                                     std::string_view cell) {
    std::vector<Prize> prizes;
    if (cell.empty()) return prizes;
    std::size_t start = 0;
    while (start <= cell.size()) {
        std::size_t end = cell.find(';', start);
        if (end == std::string::npos) end = cell.size();
        const std::string_view token = cell.substr(start, end - start);
        if (token.empty())
            throw MalformedRowError(path, line, "empty prize token");
        const std::size_t colon = token.find(':');
        if (colon == std::string_view::npos || token.find(':', colon + 1) != std::string_view::npos)
            throw MalformedRowError(path, line,
                                    "prize token must be field:year, got '" + std::string(token) + "'");
        const auto field = field_from_name(token.substr(0, colon));
        if (!field) throw UnknownFieldError(path, line, std::string(token.substr(0, colon)));
        prizes.push_back({*field, parse_year(path, line, token.substr(colon + 1))});
        if (end == cell.size()) break;
        start = end + 1;
    }
    return prizes;
}

// ---- formatting ----

std::string fmt_g(double v, int digits) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string fmt6(double v) { return fmt_g(v, 6); }
std::string fmt_full(double v) { return fmt_g(v, 17); }

std::string fmt_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string dot_escape(std::string_view s) {
    std::string out;
    for (const char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string xml_unescape(std::string_view s) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out += s[i++];
            continue;
        }
        const auto rest = s.substr(i);
        if (rest.rfind("&amp;", 0) == 0) out += '&', i += 5;
        else if (rest.rfind("&lt;", 0) == 0) out += '<', i += 4;
        else if (rest.rfind("&gt;", 0) == 0) out += '>', i += 4;
        else if (rest.rfind("&quot;", 0) == 0) out += '"', i += 6;
        else if (rest.rfind("&apos;", 0) == 0) out += '\'', i += 6;
        else out += s[i++];
    }
    return out;
}

std::string prizes_token_string(const Scholar& s) {
    std::string out;
    for (const Prize& p : s.prizes) {
        if (!out.empty()) out += ';';
        out += field_name(p.field);
        out += ':';
        out += std::to_string(p.year);
    }
    return out;
}

std::string fields_token_string(const Scholar& s) {
    std::string out;
    std::array<bool, kFieldCount> seen{};
    for (const Prize& p : s.prizes) {
        if (seen[static_cast<std::size_t>(p.field)]) continue;
        seen[static_cast<std::size_t>(p.field)] = true;
        if (!out.empty()) out += ';';
        out += field_name(p.field);
    }
    return out;
}

} // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(std::move(cell));
            cell.clear();
        } else {
            cell += c;
        }
        ++i;
    }
    cells.push_back(std::move(cell));
    return cells;
}

ParsedNodes parse_nodes(const std::filesystem::path& path) {
    const std::string pathstr = path.string();
    ParsedNodes out;

    if (is_json_path(path)) {
        const std::string text = read_file(path);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw MalformedRowError(pathstr, line_of_byte(text, e.byte), e.what());
        }
        if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
            throw MalformedRowError(pathstr, 1, "expected top-level object with a \"nodes\" array");
        std::size_t index = 0;
        for (const auto& item : doc["nodes"]) {
            ++index;
            if (!item.is_object() || !item.contains("id") || !item["id"].is_string())
                throw MalformedRowError(pathstr, 1, "nodes[" + std::to_string(index - 1) + "]: missing string id");
            Scholar s;
            s.id = item["id"].get<std::string>();
            if (s.id.empty())
                throw MalformedRowError(pathstr, 1, "nodes[" + std::to_string(index - 1) + "]: empty id");
            s.name = item.value("name", std::string{});
            if (item.contains("prizes")) {
                if (!item["prizes"].is_array())
                    throw MalformedRowError(pathstr, 1, "nodes[" + std::to_string(index - 1) + "]: prizes must be an array");
                for (const auto& pj : item["prizes"]) {
                    if (!pj.is_object() || !pj.contains("field") || !pj.contains("year"))
                        throw MalformedRowError(pathstr, 1, "prize entries need field and year");
                    const auto field = field_from_name(pj["field"].get<std::string>());
                    if (!field) throw UnknownFieldError(pathstr, 1, pj["field"].get<std::string>());
                    if (!pj["year"].is_number_integer() || pj["year"].get<int>() < kMinPrizeYear)
                        throw BadYearError(pathstr, 1, pj["year"].dump());
                    s.prizes.push_back({*field, pj["year"].get<int>()});
                }
            }
            out.scholars.push_back(std::move(s));
        }
        return out;
    }

    const auto lines = split_lines(strip_bom(read_file(path)));
    if (lines.empty()) throw MalformedRowError(pathstr, 1, "empty file, header expected");
    if (lines[0] != "id,name,prizes")
        throw MalformedRowError(pathstr, 1, "header must be exactly 'id,name,prizes'");
    for (std::size_t ln = 2; ln <= lines.size(); ++ln) {
        const std::string& line = lines[ln - 1];
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != 3)
            throw MalformedRowError(pathstr, ln,
                                    "expected 3 columns, got " + std::to_string(cells.size()));
        if (cells[0].empty()) throw MalformedRowError(pathstr, ln, "empty id");
        Scholar s;
        s.id = cells[0];
        s.name = cells[1];
        s.prizes = parse_prizes_cell(pathstr, ln, cells[2]);
        out.scholars.push_back(std::move(s));
    }
    return out;
}

ParsedEdges parse_edges(const std::filesystem::path& path) {
    const std::string pathstr = path.string();
    ParsedEdges out;
    std::set<std::pair<std::string, std::string>> seen;

    auto add_edge = [&](std::string advisor, std::string student, std::size_t line) {
        if (advisor.empty() || student.empty())
            throw MalformedRowError(pathstr, line, "empty endpoint id");
        if (advisor == student) throw SelfLoopError(pathstr, line, advisor);
        if (!seen.emplace(advisor, student).second) {
            out.warnings.push_back(
                {pathstr, line, "duplicate edge ignored: " + advisor + " -> " + student});
            return;
        }
        out.edges.push_back({std::move(advisor), std::move(student)});
    };

    if (is_json_path(path)) {
        const std::string text = read_file(path);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw MalformedRowError(pathstr, line_of_byte(text, e.byte), e.what());
        }
        if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
            throw MalformedRowError(pathstr, 1, "expected top-level object with an \"edges\" array");
        for (const auto& item : doc["edges"]) {
            if (!item.is_object() || !item.contains("advisor") || !item.contains("student"))
                throw MalformedRowError(pathstr, 1, "edge entries need advisor and student");
            add_edge(item["advisor"].get<std::string>(), item["student"].get<std::string>(), 1);
        }
        return out;
    }

    const auto lines = split_lines(strip_bom(read_file(path)));
    if (lines.empty()) throw MalformedRowError(pathstr, 1, "empty file, header expected");
    if (lines[0] != "advisor_id,student_id")
        throw MalformedRowError(pathstr, 1, "header must be exactly 'advisor_id,student_id'");
    for (std::size_t ln = 2; ln <= lines.size(); ++ln) {
        const std::string& line = lines[ln - 1];
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != 2)
            throw MalformedRowError(pathstr, ln,
                                    "expected 2 columns, got " + std::to_string(cells.size()));
        add_edge(cells[0], cells[1], ln);
    }
    return out;
}

std::string fnv1a_file_hex(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    std::uint64_t hash = 1469598103934665603ull;
    for (const unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

GenealogyGraph load_dataset(const DatasetManifest& manifest, std::vector<Diagnostic>* warnings) {
    if (manifest.format_version != 1)
        throw InvalidArgumentError("unsupported dataset format version " +
                                   std::to_string(manifest.format_version));
    if (manifest.checksum) {
        std::uint64_t combined = 1469598103934665603ull;
        for (const auto* p : {&manifest.nodes_path, &manifest.edges_path}) {
            const std::string text = read_file(*p);
            for (const unsigned char c : text) {
                combined ^= c;
                combined *= 1099511628211ull;
            }
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(combined));
        if (*manifest.checksum != buf)
            throw IoError("dataset checksum mismatch: expected " + *manifest.checksum + ", got " + buf);
    }
    auto nodes = parse_nodes(manifest.nodes_path);
    auto edges = parse_edges(manifest.edges_path);
    if (warnings) {
        warnings->insert(warnings->end(), nodes.warnings.begin(), nodes.warnings.end());
        warnings->insert(warnings->end(), edges.warnings.begin(), edges.warnings.end());
    }
    return GenealogyGraph::build(std::move(nodes.scholars), edges.edges);
}

std::map<PrizeField, std::string> RenderSpec::default_colors() {
    return {{PrizeField::Medicine, "red"},
            {PrizeField::Physics, "blue"},
            {PrizeField::Chemistry, "green"},
            {PrizeField::Economics, "lightblue"}};
}

namespace {

const ClosenessRow& report_row(const ClosenessReport& report, const std::string& id) {
    const auto it = std::lower_bound(
        report.rows.begin(), report.rows.end(), id,
        [](const ClosenessRow& row, const std::string& key) { return row.id < key; });
    if (it == report.rows.end() || it->id != id)
        throw InvalidArgumentError("closeness report does not cover node " + id);
    return *it;
}

double node_diameter(const RenderSpec& spec, const ClosenessRow& row) {
    double size = spec.size_rule == SizeRule::Uniform
                      ? 0.5 * spec.scale_factor
                      : spec.scale_factor * (std::isinf(row.total_closeness) ? 0.0
                                                                             : row.total_closeness);
    return std::max(RenderSpec::kMinNodeSize, size);
}

const std::string& node_color(const RenderSpec& spec, const Scholar& s) {
    if (s.prizes.empty()) return spec.default_color;
    const auto it = spec.color_map.find(s.prizes.front().field);
    return it == spec.color_map.end() ? spec.default_color : it->second;
}

bool rendered(const RenderSpec& spec, const std::string& id) {
    return !spec.filter || spec.filter->contains(id);
}

} // namespace

void export_dot(const GenealogyGraph& g, const ClosenessReport& report, const RenderSpec& spec,
                const std::filesystem::path& path) {
    std::string out;
    out += "digraph genealogy {\n";
    out += "  node [shape=circle, style=filled, fixedsize=true];\n";
    for (const auto& id : g.ids()) {
        if (!rendered(spec, id)) continue;
        const Scholar& s = g.scholar(id);
        const double size = node_diameter(spec, report_row(report, id));
        out += "  \"" + dot_escape(id) + "\" [label=\"" + dot_escape(s.name) + "\", fillcolor=\"" +
               node_color(spec, s) + "\", width=" + fmt_fixed(size, 4) +
               ", height=" + fmt_fixed(size, 4) + "];\n";
    }
    for (const auto& id : g.ids()) {
        if (!rendered(spec, id)) continue;
        const NodeIndex v = g.index_of(id);
        for (const NodeIndex w : g.students_of(v)) {
            if (!rendered(spec, g.id_of(w))) continue;
            out += "  \"" + dot_escape(id) + "\" -> \"" + dot_escape(g.id_of(w)) + "\";\n";
        }
    }
    out += "}\n";
    write_file(path, out);
}

void export_graphml(const GenealogyGraph& g, const ClosenessReport& report, const RenderSpec& spec,
                    const std::filesystem::path& path) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    out += "  <key id=\"d0\" for=\"node\" attr.name=\"field\" attr.type=\"string\"/>\n";
    out += "  <key id=\"d1\" for=\"node\" attr.name=\"prizes\" attr.type=\"string\"/>\n";
    out += "  <key id=\"d2\" for=\"node\" attr.name=\"out_closeness\" attr.type=\"double\"/>\n";
    out += "  <key id=\"d3\" for=\"node\" attr.name=\"in_closeness\" attr.type=\"double\"/>\n";
    out += "  <key id=\"d4\" for=\"node\" attr.name=\"cross_closeness\" attr.type=\"double\"/>\n";
    out += "  <graph id=\"G\" edgedefault=\"directed\">\n";
    for (const auto& id : g.ids()) {
        if (!rendered(spec, id)) continue;
        const Scholar& s = g.scholar(id);
        const ClosenessRow& row = report_row(report, id);
        out += "    <node id=\"" + xml_escape(id) + "\">\n";
        out += "      <data key=\"d0\">" + xml_escape(fields_token_string(s)) + "</data>\n";
        out += "      <data key=\"d1\">" + xml_escape(prizes_token_string(s)) + "</data>\n";
        out += "      <data key=\"d2\">" + fmt_full(row.out_closeness) + "</data>\n";
        out += "      <data key=\"d3\">" + fmt_full(row.in_closeness) + "</data>\n";
        out += "      <data key=\"d4\">" + fmt_full(row.cross_closeness) + "</data>\n";
        out += "    </node>\n";
    }
    for (const auto& id : g.ids()) {
        if (!rendered(spec, id)) continue;
        const NodeIndex v = g.index_of(id);
        for (const NodeIndex w : g.students_of(v)) {
            if (!rendered(spec, g.id_of(w))) continue;
            out += "    <edge source=\"" + xml_escape(id) + "\" target=\"" +
                   xml_escape(g.id_of(w)) + "\"/>\n";
        }
    }
    out += "  </graph>\n";
    out += "</graphml>\n";
    write_file(path, out);
}

GraphmlData import_graphml(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    GraphmlData data;

    auto attr_of = [&](std::string_view tag, std::string_view name) -> std::string {
        const std::string probe = std::string(name) + "=\"";
        const std::size_t at = tag.find(probe);
        if (at == std::string_view::npos)
            throw IoError("graphml: missing attribute " + std::string(name));
        const std::size_t start = at + probe.size();
        const std::size_t end = tag.find('"', start);
        return xml_unescape(tag.substr(start, end - start));
    };

    std::size_t pos = 0;
    while (true) {
        const std::size_t node_at = text.find("<node ", pos);
        const std::size_t edge_at = text.find("<edge ", pos);
        if (node_at == std::string::npos && edge_at == std::string::npos) break;
        if (node_at != std::string::npos && (edge_at == std::string::npos || node_at < edge_at)) {
            const std::size_t tag_end = text.find('>', node_at);
            const std::size_t close = text.find("</node>", node_at);
            if (tag_end == std::string::npos || close == std::string::npos)
                throw IoError("graphml: unterminated node element");
            GraphmlNode node;
            node.id = attr_of(std::string_view(text).substr(node_at, tag_end - node_at), "id");
            std::string_view body = std::string_view(text).substr(tag_end + 1, close - tag_end - 1);
            std::size_t dpos = 0;
            while (true) {
                const std::size_t dat = body.find("<data ", dpos);
                if (dat == std::string_view::npos) break;
                const std::size_t dtag_end = body.find('>', dat);
                const std::size_t dclose = body.find("</data>", dat);
                const std::string key = attr_of(body.substr(dat, dtag_end - dat), "key");
                const std::string value =
                    xml_unescape(body.substr(dtag_end + 1, dclose - dtag_end - 1));
                if (key == "d0") node.field = value;
                else if (key == "d1") node.prizes = value;
                else if (key == "d2") node.out_closeness = std::strtod(value.c_str(), nullptr);
                else if (key == "d3") node.in_closeness = std::strtod(value.c_str(), nullptr);
                else if (key == "d4") node.cross_closeness = std::strtod(value.c_str(), nullptr);
                dpos = dclose + 7;
            }
            data.nodes.push_back(std::move(node));
            pos = close + 7;
        } else {
            const std::size_t tag_end = text.find('>', edge_at);
            if (tag_end == std::string::npos) throw IoError("graphml: unterminated edge element");
            const std::string_view tag = std::string_view(text).substr(edge_at, tag_end - edge_at);
            data.edges.emplace_back(attr_of(tag, "source"), attr_of(tag, "target"));
            pos = tag_end + 1;
        }
    }
    return data;
}

void write_cross_table_csv(const CrossTable& table, const std::filesystem::path& path) {
    std::string out = "field,physics,chemistry,medicine,economics,any,none\n";
    for (int r = 0; r < kFieldCount; ++r) {
        out += field_name(static_cast<PrizeField>(r));
        for (int c = 0; c < kFieldCount; ++c) out += "," + std::to_string(table.cells[r][c]);
        out += "," + std::to_string(table.any[r]);
        out += "," + std::to_string(table.none[r]);
        out += "\n";
    }
    write_file(path, out);
}

void write_ancestry_summary_csv(const AncestrySummary& summary,
                                const std::filesystem::path& path) {
    std::string out = "statistic,any,physics,chemistry,medicine,economics\n";
    auto emit = [&](const std::string& label,
                    const std::array<std::optional<MeanSe>, AncestrySummary::kScopes>& row) {
        out += label + "_mean";
        for (const auto& cell : row) out += "," + (cell ? fmt6(cell->mean) : std::string{});
        out += "\n" + label + "_se";
        for (const auto& cell : row) out += "," + (cell ? fmt6(cell->se) : std::string{});
        out += "\n";
    };
    emit("ancestors", summary.ancestors);
    emit("ancestors_own_field", summary.ancestors_own_field);
    emit("frac_ancestors_other_field", summary.frac_ancestors_other_field);
    emit("descendants", summary.descendants);
    emit("descendants_own_field", summary.descendants_own_field);
    emit("frac_descendants_other_field", summary.frac_descendants_other_field);
    write_file(path, out);
}

void write_cohort_series_csv(const CohortSeries& series, const std::filesystem::path& path) {
    std::string out = "year,value,cohort_size\n";
    for (const CohortPoint& p : series.points)
        out += std::to_string(p.year) + "," + fmt6(p.value) + "," + std::to_string(p.cohort_size) +
               "\n";
    write_file(path, out);
}

void write_closeness_csv(const ClosenessReport& report, const std::filesystem::path& path) {
    std::string out =
        "id,out_distance,in_distance,cross_distance,out_closeness,in_closeness,cross_closeness,"
        "total_closeness\n";
    for (const ClosenessRow& row : report.rows) {
        out += row.id;
        for (const double v : {row.out_distance, row.in_distance, row.cross_distance,
                               row.out_closeness, row.in_closeness, row.cross_closeness,
                               row.total_closeness})
            out += "," + fmt_full(v);
        out += "\n";
    }
    write_file(path, out);
}

void export_svg_scatter(const CohortSeries& series, const std::filesystem::path& path) {
    if (series.points.empty()) throw EmptySeriesError();

    constexpr double kWidth = 640, kHeight = 440;
    constexpr double kLeft = 70, kRight = 20, kTop = 30, kBottom = 50;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    double x_min = series.points.front().year, x_max = series.points.back().year;
    if (x_min == x_max) {
        x_min -= 1;
        x_max += 1;
    }
    double y_min = 0, y_max = 0;
    for (const CohortPoint& p : series.points) {
        y_min = std::min(y_min, p.value);
        y_max = std::max(y_max, p.value);
    }
    if (y_max == y_min) y_max = y_min + 1;

    auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double y) { return kTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

    std::string metric_label(cohort_metric_name(series.metric));
    if (series.prior_only) metric_label += " (prior awards only)";

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"440\" "
           "viewBox=\"0 0 640 440\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"440\" fill=\"white\"/>\n";
    out += "  <text x=\"320\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">" + xml_escape(metric_label) + "</text>\n";

    // axes
    out += "  <line x1=\"" + fmt_fixed(kLeft, 2) + "\" y1=\"" + fmt_fixed(kTop + plot_h, 2) +
           "\" x2=\"" + fmt_fixed(kLeft + plot_w, 2) + "\" y2=\"" + fmt_fixed(kTop + plot_h, 2) +
           "\" stroke=\"black\"/>\n";
    out += "  <line x1=\"" + fmt_fixed(kLeft, 2) + "\" y1=\"" + fmt_fixed(kTop, 2) + "\" x2=\"" +
           fmt_fixed(kLeft, 2) + "\" y2=\"" + fmt_fixed(kTop + plot_h, 2) +
           "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double fx = x_min + (x_max - x_min) * t / 4.0;
        const double fy = y_min + (y_max - y_min) * t / 4.0;
        out += "  <text x=\"" + fmt_fixed(sx(fx), 2) + "\" y=\"" + fmt_fixed(kTop + plot_h + 18, 2) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               fmt6(fx) + "</text>\n";
        out += "  <text x=\"" + fmt_fixed(kLeft - 6, 2) + "\" y=\"" + fmt_fixed(sy(fy) + 4, 2) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fmt6(fy) +
               "</text>\n";
    }
    out += "  <text x=\"" + fmt_fixed(kLeft + plot_w / 2, 2) + "\" y=\"" +
           fmt_fixed(kHeight - 10, 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">award "
           "year</text>\n";

    if (series.points.size() >= 2) {
        // OLS line through the plotted range
        double mx = 0, my = 0;
        for (const CohortPoint& p : series.points) {
            mx += p.year;
            my += p.value;
        }
        mx /= static_cast<double>(series.points.size());
        my /= static_cast<double>(series.points.size());
        const double b = series.trend_slope;
        const double a = my - b * mx;
        out += "  <line x1=\"" + fmt_fixed(sx(x_min), 2) + "\" y1=\"" +
               fmt_fixed(sy(a + b * x_min), 2) + "\" x2=\"" + fmt_fixed(sx(x_max), 2) +
               "\" y2=\"" + fmt_fixed(sy(a + b * x_max), 2) +
               "\" stroke=\"firebrick\" stroke-width=\"1.5\"/>\n";
    }
    for (const CohortPoint& p : series.points)
        out += "  <circle cx=\"" + fmt_fixed(sx(p.year), 2) + "\" cy=\"" + fmt_fixed(sy(p.value), 2) +
               "\" r=\"3\" fill=\"steelblue\"/>\n";
    out += "</svg>\n";
    write_file(path, out);
}

} // namespace genealogy
