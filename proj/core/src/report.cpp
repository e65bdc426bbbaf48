#include "qxpress/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <set>

#include <json.hpp>

#include "qxpress/corpus.hpp"
#include "qxpress/error.hpp"

namespace qxpress {

using nlohmann::json;
using nlohmann::ordered_json;

const std::vector<std::string>& metric_ids() {
    static const std::vector<std::string> ids{"loc",        "cc",     "n1",     "n2",
                                              "N1",         "N2",     "vocabulary", "length",
                                              "volume",     "difficulty", "effort"};
    return ids;
}

bool is_metric_id(std::string_view id) {
    const auto& ids = metric_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool is_integer_metric(std::string_view id) {
    return is_metric_id(id) && id != "volume" && id != "difficulty" && id != "effort";
}

double metric_value(const MetricsReport& r, std::string_view id) {
    if (id == "loc") return static_cast<double>(r.loc);
    if (id == "cc") return static_cast<double>(r.cc);
    if (id == "n1") return static_cast<double>(r.counts.distinct_operators);
    if (id == "n2") return static_cast<double>(r.counts.distinct_operands);
    if (id == "N1") return static_cast<double>(r.counts.total_operators);
    if (id == "N2") return static_cast<double>(r.counts.total_operands);
    if (id == "vocabulary") return static_cast<double>(r.vocabulary);
    if (id == "length") return static_cast<double>(r.length);
    if (id == "volume") return r.volume;
    if (id == "difficulty") return r.difficulty;
    if (id == "effort") return r.effort;
    throw Error(ErrorCode::unknown_metric, "unknown metric '" + std::string(id) + "'");
}

std::optional<double> ComparisonTable::cell(std::string_view language,
                                            std::string_view algorithm) const {
    const auto it = cells.find({std::string(language), std::string(algorithm)});
    if (it == cells.end()) return std::nullopt;
    return it->second;
}

std::optional<double> ComparisonTable::mean(std::string_view language) const {
    const auto it = means.find(std::string(language));
    if (it == means.end()) return std::nullopt;
    return it->second;
}

namespace {

bool algorithm_less(const std::string& a, const std::string& b) {
    const auto ra = algorithm_rank(a), rb = algorithm_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
}

void fill_means(ComparisonTable& t) {
    t.means.clear();
    for (const auto& lang : t.languages) {
        double sum = 0.0;
        bool complete = !t.algorithms.empty();
        for (const auto& alg : t.algorithms) {
            const auto v = t.cell(lang, alg);
            if (!v) {
                complete = false;
                break;
            }
            sum += *v;
        }
        if (complete) t.means[lang] = sum / static_cast<double>(t.algorithms.size());
    }
}

std::string format_integer(double value) {
    return std::to_string(static_cast<long long>(std::llround(value)));
}

std::string format_cell(const ComparisonTable& t, double value) {
    return is_integer_metric(t.metric_id) ? format_integer(value) : format_real(value);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

constexpr const char* kMissing = "\xE2\x80\x94";  // em dash

}  // namespace

std::vector<ComparisonTable> aggregate(const std::vector<MetricsReport>& reports) {
    std::set<std::string> languages;
    std::set<std::string> algorithms;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& r : reports) {
        if (!seen.emplace(r.language_id, r.algorithm_id).second) {
            throw Error(ErrorCode::duplicate_cell, "two reports for (" + r.language_id + ", " +
                                                       r.algorithm_id + ")");
        }
        languages.insert(r.language_id);
        algorithms.insert(r.algorithm_id);
    }
    std::vector<std::string> algs(algorithms.begin(), algorithms.end());
    std::sort(algs.begin(), algs.end(), algorithm_less);

    std::vector<ComparisonTable> tables;
    for (const auto& id : metric_ids()) {
        ComparisonTable t;
        t.metric_id = id;
        t.languages.assign(languages.begin(), languages.end());
        t.algorithms = algs;
        for (const auto& r : reports) t.cells[{r.language_id, r.algorithm_id}] = metric_value(r, id);
        fill_means(t);
        tables.push_back(std::move(t));
    }
    return tables;
}

std::optional<TableFormat> parse_table_format(std::string_view name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    if (name == "md" || name == "markdown") return TableFormat::markdown;
    return std::nullopt;
}

const char* file_extension(TableFormat format) {
    switch (format) {
        case TableFormat::csv: return ".csv";
        case TableFormat::json: return ".json";
        case TableFormat::markdown: return ".md";
    }
    return "";
}

std::string format_real(double value) {
    if (value == 0.0) value = 0.0;  // drop a negative zero
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::fixed, 2);
    std::string out(buf.data(), res.ptr);
    if (out == "-0.00") out = "0.00";
    return out;
}

std::string render_table(const ComparisonTable& t, TableFormat format) {
    std::string out;
    switch (format) {
        case TableFormat::csv: {
            out += "language";
            for (const auto& alg : t.algorithms) out += "," + csv_field(alg);
            out += "\n";
            for (const auto& lang : t.languages) {
                out += csv_field(lang);
                for (const auto& alg : t.algorithms) {
                    out += ",";
                    if (const auto v = t.cell(lang, alg)) out += format_cell(t, *v);
                }
                out += "\n";
            }
            return out;
        }
        case TableFormat::markdown: {
            out += "| Language |";
            for (const auto& alg : t.algorithms) out += " " + alg + " |";
            out += " Mean |\n|---|";
            for (std::size_t i = 0; i < t.algorithms.size(); ++i) out += "---:|";
            out += "---:|\n";
            for (const auto& lang : t.languages) {
                out += "| " + lang + " |";
                for (const auto& alg : t.algorithms) {
                    const auto v = t.cell(lang, alg);
                    out += " " + (v ? format_cell(t, *v) : std::string(kMissing)) + " |";
                }
                const auto m = t.mean(lang);
                out += " " + (m ? format_real(*m) : std::string(kMissing)) + " |\n";
            }
            return out;
        }
        case TableFormat::json: {
            ordered_json doc = ordered_json::object();
            doc["metric"] = t.metric_id;
            doc["languages"] = t.languages;
            doc["algorithms"] = t.algorithms;
            ordered_json cells = ordered_json::array();
            for (const auto& lang : t.languages) {
                for (const auto& alg : t.algorithms) {
                    if (const auto v = t.cell(lang, alg)) {
                        ordered_json c = ordered_json::object();
                        c["language"] = lang;
                        c["algorithm"] = alg;
                        c["value"] = *v;
                        cells.push_back(std::move(c));
                    }
                }
            }
            doc["cells"] = std::move(cells);
            ordered_json means = ordered_json::object();
            for (const auto& lang : t.languages) {
                if (const auto m = t.mean(lang)) means[lang] = *m;
            }
            doc["means"] = std::move(means);
            return doc.dump(2) + "\n";
        }
    }
    return out;
}

ComparisonTable parse_table_json(std::string_view json_text) {
    try {
        const json doc = json::parse(json_text);
        ComparisonTable t;
        t.metric_id = doc.at("metric").get<std::string>();
        if (!is_metric_id(t.metric_id)) {
            throw Error(ErrorCode::unknown_metric, "unknown metric '" + t.metric_id + "'");
        }
        t.languages = doc.at("languages").get<std::vector<std::string>>();
        t.algorithms = doc.at("algorithms").get<std::vector<std::string>>();
        for (const auto& c : doc.at("cells")) {
            const std::pair key{c.at("language").get<std::string>(), c.at("algorithm").get<std::string>()};
            if (!t.cells.emplace(key, c.at("value").get<double>()).second) {
                throw Error(ErrorCode::duplicate_cell,
                            "table JSON: duplicate cell (" + key.first + ", " + key.second + ")");
            }
        }
        for (const auto& [lang, value] : doc.at("means").items()) t.means[lang] = value.get<double>();
        return t;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::manifest_malformed, std::string("table JSON: ") + e.what());
    }
}

namespace {

ordered_json report_object(const MetricsReport& r) {
    ordered_json h = ordered_json::object();
    h["n1"] = r.counts.distinct_operators;
    h["n2"] = r.counts.distinct_operands;
    h["N1"] = r.counts.total_operators;
    h["N2"] = r.counts.total_operands;
    h["vocabulary"] = r.vocabulary;
    h["length"] = r.length;
    h["volume"] = r.volume;
    h["difficulty"] = r.difficulty;
    h["effort"] = r.effort;

    ordered_json o = ordered_json::object();
    o["unit_name"] = r.unit_name;
    o["language"] = r.language_id;
    o["algorithm"] = r.algorithm_id;
    o["loc"] = r.loc;
    o["cc"] = r.cc;
    o["halstead"] = std::move(h);
    o["degenerate"] = r.degenerate;
    return o;
}

}  // namespace

std::string report_to_json(const MetricsReport& report, int indent) {
    return report_object(report).dump(indent) + "\n";
}

std::string reports_to_json(const std::vector<MetricsReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_object(r));
    return arr.dump(2) + "\n";
}

std::string render_report(const MetricsReport& r, TableFormat format) {
    if (format == TableFormat::json) return report_to_json(r);
    std::vector<std::pair<std::string, std::string>> rows{
        {"unit_name", r.unit_name}, {"language", r.language_id}, {"algorithm", r.algorithm_id}};
    for (const auto& id : metric_ids()) {
        const double v = metric_value(r, id);
        rows.emplace_back(id, is_integer_metric(id) ? format_integer(v) : format_real(v));
    }
    rows.emplace_back("degenerate", r.degenerate ? "true" : "false");

    std::string out;
    if (format == TableFormat::csv) {
        std::string header, values;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) {
                header += ',';
                values += ',';
            }
            header += rows[i].first;
            values += csv_field(rows[i].second);
        }
        return header + "\n" + values + "\n";
    }
    out += "| Field | Value |\n|---|---:|\n";
    for (const auto& [k, v] : rows) out += "| " + k + " | " + v + " |\n";
    return out;
}

// ---------------------------------------------------------------- charts

namespace {

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

std::string num(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::fixed, 1);
    std::string s(buf.data(), res.ptr);
    return s == "-0.0" ? "0.0" : s;
}

const char* colour(std::size_t i) {
    static constexpr std::array<const char*, 8> palette{"#4e79a7", "#f28e2b", "#e15759",
                                                        "#76b7b2", "#59a14f", "#edc948",
                                                        "#b07aa1", "#9c755f"};
    return palette[i % palette.size()];
}

const ComparisonTable& table_for(const std::vector<ComparisonTable>& tables, const std::string& id) {
    for (const auto& t : tables) {
        if (t.metric_id == id) return t;
    }
    throw Error(ErrorCode::unknown_metric, "chart references metric '" + id +
                                               "' which is not in the table set");
}

class Svg {
public:
    Svg(double width, double height) : width_(width), height_(height) {}

    void text(double x, double y, std::string_view s, const char* anchor = "middle",
              int size = 12, const char* extra = "") {
        body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" +
                 std::to_string(size) + "\" text-anchor=\"" + anchor + "\"" + extra + ">" +
                 xml_escape(s) + "</text>\n";
    }
    void rect(double x, double y, double w, double h, const char* fill) {
        body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
                 "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"/>\n";
    }
    void line(double x1, double y1, double x2, double y2, const char* stroke = "#333") {
        body_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
                 "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke + "\"/>\n";
    }
    void circle(double cx, double cy, double r, const char* fill) {
        body_ += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) +
                 "\" fill=\"" + fill + "\"/>\n";
    }
    void polygon(const std::vector<std::pair<double, double>>& pts, const char* stroke,
                 const char* fill, double opacity) {
        body_ += "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ += ' ';
            body_ += num(pts[i].first) + "," + num(pts[i].second);
        }
        body_ += "\" stroke=\"" + std::string(stroke) + "\" fill=\"" + fill +
                 "\" fill-opacity=\"" + num(opacity) + "\"/>\n";
    }
    void raw(std::string_view s) { body_ += s; }

    std::string str(std::string_view title) const {
        return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
               "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width_) + "\" height=\"" +
               num(height_) + "\" viewBox=\"0 0 " + num(width_) + " " + num(height_) +
               "\" font-family=\"sans-serif\">\n<title>" + xml_escape(title) + "</title>\n"
               "<rect x=\"0\" y=\"0\" width=\"" + num(width_) + "\" height=\"" + num(height_) +
               "\" fill=\"#ffffff\"/>\n" + body_ + "</svg>\n";
    }

private:
    double width_;
    double height_;
    std::string body_;
};

/// Axis maximum rounded up to a 1/2/5 step so tick labels stay short.
double nice_max(double v) {
    if (v <= 0.0) return 1.0;
    const double mag = std::pow(10.0, std::floor(std::log10(v)));
    for (const double step : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        if (v <= step * mag) return step * mag;
    }
    return 10.0 * mag;
}

std::string tick_label(double v) {
    return std::abs(v - std::round(v)) < 1e-9 ? format_integer(v) : format_real(v);
}

void y_axis(Svg& svg, double x0, double y0, double plot_h, double ymax, const std::string& label) {
    svg.line(x0, y0, x0, y0 - plot_h);
    for (int i = 0; i <= 5; ++i) {
        const double v = ymax * i / 5.0;
        const double y = y0 - plot_h * i / 5.0;
        svg.line(x0 - 4, y, x0, y);
        svg.text(x0 - 6, y + 4, tick_label(v), "end", 10);
    }
    svg.text(x0 - 48, y0 - plot_h / 2, label, "middle", 12,
             (" transform=\"rotate(-90 " + num(x0 - 48) + " " + num(y0 - plot_h / 2) + ")\"").c_str());
}

void legend(Svg& svg, double x, double y, const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        svg.rect(x, y + 18.0 * i, 12, 12, colour(i));
        svg.text(x + 18, y + 18.0 * i + 10, names[i], "start", 11);
    }
}

std::string grouped_bar(const ChartSpec& spec, const ComparisonTable& t) {
    const double left = 70, top = 50, plot_w = 560, plot_h = 300;
    Svg svg(800, 420);
    svg.text(400, 28, spec.title, "middle", 16);
    double vmax = 0.0;
    for (const auto& [_, v] : t.cells) vmax = std::max(vmax, v);
    const double ymax = nice_max(vmax);
    const double y0 = top + plot_h;
    y_axis(svg, left, y0, plot_h, ymax, t.metric_id);
    svg.line(left, y0, left + plot_w, y0);

    const std::size_t groups = std::max<std::size_t>(t.algorithms.size(), 1);
    const double group_w = plot_w / static_cast<double>(groups);
    const double bar_w = group_w * 0.8 / static_cast<double>(std::max<std::size_t>(t.languages.size(), 1));
    for (std::size_t g = 0; g < t.algorithms.size(); ++g) {
        const double gx = left + group_w * g + group_w * 0.1;
        for (std::size_t l = 0; l < t.languages.size(); ++l) {
            const auto v = t.cell(t.languages[l], t.algorithms[g]);
            if (!v) continue;
            const double h = plot_h * (*v / ymax);
            svg.rect(gx + bar_w * l, y0 - h, bar_w * 0.9, h, colour(l));
        }
        svg.text(left + group_w * (g + 0.5), y0 + 18, t.algorithms[g], "middle", 11);
    }
    legend(svg, left + plot_w + 20, top, t.languages);
    return svg.str(spec.title);
}

std::string mean_bar(const ChartSpec& spec, const ComparisonTable& t) {
    const double left = 70, top = 50, plot_w = 560, plot_h = 300;
    Svg svg(680, 420);
    svg.text(340, 28, spec.title, "middle", 16);
    std::vector<std::pair<std::string, double>> bars;
    for (const auto& lang : t.languages) {
        if (const auto m = t.mean(lang)) bars.emplace_back(lang, *m);
    }
    double vmax = 0.0;
    for (const auto& [_, v] : bars) vmax = std::max(vmax, v);
    const double ymax = nice_max(vmax);
    const double y0 = top + plot_h;
    y_axis(svg, left, y0, plot_h, ymax, "mean " + t.metric_id);
    svg.line(left, y0, left + plot_w, y0);
    const double slot = plot_w / static_cast<double>(std::max<std::size_t>(bars.size(), 1));
    for (std::size_t i = 0; i < bars.size(); ++i) {
        const double h = plot_h * (bars[i].second / ymax);
        const double x = left + slot * i + slot * 0.15;
        const auto li = static_cast<std::size_t>(
            std::find(t.languages.begin(), t.languages.end(), bars[i].first) - t.languages.begin());
        svg.rect(x, y0 - h, slot * 0.7, h, colour(li));
        svg.text(x + slot * 0.35, y0 - h - 4, format_real(bars[i].second), "middle", 10);
        svg.text(x + slot * 0.35, y0 + 18, bars[i].first, "middle", 11);
    }
    return svg.str(spec.title);
}

std::string scatter(const ChartSpec& spec, const ComparisonTable& tx, const ComparisonTable& ty) {
    const double left = 80, top = 50, plot_w = 480, plot_h = 320;
    Svg svg(620, 440);
    svg.text(310, 28, spec.title, "middle", 16);
    struct Point {
        std::size_t index;
        std::string label;
        double x, y;
    };
    std::vector<Point> points;
    for (std::size_t i = 0; i < tx.languages.size(); ++i) {
        const auto& lang = tx.languages[i];
        const auto x = tx.mean(lang), y = ty.mean(lang);
        if (x && y) points.push_back({i, lang, *x, *y});
    }
    double xm = 0.0, ym = 0.0;
    for (const auto& p : points) {
        xm = std::max(xm, p.x);
        ym = std::max(ym, p.y);
    }
    const double xmax = nice_max(xm), ymax = nice_max(ym);
    const double y0 = top + plot_h;
    y_axis(svg, left, y0, plot_h, ymax, "mean " + ty.metric_id);
    svg.line(left, y0, left + plot_w, y0);
    for (int i = 0; i <= 5; ++i) {
        const double x = left + plot_w * i / 5.0;
        svg.line(x, y0, x, y0 + 4);
        svg.text(x, y0 + 16, tick_label(xmax * i / 5.0), "middle", 10);
    }
    svg.text(left + plot_w / 2, y0 + 36, "mean " + tx.metric_id, "middle", 12);
    for (const auto& p : points) {
        const double cx = left + plot_w * (p.x / xmax);
        const double cy = y0 - plot_h * (p.y / ymax);
        svg.circle(cx, cy, 5, colour(p.index));
        svg.text(cx + 8, cy - 6, p.label, "start", 11);
    }
    return svg.str(spec.title);
}

std::string radar(const ChartSpec& spec, const std::vector<const ComparisonTable*>& axes) {
    const double cx = 300, cy = 270, radius = 180;
    Svg svg(780, 540);
    svg.text(390, 28, spec.title, "middle", 16);
    svg.text(390, 48, "analogue: each axis is the per-language mean divided by its maximum across languages",
             "middle", 11);

    std::vector<std::string> languages;
    for (const auto& lang : axes.front()->languages) {
        const bool complete = std::all_of(axes.begin(), axes.end(),
                                          [&](const ComparisonTable* t) { return t->mean(lang).has_value(); });
        if (complete) languages.push_back(lang);
    }
    const std::size_t k = axes.size();
    auto vertex = [&](std::size_t axis, double r) {
        const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * axis / static_cast<double>(k);
        return std::pair{cx + radius * r * std::cos(angle), cy + radius * r * std::sin(angle)};
    };
    for (const double ring : {0.25, 0.5, 0.75, 1.0}) {
        std::vector<std::pair<double, double>> pts;
        for (std::size_t a = 0; a < k; ++a) pts.push_back(vertex(a, ring));
        svg.polygon(pts, "#cccccc", "none", 0.0);
    }
    for (std::size_t a = 0; a < k; ++a) {
        const auto [x, y] = vertex(a, 1.0);
        svg.line(cx, cy, x, y, "#999999");
        const auto [lx, ly] = vertex(a, 1.12);
        svg.text(lx, ly + 4, axes[a]->metric_id, "middle", 11);
    }
    std::vector<double> maxima;
    for (const auto* t : axes) {
        double m = 0.0;
        for (const auto& lang : languages) m = std::max(m, *t->mean(lang));
        maxima.push_back(m);
    }
    for (std::size_t l = 0; l < languages.size(); ++l) {
        std::vector<std::pair<double, double>> pts;
        for (std::size_t a = 0; a < k; ++a) {
            const double v = *axes[a]->mean(languages[l]);
            pts.push_back(vertex(a, maxima[a] > 0.0 ? v / maxima[a] : 0.0));
        }
        const std::size_t ci = static_cast<std::size_t>(
            std::find(axes.front()->languages.begin(), axes.front()->languages.end(), languages[l]) -
            axes.front()->languages.begin());
        svg.polygon(pts, colour(ci), colour(ci), 0.15);
    }
    legend(svg, 560, 90, languages);
    return svg.str(spec.title);
}

}  // namespace

std::string render_chart(const ChartSpec& spec, const std::vector<ComparisonTable>& tables) {
    switch (spec.kind) {
        case ChartKind::grouped_bar: return grouped_bar(spec, table_for(tables, spec.x_metric));
        case ChartKind::mean_bar: return mean_bar(spec, table_for(tables, spec.x_metric));
        case ChartKind::scatter:
            return scatter(spec, table_for(tables, spec.x_metric), table_for(tables, spec.y_metric));
        case ChartKind::radar: {
            if (spec.metrics.size() < 3) {
                throw Error(ErrorCode::unknown_metric, "radar chart needs at least three metrics");
            }
            std::vector<const ComparisonTable*> axes;
            for (const auto& m : spec.metrics) axes.push_back(&table_for(tables, m));
            return radar(spec, axes);
        }
    }
    return {};
}

std::vector<ChartSpec> standard_charts() {
    std::vector<ChartSpec> charts;
    charts.push_back({ChartKind::grouped_bar, "loc_by_algorithm", "Lines of code per algorithm", "loc", "", {}});
    charts.push_back({ChartKind::grouped_bar, "cc_by_algorithm", "Cyclomatic complexity per algorithm", "cc", "", {}});
    charts.push_back({ChartKind::mean_bar, "loc_mean", "Mean lines of code per language", "loc", "", {}});
    charts.push_back({ChartKind::mean_bar, "cc_mean", "Mean cyclomatic complexity per language", "cc", "", {}});
    charts.push_back({ChartKind::mean_bar, "effort_mean", "Mean Halstead effort per language", "effort", "", {}});
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"loc", "cc"},     {"loc", "effort"},        {"cc", "effort"},
        {"volume", "effort"}, {"difficulty", "effort"}, {"loc", "vocabulary"}};
    for (const auto& [x, y] : pairs) {
        charts.push_back({ChartKind::scatter, "scatter_" + x + "_" + y,
                          "Per-language means: " + x + " vs " + y, x, y, {}});
    }
    charts.push_back({ChartKind::radar, "radar", "Normalised per-language means", "", "",
                      {"loc", "cc", "vocabulary", "length", "volume", "difficulty", "effort"}});
    return charts;
}

// ---------------------------------------------------------------- reference

const ReferenceValues& reference_values() {
    static const ReferenceValues values = [] {
        ReferenceValues v;
        const std::array<std::string, 4> algs{"deutsch-jozsa", "bernstein-vazirani", "simon", "grover"};
        const std::vector<std::pair<std::string, std::array<double, 4>>> loc{
            {"cirq", {24, 17, 26, 44}},   {"quapl", {35, 20, 19, 44}}, {"qiskit", {23, 15, 26, 44}},
            {"qrisp", {21, 15, 19, 39}},  {"qmod", {29, 25, 15, 9}},   {"qsharp", {33, 27, 30, 56}}};
        const std::vector<std::pair<std::string, std::array<double, 4>>> cc{
            {"cirq", {6, 6, 6, 11}}, {"quapl", {3, 4, 5, 12}}, {"qiskit", {2, 3, 3, 8}},
            {"qrisp", {2, 3, 3, 8}}, {"qmod", {5, 5, 2, 2}},   {"qsharp", {5, 6, 6, 12}}};
        for (const auto& [lang, row] : loc) {
            for (std::size_t i = 0; i < algs.size(); ++i) v.loc[{lang, algs[i]}] = row[i];
        }
        for (const auto& [lang, row] : cc) {
            for (std::size_t i = 0; i < algs.size(); ++i) v.cc[{lang, algs[i]}] = row[i];
        }
        const std::array<std::string, 6> langs{"cirq", "qsharp", "quapl", "qiskit", "qmod", "qrisp"};
        const std::vector<std::pair<std::string, std::array<double, 6>>> halstead{
            {"n1", {24.00, 29.25, 28.50, 20.75, 15.50, 20.00}},
            {"n2", {13.25, 13.75, 19.00, 13.50, 8.75, 10.50}},
            {"N1", {127.50, 105.75, 152.50, 79.75, 59.25, 71.25}},
            {"N2", {61.50, 52.75, 65.75, 60.25, 32.75, 50.00}},
            {"vocabulary", {37.25, 43.00, 47.50, 34.25, 24.25, 30.50}},
            {"length", {189.00, 158.50, 218.55, 140.00, 92.00, 121.25}},
            {"volume", {995.22, 868.27, 1234.53, 727.26, 420.47, 608.55}},
            {"difficulty", {55.71, 57.34, 48.40, 46.41, 29.76, 50.76}},
            {"effort", {63116.99, 56107.02, 75780.32, 39869.05, 12781.16, 38853.50}}};
        for (const auto& [metric, row] : halstead) {
            for (std::size_t i = 0; i < langs.size(); ++i) v.halstead_means[metric][langs[i]] = row[i];
        }
        return v;
    }();
    return values;
}

bool ReferenceComparison::all_match() const {
    return std::all_of(cells.begin(), cells.end(), [](const CellComparison& c) { return c.match; });
}

ReferenceComparison compare_with_reference(
    const std::vector<MetricsReport>& reports,
    const std::map<std::string, std::string>& provenance_by_unit) {
    const auto& ref = reference_values();
    ReferenceComparison out;
    for (const auto& r : reports) {
        const auto p = provenance_by_unit.find(r.unit_name);
        const bool from_repo = p != provenance_by_unit.end() && p->second == provenance_paper_repo;
        const std::pair key{r.language_id, r.algorithm_id};
        if (!from_repo || !ref.loc.count(key)) {
            out.excluded.push_back(r.unit_name);
            continue;
        }
        for (const auto& [metric, grid] :
             {std::pair{"loc", &ref.loc}, std::pair{"cc", &ref.cc}}) {
            CellComparison c;
            c.metric_id = metric;
            c.language = r.language_id;
            c.algorithm = r.algorithm_id;
            c.expected = grid->at(key);
            c.actual = metric_value(r, metric);
            c.match = c.expected == c.actual;
            out.cells.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<std::string> order_by_mean(const ComparisonTable& table) {
    std::vector<std::pair<std::string, double>> entries(table.means.begin(), table.means.end());
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<std::string> out;
    for (auto& e : entries) out.push_back(std::move(e.first));
    return out;
}

}  // namespace qxpress
