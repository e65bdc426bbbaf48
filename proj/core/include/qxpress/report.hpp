#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qxpress/metrics.hpp"

namespace qxpress {

/// Metric ids in presentation order:
/// loc, cc, n1, n2, N1, N2, vocabulary, length, volume, difficulty, effort.
const std::vector<std::string>& metric_ids();
bool is_metric_id(std::string_view id);
/// Integer-valued metrics render without decimals.
bool is_integer_metric(std::string_view id);
/// Throws Error(unknown_metric).
double metric_value(const MetricsReport& report, std::string_view metric_id);

/// One metric over the language x algorithm grid. Languages sort
/// alphabetically, algorithms in benchmark order.
struct ComparisonTable {
    std::string metric_id;
    std::vector<std::string> languages;
    std::vector<std::string> algorithms;
    std::map<std::pair<std::string, std::string>, double> cells;  ///< (language, algorithm)
    /// Arithmetic mean per language; absent when the language lacks a cell
    /// for some algorithm column.
    std::map<std::string, double> means;

    std::optional<double> cell(std::string_view language, std::string_view algorithm) const;
    std::optional<double> mean(std::string_view language) const;

    bool operator==(const ComparisonTable&) const = default;
};

/// One table per metric id. Throws Error(duplicate_cell) if two reports share
/// (language, algorithm). Independent of input order.
std::vector<ComparisonTable> aggregate(const std::vector<MetricsReport>& reports);

enum class TableFormat { csv, json, markdown };

std::optional<TableFormat> parse_table_format(std::string_view name);
const char* file_extension(TableFormat format);

/// Byte-deterministic. CSV and Markdown print reals with two decimals and
/// integers bare; JSON keeps full precision so it parses back to an equal
/// table. CSV carries the grid only, Markdown and JSON add the means.
std::string render_table(const ComparisonTable& table, TableFormat format);
ComparisonTable parse_table_json(std::string_view json_text);

/// Two-decimal fixed rendering used for every displayed real.
std::string format_real(double value);

/// `{unit_name, language, algorithm, loc, cc, halstead:{...}}`.
std::string report_to_json(const MetricsReport& report, int indent = 2);
std::string reports_to_json(const std::vector<MetricsReport>& reports);
std::string render_report(const MetricsReport& report, TableFormat format);

enum class ChartKind { grouped_bar, mean_bar, scatter, radar };

struct ChartSpec {
    ChartKind kind = ChartKind::grouped_bar;
    std::string name;
    std::string title;
    std::string x_metric;             ///< grouped/mean bar: the plotted metric
    std::string y_metric;             ///< scatter only
    std::vector<std::string> metrics; ///< radar axes
};

/// Standalone SVG, no external references. Throws Error(unknown_metric) for a
/// metric missing from `tables`.
std::string render_chart(const ChartSpec& spec, const std::vector<ComparisonTable>& tables);

/// The chart set written by `corpus run`: per-algorithm and mean bars for LOC
/// and CC, six scatter panels of per-language means, and a radar.
std::vector<ChartSpec> standard_charts();

/// Published study values used for the provenance-gated comparison.
struct ReferenceValues {
    /// (language, algorithm) -> value
    std::map<std::pair<std::string, std::string>, double> loc;
    std::map<std::pair<std::string, std::string>, double> cc;
    /// metric id -> language -> mean
    std::map<std::string, std::map<std::string, double>> halstead_means;
};

const ReferenceValues& reference_values();

struct CellComparison {
    std::string metric_id;
    std::string language;
    std::string algorithm;
    double expected = 0.0;
    double actual = 0.0;
    bool match = false;
};

struct ReferenceComparison {
    std::vector<CellComparison> cells;  ///< compared units only
    std::vector<std::string> excluded;  ///< unit names skipped (provenance)
    bool all_match() const;
};

/// Compares LOC and CC of every unit whose provenance is "paper-repo"
/// against the reference grid, exactly. Other units are listed as excluded.
ReferenceComparison compare_with_reference(
    const std::vector<MetricsReport>& reports,
    const std::map<std::string, std::string>& provenance_by_unit);

/// Languages ordered by descending per-language mean of `metric_id`; only
/// languages with a defined mean participate.
std::vector<std::string> order_by_mean(const ComparisonTable& table);

}  // namespace qxpress
