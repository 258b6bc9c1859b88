#ifndef HLNET_REPORT_HPP
#define HLNET_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace hlnet {

/// One line of an experiment report. `check` names the experiment (e.g.
/// "eg", "cut", "lemma-merge", "oracle-eg:g84").
struct ReportRow {
    std::string check;
    int n = 0;
    std::uint64_t g = 0;
    std::int64_t formula_value = 0;
    std::optional<std::int64_t> construction_value;
    std::optional<std::int64_t> oracle_value;
    std::string status;
    std::int64_t elapsed_ms = 0;

    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

enum class ReportFormat { csv, json, text };

/// Parses "csv", "json" or "text".
ReportFormat parse_report_format(std::string_view name);

/// Serializes rows. Output depends only on the rows: CSV has a header row and
/// RFC 4180 quoting; JSON is an array of objects with a fixed key order; text
/// is column-aligned. Missing optional values are empty (CSV/text) or null.
std::string render_report(std::span<const ReportRow> rows, ReportFormat format);
void write_report(std::ostream& out, std::span<const ReportRow> rows, ReportFormat format);

} // namespace hlnet

#endif
