#include "hlnet/report.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hlnet/common.hpp"

namespace hlnet {

namespace {

constexpr std::array<const char*, 8> columns = {
    "check", "n", "g", "formula_value", "construction_value", "oracle_value", "status", "elapsed_ms"};

std::string optional_text(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::array<std::string, 8> cells(const ReportRow& r) {
    return {r.check,
            std::to_string(r.n),
            std::to_string(r.g),
            std::to_string(r.formula_value),
            optional_text(r.construction_value),
            optional_text(r.oracle_value),
            r.status,
            std::to_string(r.elapsed_ms)};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void render_csv(std::ostream& out, std::span<const ReportRow> rows) {
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << columns[i];
    out << "\r\n";
    for (const auto& row : rows) {
        const auto c = cells(row);
        for (std::size_t i = 0; i < c.size(); ++i)
            out << (i ? "," : "") << csv_field(c[i]);
        out << "\r\n";
    }
}

void render_json(std::ostream& out, std::span<const ReportRow> rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json o;
        o["check"] = r.check;
        o["n"] = r.n;
        o["g"] = r.g;
        o["formula_value"] = r.formula_value;
        o["construction_value"] = r.construction_value ? nlohmann::ordered_json(*r.construction_value)
                                                       : nlohmann::ordered_json(nullptr);
        o["oracle_value"] = r.oracle_value ? nlohmann::ordered_json(*r.oracle_value)
                                           : nlohmann::ordered_json(nullptr);
        o["status"] = r.status;
        o["elapsed_ms"] = r.elapsed_ms;
        arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
}

void render_text(std::ostream& out, std::span<const ReportRow> rows) {
    std::vector<std::array<std::string, 8>> table;
    table.push_back({});
    for (std::size_t i = 0; i < columns.size(); ++i)
        table[0][i] = columns[i];
    for (const auto& r : rows)
        table.push_back(cells(r));
    std::array<std::size_t, 8> width{};
    for (const auto& line : table)
        for (std::size_t i = 0; i < line.size(); ++i)
            width[i] = std::max(width[i], line[i].size());
    for (const auto& line : table) {
        std::string text;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i)
                text += "  ";
            text += line[i];
            if (i + 1 < line.size())
                text.append(width[i] - line[i].size(), ' ');
        }
        out << text << '\n';
    }
}

} // namespace

ReportFormat parse_report_format(std::string_view name) {
    if (name == "csv")
        return ReportFormat::csv;
    if (name == "json")
        return ReportFormat::json;
    if (name == "text")
        return ReportFormat::text;
    fail(ErrorCode::invalid_argument, "unknown report format '" + std::string(name) + "'");
}

void write_report(std::ostream& out, std::span<const ReportRow> rows, ReportFormat format) {
    switch (format) {
    case ReportFormat::csv:
        render_csv(out, rows);
        break;
    case ReportFormat::json:
        render_json(out, rows);
        break;
    case ReportFormat::text:
        render_text(out, rows);
        break;
    }
}

std::string render_report(std::span<const ReportRow> rows, ReportFormat format) {
    std::ostringstream out;
    write_report(out, rows, format);
    return out.str();
}

} // namespace hlnet
