#include <doctest.h>

#include <sstream>
#include <vector>

#include "hlnet/common.hpp"
#include "hlnet/report.hpp"

using namespace hlnet;

namespace {

ReportRow sample_row() {
    ReportRow r;
    r.check = "eg";
    r.n = 8;
    r.g = 5;
    r.formula_value = 35;
    r.construction_value = 35;
    r.oracle_value = std::nullopt;
    r.status = "pass";
    r.elapsed_ms = 0;
    return r;
}

} // namespace

TEST_CASE("empty report") {
    CHECK(render_report({}, ReportFormat::csv) ==
          "check,n,g,formula_value,construction_value,oracle_value,status,elapsed_ms\r\n");
    CHECK(render_report({}, ReportFormat::json) == "[]\n");
}

TEST_CASE("single row in every format") {
    const std::vector<ReportRow> rows{sample_row()};
    CHECK(render_report(rows, ReportFormat::csv) ==
          "check,n,g,formula_value,construction_value,oracle_value,status,elapsed_ms\r\n"
          "eg,8,5,35,35,,pass,0\r\n");
    CHECK(render_report(rows, ReportFormat::json) == R"([
  {
    "check": "eg",
    "n": 8,
    "g": 5,
    "formula_value": 35,
    "construction_value": 35,
    "oracle_value": null,
    "status": "pass",
    "elapsed_ms": 0
  }
]
)");
    const std::string text = render_report(rows, ReportFormat::text);
    CHECK(text.find("check  n  g  formula_value") == 0);
    CHECK(text.find("eg     8  5  35") != std::string::npos);
}

TEST_CASE("csv quoting") {
    ReportRow r = sample_row();
    r.check = "cut:random:seed=1";
    r.status = "fail, \"odd\"";
    const std::vector<ReportRow> rows{r};
    const std::string csv = render_report(rows, ReportFormat::csv);
    CHECK(csv.find("cut:random:seed=1,8,5,35,35,,\"fail, \"\"odd\"\"\",0\r\n") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    std::vector<ReportRow> rows;
    for (int i = 0; i < 50; ++i) {
        ReportRow r = sample_row();
        r.g = static_cast<std::uint64_t>(i);
        r.oracle_value = i;
        rows.push_back(r);
    }
    for (auto f : {ReportFormat::csv, ReportFormat::json, ReportFormat::text})
        CHECK(render_report(rows, f) == render_report(rows, f));
    std::ostringstream out;
    write_report(out, rows, ReportFormat::csv);
    CHECK(out.str() == render_report(rows, ReportFormat::csv));
}

TEST_CASE("format names") {
    CHECK(parse_report_format("csv") == ReportFormat::csv);
    CHECK(parse_report_format("json") == ReportFormat::json);
    CHECK(parse_report_format("text") == ReportFormat::text);
    CHECK_THROWS_AS(parse_report_format("xml"), Error);
}
