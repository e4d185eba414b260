#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acs/report.hpp"

#include <json.hpp>

#include <sstream>

using namespace acs;
using nlohmann::json;

namespace {

std::vector<std::vector<std::string>> parse_tsv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, '\t')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

TEST_CASE("scan covers every dimension with no gaps") {
    const ScanReport report = scan(64);
    REQUIRE(report.rows.size() == 64);
    for (size_t i = 0; i < report.rows.size(); ++i)
        REQUIRE(report.rows[i].dim == i + 1);
    CHECK(report.regressions_ok);
    CHECK_FALSE(report.ruleset.empty());
    CHECK(report.tool_version == kToolVersion);
}

TEST_CASE("parallel scan is byte-identical to sequential") {
    const std::string seq = to_tsv(scan(96, false));
    const std::string par = to_tsv(scan(96, true));
    CHECK(seq == par);
    CHECK(to_json(scan(96, false)) == to_json(scan(96, true)));
}

TEST_CASE("tsv and json scans are row-for-row equivalent") {
    const ScanReport report = scan(48);
    const json j = json::parse(to_json(report));
    CHECK(j["schema"] == kJsonSchemaVersion);
    const auto tsv = parse_tsv(to_tsv(report));
    REQUIRE(tsv.size() == report.rows.size() + 1);  // header
    REQUIRE(j["rows"].size() == report.rows.size());
    for (size_t i = 0; i < report.rows.size(); ++i) {
        const auto& jrow = j["rows"][i];
        const auto& trow = tsv[i + 1];
        REQUIRE(std::stoul(trow[0]) == jrow["dim"].get<unsigned long>());
        REQUIRE(trow[2] == jrow["status"].get<std::string>());
        if (jrow["eta_squared"].is_null()) {
            REQUIRE(trow[3] == "-");
        } else {
            REQUIRE(trow[3] == jrow["eta_squared"]["num"].get<std::string>());
            REQUIRE(trow[4] == jrow["eta_squared"]["den"].get<std::string>());
        }
    }
}

TEST_CASE("every emitted row carries a rule from the ruleset") {
    const ScanReport report = scan(40);
    for (const Betti3Record& rec : report.rows) {
        REQUIRE_FALSE(rec.rule.empty());
        bool found = false;
        for (const std::string& rule : report.ruleset)
            if (rule == rec.rule) found = true;
        REQUIRE(found);
    }
}

TEST_CASE("figure rows reproduce the pinned bullets") {
    const auto rows = figure_rows(36);
    REQUIRE(rows.size() == 19);
    auto sum_at = [&](unsigned long dim) {
        return *rows.at(dim / 2).min_betti_sum;
    };
    CHECK(sum_at(0) == 1);
    CHECK(sum_at(2) == 2);
    CHECK(sum_at(4) == 3);
    CHECK(sum_at(6) == 2);
    for (unsigned long dim = 8; dim <= 36; dim += 2) CHECK(sum_at(dim) == 4);
}

TEST_CASE("figure serializations agree") {
    const auto rows = figure_rows(20);
    const json j = json::parse(to_json(rows));
    const auto tsv = parse_tsv(to_tsv(rows));
    REQUIRE(tsv.size() == rows.size() + 1);
    for (size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(std::stoul(tsv[i + 1][0]) ==
                j["rows"][i]["dim"].get<unsigned long>());
        if (!j["rows"][i]["min_betti_sum"].is_null())
            REQUIRE(std::stoi(tsv[i + 1][1]) ==
                    j["rows"][i]["min_betti_sum"].get<int>());
    }
}

TEST_CASE("all consistency audits pass") {
    const auto results = run_audits();
    REQUIRE_FALSE(results.empty());
    for (const AuditResult& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
}
