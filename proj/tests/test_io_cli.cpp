#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fk3/census.hpp"
#include "fk3/cli.hpp"
#include "fk3/io.hpp"
#include "fk3/weight_system.hpp"

using fk3::CatalogFormat;
using fk3::Int;
using fk3::WeightSystem;

namespace {

std::filesystem::path temp_file(const std::string& stem) {
    return std::filesystem::temp_directory_path() / ("fk3_test_" + stem);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run(std::vector<std::string> args) { return fk3::run_command(args); }

const std::vector<fk3::FamilyRecord>& fourfold_census() {
    static const auto value = fk3::enumerate_fk3_fourfolds(8);
    return value;
}

}  // namespace

TEST_CASE("weight-spec parsing and rendering round-trip") {
    const WeightSystem ws = fk3::parse_weight_spec("1,2,2,3,5,7:10");
    CHECK(ws == WeightSystem({1, 2, 2, 3, 5, 7}, 10));
    CHECK(fk3::render(ws) == "1,2,2,3,5,7:10");
    CHECK(fk3::parse_weight_spec(fk3::render(ws)) == ws);

    // weights come back sorted, so parsing is order-insensitive
    CHECK(fk3::parse_weight_spec("7,5,3,2,2,1:10") == ws);
    CHECK(fk3::parse_weight_spec("4:2") == WeightSystem({4}, 2));
}

TEST_CASE("weight-spec rejects malformed text with a column") {
    CHECK_THROWS_AS(fk3::parse_weight_spec(""), fk3::ParseError);
    CHECK_THROWS_AS(fk3::parse_weight_spec("1,2"), fk3::ParseError);
    CHECK_THROWS_AS(fk3::parse_weight_spec("1,,2:3"), fk3::ParseError);
    CHECK_THROWS_AS(fk3::parse_weight_spec("1,2:3x"), fk3::ParseError);
    CHECK_THROWS_AS(fk3::parse_weight_spec("1,2:"), fk3::ParseError);
    try {
        fk3::parse_weight_spec(",1:3");
        FAIL("expected ParseError");
    } catch (const fk3::ParseError& e) {
        CHECK(e.column() == 0);
    }
    // structurally fine but mathematically empty entries are domain errors
    CHECK_THROWS_AS(fk3::parse_weight_spec("1,0,1:3"), std::domain_error);
    CHECK_THROWS_AS(fk3::parse_weight_spec("1,1:0"), std::domain_error);
}

TEST_CASE("format names") {
    CHECK(fk3::parse_format("csv") == CatalogFormat::Csv);
    CHECK(fk3::parse_format("json") == CatalogFormat::Json);
    CHECK(fk3::parse_format("md") == CatalogFormat::Markdown);
    CHECK_THROWS_AS(fk3::parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("family catalog emission in the three formats") {
    std::vector<fk3::FamilyRecord> sample = {fk3::analyze_family(WeightSystem({1, 1, 1, 2, 3, 4}, 6)),
                                             fk3::analyze_family(WeightSystem({1, 1, 1, 1, 1, 1}, 3))};

    const std::string csv = fk3::emit_family_catalog(sample, CatalogFormat::Csv);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "index,weights,degree,h22_total,h22_primitive,sing_dim,sing_class,association_k3,"
          "rationality,tags");
    const auto commas = static_cast<long>(std::count(header.begin(), header.end(), ','));
    for (std::string line; std::getline(lines, line);)
        CHECK(std::count(line.begin(), line.end(), ',') == commas);

    const auto parsed = nlohmann::json::parse(fk3::emit_family_catalog(sample, CatalogFormat::Json));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["index"] == 1);
    CHECK(parsed[0]["degree"] == 6);
    CHECK(parsed[0]["h22_total"] == 20);
    CHECK(parsed[0]["association_k3"] == nlohmann::json::array({1, 1, 1, 3}));
    CHECK(parsed[1]["association_k3"].is_null());
    CHECK(parsed[1]["tags"] == nlohmann::json::array({"cubic"}));

    const std::string md = fk3::emit_family_catalog(sample, CatalogFormat::Markdown);
    CHECK(md.rfind("| # | weights | d | h22 |", 0) == 0);
    CHECK(md.find("| (1^3,2,3,4) | 6 |") != std::string::npos);

    // header-only output for an empty record set
    const std::string empty = fk3::emit_family_catalog({}, CatalogFormat::Csv);
    CHECK(empty ==
          "index,weights,degree,h22_total,h22_primitive,sing_dim,sing_class,association_k3,"
          "rationality,tags\n");
}

TEST_CASE("CSV fields never contain commas across the full catalogs") {
    const std::string catalog = fk3::emit_family_catalog(fourfold_census(), CatalogFormat::Csv);
    std::istringstream lines(catalog);
    std::string header;
    std::getline(lines, header);
    const auto commas = static_cast<long>(std::count(header.begin(), header.end(), ','));
    std::size_t rows = 0;
    for (std::string line; std::getline(lines, line); ++rows)
        CHECK(std::count(line.begin(), line.end(), ',') == commas);
    CHECK(rows == 244);
}

TEST_CASE("strata report for the worked example") {
    const WeightSystem ws = fk3::parse_weight_spec("1,1,1,2,3,4:6");
    const auto report = fk3::classify_hypersurface(ws);

    const std::string csv = fk3::emit_strata_report(ws, report, CatalogFormat::Csv);
    CHECK(csv.rfind("r,indices,relation,tangent_index,residues,locus_dim,class\n", 0) == 0);
    CHECK(csv.find("2,3 5,transverse,-,1 1 1 1,0,terminal") != std::string::npos);
    CHECK(csv.find("3,4,off,-,-,-1,-") != std::string::npos);
    CHECK(csv.find("4,5,contained,3,1 1 1 3,0,terminal") != std::string::npos);

    const auto parsed = nlohmann::json::parse(fk3::emit_strata_report(ws, report, CatalogFormat::Json));
    CHECK(parsed["weights"] == nlohmann::json::array({1, 1, 1, 2, 3, 4}));
    CHECK(parsed["degree"] == 6);
    CHECK(parsed["overall_class"] == "terminal");
    CHECK(parsed["singular_locus_dim"] == 0);
    REQUIRE(parsed["strata"].size() == 3);
    CHECK(parsed["strata"][2]["type"] == "1/4(1,1,1,3)");
    CHECK(parsed["strata"][1]["class"].is_null());
}

TEST_CASE("golden catalogs reproduce byte-exactly") {
    const std::filesystem::path dir = FK3_GOLDEN_DIR;
    CHECK(fk3::emit_k3_catalog(fk3::enumerate_k3_surfaces(), CatalogFormat::Csv) ==
          slurp(dir / "k3.csv"));
    CHECK(fk3::emit_family_catalog(fourfold_census(), CatalogFormat::Csv) ==
          slurp(dir / "fk3.csv"));
    CHECK(fk3::emit_family_catalog(fk3::enumerate_extra_families(), CatalogFormat::Csv) ==
          slurp(dir / "extra.csv"));
}

TEST_CASE("cli: k3 census to a file") {
    const auto out = temp_file("k3.csv");
    CHECK(run({"k3", "enumerate", "--format", "csv", "--out", out.string()}) == 0);
    const std::string text = slurp(out);
    CHECK(std::count(text.begin(), text.end(), '\n') == 96);  // header + 95 rows
    CHECK(text.rfind("index,weights,degree,h11_total,h11_primitive\n", 0) == 0);
    std::filesystem::remove(out);
}

TEST_CASE("cli: full census is byte-identical across runs and thread counts") {
    const auto first = temp_file("fk3_jobs1.csv");
    const auto second = temp_file("fk3_jobs8.csv");
    CHECK(run({"fk3", "enumerate", "--jobs", "1", "--out", first.string()}) == 0);
    CHECK(run({"fk3", "enumerate", "--jobs", "8", "--out", second.string()}) == 0);
    const std::string text = slurp(first);
    CHECK(text == slurp(second));
    CHECK(std::count(text.begin(), text.end(), '\n') == 245);
    std::filesystem::remove(first);
    std::filesystem::remove(second);
}

TEST_CASE("cli: verify runs the cross-checks and stays quiet on success") {
    const auto out = temp_file("extra.md");
    CHECK(run({"fk3", "extra", "--verify", "--format", "md", "--out", out.string()}) == 0);
    CHECK(slurp(out).find("cyclic_del_pezzo") != std::string::npos);
    std::filesystem::remove(out);
}

TEST_CASE("cli: analyze and singularities subcommands") {
    const auto out = temp_file("analyze.json");
    CHECK(run({"analyze", "1,1,1,2,3,4:6", "--format", "json", "--out", out.string()}) == 0);
    const auto detail = nlohmann::json::parse(slurp(out));
    CHECK(detail["weights"] == nlohmann::json::array({1, 1, 1, 2, 3, 4}));
    CHECK(detail["h22_total"] == 20);
    CHECK(detail["rationality"] == "rational");

    CHECK(run({"singularities", "1,1,1,2,3,4:6", "--format", "csv", "--out", out.string()}) == 0);
    CHECK(slurp(out).find("4,5,contained,3,1 1 1 3,0,terminal") != std::string::npos);
    std::filesystem::remove(out);
}

TEST_CASE("cli: check exit codes separate predicate failures from usage errors") {
    const auto out = temp_file("check.csv");
    CHECK(run({"check", "1,1,1,2,3,4:6", "--out", out.string()}) == 0);
    CHECK(run({"check", "1,1,1,1,5,5:7", "--out", out.string()}) == 1);
    const std::string report = slurp(out);
    CHECK(report.find("quasi_smooth,false") != std::string::npos);
    // screened-out but quasi-smooth input also maps to the predicate exit code
    CHECK(run({"check", "1,1,3,4,5,6:10", "--out", out.string()}) == 1);
    CHECK(slurp(out).find("census_remainder_screen,false") != std::string::npos);
    std::filesystem::remove(out);

    CHECK(run({"frobnicate"}) == 3);
    CHECK(run({"k3", "enumerate", "--format", "yaml"}) == 3);
    CHECK(run({"analyze", "1,2:"}) == 3);
    CHECK(run({"analyze", "1,0,1:3"}) == 3);
    CHECK(run({"fk3"}) == 3);
}

TEST_CASE("cli: analyze on a non-census system reports the predicate") {
    CHECK(run({"analyze", "1,1,1,1,5,5:7", "--out", temp_file("junk.txt").string()}) == 1);
    std::filesystem::remove(temp_file("junk.txt"));
}
