#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "eiszero/cli_util.hpp"
#include "eiszero/report.hpp"

using namespace eiszero;

namespace {

std::vector<ZeroReport> sample_reports() {
    const Registry& reg = Registry::builtin();
    std::vector<ZeroReport> out;
    out.push_back(locate_zeros(reg, reg.get("SL2Z"), 12));
    out.push_back(locate_zeros(reg, reg.get("SL2Z"), 4));
    return out;
}

}  // namespace

TEST_CASE("weight specification syntax") {
    CHECK(parse_weights_spec("12") == std::vector<long>{12});
    CHECK(parse_weights_spec("4..10") == std::vector<long>({4, 6, 8, 10}));
    CHECK(parse_weights_spec("4..12/4") == std::vector<long>({4, 8, 12}));
    CHECK(parse_weights_spec("1000") == std::vector<long>{1000});
    CHECK_THROWS_AS(parse_weights_spec("x"), std::domain_error);
    CHECK_THROWS_AS(parse_weights_spec("10..4"), std::domain_error);
    CHECK_THROWS_AS(parse_weights_spec("4..10/0"), std::domain_error);
}

TEST_CASE("csv: fixed header, deterministic bytes, weight-major ordering") {
    std::vector<ZeroReport> reports = sample_reports();
    std::string a = zeros_to_csv(reports, 128);
    std::string b = zeros_to_csv(reports, 128);
    CHECK(a == b);
    CHECK(a.rfind("group,weight,re_z,im_z,multiplicity,re_j,im_j,on_arc,in_interval,kind\n", 0) ==
          0);
    // weight 4 row precedes weight 12 despite insertion order
    size_t w4 = a.find("SL2Z,4,");
    size_t w12 = a.find("SL2Z,12,");
    REQUIRE(w4 != std::string::npos);
    REQUIRE(w12 != std::string::npos);
    CHECK(w4 < w12);
}

TEST_CASE("svg figures are self-contained and bounded") {
    const Registry& reg = Registry::builtin();
    std::vector<ZeroReport> reports = sample_reports();
    std::string svg = zeros_to_svg(reg, reg.get("SL2Z"), reports);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("href") == std::string::npos);
    CHECK(svg.find("<image") == std::string::npos);
    CHECK(svg.size() < 2 * 1024 * 1024);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("verdict dump carries the schema version and both m-counts") {
    std::vector<ZeroReport> reports = sample_reports();
    nlohmann::json j = nlohmann::json::parse(verdicts_to_json(reports));
    CHECK(j.at("schema_version") == 1);
    REQUIRE(j.at("reports").size() == 2);
    const auto& r = j.at("reports").at(0);
    CHECK(r.contains("m_halfline"));
    CHECK(r.contains("m_halfline_with_cusps"));
    CHECK(r.contains("valence_expected"));
    CHECK(r.at("valence_expected") == r.at("valence_found"));
}

TEST_CASE("expansion text format: exponent tab rational") {
    RatSeries s = eisenstein_level1(4, 3);
    std::string text = qexp_text(s);
    CHECK(text == "0\t1/1\n1\t240/1\n2\t2160/1\n3\t6720/1\n");
    const Registry& reg = Registry::builtin();
    Hauptmodul h = build_hauptmodul(reg, reg.get("Gamma0_2"), 3);
    std::string ht = qexp_text(h.qexp);
    CHECK(ht.rfind("-1\t1/1\n0\t0/1\n1\t276/1\n", 0) == 0);
}

TEST_CASE("divisor polynomial text: header comment then descending coefficients") {
    const Registry& reg = Registry::builtin();
    ZeroReport r = locate_zeros(reg, reg.get("SL2Z"), 4);
    DivisorPolynomial p = from_zeros(r);
    std::string text = divpoly_text(p, 128);
    CHECK(text.rfind("# divisor polynomial for SL2Z, weight 4\n# convention:", 0) == 0);
    CHECK(text.find("744") != std::string::npos);
}

TEST_CASE("sweep table text") {
    std::vector<SweepRow> rows = {{4, 1, 1, 0, 0.0}, {6, 2, 2, 1, 0.125}};
    std::string t = sweep_table_text("SL2Z", rows);
    CHECK(t.find("weight\tzero_classes\ttotal_mult\toff_arc\tmax_off_arc_dist\n") !=
          std::string::npos);
    CHECK(t.find("6\t2\t2\t1\t0.125") != std::string::npos);
}
