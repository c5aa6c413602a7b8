#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lg/verify.hpp"

#include <random>
#include <sstream>

using namespace lg;

static KnotRecord record_from(const std::string& row) {
    std::istringstream in("name,presentation,genus,components,alternating,fibered,"
                          "expected_alexander,expected_lg\n" +
                          row + "\n");
    auto recs = parse_table(in);
    REQUIRE(recs.size() == 1);
    return recs[0];
}

TEST_CASE("ishii sign predicate") {
    CHECK(ishii_sign_check(Laurent2(1)));
    CHECK(ishii_sign_check(Laurent2::t0() + Laurent2::t1()));
    CHECK_FALSE(ishii_sign_check(Laurent2(1) + Laurent2::t0()));
    CHECK(ishii_sign_check(Laurent2(1) - Laurent2::t0()));
    CHECK(ishii_sign_check(lg_invariant(BraidWord::parse("2: 1 1 1"))));
    CHECK(ishii_sign_check(lg_invariant(BraidWord::parse("3: 1 -2 1 -2"))));
}

TEST_CASE("table parsing") {
    SUBCASE("records and defaults") {
        auto rec = record_from("tref,braid:2: 1 1 1,1,1,true,true,t - 1 + t^-1,");
        CHECK(rec.name == "tref");
        CHECK(rec.braid.has_value());
        CHECK(rec.genus == 1);
        CHECK(rec.components == 1);
        CHECK(rec.alternating == true);
        CHECK(rec.fibered == true);
        CHECK(rec.expected_alexander.has_value());
        CHECK_FALSE(rec.expected_lg.has_value());
        auto fam = record_from("k,\"2bridge:1,1\",1,,,,,");
        CHECK(fam.family.has_value());
        CHECK(fam.components == 1);  // inferred from the presentation
        CHECK_FALSE(fam.alternating.has_value());
    }
    SUBCASE("comments and blank lines are skipped") {
        std::istringstream in("# a comment\n\nname,presentation,genus,components,"
                              "alternating,fibered,expected_alexander,expected_lg\n"
                              "u,braid:1:,0,1,,,,\n");
        CHECK(parse_table(in).size() == 1);
    }
    SUBCASE("errors carry row numbers") {
        CHECK_THROWS_AS(record_from("a,braid:2: 1,0"), TableParseError);
        CHECK_THROWS_AS(record_from("a,braid:2: 9,0,1,,,,"), TableParseError);
        CHECK_THROWS_AS(record_from("a,torus:2,0,1,,,,"), TableParseError);
        CHECK_THROWS_AS(record_from("a,braid:2: 1,0,1,maybe,,,"), TableParseError);
        CHECK_THROWS_AS(record_from("a,braid:2: 1 1,0,1,,,,"), TableParseError);  // mu = 2
        CHECK_THROWS_AS(record_from("a,\"braid:1:,0,1,,,,"), TableParseError);
        CHECK_THROWS_AS(record_from(",braid:1:,0,1,,,,"), TableParseError);
        try {
            record_from("a,braid:2: 1,0");
        } catch (const TableParseError& e) {
            CHECK(e.row == 2);
        }
    }
}

TEST_CASE("per-record checks") {
    SUBCASE("trefoil quadrants") {
        auto res = check_record(record_from(
            "tref,braid:2: 1 1 1,1,1,true,true,t - 1 + t^-1,"));
        CHECK(res.span == 4);
        CHECK(res.genus_bound == CheckStatus::equality);
        CHECK(res.alternating_eq == CheckStatus::pass);
        CHECK(res.fibered_monic == CheckStatus::pass);
        CHECK(res.lg_monic);
        CHECK(res.golden == CheckStatus::pass);
        CHECK(res.identities == CheckStatus::pass);
        CHECK(res.ishii);
        CHECK_FALSE(res.half_integer);
        CHECK(res.failures.empty());
    }
    SUBCASE("non-fibered twist knot is non-monic") {
        auto res = check_record(record_from("5_2,twist:2,1,1,true,false,,"));
        CHECK(res.fibered_monic == CheckStatus::pass);
        CHECK_FALSE(res.lg_monic);
        CHECK(res.alternating_eq == CheckStatus::pass);
        CHECK(res.identities == CheckStatus::skipped);  // family presentation
    }
    SUBCASE("missing genus skips the bound") {
        auto res = check_record(record_from("k,braid:2: 1 1 1,,1,,,,"));
        CHECK(res.genus_bound == CheckStatus::skipped);
        CHECK(res.alternating_eq == CheckStatus::skipped);
        CHECK(res.fibered_monic == CheckStatus::skipped);
    }
    SUBCASE("golden mismatch is a hard failure") {
        auto res = check_record(record_from("bad,braid:2: 1 1 1,1,1,,,1 + t,"));
        CHECK(res.golden == CheckStatus::fail);
        CHECK_FALSE(res.failures.empty());
    }
    SUBCASE("split link record") {
        auto res = check_record(record_from("split,braid:2:,0,2,,,0,0"));
        CHECK(res.lg.is_zero());
        CHECK(res.genus_bound == CheckStatus::strict);
        CHECK(res.golden == CheckStatus::pass);
        CHECK(res.identities == CheckStatus::pass);
    }
}

static const CheckReport& golden_report() {
    static CheckReport report =
        run_table_file(std::string(LG_SOURCE_DIR) + "/data/golden.csv");
    return report;
}

TEST_CASE("bundled golden table") {
    const CheckReport& report = golden_report();
    CHECK(report.ok());
    CHECK(report.records.size() == 9);
    for (const auto& r : report.records) {
        INFO(r.name);
        CHECK(r.failures.empty());
    }
    SUBCASE("report determinism") {
        // recheck the cheap records only; the serialization itself is pure
        std::istringstream in("u,braid:1:,0,1,,,,\ntref,braid:2: 1 1 1,1,1,true,true,,");
        auto a = run_table(parse_table(in));
        std::istringstream in2("u,braid:1:,0,1,,,,\ntref,braid:2: 1 1 1,1,1,true,true,,");
        auto b = run_table(parse_table(in2));
        CHECK(report_json(a).dump(2) == report_json(b).dump(2));
        CHECK(report_json(report).dump(2) == report_json(report).dump(2));
    }
    SUBCASE("report shape") {
        auto j = report_json(report);
        CHECK(j["summary"]["records"] == 9);
        CHECK(j["summary"]["hard_failures"] == 0);
        CHECK(j["records"].size() == 9);
        CHECK(j["records"][0]["checks"].contains("genus_bound"));
    }
}

TEST_CASE("classical bound on random knot closures") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> sn(2, 4), sl(1, 7);
    int done = 0;
    while (done < 25) {
        int n = sn(rng);
        std::uniform_int_distribution<int> sg(1, n - 1), ss(0, 1);
        std::vector<int> ls;
        int len = sl(rng);
        for (int i = 0; i < len; ++i) ls.push_back(ss(rng) ? sg(rng) : -sg(rng));
        BraidWord b(n, std::move(ls));
        if (b.components() != 1) continue;
        ++done;
        Laurent2 v = lg_invariant(b);
        Laurent1 d = alexander_closure(b);
        if (d.is_zero()) continue;
        CHECK(2 * d.breadth() <= v.span());
    }
}
