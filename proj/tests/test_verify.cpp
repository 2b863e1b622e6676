#include <doctest.h>

#include <nlohmann/json.hpp>

#include "zcx/verify.hpp"

#ifndef ZCX_TEST_DATA
#define ZCX_TEST_DATA "tests/data"
#endif

using namespace zcx;

TEST_SUITE("verify") {

TEST_CASE("reports are deterministic")
{
    VerifyOptions o;
    o.suite = "identities";
    o.max_size = 8;
    const auto a = run_suites(o);
    const auto b = run_suites(o);
    CHECK(render_text(a) == render_text(b));
    CHECK(render_json(a) == render_json(b));
    REQUIRE(a.size() == 1);
    CHECK(a[0].passed());
}

TEST_CASE("json report layout")
{
    VerifyOptions o;
    o.suite = "kernels";
    const auto j = nlohmann::json::parse(render_json(run_suites(o)));
    CHECK(j.contains("suites"));
    CHECK(j["passed"].get<bool>());
    CHECK_FALSE(j["suites"][0].contains("elapsed_seconds"));
    const auto timed = nlohmann::json::parse(render_json(run_suites(o), true));
    CHECK(timed["suites"][0].contains("elapsed_seconds"));
}

TEST_CASE("unknown suite")
{
    VerifyOptions o;
    o.suite = "nope";
    CHECK_THROWS_AS(run_suites(o), std::invalid_argument);
}

TEST_CASE("small suites pass")
{
    CHECK(suite_gentree(8, 20).passed());
    CHECK(suite_refined(8).passed());
    CHECK(suite_structure(8).passed());
    CHECK(suite_asymptotics(512).checks.size() == 6);
}

TEST_CASE("fixtures")
{
    const auto good = suite_fixtures(ZCX_TEST_DATA "/fixtures.json");
    CHECK(good.passed());
    CHECK(good.checks.size() == 4);
    const auto bad = suite_fixtures(ZCX_TEST_DATA "/fixtures_bad.json");
    CHECK_FALSE(bad.passed());
    REQUIRE(bad.failures() == 1);
    CHECK(bad.checks[0].witness.find("n=5") != std::string::npos);
    CHECK_FALSE(suite_fixtures(ZCX_TEST_DATA "/missing.json").passed());
}

}
