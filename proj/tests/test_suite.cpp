#include "airyderiv/suite.hpp"
#include "airyderiv/tables.hpp"

#include "golden.hpp"

#include <doctest.h>

#include <string_view>

using namespace airyderiv;

TEST_CASE("library tables match the frozen test copy")
{
    for (unsigned n = 0; n < 16; ++n) {
        CHECK(tables::kP[n] == std::string_view(golden::kP[n]));
        CHECK(tables::kQ[n] == std::string_view(golden::kQ[n]));
    }
    for (unsigned n = 0; n < 13; ++n) {
        CHECK(tables::kR[n] == std::string_view(golden::kR[n]));
        CHECK(tables::kS[n] == std::string_view(golden::kS[n]));
        CHECK(tables::kT[n] == std::string_view(golden::kT[n]));
    }
}

TEST_CASE("small suite passes and parallel equals serial")
{
    SuiteConfig cfg;
    cfg.n_max = 12;
    const auto par = run_suite(cfg, true);
    const auto ser = run_suite(cfg, false);
    REQUIRE(par.groups.size() == ser.groups.size());
    for (std::size_t i = 0; i < par.groups.size(); ++i) {
        INFO(name(par.groups[i].group));
        CHECK(par.groups[i].pass());
        CHECK(par.groups[i].records == ser.groups[i].records);
    }
    CHECK(par.pass());
    CHECK(par.size() > 200);
}

TEST_CASE("same seed, same records; different seed, different points")
{
    SuiteConfig a;
    a.seed = 7;
    const auto r1 = run_group(Group::gauss_2f1, a), r2 = run_group(Group::gauss_2f1, a);
    CHECK(r1.records == r2.records);
    a.seed = 8;
    CHECK(run_group(Group::gauss_2f1, a).records != r1.records);
}

TEST_CASE("injected fault fails exactly the named rows")
{
    SuiteConfig cfg;
    cfg.fault = InjectedFault{Family::Q, 10};
    const auto g = run_group(Group::table1, cfg);
    CHECK_FALSE(g.pass());
    unsigned failed = 0;
    for (const auto& r : g.records)
        if (!r.status) {
            ++failed;
            CHECK(r.family == "Q");
            CHECK(r.n == 10);
            CHECK(r.rhs == "20x^3+81");
        }
    CHECK(failed == 3);
    CHECK(run_group(Group::table2, cfg).pass());
}

TEST_CASE("config validation")
{
    SuiteConfig cfg;
    cfg.n_max = 201;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg.n_max = 10;
    cfg.tol["2f1"] = -1.0;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg.tol["2f1"] = 1e-3;
    CHECK(cfg.tolerance("2f1") == 1e-3);
    CHECK(cfg.tolerance("3f2") == 1e-8);
    cfg.tol["nope"] = 1.0;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("tight tolerance turns floating checks into failures")
{
    SuiteConfig cfg;
    cfg.tol["wronskian"] = 1e-30;
    const auto g = run_group(Group::numeric, cfg);
    bool wronskian_failed = false;
    for (const auto& r : g.records)
        if (r.check == "numeric.wronskian" && !r.status) wronskian_failed = true;
    // long double rounding leaves a nonzero deviation somewhere on the grid
    CHECK(wronskian_failed);
}

TEST_CASE("zeros table")
{
    const auto rows = zeros_table(15, 12);
    for (const auto& r : rows) CHECK(r.pass());
    auto find = [&](Family f, unsigned n) {
        for (const auto& r : rows)
            if (r.family == f && r.n == n) return r;
        return ZeroRow{};
    };
    const auto q15 = find(Family::Q, 15);
    CHECK(q15.degree == 2);
    CHECK(q15.real_roots == 2);
    CHECK(q15.negative_roots == 2);
    CHECK(q15.simple);
    CHECK(find(Family::P, 0).skipped());
    const auto r12 = find(Family::R, 12);
    CHECK(r12.degree == 2);
    CHECK(r12.real_roots == 2);
    CHECK(zeros_table(15, 12, false).size() == rows.size());
}
