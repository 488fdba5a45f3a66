// Subprocess tests of the airyderiv executable.

#include "airyderiv/polytext.hpp"
#include "airyderiv/airy_pq.hpp"
#include "airyderiv/airy_rst.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

#ifndef AIRYDERIV_CLI
#error "AIRYDERIV_CLI must name the built executable"
#endif

using namespace airyderiv;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(AIRYDERIV_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST_CASE("tables: published rows and round trip")
{
    const Run t = run("tables");
    CHECK(t.code == 0);
    CHECK(t.out.find("20x^3+80") != std::string::npos);
    CHECK(t.out.find("11776x^4+27664x") != std::string::npos);
    CHECK(t.out.find("x^7+770x^4+8680x") != std::string::npos);

    const Run c = run("tables --format csv");
    REQUIRE(c.code == 0);
    const auto ls = lines(c.out);
    REQUIRE(ls.size() == 1 + 2 * 16 + 3 * 13);
    CHECK(ls[0] == "table,n,family,poly");
    CHECK(ls[1] == "1,0,P,1");
    CHECK(ls[2] == "1,0,Q,0");
    CHECK(ls[22] == "1,10,Q,20x^3+80");
    const auto pq = pq_recurrence(15);
    const auto rst = rst_recurrence(12);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        std::vector<std::string> f;
        std::istringstream in(ls[i]);
        for (std::string x; std::getline(in, x, ',');) f.push_back(x);
        REQUIRE(f.size() == 4);
        const unsigned n = std::stoul(f[1]);
        const Poly p = parse_poly(f[3]);
        const Poly& want = f[2] == "P"   ? pq[n].p
                           : f[2] == "Q" ? pq[n].q
                           : f[2] == "R" ? rst[n].r
                           : f[2] == "S" ? rst[n].s
                                         : rst[n].t;
        CHECK(p == want);
    }
    const Run big = run("tables --n-max 20 --format json");
    CHECK(nlohmann::json::parse(big.out).size() == 2 * 21 + 3 * 21);
}

TEST_CASE("verify: exit codes, schema, determinism")
{
    const Run v = run("verify --format json");
    CHECK(v.code == 0);
    const auto j = nlohmann::json::parse(v.out);
    CHECK(j.size() > 200);
    for (const auto& r : j) {
        CHECK(r.size() == 7);
        for (const char* k : {"check", "family", "n", "status", "lhs", "rhs", "rel_err"}) CHECK(r.contains(k));
        CHECK(r["status"] == "pass");
    }
    CHECK(run("verify --format json").out == v.out);
    CHECK(run("verify --format json --seed 3").out != v.out);

    const Run f = run("verify --inject-fault P:9");
    CHECK(f.code == 1);
    CHECK(f.out.find("FAIL table1.recurrence P n=9") != std::string::npos);
    CHECK(run("verify --inject-fault T:4").code == 1);

    const Run text = run("verify --n-max 10");
    CHECK(text.code == 0);
    CHECK(text.out.find("overall: PASS") != std::string::npos);
    CHECK(run("verify --tol 1e-40").code == 1);
    CHECK(run("verify --n-max 201").code == 2);
    CHECK(run("verify --tol 0").code == 2);
    CHECK(run("verify --tol nope=1").code == 2);
    CHECK(run("verify --inject-fault Z:3").code == 2);
    CHECK(run("verify --format xml").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("eval")
{
    auto value = [](const std::string& args) {
        const Run r = run("eval --format json " + args);
        REQUIRE(r.code == 0);
        return nlohmann::json::parse(r.out);
    };
    CHECK(value("--n 0 --x 0")["value"].get<double>() == doctest::Approx(0.3550280538878172).epsilon(1e-14));
    const auto ai1 = value("--n 0 --x 1")["value"].get<double>();
    const auto d2 = value("--n 2 --x 1");
    CHECK(d2["value"].get<double>() == doctest::Approx(ai1).epsilon(1e-14));
    CHECK(d2["P"] == "x");
    CHECK(d2["Q"] == "0");
    // 2 Ai(0) Ai'(0)
    CHECK(value("--n 1 --x 0 --target AiAi")["value"].get<double>() ==
          doctest::Approx(-0.18377629847393068).epsilon(1e-13));
    CHECK(value("--n 3 --x -2.5 --target BiBi").contains("T"));
    CHECK(run("eval --n 1 --x 8.5").code == 2);
    CHECK(run("eval --n 1 --x -9").code == 2);
    CHECK(run("eval --n 1 --x 0 --target Ci").code == 2);
    CHECK(run("eval --x 0").code == 2);
    const Run csv = run("eval --n 4 --x 0.5 --format csv");
    CHECK(lines(csv.out).at(0) == "target,n,x,value,P,Q");
}

TEST_CASE("zeros")
{
    const Run z = run("zeros --n-max 15 --format csv");
    CHECK(z.code == 0);
    const auto ls = lines(z.out);
    CHECK(ls[0] == "family,n,degree,real_roots,negative_roots,simple,skipped");
    auto has = [&](const std::string& l) { return std::find(ls.begin(), ls.end(), l) != ls.end(); };
    CHECK(has("Q,15,2,2,2,true,false"));
    CHECK(has("R,12,2,2,2,true,false"));
    CHECK(has("P,0,0,0,0,true,true"));
    CHECK(ls.size() == 1 + 6 * 16);
}

TEST_CASE("plotdata")
{
    const Run f = run("plotdata --curve F");
    REQUIRE(f.code == 0);
    const auto ls = lines(f.out);
    CHECK(ls[0] == "a,F");
    CHECK(ls.size() == 242);
    bool saw_sixth = false;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto comma = ls[i].find(',');
        const double a = std::stod(ls[i].substr(0, comma));
        if (std::fabs(a - 1.0 / 6) < 1e-9) {
            saw_sixth = true;
            CHECK(std::stod(ls[i].substr(comma + 1)) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    CHECK(saw_sixth);

    const Run t = run("plotdata --curve tau --format json");
    REQUIRE(t.code == 0);
    const auto j = nlohmann::json::parse(t.out);
    bool third_empty = false, zero_at_56 = false;
    for (const auto& p : j) {
        const double a = p["a"].get<double>();
        if (std::fabs(a - 1.0 / 3) < 1e-9) third_empty = p["value"].is_null();
        if (std::fabs(a - 5.0 / 6) < 1e-9) zero_at_56 = std::fabs(p["value"].get<double>()) < 1e-12;
    }
    CHECK(third_empty);
    CHECK(zero_at_56);
    CHECK(run("plotdata --steps 1").code == 2);
    CHECK(run("plotdata --curve sigma").code == 2);
    CHECK(run("plotdata --a-min 2 --a-max 1").code == 2);
}
