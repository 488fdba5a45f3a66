// airyderiv: tables, verify, eval, zeros, plotdata.
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include "airyderiv/airy_numeric.hpp"
#include "airyderiv/airy_rst.hpp"
#include "airyderiv/hyper.hpp"
#include "airyderiv/polytext.hpp"
#include "airyderiv/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace airyderiv;
using json = nlohmann::ordered_json;

namespace {

enum class Format { text, json, csv };

struct Common {
    Format format = Format::text;
    std::optional<unsigned> n_max;
    std::uint64_t seed = 20240611;
    std::vector<std::string> tol;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, Common& c, Format default_format = Format::text)
{
    c.format = default_format;
    const std::map<std::string, Format> fm{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    sub->add_option("--format", c.format, "text, json or csv")->transform(CLI::CheckedTransformer(fm, CLI::ignore_case));
    sub->add_option("--n-max", c.n_max, "largest index")->check(CLI::Range(0u, kMaxNMax));
    sub->add_option("--seed", c.seed, "seed for random test points");
    sub->add_option("--tol", c.tol, "tolerance override: T for every key, or key=T (repeatable)");
}

SuiteConfig suite_config(const Common& c, unsigned default_n)
{
    SuiteConfig cfg;
    cfg.n_max = c.n_max.value_or(default_n);
    cfg.seed = c.seed;
    for (const std::string& t : c.tol) {
        const auto eq = t.find('=');
        double v = 0.0;
        try {
            v = std::stod(eq == std::string::npos ? t : t.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("bad --tol value: " + t);
        }
        if (eq == std::string::npos) {
            for (const auto& [k, _] : default_tolerances()) cfg.tol[k] = v;
        } else {
            cfg.tol[t.substr(0, eq)] = v;
        }
    }
    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------

int cmd_tables(const Common& c)
{
    const unsigned n1 = c.n_max.value_or(15), n2 = c.n_max.value_or(12);
    const auto pq = pq_recurrence(n1);
    const auto rst = rst_recurrence(n2);
    struct Row {
        int table;
        unsigned n;
        const char* family;
        std::string poly;
    };
    std::vector<Row> rows;
    for (unsigned n = 0; n <= n1; ++n) {
        rows.push_back({1, n, "P", format_poly(pq[n].p)});
        rows.push_back({1, n, "Q", format_poly(pq[n].q)});
    }
    for (unsigned n = 0; n <= n2; ++n) {
        rows.push_back({2, n, "R", format_poly(rst[n].r)});
        rows.push_back({2, n, "S", format_poly(rst[n].s)});
        rows.push_back({2, n, "T", format_poly(rst[n].t)});
    }
    switch (c.format) {
        case Format::json: {
            json out = json::array();
            for (const auto& r : rows) out.push_back({{"table", r.table}, {"n", r.n}, {"family", r.family}, {"poly", r.poly}});
            std::cout << out.dump(1) << '\n';
            break;
        }
        case Format::csv:
            std::cout << "table,n,family,poly\n";
            for (const auto& r : rows) std::cout << r.table << ',' << r.n << ',' << r.family << ',' << r.poly << '\n';
            break;
        case Format::text:
            std::cout << "Table 1: P_n, Q_n\n";
            for (unsigned n = 0; n <= n1; ++n)
                std::printf("%3u  %-40s %s\n", n, rows[2 * n].poly.c_str(), rows[2 * n + 1].poly.c_str());
            std::cout << "\nTable 2: R_n, S_n, T_n\n";
            for (unsigned n = 0; n <= n2; ++n) {
                const std::size_t b = 2 * (n1 + 1) + 3 * n;
                std::printf("%3u  %-32s %-32s %s\n", n, rows[b].poly.c_str(), rows[b + 1].poly.c_str(),
                            rows[b + 2].poly.c_str());
            }
            break;
    }
    return 0;
}

int cmd_verify(const Common& c, const std::string& fault)
{
    SuiteConfig cfg = suite_config(c, 40);
    if (!fault.empty()) {
        const auto colon = fault.find(':');
        const std::string letters = "PQZRST";
        if (colon != 1 || letters.find(fault[0]) == std::string::npos || fault[0] == 'Z')
            throw UsageError("--inject-fault expects F:n with F in P, Q, R, S, T");
        try {
            cfg.fault = InjectedFault{static_cast<Family>(letters.find(fault[0])),
                                      static_cast<unsigned>(std::stoul(fault.substr(2)))};
        } catch (const std::exception&) {
            throw UsageError("bad --inject-fault index");
        }
    }
    const SuiteResult res = run_suite(cfg);

    switch (c.format) {
        case Format::json: {
            json out = json::array();
            for (const auto& g : res.groups)
                for (const auto& r : g.records)
                    out.push_back({{"check", r.check},
                                   {"family", r.family},
                                   {"n", r.n},
                                   {"status", r.status ? "pass" : "fail"},
                                   {"lhs", r.lhs},
                                   {"rhs", r.rhs},
                                   {"rel_err", r.rel_err ? json(*r.rel_err) : json(nullptr)}});
            std::cout << out.dump(1) << '\n';
            break;
        }
        case Format::csv:
            std::cout << "check,family,n,status,lhs,rhs,rel_err\n";
            for (const auto& g : res.groups)
                for (const auto& r : g.records)
                    std::cout << csv_field(r.check) << ',' << csv_field(r.family) << ',' << r.n << ','
                              << (r.status ? "pass" : "fail") << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs)
                              << ',' << (r.rel_err ? fmt17(*r.rel_err) : "") << '\n';
            break;
        case Format::text:
            for (const auto& g : res.groups) {
                std::printf("%s  %-13s %5zu checks  %.2f s\n", g.pass() ? "PASS" : "FAIL",
                            std::string(name(g.group)).c_str(), g.records.size(), g.elapsed);
                for (const auto& r : g.records) {
                    if (r.status) continue;
                    std::printf("  FAIL %s %s n=%ld: got %s, expected %s%s%s\n", r.check.c_str(), r.family.c_str(),
                                r.n, r.lhs.c_str(), r.rhs.c_str(), r.detail.empty() ? "" : " ", r.detail.c_str());
                }
            }
            std::printf("overall: %s (%zu checks, n_max %u, seed %llu)\n", res.pass() ? "PASS" : "FAIL", res.size(),
                        cfg.n_max, static_cast<unsigned long long>(cfg.seed));
            break;
    }
    return res.pass() ? 0 : 1;
}

int cmd_eval(const Common& c, unsigned n, double x, const std::string& target)
{
    if (!(std::fabs(x) <= kAiryDomain)) throw UsageError("|x| must not exceed 8");
    const unsigned cap = c.n_max.value_or(kMaxNMax);
    if (n > cap) throw UsageError("n exceeds n_max");
    const bool single = target == "Ai" || target == "Bi";
    double value = 0.0;
    std::vector<std::pair<std::string, std::string>> polys;
    if (single) {
        const PQPair pq = pq_recurrence(n)[n];
        value = ai_derivative(n, x, pq, target == "Ai" ? AiryFn::Ai : AiryFn::Bi);
        polys = {{"P", format_poly(pq.p)}, {"Q", format_poly(pq.q)}};
    } else {
        const RSTTriple t = rst_recurrence(n)[n];
        const ProductKind k = target == "AiAi" ? ProductKind::AiAi : target == "AiBi" ? ProductKind::AiBi : ProductKind::BiBi;
        value = product_derivative(k, n, x, t);
        polys = {{"R", format_poly(t.r)}, {"S", format_poly(t.s)}, {"T", format_poly(t.t)}};
    }
    switch (c.format) {
        case Format::json: {
            json out{{"target", target}, {"n", n}, {"x", x}, {"value", value}};
            for (const auto& [k, v] : polys) out[k] = v;
            std::cout << out.dump(1) << '\n';
            break;
        }
        case Format::csv: {
            std::cout << "target,n,x,value";
            for (const auto& [k, _] : polys) std::cout << ',' << k;
            std::cout << '\n' << target << ',' << n << ',' << fmt17(x) << ',' << fmt17(value);
            for (const auto& [_, v] : polys) std::cout << ',' << v;
            std::cout << '\n';
            break;
        }
        case Format::text:
            std::printf("d^%u/dx^%u %s at x = %s: %.16g\n", n, n, target.c_str(), fmt17(x).c_str(), value);
            for (const auto& [k, v] : polys) std::printf("  %s_%u = %s\n", k.c_str(), n, v.c_str());
            break;
    }
    return 0;
}

int cmd_zeros(const Common& c)
{
    const unsigned N = c.n_max.value_or(40);
    const auto rows = zeros_table(N, N);
    bool ok = true;
    switch (c.format) {
        case Format::json: {
            json out = json::array();
            for (const auto& r : rows) {
                ok = ok && r.pass();
                out.push_back({{"family", std::string(1, family_letter(r.family))},
                               {"n", r.n},
                               {"degree", r.degree},
                               {"real_roots", r.real_roots},
                               {"negative_roots", r.negative_roots},
                               {"simple", r.simple},
                               {"skipped", r.skipped()}});
            }
            std::cout << out.dump(1) << '\n';
            break;
        }
        case Format::csv:
            std::cout << "family,n,degree,real_roots,negative_roots,simple,skipped\n";
            for (const auto& r : rows) {
                ok = ok && r.pass();
                std::cout << family_letter(r.family) << ',' << r.n << ',' << r.degree << ',' << r.real_roots << ','
                          << r.negative_roots << ',' << (r.simple ? "true" : "false") << ','
                          << (r.skipped() ? "true" : "false") << '\n';
            }
            break;
        case Format::text:
            std::printf("family    n  degree  real  negative  simple\n");
            for (const auto& r : rows) {
                ok = ok && r.pass();
                if (r.skipped())
                    std::printf("%-6c %4u  %6d  (skipped)\n", family_letter(r.family), r.n, r.degree);
                else
                    std::printf("%-6c %4u  %6d  %4u  %8u  %6s\n", family_letter(r.family), r.n, r.degree, r.real_roots,
                                r.negative_roots, r.simple ? "yes" : "no");
            }
            break;
    }
    return ok ? 0 : 1;
}

int cmd_plotdata(const Common& c, const std::string& curve, double a_min, double a_max, unsigned steps)
{
    if (steps < 2) throw UsageError("--steps must be at least 2");
    if (!(a_min < a_max)) throw UsageError("--a-min must be below --a-max");
    std::vector<std::pair<double, std::optional<double>>> pts;
    for (unsigned i = 0; i < steps; ++i) {
        const double a = a_min + (a_max - a_min) * i / (steps - 1);
        std::optional<double> v;
        try {
            const double y = curve == "F" ? bold_f(a) : f0_and_tau(a).tau;
            if (std::isfinite(y)) v = y;
        } catch (const PoleError&) {
        } catch (const ConvergenceError&) {
        }
        pts.emplace_back(a, v);
    }
    switch (c.format) {
        case Format::json: {
            json out = json::array();
            for (const auto& [a, v] : pts) out.push_back({{"a", a}, {"value", v ? json(*v) : json(nullptr)}});
            std::cout << out.dump(1) << '\n';
            break;
        }
        case Format::csv:
        case Format::text:
            std::cout << "a," << curve << '\n';
            for (const auto& [a, v] : pts) std::cout << fmt17(a) << ',' << (v ? fmt17(*v) : "") << '\n';
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Airy derivative polynomials: tables, verification and evaluation"};
    app.require_subcommand(1);

    Common tables_c, verify_c, eval_c, zeros_c, plot_c;
    auto* tables = app.add_subcommand("tables", "print the P/Q and R/S/T tables");
    add_common(tables, tables_c);

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify, verify_c);
    std::string fault;
    verify->add_option("--inject-fault", fault, "corrupt a published table row, e.g. Q:10")->group("");

    auto* eval = app.add_subcommand("eval", "n-th derivative of Ai, Bi or a product at x");
    add_common(eval, eval_c);
    unsigned n = 0;
    double x = 0.0;
    std::string target = "Ai";
    eval->add_option("--n", n, "derivative order")->required();
    eval->add_option("--x", x, "evaluation point, |x| <= 8")->required();
    eval->add_option("--target", target, "Ai, Bi, AiAi, AiBi or BiBi")
        ->check(CLI::IsMember({"Ai", "Bi", "AiAi", "AiBi", "BiBi"}));

    auto* zeros = app.add_subcommand("zeros", "Sturm root counts of the reduced polynomials");
    add_common(zeros, zeros_c);

    auto* plot = app.add_subcommand("plotdata", "sample tau(a) or F(a) as CSV");
    add_common(plot, plot_c, Format::csv);
    std::string curve = "F";
    double a_min = -1.5, a_max = 2.5;
    unsigned steps = 241;
    plot->add_option("--curve", curve, "tau or F")->check(CLI::IsMember({"tau", "F"}));
    plot->add_option("--a-min", a_min);
    plot->add_option("--a-max", a_max);
    plot->add_option("--steps", steps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*tables) return cmd_tables(tables_c);
        if (*verify) return cmd_verify(verify_c, fault);
        if (*eval) return cmd_eval(eval_c, n, x, target);
        if (*zeros) return cmd_zeros(zeros_c);
        if (*plot) return cmd_plotdata(plot_c, curve, a_min, a_max, steps);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
