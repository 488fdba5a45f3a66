#include "airyderiv/suite.hpp"

#include "airyderiv/airy_numeric.hpp"
#include "airyderiv/airy_rst.hpp"
#include "airyderiv/certs.hpp"
#include "airyderiv/hyper.hpp"
#include "airyderiv/polytext.hpp"
#include "airyderiv/tables.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>

namespace airyderiv {

namespace {

using Task = std::function<std::vector<CheckRecord>()>;

std::string fmt_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fam(Family f) { return std::string(1, family_letter(f)); }

CheckRecord poly_record(std::string check, std::string family, long n, const Poly& got, const Poly& want)
{
    return {std::move(check), std::move(family), n, got == want, format_poly(got), format_poly(want), {}, {}};
}

CheckRecord rational_record(std::string check, std::string family, long n, const Rational& got, const Rational& want)
{
    return {std::move(check), std::move(family), n, got == want, to_string(got), to_string(want), {}, {}};
}

CheckRecord bool_record(std::string check, std::string family, long n, bool ok, std::string detail = {})
{
    return {std::move(check), std::move(family), n, ok, ok ? "true" : "false", "true", {}, std::move(detail)};
}

CheckRecord float_record(std::string check, std::string family, long n, double lhs, double rhs, double err, double tol,
                         std::string detail = {})
{
    return {std::move(check), std::move(family), n, err <= tol, fmt_double(lhs), fmt_double(rhs), err,
            std::move(detail)};
}

// deterministic per-task stream
std::mt19937_64 task_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
{
    std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    return std::mt19937_64(s);
}

std::vector<CheckRecord> run_tasks(const std::vector<Task>& tasks, bool parallel)
{
    std::vector<std::vector<CheckRecord>> out(tasks.size());
    const auto count = static_cast<long>(tasks.size());
    auto one = [&](long i) {
        try {
            out[i] = tasks[i]();
        } catch (const std::exception& e) {
            out[i] = {CheckRecord{"task", "", i, false, "", "", {}, e.what()}};
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i) one(i);
    } else {
        for (long i = 0; i < count; ++i) one(i);
    }
    std::vector<CheckRecord> flat;
    for (auto& v : out)
        for (auto& r : v) flat.push_back(std::move(r));
    return flat;
}

// ---------------------------------------------------------------------------
// independent numeric references

double rel_floor(double a, double b, double floor)
{
    const double s = std::max({std::fabs(a), std::fabs(b), floor});
    return s == 0.0 ? 0.0 : std::fabs(a - b) / s;
}

// y'' = x y from its Maclaurin coefficients, differentiated termwise
double maclaurin_ref(unsigned n, double x, AiryFn fn)
{
    const long double ai0 = 1.0L / (std::pow(3.0L, 2.0L / 3) * std::tgamma(2.0L / 3));
    const long double aip0 = -1.0L / (std::pow(3.0L, 1.0L / 3) * std::tgamma(1.0L / 3));
    const long double s3 = std::sqrt(3.0L);
    const long double y0 = fn == AiryFn::Ai ? ai0 : s3 * ai0;
    const long double y1 = fn == AiryFn::Ai ? aip0 : -s3 * aip0;
    constexpr unsigned kTerms = 220;
    std::vector<long double> a(kTerms + 3, 0.0L);
    a[0] = y0;
    a[1] = y1;
    for (unsigned j = 0; j + 3 < a.size(); ++j) a[j + 3] = a[j] / ((j + 3.0L) * (j + 2.0L));
    long double sum = 0.0L;
    for (unsigned j = n; j < a.size(); ++j) {
        long double c = a[j];
        for (unsigned i = 0; i < n; ++i) c *= static_cast<long double>(j - i);
        sum += c * std::pow(static_cast<long double>(x), static_cast<long double>(j - n));
    }
    return static_cast<double>(sum);
}

double richardson(const std::function<double(double)>& h, double x, double h0 = 1e-4)
{
    auto d = [&](double s) { return (h(x + s) - h(x - s)) / (2 * s); };
    const double d1 = d(h0), d2 = d(h0 / 2), d3 = d(h0 / 4);
    const double r1 = (4 * d2 - d1) / 3, r2 = (4 * d3 - d2) / 3;
    return (16 * r2 - r1) / 15;
}

// ---------------------------------------------------------------------------

Poly golden(Family f, unsigned n, const SuiteConfig& cfg)
{
    std::string_view s;
    switch (f) {
        case Family::P: s = tables::kP[n]; break;
        case Family::Q: s = tables::kQ[n]; break;
        case Family::R: s = tables::kR[n]; break;
        case Family::S: s = tables::kS[n]; break;
        case Family::T: s = tables::kT[n]; break;
        case Family::Z: throw std::logic_error("golden: no published Z table");
    }
    Poly p = parse_poly(s);
    if (cfg.fault && cfg.fault->family == f && cfg.fault->n == n) p += Poly::constant(1);
    return p;
}

std::vector<Task> table1_tasks(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    auto pq = std::make_shared<std::vector<PQPair>>(pq_recurrence(tables::kTable1Rows));
    for (unsigned n = 0; n < tables::kTable1Rows; ++n) {
        tasks.push_back([=, &cfg] {
            const Poly gp = golden(Family::P, n, cfg), gq = golden(Family::Q, n, cfg);
            const auto [mp, mq] = pq_maurone_phares(n);
            const Poly cq = n == 0 ? Poly{} : q_closed(n - 1);
            std::vector<CheckRecord> r{
                poly_record("table1.recurrence", "P", n, (*pq)[n].p, gp),
                poly_record("table1.recurrence", "Q", n, (*pq)[n].q, gq),
                poly_record("table1.closed", "P", n, p_closed(n), gp),
                poly_record("table1.closed", "Q", n, cq, gq),
                poly_record("table1.maurone_phares", "P", n, mp, gp),
                poly_record("table1.maurone_phares", "Q", n, mq, gq),
            };
            for (const Poly* p : {&(*pq)[n].p, &(*pq)[n].q})
                r.push_back(poly_record("table1.roundtrip", p == &(*pq)[n].p ? "P" : "Q", n,
                                        parse_poly(format_poly(*p)), *p));
            return r;
        });
    }
    return tasks;
}

std::vector<Task> table2_tasks(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    auto pq = std::make_shared<std::vector<PQPair>>(pq_recurrence(tables::kTable2Rows));
    auto rst = std::make_shared<std::vector<RSTTriple>>(rst_recurrence(tables::kTable2Rows));
    for (unsigned n = 0; n < tables::kTable2Rows; ++n) {
        tasks.push_back([=, &cfg] {
            const Poly gr = golden(Family::R, n, cfg), gs = golden(Family::S, n, cfg), gt = golden(Family::T, n, cfg);
            const RSTTriple& e = (*rst)[n];
            const RSTTriple c = rst_convolution(n, *pq);
            return std::vector<CheckRecord>{
                poly_record("table2.recurrence", "R", n, e.r, gr),
                poly_record("table2.recurrence", "S", n, e.s, gs),
                poly_record("table2.recurrence", "T", n, e.t, gt),
                poly_record("table2.closed", "R", n, r_closed(n), gr),
                poly_record("table2.closed", "S", n, s_closed(n), gs),
                poly_record("table2.closed", "T", n, t_closed(n), gt),
                poly_record("table2.convolution", "R", n, c.r, gr),
                poly_record("table2.convolution", "S", n, c.s, gs),
                poly_record("table2.convolution", "T", n, c.t, gt),
                poly_record("table2.roundtrip", "R", n, parse_poly(format_poly(e.r)), e.r),
                poly_record("table2.roundtrip", "S", n, parse_poly(format_poly(e.s)), e.s),
                poly_record("table2.roundtrip", "T", n, parse_poly(format_poly(e.t)), e.t),
            };
        });
    }
    return tasks;
}

std::vector<Task> equivalence_tasks(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    const unsigned N = cfg.n_max;
    for (unsigned m = 0; m <= N; ++m)
        tasks.push_back([=] {
            const auto row = gtilde_row(m, N);
            for (unsigned n = 0; n <= N; ++n)
                if (row[n] != gtilde_via_2f1(m, n))
                    return std::vector{rational_record("gtilde.2f1", "g", m, row[n], gtilde_via_2f1(m, n))};
            return std::vector{rational_record("gtilde.2f1", "g", m, row[N], gtilde_via_2f1(m, N))};
        });
    const unsigned H = std::min(N, 20u);
    for (unsigned m = 0; m <= H; ++m)
        tasks.push_back([=] {
            for (unsigned n = 0; n <= H; ++n) {
                const Rational a = h_coeff(m, n), b = h_via_3f2(m, n);
                if (a != b || n == H) return std::vector{rational_record("h.3f2", "h", m, a, b)};
            }
            return std::vector<CheckRecord>{};
        });

    auto pq = std::make_shared<std::vector<PQPair>>(pq_recurrence(N + 21));
    auto rst = std::make_shared<std::vector<RSTTriple>>(rst_recurrence(N));
    for (unsigned n = 0; n <= N; ++n)
        tasks.push_back([=] {
            const PQPair& e = (*pq)[n];
            const auto [mp, mq] = pq_maurone_phares(n);
            const RSTTriple c = rst_convolution(n, *pq);
            const RSTTriple& t = (*rst)[n];
            return std::vector<CheckRecord>{
                poly_record("pq.closed", "P", n, p_closed(n), e.p),
                poly_record("pq.closed", "Q", n + 1, q_closed(n), (*pq)[n + 1].q),
                poly_record("pq.maurone_phares", "P", n, mp, e.p),
                poly_record("pq.maurone_phares", "Q", n, mq, e.q),
                poly_record("rst.closed", "R", n, r_closed(n), t.r),
                poly_record("rst.closed", "S", n, s_closed(n), t.s),
                poly_record("rst.closed", "T", n, t_closed(n), t.t),
                poly_record("rst.convolution", "R", n, c.r, t.r),
                poly_record("rst.convolution", "S", n, c.s, t.s),
                poly_record("rst.convolution", "T", n, c.t, t.t),
            };
        });
    tasks.push_back([=] {
        std::vector<CheckRecord> r;
        for (unsigned n = 0; n <= N + 20; ++n)
            for (const auto& [f, p] : {std::pair{"P", &(*pq)[n].p}, {"Q", &(*pq)[n].q}})
                r.push_back(bool_record("pq.positivity", f, n, p->has_integer_coeffs() && p->has_nonnegative_coeffs()));
        for (unsigned n = 0; n <= N; ++n)
            for (const auto& [f, p] : {std::pair{"R", &(*rst)[n].r}, {"S", &(*rst)[n].s}, {"T", &(*rst)[n].t}})
                r.push_back(bool_record("rst.positivity", f, n, p->has_integer_coeffs() && p->has_nonnegative_coeffs()));
        return r;
    });
    return tasks;
}

std::vector<Task> recurrence_tasks(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    const unsigned N = cfg.n_max;
    const unsigned top = N + 20;
    auto pq = std::make_shared<std::vector<PQPair>>(pq_recurrence(top));
    auto z = std::make_shared<std::vector<Poly>>(z_recurrence(top));
    auto rst = std::make_shared<std::vector<RSTTriple>>(rst_recurrence(N));
    tasks.push_back([=] {
        std::vector<CheckRecord> r;
        for (unsigned n = 0; n + 3 <= top; ++n) {
            const Rational c = n + 1;
            auto third = [&](const Poly& y3, const Poly& y1, const Poly& y0) { return y1.shifted_up(1) + c * y0 == y3; };
            r.push_back(bool_record("recurrence.pqz", "P", n, third((*pq)[n + 3].p, (*pq)[n + 1].p, (*pq)[n].p)));
            r.push_back(bool_record("recurrence.pqz", "Q", n, third((*pq)[n + 3].q, (*pq)[n + 1].q, (*pq)[n].q)));
            r.push_back(bool_record("recurrence.pqz", "Z", n, third((*z)[n + 3], (*z)[n + 1], (*z)[n])));
        }
        return r;
    });
    tasks.push_back([=] {
        std::vector<CheckRecord> r;
        for (unsigned n = 0; n + 3 <= N; ++n) {
            const Rational c = 4 * n + 2;
            auto third = [&](const Poly& y3, const Poly& y1, const Poly& y0) {
                return Rational(4) * y1.shifted_up(1) + c * y0 == y3;
            };
            const auto& e = *rst;
            r.push_back(bool_record("recurrence.rst", "R", n, third(e[n + 3].r, e[n + 1].r, e[n].r)));
            r.push_back(bool_record("recurrence.rst", "S", n, third(e[n + 3].s, e[n + 1].s, e[n].s)));
            r.push_back(bool_record("recurrence.rst", "T", n, third(e[n + 3].t, e[n + 1].t, e[n].t)));
        }
        return r;
    });
    tasks.push_back([=] {
        std::vector<CheckRecord> r;
        r.push_back(bool_record("z.lambda", "Z", top, z_lambda_check(top)));
        const unsigned K = 12;
        const auto s = laplace_seqs(K);
        for (unsigned k = 0; k + 2 <= K; ++k) {
            auto second = [&](const std::vector<Poly>& mu, const std::vector<Poly>& nu) {
                return mu[k + 2] == nu[k] * Rational(2 * k + 2) &&
                       nu[k + 2] == mu[k + 1] * Rational(2 * k + 3) + mu[k].shifted_up(1) * Rational(2 * k + 2);
            };
            r.push_back(bool_record("laplace.second_order", "mu,nu", k, second(s.mu, s.nu)));
            r.push_back(bool_record("laplace.second_order", "mu~,nu~", k, second(s.mu_t, s.nu_t)));
        }
        r.push_back(bool_record("laplace.fourth_order", "mu,nu,mu~,nu~", K, laplace_fourth_order_check(K)));
        return r;
    });
    for (unsigned n = 0; n <= std::min(N, 12u); ++n)
        tasks.push_back([=] {
            const auto [pe, po, qe, qo] = pq_parity_reconstruct(n);
            return std::vector<CheckRecord>{
                poly_record("laplace.parity", "P_even", n, pe, (*pq)[2 * n].p),
                poly_record("laplace.parity", "P_odd", n, po, (*pq)[2 * n + 1].p),
                poly_record("laplace.parity", "Q_even", n, qe, (*pq)[2 * n].q),
                poly_record("laplace.parity", "Q_odd", n, qo, (*pq)[2 * n + 1].q),
            };
        });
    return tasks;
}

std::vector<Task> expansion_tasks(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    const unsigned N = cfg.n_max;
    auto pq = std::make_shared<std::vector<PQPair>>(pq_recurrence(2 * N + 1));
    auto z = std::make_shared<std::vector<Poly>>(z_recurrence(2 * N + 3));
    auto rst = std::make_shared<std::vector<RSTTriple>>(rst_recurrence(N));
    for (unsigned n = 0; n <= N; ++n)
        tasks.push_back([=] {
            const auto s = pq_small_x_leading(n);
            const auto l = pq_large_x_terms(n);
            const auto& t = (*pq);
            std::vector<CheckRecord> r{
                bool_record("expansion.small_x", "P", n, terms_match(s.p, t[n].p)),
                bool_record("expansion.small_x", "Q", n, terms_match(s.q, t[n].q)),
                bool_record("expansion.large_x", "P_even", n, terms_match(l.p_even, t[2 * n].p)),
                bool_record("expansion.large_x", "P_odd", n, terms_match(l.p_odd, t[2 * n + 1].p)),
                bool_record("expansion.large_x", "Q_even", n, terms_match(l.q_even, t[2 * n].q)),
                bool_record("expansion.large_x", "Q_odd", n, terms_match(l.q_odd, t[2 * n + 1].q)),
                bool_record("expansion.large_x", "Z_even", n, terms_match(z_large_x_terms(n, false), (*z)[2 * n + 2])),
                bool_record("expansion.large_x", "Z_odd", n, terms_match(z_large_x_terms(n, true), (*z)[2 * n + 3])),
            };
            if (n >= 2) {
                const Term zt = z_small_x_leading(n);
                r.push_back(rational_record("expansion.small_x", "Z", n, (*z)[n].coeff(zt.power), zt.coeff));
            }
            bool ok = true;
            for (const auto& ft : rst_small_x_leading(n)) {
                const RSTTriple& e = (*rst)[n];
                const Poly& p = ft.family == Family::R ? e.r : ft.family == Family::S ? e.s : e.t;
                ok = ok && p.coeff(ft.power) == ft.coeff;
            }
            r.push_back(bool_record("expansion.small_x", "RST", n, ok));
            return r;
        });
    return tasks;
}

template <class Id, class Fn>
Task random_points(const char* check, Id id, unsigned group, unsigned count, std::uint64_t seed, double tol, Fn draw)
{
    return [=] {
        auto rng = task_rng(seed, group, static_cast<std::uint64_t>(id));
        std::vector<CheckRecord> r;
        unsigned guard = 0;
        while (r.size() < count) {
            if (++guard > 100 * count) throw std::runtime_error("too many pole-proximate draws");
            try {
                const PointCheck c = draw(rng);
                char det[64];
                std::snprintf(det, sizeof det, "a=%.17g b=%.17g", c.a, c.b);
                r.push_back(float_record(check, std::string(name(id)), long(r.size()), c.lhs, c.rhs, c.rel_err, tol,
                                         det));
            } catch (const PoleError&) {
            }
        }
        return r;
    };
}

CheckRecord exact_record(const char* check, std::string_view id, long n, const ExactCheck& e)
{
    return rational_record(check, std::string(id), n, e.lhs, e.rhs);
}

std::vector<Task> gauss_tasks(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    const double tol = cfg.tolerance("2f1");
    for (auto id : kAll2F1) {
        tasks.push_back([=] {
            std::vector<CheckRecord> r;
            for (unsigned n = 0; n <= 20; ++n) r.push_back(exact_record("2f1.exact", name(id), n, verify_2f1_exact(id, n)));
            return r;
        });
        tasks.push_back(random_points("2f1.value", id, 6, 50, cfg.seed, tol, [id](std::mt19937_64& g) {
            return verify_2f1_value(id, std::uniform_real_distribution<double>(-3.0, 0.25)(g));
        }));
    }
    return tasks;
}

std::vector<Task> values_3f2_tasks(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    const double tol = cfg.tolerance("3f2");
    for (auto id : kAll3F2) {
        tasks.push_back([=] {
            std::vector<CheckRecord> r;
            for (unsigned n = 0; n <= 12; ++n) r.push_back(exact_record("3f2.exact", name(id), n, verify_3f2_exact(id, n)));
            return r;
        });
        tasks.push_back(random_points("3f2.value", id, 7, 50, cfg.seed, tol, [id](std::mt19937_64& g) {
            return verify_3f2_value(id, std::uniform_real_distribution<double>(-1.5, 2.5)(g));
        }));
    }
    for (auto id : kAllTwoParam) {
        tasks.push_back([=] {
            std::vector<CheckRecord> r;
            for (unsigned n = 0; n <= 12; ++n)
                for (unsigned j = 0; j <= 2; ++j) {
                    auto rec = exact_record("3f2.two_param_exact", name(id), n, verify_3f2_two_param_exact(id, n, j));
                    rec.detail = "j=" + std::to_string(j);
                    r.push_back(std::move(rec));
                }
            return r;
        });
        tasks.push_back(random_points("3f2.two_param_value", id, 8, 50, cfg.seed, tol, [id](std::mt19937_64& g) {
            const double a = std::uniform_real_distribution<double>(-0.9, 0.9)(g);
            const double b = std::uniform_real_distribution<double>(0.1, 2.0)(g);
            return verify_3f2_two_param(id, a, b);
        }));
    }
    const double ctol = cfg.tolerance("const");
    tasks.push_back([=] {
        auto rng = task_rng(cfg.seed, 9, 0);
        std::uniform_real_distribution<double> u(-1.2, 1.2);
        std::vector<CheckRecord> r;
        for (long i = 0; i < 20;) {
            const double a = u(rng);
            try {
                const double c = tau_constant_ratio(a);
                auto rec = float_record("3f2.constant", "tau", i, c, -2.0, std::fabs(c + 2.0), ctol,
                                        "a=" + fmt_double(a));
                const F0Tau ft = f0_and_tau(a);
                const double tt = -2 * tau_tilde(a);
                r.push_back(std::move(rec));
                r.push_back(float_record("3f2.tau_tilde", "tau", i, ft.tau, tt, relative_error(ft.tau, tt), ctol,
                                         "a=" + fmt_double(a)));
                ++i;
            } catch (const PoleError&) {
            }
        }
        return r;
    });
    return tasks;
}

std::vector<Task> certificate_tasks(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    const unsigned N = cfg.n_max;
    for (unsigned n = 0; n <= std::min(N, 30u); ++n)
        tasks.push_back([=] { return std::vector{bool_record("cert.telescoping", "z''", n, telescoping_check(n))}; });
    for (unsigned n = 0; n <= std::min(N, 20u); ++n)
        tasks.push_back([=] {
            return std::vector{bool_record("cert.telescoping_shifted", "z~", n, telescoping_check(n, Seq::z_tilde)),
                               bool_record("cert.telescoping_shifted", "z", n, n == 0 || telescoping_check(n, Seq::z)),
                               bool_record("cert.t_reduction", "d=0", n, t_reduction_check(n, 0)),
                               bool_record("cert.t_reduction", "d=1", n, t_reduction_check(n, 1))};
        });
    for (auto [s, label] : {std::pair{Seq::z, "z"}, {Seq::z_tilde, "z~"}, {Seq::z_dbltilde, "z''"}})
        for (unsigned n = 0; n <= std::min(N, 25u); ++n)
            tasks.push_back([=] {
                const auto [c1, c0] = cert_operator(n - seq_shift(s));
                const Rational ann = c1 * sequence_closed(s, n + 1) + c0 * sequence_closed(s, n);
                return std::vector{rational_record("cert.sum", label, n, sequence_sum(s, n), sequence_closed(s, n)),
                                   rational_record("cert.operator", label, n, ann, Rational(0))};
            });
    return tasks;
}

std::vector<Task> numeric_tasks(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    const double mtol = cfg.tolerance("maclaurin");
    const double rtol = cfg.tolerance("richardson");
    const double wtol = cfg.tolerance("wronskian");
    const double gtol = cfg.tolerance("genfun");
    auto pq = std::make_shared<std::vector<PQPair>>(pq_recurrence(10));
    auto rst = std::make_shared<std::vector<RSTTriple>>(rst_recurrence(6));
    for (unsigned n = 0; n <= 10; ++n)
        tasks.push_back([=] {
            std::vector<CheckRecord> r;
            for (int i = 0; i <= 8; ++i) {
                const double x = -2.0 + 0.5 * i;
                for (auto [fn, label] : {std::pair{AiryFn::Ai, "Ai"}, {AiryFn::Bi, "Bi"}}) {
                    const double got = ai_derivative(n, x, (*pq)[n], fn), want = maclaurin_ref(n, x, fn);
                    r.push_back(float_record("numeric.maclaurin", label, n, got, want, rel_floor(got, want, 1e-12),
                                             mtol, "x=" + fmt_double(x)));
                }
            }
            return r;
        });
    for (unsigned n = 1; n <= 6; ++n)
        tasks.push_back([=] {
            std::vector<CheckRecord> r;
            for (auto [k, label] : {std::pair{ProductKind::AiAi, "AiAi"}, {ProductKind::AiBi, "AiBi"},
                                    {ProductKind::BiBi, "BiBi"}})
                for (int i = 0; i <= 8; ++i) {
                    const double x = -2.0 + 0.5 * i;
                    const double got = product_derivative(k, n, x, (*rst)[n]);
                    const double fd = richardson(
                        [&](double s) { return product_derivative(k, n - 1, s, (*rst)[n - 1]); }, x);
                    r.push_back(float_record("numeric.richardson", label, n, got, fd, rel_floor(got, fd, 1e-3), rtol,
                                             "x=" + fmt_double(x)));
                }
            return r;
        });
    tasks.push_back([=] {
        std::vector<CheckRecord> r;
        for (int i = 0; i <= 120; ++i) {
            const double x = -6.0 + 0.1 * i;
            const AiryQuad q = airy_atoms(x);
            const long double w = q.f * q.gp - q.g * q.fp;
            const double dev = static_cast<double>(std::fabs(w - 1.0L));
            r.push_back(float_record("numeric.wronskian", "f,g", i, static_cast<double>(w), 1.0, dev, wtol,
                                     "x=" + fmt_double(x)));
        }
        return r;
    });
    tasks.push_back([=] {
        std::vector<CheckRecord> r;
        long i = 0;
        for (auto [x, t] : {std::pair{0.5, 0.3}, {-1.0, 0.2}, {2.0, -0.7}, {-3.0, 0.9}}) {
            const GenfunErr e = genfun_check(x, t, 30);
            const std::string det = "x=" + fmt_double(x) + " t=" + fmt_double(t);
            r.push_back(float_record("numeric.genfun", "P", i, e.err_p, 0.0, e.err_p, gtol, det));
            r.push_back(float_record("numeric.genfun", "Q", i, e.err_q, 0.0, e.err_q, gtol, det));
            ++i;
        }
        return r;
    });
    return tasks;
}

std::vector<Task> zeros_tasks(const SuiteConfig& cfg)
{
    return {[=] {
        std::vector<CheckRecord> r;
        for (const ZeroRow& z : zeros_table(cfg.n_max + 20, cfg.n_max, false)) {
            if (z.skipped()) continue;
            char buf[64];
            std::snprintf(buf, sizeof buf, "deg=%d real=%u neg=%u simple=%d", z.degree, z.real_roots,
                          z.negative_roots, int(z.simple));
            r.push_back({"zeros.sturm", fam(z.family), z.n, z.pass(), buf,
                         "deg=" + std::to_string(z.degree) + " real=" + std::to_string(z.degree) +
                             " neg=" + std::to_string(z.degree) + " simple=1",
                         {}, {}});
        }
        return r;
    }};
}

std::vector<Task> group_tasks(Group g, const SuiteConfig& cfg)
{
    switch (g) {
        case Group::table1: return table1_tasks(cfg);
        case Group::table2: return table2_tasks(cfg);
        case Group::equivalences: return equivalence_tasks(cfg);
        case Group::recurrences: return recurrence_tasks(cfg);
        case Group::expansions: return expansion_tasks(cfg);
        case Group::gauss_2f1: return gauss_tasks(cfg);
        case Group::values_3f2: return values_3f2_tasks(cfg);
        case Group::certificate: return certificate_tasks(cfg);
        case Group::numeric: return numeric_tasks(cfg);
        case Group::zeros: return zeros_tasks(cfg);
    }
    return {};
}

}  // namespace

const std::map<std::string, double>& default_tolerances()
{
    static const std::map<std::string, double> kDefaults = {{"2f1", 1e-9},       {"3f2", 1e-8},
                                                            {"const", 1e-8},     {"maclaurin", 1e-7},
                                                            {"richardson", 1e-5}, {"wronskian", 1e-10},
                                                            {"genfun", 1e-9}};
    return kDefaults;
}

double SuiteConfig::tolerance(const std::string& key) const
{
    if (auto it = tol.find(key); it != tol.end()) return it->second;
    return default_tolerances().at(key);
}

std::string_view name(Group g)
{
    switch (g) {
        case Group::table1: return "table1";
        case Group::table2: return "table2";
        case Group::equivalences: return "equivalences";
        case Group::recurrences: return "recurrences";
        case Group::expansions: return "expansions";
        case Group::gauss_2f1: return "gauss_2f1";
        case Group::values_3f2: return "values_3f2";
        case Group::certificate: return "certificate";
        case Group::numeric: return "numeric";
        case Group::zeros: return "zeros";
    }
    return "?";
}

bool GroupResult::pass() const
{
    if (records.empty()) return false;
    for (const auto& r : records)
        if (!r.status) return false;
    return true;
}

bool SuiteResult::pass() const
{
    for (const auto& g : groups)
        if (!g.pass()) return false;
    return !groups.empty();
}

std::size_t SuiteResult::size() const
{
    std::size_t s = 0;
    for (const auto& g : groups) s += g.records.size();
    return s;
}

void validate(const SuiteConfig& cfg)
{
    if (cfg.n_max > kMaxNMax) throw std::invalid_argument("n_max must not exceed " + std::to_string(kMaxNMax));
    for (const auto& [k, v] : cfg.tol) {
        if (!(v > 0.0)) throw std::invalid_argument("tolerance " + k + " must be positive");
        if (!default_tolerances().count(k)) throw std::invalid_argument("unknown tolerance key " + k);
    }
}

GroupResult run_group(Group g, const SuiteConfig& cfg, bool parallel)
{
    validate(cfg);
    const auto t0 = std::chrono::steady_clock::now();
    GroupResult out{g, run_tasks(group_tasks(g, cfg), parallel), 0.0};
    out.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

SuiteResult run_suite(const SuiteConfig& cfg, bool parallel)
{
    SuiteResult s;
    for (Group g : kAllGroups) s.groups.push_back(run_group(g, cfg, parallel));
    return s;
}

std::vector<ZeroRow> zeros_table(unsigned n_pqz, unsigned n_rst, bool parallel)
{
    const auto pq = pq_recurrence(n_pqz);
    const auto z = z_recurrence(n_pqz);
    const auto rst = rst_recurrence(n_rst);
    std::vector<std::pair<Family, const Poly*>> items;
    std::vector<unsigned> index;
    for (Family f : {Family::P, Family::Q, Family::Z, Family::R, Family::S, Family::T}) {
        const bool low = f == Family::P || f == Family::Q || f == Family::Z;
        for (unsigned n = 0; n <= (low ? n_pqz : n_rst); ++n) {
            const Poly* p = f == Family::P   ? &pq[n].p
                            : f == Family::Q ? &pq[n].q
                            : f == Family::Z ? &z[n]
                            : f == Family::R ? &rst[n].r
                            : f == Family::S ? &rst[n].s
                                             : &rst[n].t;
            items.emplace_back(f, p);
            index.push_back(n);
        }
    }
    std::vector<ZeroRow> rows(items.size());
    const auto count = static_cast<long>(items.size());
    auto one = [&](long i) {
        const auto [f, p] = items[i];
        ZeroRow& row = rows[i];
        row.family = f;
        row.n = index[i];
        if (p->is_zero()) return;
        const Poly r = reduce(*p, reduction_shift(f, row.n));
        row.degree = r.degree();
        if (r.is_constant()) return;
        const RealRootCount c = sturm_real_roots(r);
        row.real_roots = c.total;
        row.negative_roots = c.negative;
        row.simple = c.all_simple;
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i) one(i);
    } else {
        for (long i = 0; i < count; ++i) one(i);
    }
    return rows;
}

}  // namespace airyderiv
