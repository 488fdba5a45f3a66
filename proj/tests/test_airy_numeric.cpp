#include "airyderiv/airy_numeric.hpp"
#include "airyderiv/hyper.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace airyderiv;

namespace {
double rel(double a, double b, double floor = 0.0)
{
    const double s = std::max({std::abs(a), std::abs(b), floor});
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}
}  // namespace

TEST_CASE("airy atoms and Wronskian")
{
    const AiryQuad z = airy_atoms(0.0);
    CHECK(z.f == 1.0);
    CHECK(z.g == 0.0);
    CHECK(z.fp == 0.0);
    CHECK(z.gp == 1.0);
    const AiryQuad a = airy_atoms(1.5);
    CHECK(std::fabs(a.f * a.gp - a.g * a.fp - 1.0L) < 1e-10L);
    for (int i = 0; i < 100; ++i) {
        const double x = -6.0 + 12.0 * i / 99;
        const AiryQuad q = airy_atoms(x);
        CHECK(std::fabs(q.f * q.gp - q.g * q.fp - 1.0L) < 1e-10L);
    }
    // f(1) = 1 + 1/6 + 1/180 + ... and Ai(1) = c1 f(1) - c2 g(1)
    const AiryQuad one = airy_atoms(1.0);
    CHECK(static_cast<double>(one.f) == doctest::Approx(1.172299970057931).epsilon(1e-14));
    const AiryConsts c = airy_consts();
    CHECK(static_cast<double>(c.c1 * one.f - c.c2 * one.g) == doctest::Approx(oracle::ai_deriv(0, 1.0)).epsilon(1e-13));
    CHECK_THROWS_AS(airy_atoms(8.5), std::domain_error);
    CHECK_THROWS_AS(airy_atoms(-9.0), std::domain_error);
}

TEST_CASE("Ai and Bi")
{
    const AiBi v = ai_bi(0.0);
    CHECK(v.ai == doctest::Approx(0.3550280538878).epsilon(1e-12));
    CHECK(v.aip == doctest::Approx(-0.2588194037928).epsilon(1e-12));
    CHECK(v.bi / v.ai == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    const AiryConsts c = airy_consts();
    CHECK(c.c1 == doctest::Approx(oracle::ai0()).epsilon(1e-13));
    for (double x : {-5.0, -2.2, -0.4, 0.9, 2.5, 4.0}) {
        const AiBi w = ai_bi(x);
        CHECK(rel(w.ai, oracle::ai_deriv(0, x)) < 1e-9);
        CHECK(rel(w.aip, oracle::ai_deriv(1, x)) < 1e-9);
        CHECK(rel(w.bi, oracle::bi_deriv(0, x)) < 1e-9);
        CHECK(rel(w.bip, oracle::bi_deriv(1, x)) < 1e-9);
        // Ai Bi' - Ai' Bi = 1/pi
        CHECK(w.ai * w.bip - w.aip * w.bi == doctest::Approx(1 / M_PI).epsilon(1e-10));
    }
}

TEST_CASE("derivatives through P_n, Q_n")
{
    const auto pq = pq_recurrence(12);
    CHECK(ai_derivative(0, 0.7, pq[0]) == doctest::Approx(ai_bi(0.7).ai).epsilon(1e-15));
    CHECK(ai_derivative(2, 1.3, pq[2]) == doctest::Approx(1.3 * ai_bi(1.3).ai).epsilon(1e-14));
    CHECK(ai_derivative(5, 0.0, pq[5]) == 0.0);
    CHECK(std::abs(oracle::ai_deriv(5, 0.0)) < 1e-15);
    CHECK_THROWS_AS(ai_derivative(4, 0.0, pq[5]), std::invalid_argument);
    for (unsigned n = 0; n <= 10; ++n)
        for (double x : {-2.0, -1.0, -0.3, 0.0, 0.4, 1.0, 2.0}) {
            INFO("n=", n, " x=", x);
            CHECK(rel(ai_derivative(n, x, pq[n]), oracle::ai_deriv(n, x), 1e-12) < 1e-7);
            CHECK(rel(ai_derivative(n, x, pq[n], AiryFn::Bi), oracle::bi_deriv(n, x), 1e-12) < 1e-7);
        }
}

TEST_CASE("product derivatives")
{
    const auto rst = rst_recurrence(8);
    const double x = 0.7;
    const AiBi v = ai_bi(x);
    CHECK(product_derivative(ProductKind::AiAi, 0, x, rst[0]) == doctest::Approx(v.ai * v.ai));
    CHECK(product_derivative(ProductKind::AiAi, 1, x, rst[1]) == doctest::Approx(2 * v.ai * v.aip));
    CHECK(product_derivative(ProductKind::AiAi, 2, x, rst[2]) ==
          doctest::Approx(2 * x * v.ai * v.ai + 2 * v.aip * v.aip).epsilon(1e-14));
    CHECK_THROWS_AS(product_derivative(ProductKind::AiAi, 3, x, rst[2]), std::invalid_argument);

    // Leibniz rule over the Maclaurin oracle
    auto leibniz = [](ProductKind k, unsigned n, double x) {
        double s = 0.0, b = 1.0;
        for (unsigned j = 0; j <= n; ++j) {
            const double u = k == ProductKind::BiBi ? oracle::bi_deriv(j, x) : oracle::ai_deriv(j, x);
            const double w = k == ProductKind::AiAi ? oracle::ai_deriv(n - j, x) : oracle::bi_deriv(n - j, x);
            s += b * u * w;
            b = b * (n - j) / (j + 1);
        }
        return s;
    };
    for (auto k : {ProductKind::AiAi, ProductKind::AiBi, ProductKind::BiBi})
        for (unsigned n = 0; n <= 8; ++n)
            for (double x : {-2.0, -0.9, 0.0, 0.6, 1.7}) {
                INFO("n=", n, " x=", x);
                CHECK(rel(product_derivative(k, n, x, rst[n]), leibniz(k, n, x), 1e-6) < 1e-8);
            }

    // finite differences: d/dx of order n-1 matches order n; order 0 is Ai^2 itself
    for (unsigned n = 1; n <= 6; ++n)
        for (double x : {-2.0, -1.2, -0.5, 0.0, 0.8, 1.5, 2.0}) {
            INFO("n=", n, " x=", x);
            const double fd = oracle::richardson_diff(
                [&](double s) { return product_derivative(ProductKind::AiAi, n - 1, s, rst[n - 1]); }, x);
            CHECK(rel(product_derivative(ProductKind::AiAi, n, x, rst[n]), fd, 1e-3) < 1e-5);
        }
}

TEST_CASE("generating functions")
{
    const auto e0 = genfun_check(0.4, 0.0, 5);
    CHECK(e0.err_p < 1e-12);
    CHECK(e0.err_q < 1e-12);
    for (auto [x, t] : {std::pair{0.5, 0.3}, {-1.0, 0.2}, {2.0, -0.7}, {-3.0, 0.9}}) {
        const auto e = genfun_check(x, t, 30);
        CHECK(e.err_p <= 1e-9);
        CHECK(e.err_q <= 1e-9);
        const auto lo = genfun_check(x, t, 25), hi = genfun_check(x, t, 35);
        CHECK(hi.err_p <= lo.err_p + 1e-15);
        CHECK(hi.err_q <= lo.err_q + 1e-15);
    }
    CHECK_THROWS_AS(genfun_check(7.5, 0.8, 10), std::domain_error);
    CHECK_THROWS_AS(genfun_check(0.0, 1.5, 10), std::domain_error);
}

TEST_CASE("Lambda tail function")
{
    const auto [c0, s0] = lambda_tail(0, 0, 0.25);
    CHECK(c0 == doctest::Approx(0.6188021535).epsilon(1e-9));
    CHECK(s0 == doctest::Approx(0.6188021535).epsilon(1e-9));
    const auto [c10, s10] = lambda_tail(0, 10, 0.25);
    CHECK(c10 > 0);
    CHECK(s10 < 1e-6 * 1e6);
    for (unsigned n = 0; n <= 5; ++n)
        for (unsigned N = 0; N <= 12; ++N)
            for (double t : {0.1, 0.25, 0.5, 0.9}) {
                INFO("n=", n, " N=", N, " t=", t);
                const auto [c, s] = lambda_tail(n, N, t);
                CHECK(rel(c, s) <= 1e-10);
            }
    // t -> 0+: leading tail term
    const auto [cs, ss] = lambda_tail(2, 3, 1e-9);
    double lead = 1.0;
    for (unsigned k = 0; k <= 3; ++k) lead *= (2.5 + k) / (k + 1);
    CHECK(ss == doctest::Approx(lead).epsilon(1e-8));
    CHECK(cs == doctest::Approx(lead).epsilon(1e-6));
    CHECK_THROWS_AS(lambda_tail(0, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(lambda_tail(0, 0, 0.0), std::domain_error);
}
