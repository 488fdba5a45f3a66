#include "airyderiv/airy_rst.hpp"
#include "airyderiv/polytext.hpp"
#include "golden.hpp"

#include <doctest.h>

using namespace airyderiv;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("R/S/T recurrence reproduces the frozen table")
{
    const auto rst = rst_recurrence(12);
    for (unsigned n = 0; n <= 12; ++n) {
        INFO("n=", n);
        CHECK(rst[n].r == parse_poly(golden::kR[n]));
        CHECK(rst[n].s == parse_poly(golden::kS[n]));
        CHECK(rst[n].t == parse_poly(golden::kT[n]));
    }
}

TEST_CASE("h coefficients")
{
    CHECK(h_coeff(0, 0) == q(1, 6));
    CHECK(h_coeff(1, 0) == q(1, 18));
    CHECK(h_coeff(1, 1) == q(5, 36));
    CHECK(h_coeff(2, 0) == q(1, 54));
    CHECK(h_via_3f2(0, 0) == q(1, 6));
    CHECK(h_via_3f2(1, 1) == q(5, 36));
    CHECK(h_via_3f2(2, 0) == q(1, 54));
    for (unsigned m = 0; m <= 20; ++m)
        for (unsigned n = 0; n <= 20; ++n) {
            INFO("m=", m, " n=", n);
            CHECK(h_coeff(m, n) == h_via_3f2(m, n));
        }
}

TEST_CASE("tilde_h")
{
    CHECK(tilde_h(0, 0, 0, q(3, 2), 0) == 1);
    CHECK(t_closed(2) == Poly::constant(2));
    CHECK(t_closed(4) == parse_poly("8x"));
    CHECK(s_closed(3) == parse_poly("4x"));
    CHECK(t_closed(5) == Poly::constant(20));
    CHECK(s_closed(7) == parse_poly("64x^3+108"));
    CHECK(r_closed(0) == Poly::constant(1));
    // lower parameter -2 reached before the upper cutoff -3
    CHECK_THROWS_AS(tilde_h(0, 3, 0, q(1, 2), 1), std::domain_error);
}

TEST_CASE("route equivalence through n = 40")
{
    const auto rst = rst_recurrence(40);
    const auto pq = pq_recurrence(40);
    for (unsigned n = 0; n <= 40; ++n) {
        INFO("n=", n);
        CHECK(r_closed(n) == rst[n].r);
        CHECK(s_closed(n) == rst[n].s);
        CHECK(t_closed(n) == rst[n].t);
        const auto c = rst_convolution(n, pq);
        CHECK(c.r == rst[n].r);
        CHECK(c.s == rst[n].s);
        CHECK(c.t == rst[n].t);
        for (const Poly* p : {&rst[n].r, &rst[n].s, &rst[n].t}) {
            CHECK(p->has_integer_coeffs());
            CHECK(p->has_nonnegative_coeffs());
        }
    }
    CHECK(rst[0].t.is_zero());
    CHECK(rst[1].t.is_zero());
    CHECK(rst[3].t.is_zero());
    CHECK_THROWS_AS(rst_convolution(41, pq), std::out_of_range);
}

TEST_CASE("third-order recurrence and general solution")
{
    const auto rst = rst_recurrence(40);
    std::vector<Poly> r, s, t;
    for (const auto& e : rst) {
        r.push_back(e.r);
        s.push_back(e.s);
        t.push_back(e.t);
    }
    CHECK(satisfies_rst_recurrence(r));
    CHECK(satisfies_rst_recurrence(s));
    CHECK(satisfies_rst_recurrence(t));

    CHECK(rst_general_solution(Poly::constant(1), Poly{}, parse_poly("2x"), 30) ==
          std::vector<Poly>(r.begin(), r.begin() + 31));
    CHECK(rst_general_solution(Poly{}, Poly{}, Poly::constant(2), 30) ==
          std::vector<Poly>(t.begin(), t.begin() + 31));
    const auto mix = rst_general_solution(Poly::constant(1), Poly::constant(1), parse_poly("2x+2"), 30);
    for (unsigned n = 0; n <= 30; ++n) CHECK(mix[n] == r[n] + s[n] + t[n]);
    CHECK(satisfies_rst_recurrence(mix));
}

TEST_CASE("small-x expansions of R, S, T")
{
    const auto rst = rst_recurrence(40);
    for (unsigned n = 0; n <= 40; ++n) {
        INFO("n=", n);
        for (const auto& ft : rst_small_x_leading(n)) {
            const Poly& p = ft.family == Family::R ? rst[n].r : ft.family == Family::S ? rst[n].s : rst[n].t;
            CHECK(p.coeff(ft.power) == ft.coeff);
        }
    }
    auto find = [](unsigned n, Family f) {
        for (const auto& ft : rst_small_x_leading(n))
            if (ft.family == f) return ft;
        return FamilyTerm{};
    };
    CHECK(find(5, Family::T).coeff == 20);
    CHECK(find(4, Family::S).coeff == 6);
    CHECK(find(3, Family::R).coeff == 2);
}

TEST_CASE("reduced R, S, T have only simple negative roots")
{
    const auto rst = rst_recurrence(40);
    for (unsigned n = 0; n <= 40; ++n) {
        INFO("n=", n);
        for (const auto& [f, p] : {std::pair{Family::R, rst[n].r}, {Family::S, rst[n].s}, {Family::T, rst[n].t}}) {
            if (p.is_zero()) continue;
            const Poly r = reduce(p, reduction_shift(f, n));
            if (r.is_constant()) continue;
            const auto d = static_cast<unsigned>(r.degree());
            CHECK(sturm_real_roots(r) == RealRootCount{d, d, true});
        }
    }
}
