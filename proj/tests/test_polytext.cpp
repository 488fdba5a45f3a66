#include "airyderiv/polytext.hpp"

#include <doctest.h>

#include <random>

using namespace airyderiv;

TEST_CASE("polytext format")
{
    const Poly p = parse_poly("x^7+770x^4+8680x");
    CHECK(p.coeff(7) == 1);
    CHECK(p.coeff(4) == 770);
    CHECK(p.coeff(1) == 8680);
    CHECK(format_poly(p) == "x^7+770x^4+8680x");
    CHECK(format_poly(Poly{}) == "0");
    CHECK(format_poly(Poly::constant(-1)) == "-1");
    CHECK(format_poly(-Poly::x()) == "-x");
    CHECK(format_poly(Poly::monomial(make_rational(3, 2), 2)) == "(3/2)x^2");
    CHECK(format_poly(Poly::constant(make_rational(-1, 3))) == "-1/3");
    CHECK(parse_poly(" 3 * x ^ 2 - 1 ") == parse_poly("3x^2-1"));
    CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("3x 4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("y"), std::invalid_argument);
}

TEST_CASE("polytext round trip")
{
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> d(-30, 30), den(1, 5);
    for (int t = 0; t < 200; ++t) {
        std::vector<Rational> c(1 + t % 8);
        for (auto& v : c) v = make_rational(d(rng), den(rng));
        const Poly p(c);
        CHECK(parse_poly(format_poly(p)) == p);
    }
}
