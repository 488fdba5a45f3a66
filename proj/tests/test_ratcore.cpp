#include "airyderiv/ratcore.hpp"

#include <doctest.h>

#include <random>

using namespace airyderiv;

TEST_CASE("rationals stay canonical")
{
    CHECK(make_rational(6, -4) == make_rational(-3, 2));
    CHECK(make_rational(6, -4).get_den() == 2);
    CHECK(make_rational(0, 7).get_den() == 1);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("pochhammer and binomial")
{
    CHECK(poch(make_rational(2, 3), 2) == make_rational(10, 9));
    CHECK(poch(make_rational(5, 1), 0) == 1);
    CHECK(poch(make_rational(-2), 3) == 0);
    CHECK(binom(7, 3) == 35);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(-3, 2) == 6);
    CHECK(factorial(10) == 3628800);
    CHECK(rpow(make_rational(-2, 3), 3) == make_rational(-8, 27));
    CHECK(rpow(make_rational(2, 3), -2) == make_rational(9, 4));
}

TEST_CASE("pascal rule for binom")
{
    for (long n = 1; n < 40; ++n)
        for (long k = 1; k <= n; ++k) CHECK(binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1));
}

TEST_CASE("polynomial arithmetic")
{
    const Poly x = Poly::x();
    const Poly p = x * x - Poly::constant(1);
    CHECK(p.degree() == 2);
    CHECK((p - p).is_zero());
    CHECK(Poly{}.degree() == -1);
    CHECK(derivative(p) == Poly::monomial(2, 1));
    CHECK(eval(p, make_rational(1, 2)) == make_rational(-3, 4));
    CHECK(eval_real(p, 3.0) == doctest::Approx(8.0));
    CHECK(p.shifted_up(2) == x * x * p);
    auto [qq, r] = divmod(p, x - Poly::constant(1));
    CHECK(qq == x + Poly::constant(1));
    CHECK(r.is_zero());
    CHECK(gcd(p, x * x + 2 * x + Poly::constant(1)) == x + Poly::constant(1));
    CHECK_THROWS_AS(Poly{}.leading(), std::domain_error);
    CHECK_THROWS_AS(divmod(p, Poly{}), std::domain_error);
}

TEST_CASE("random polynomial division identity")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 50; ++t) {
        std::vector<Rational> ac(6), bc(3);
        for (auto& c : ac) c = d(rng);
        for (auto& c : bc) c = d(rng);
        bc.back() = 1 + (t % 4);
        Poly a(ac), b(bc);
        auto [qq, r] = divmod(a, b);
        CHECK(qq * b + r == a);
        CHECK(r.degree() < b.degree());
        CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
    }
}

TEST_CASE("series expansions")
{
    // (1 - t)^-2 through t^2
    const Poly p(std::vector<Rational>{1, -1});
    const Series s = series_reciprocal_power(p, 1, 2);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 2);
    CHECK(s.coeff(2) == 3);
    CHECK_THROWS_AS(s.coeff(3), std::out_of_range);

    // 1/(1-t+t^2/3)^1 = 1 + t + 2/3 t^2 + ...
    const Poly g(std::vector<Rational>{1, -1, make_rational(1, 3)});
    const Series s0 = series_reciprocal_power(g, 0, 3);
    CHECK(s0.coeff(1) == 1);
    CHECK(s0.coeff(2) == make_rational(2, 3));
    CHECK(s0.coeff(3) == make_rational(1, 3));

    const Series r = series_sqrt_reciprocal(3);
    CHECK(r.coeff(1) == make_rational(1, 2));
    CHECK(r.coeff(2) == make_rational(3, 8));
    CHECK(r.coeff(3) == make_rational(5, 16));
    CHECK(r * r == series_reciprocal_power(p, 0, 3));

    CHECK_THROWS_AS(series_reciprocal_power(Poly::x(), 0, 3), std::domain_error);
}

TEST_CASE("series reciprocal round trip")
{
    const Poly g(std::vector<Rational>{3, -3, 1});
    const Series s = Series::from_poly(g, 10);
    CHECK(s * s.reciprocal() == Series::one(10));
}

TEST_CASE("sturm root counts")
{
    const Poly x = Poly::x();
    const Poly one = Poly::constant(1);
    // (x+1)(x+2)
    CHECK(sturm_real_roots((x + one) * (x + 2 * one)) == RealRootCount{2, 2, true});
    CHECK(sturm_real_roots(x * x + one) == RealRootCount{0, 0, true});
    // (x-1)^2
    CHECK(sturm_real_roots((x - one) * (x - one)) == RealRootCount{1, 0, false});
    // x(x-3)(x+5): zero is neither negative nor counted twice
    CHECK(sturm_real_roots(x * (x - 3 * one) * (x + 5 * one)) == RealRootCount{3, 1, true});
    CHECK(sturm_real_roots(Poly::constant(4)) == RealRootCount{0, 0, true});
    CHECK_THROWS_AS(sturm_real_roots(Poly{}), std::domain_error);
}

TEST_CASE("sturm agrees with products of distinct linear factors")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int t = 0; t < 30; ++t) {
        std::vector<int> roots;
        while (roots.size() < 5) {
            int r = d(rng);
            if (r != 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        Poly p = Poly::constant(1);
        unsigned neg = 0;
        for (int r : roots) {
            p *= Poly::x() - Poly::constant(r);
            neg += r < 0;
        }
        p *= Poly::x() * Poly::x() + Poly::constant(1);
        CHECK(sturm_real_roots(p) == RealRootCount{5, neg, true});
    }
}
