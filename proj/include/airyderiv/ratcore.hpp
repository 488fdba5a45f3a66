#pragma once

// Exact arithmetic backbone: GMP-backed rationals, dense univariate
// polynomials over Q, truncated power series and Sturm real-root counts.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace airyderiv {

using BigInt = mpz_class;
// mpq_class keeps every value canonical: lowest terms, positive denominator,
// zero stored as 0/1.
using Rational = mpq_class;

/// Canonical rational num/den; throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/// Rising factorial (a)_k = a(a+1)...(a+k-1), (a)_0 = 1.
Rational poch(const Rational& a, unsigned k);

/// Binomial coefficient; 0 when k < 0 or k > n >= 0.  Negative n uses the
/// falling-factorial extension.
BigInt binom(long n, long k);

BigInt factorial(unsigned n);

/// Integer x^k for small exponents, as a Rational.
Rational rpow(const Rational& x, long k);

std::string to_string(const Rational& q);

// ---------------------------------------------------------------------------

/// Dense polynomial over Q.  coeffs()[k] is the coefficient of x^k and the
/// highest stored coefficient is nonzero; the zero polynomial stores nothing.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t power);
    static Poly x() { return monomial(Rational(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of x^k; zero beyond the degree.
    Rational coeff(std::size_t k) const;
    const Rational& leading() const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    /// True when every coefficient is an integer (denominator 1).
    bool has_integer_coeffs() const;
    bool has_nonnegative_coeffs() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Multiply by x^k.
    Poly shifted_up(std::size_t k) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly derivative(const Poly& p);
Rational eval(const Poly& p, const Rational& x);
/// Horner evaluation in double precision.
double eval_real(const Poly& p, double x);

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
Poly gcd(const Poly& a, const Poly& b);

// ---------------------------------------------------------------------------

/// Power series known exactly modulo t^(order+1).
class Series {
public:
    Series(std::vector<Rational> coeffs, std::size_t order);
    static Series one(std::size_t order);
    static Series from_poly(const Poly& p, std::size_t order);

    std::size_t order() const { return order_; }
    /// Throws std::out_of_range past the known order.
    const Rational& coeff(std::size_t k) const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    /// Product truncated to the smaller of the two orders.
    friend Series operator*(const Series& a, const Series& b);
    Series& operator*=(const Rational& c);
    /// Multiplicative inverse; throws std::domain_error when coeff(0) == 0.
    Series reciprocal() const;
    Series pow(unsigned e) const;

    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<Rational> coeffs_;
    std::size_t order_;
};

/// Expansion of p(t)^-(m+1) through t^order.  Throws std::domain_error when
/// p(0) == 0 (pole at the origin).
Series series_reciprocal_power(const Poly& p, unsigned m, std::size_t order);

/// Expansion of (1-s)^(-1/2): coefficient of s^k is binom(2k,k)/4^k.
Series series_sqrt_reciprocal(std::size_t order);

// ---------------------------------------------------------------------------

struct RealRootCount {
    unsigned total = 0;     // distinct real roots
    unsigned negative = 0;  // distinct roots in (-inf, 0)
    bool all_simple = false;
    friend bool operator==(const RealRootCount&, const RealRootCount&) = default;
};

/// Exact distinct-real-root count by a Sturm chain over Q.  Throws
/// std::domain_error for the zero polynomial.
RealRootCount sturm_real_roots(const Poly& p);

}  // namespace airyderiv
