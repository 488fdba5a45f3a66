#include "airyderiv/ratcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace airyderiv {

Rational make_rational(long num, long den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational poch(const Rational& a, unsigned k)
{
    Rational r(1);
    Rational f = a;
    for (unsigned i = 0; i < k; ++i) {
        r *= f;
        f += 1;
    }
    return r;
}

BigInt binom(long n, long k)
{
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    BigInt r;
    BigInt top(static_cast<long>(n));
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational rpow(const Rational& x, long k)
{
    if (k < 0) {
        if (x == 0) throw std::domain_error("zero to a negative power");
        return rpow(Rational(1) / x, -k);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(k));
    return Rational(num, den);  // powers of coprime parts stay coprime
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t power)
{
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& Poly::leading() const
{
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool Poly::has_integer_coeffs() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

bool Poly::has_nonnegative_coeffs() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) >= 0; });
}

Poly& Poly::operator+=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

Poly operator-(Poly a)
{
    for (auto& v : a.coeffs_) v = -v;
    return a;
}

Poly Poly::shifted_up(std::size_t k) const
{
    if (is_zero()) return {};
    std::vector<Rational> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }

Poly derivative(const Poly& p)
{
    auto c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Rational> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<unsigned long>(k);
    return Poly(std::move(d));
}

Rational eval(const Poly& p, const Rational& x)
{
    Rational acc(0);
    auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

double eval_real(const Poly& p, double x)
{
    double acc = 0.0;
    auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k].get_d();
    return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto bc = b.coeffs();
    const Rational inv_lead = 1 / b.leading();
    for (std::size_t shift = quo.size(); shift-- > 0;) {
        const Rational factor = rem[shift + bc.size() - 1] * inv_lead;
        quo[shift] = factor;
        if (factor == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[shift + j] -= factor * bc[j];
    }
    rem.resize(bc.size() - 1);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = divmod(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    if (u.is_zero()) return u;
    return u * (1 / u.leading());
}

// ---------------------------------------------------------------------------

Series::Series(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)), order_(order)
{
    coeffs_.resize(order_ + 1);
}

Series Series::one(std::size_t order) { return Series({Rational(1)}, order); }

Series Series::from_poly(const Poly& p, std::size_t order)
{
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) c[k] = p.coeff(k);
    return Series(std::move(c), order);
}

const Rational& Series::coeff(std::size_t k) const
{
    if (k > order_) throw std::out_of_range("series coefficient beyond known order");
    return coeffs_[k];
}

Series operator*(const Series& a, const Series& b)
{
    const std::size_t order = std::min(a.order_, b.order_);
    std::vector<Rational> out(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Series(std::move(out), order);
}

Series& Series::operator*=(const Rational& c)
{
    for (auto& v : coeffs_) v *= c;
    return *this;
}

Series Series::reciprocal() const
{
    if (coeffs_[0] == 0) throw std::domain_error("series reciprocal: pole at t = 0");
    std::vector<Rational> inv(order_ + 1);
    const Rational inv0 = 1 / coeffs_[0];
    inv[0] = inv0;
    for (std::size_t n = 1; n <= order_; ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * inv[n - k];
        inv[n] = -acc * inv0;
    }
    return Series(std::move(inv), order_);
}

Series Series::pow(unsigned e) const
{
    Series result = one(order_);
    Series base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Series series_reciprocal_power(const Poly& p, unsigned m, std::size_t order)
{
    if (p.coeff(0) == 0) throw std::domain_error("series_reciprocal_power: p(0) = 0, pole at t = 0");
    return Series::from_poly(p, order).reciprocal().pow(m + 1);
}

Series series_sqrt_reciprocal(std::size_t order)
{
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    // c_k = c_{k-1} * (2k-1)/(2k)
    for (std::size_t k = 1; k <= order; ++k)
        c[k] = c[k - 1] * make_rational(static_cast<long>(2 * k - 1), static_cast<long>(2 * k));
    return Series(std::move(c), order);
}

// ---------------------------------------------------------------------------

namespace {

int sign_at_neg_inf(const Poly& p)
{
    if (p.is_zero()) return 0;
    const int s = sgn(p.leading());
    return (p.degree() % 2 == 0) ? s : -s;
}

int sign_at_pos_inf(const Poly& p) { return p.is_zero() ? 0 : sgn(p.leading()); }

int sign_at_zero(const Poly& p) { return sgn(p.coeff(0)); }

template <class SignOf>
unsigned variations(const std::vector<Poly>& chain, SignOf sign_of)
{
    unsigned count = 0;
    int prev = 0;
    for (const auto& q : chain) {
        const int s = sign_of(q);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

std::vector<Poly> sturm_chain(const Poly& p)
{
    std::vector<Poly> chain{p, derivative(p)};
    while (!chain.back().is_zero()) {
        Poly r = -divmod(chain[chain.size() - 2], chain.back()).second;
        // scaling by a positive constant keeps every sign in the chain
        if (!r.is_zero()) r *= 1 / abs(r.leading());
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    return chain;
}

}  // namespace

RealRootCount sturm_real_roots(const Poly& p)
{
    if (p.is_zero()) throw std::domain_error("sturm_real_roots: zero polynomial");
    RealRootCount out;
    std::vector<Poly> chain = sturm_chain(p);
    // the last element is gcd(p, p') up to a constant
    out.all_simple = chain.back().degree() <= 0;
    const Poly sqf = out.all_simple ? p : divmod(p, chain.back()).first;
    if (!out.all_simple) chain = sturm_chain(sqf);

    const unsigned v_neg = variations(chain, sign_at_neg_inf);
    const unsigned v_pos = variations(chain, sign_at_pos_inf);
    const unsigned v_zero = variations(chain, sign_at_zero);
    out.total = v_neg - v_pos;
    // V(-inf) - V(0) counts roots in (-inf, 0]
    out.negative = v_neg - v_zero - (sqf.coeff(0) == 0 ? 1u : 0u);
    return out;
}

}  // namespace airyderiv
