#include "airyderiv/certs.hpp"

#include "airyderiv/airy_rst.hpp"
#include "airyderiv/hyper.hpp"

namespace airyderiv {

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
Rational big(const BigInt& v) { return Rational(v); }

// numerator of R without the leading 12k(2k-1)(12n^2+32n+21)
Rational cert_cubic(const Rational& n, const Rational& k)
{
    return 2 * k * k * k - 18 * k * k * (n + 1) - 2 * k * (81 * n * n + 153 * n + 73) -
           3 * (n + 1) * (90 * n * n + 162 * n + 71);
}

Rational cert_prefactor(const Rational& n, const Rational& k)
{
    return 12 * k * (2 * k - 1) * (12 * n * n + 32 * n + 21);
}

// (a)_k / (3a)_k (-3)^k with a = n + offset
Rational ratio_part(Seq s, unsigned n, unsigned k)
{
    const Rational a = seq_offset(s) + n;
    Rational r = poch(a, k) / poch(3 * a, k) * rpow(q(3), k);
    return k % 2 ? Rational(-r) : r;
}

}  // namespace

Rational seq_offset(Seq s)
{
    switch (s) {
        case Seq::z: return q(1, 6);
        case Seq::z_tilde: return q(1, 2);
        case Seq::z_dbltilde: return q(5, 6);
    }
    return 0;
}

Rational seq_shift(Seq s) { return q(5, 6) - seq_offset(s); }

long seq_support_end(Seq s, unsigned n)
{
    // -(3/2 - 3a) = 3n + 3 offset - 3/2
    const Rational m = 3 * (n + seq_offset(s)) - q(3, 2);
    return m.get_num().get_si();
}

Rational seq_summand(Seq s, unsigned n, long k)
{
    const long M = seq_support_end(s, n);
    if (k < 0 || k > std::max(M, 0L)) return 0;
    if (M < 0) return k == 0 ? Rational(1) : Rational(0);
    const auto K = static_cast<unsigned>(k);
    return big(binom(M + k, 2 * k)) * ratio_part(s, n, K);
}

Rational summand_f(unsigned n, unsigned k)
{
    if (k > 3 * n + 1) throw std::out_of_range("summand_f: k outside 0 .. 3n+1");
    return seq_summand(Seq::z_dbltilde, n, k);
}

std::pair<Rational, Rational> cert_operator(const Rational& n)
{
    return {(12 * n + 11) * (12 * n + 17), (6 * n + 7) * (6 * n + 9)};
}

Rational cert_R(const Rational& n, const Rational& k)
{
    const Rational den = (6 * n + 7 + 2 * k) * (6 * n + 5 + 2 * k) * (3 * n + 2 - k) * (3 * n + 3 - k) *
                         (3 * n + 4 - k);
    if (den == 0) throw CertificateError("cert_R: denominator vanishes");
    return cert_prefactor(n, k) * cert_cubic(n, k) / den;
}

Rational cert_G(Seq s, unsigned n, long k)
{
    const long M = seq_support_end(s, n);
    if (k < 0 || k > M + 3) return 0;
    const Rational nn = n - seq_shift(s);
    const Rational kk = k;
    if (k <= M) return cert_R(nn, kk) * seq_summand(s, n, k);
    // R f = prefactor cubic / ((6n'+7+2k)(6n'+5+2k)) (M+k)! / ((2k)! (M+3-k)!) ratio_part
    const Rational lin = (6 * nn + 7 + 2 * kk) * (6 * nn + 5 + 2 * kk);
    if (lin == 0) throw CertificateError("cert_G: denominator vanishes");
    const auto K = static_cast<unsigned>(k);
    const Rational fact = big(factorial(static_cast<unsigned>(M + k))) /
                          (big(factorial(2 * K)) * big(factorial(static_cast<unsigned>(M + 3 - k))));
    return cert_prefactor(nn, kk) * cert_cubic(nn, kk) / lin * fact * ratio_part(s, n, K);
}

bool telescoping_check(unsigned n, Seq s)
{
    const auto [c1, c0] = cert_operator(n - seq_shift(s));
    const long top = std::max(seq_support_end(s, n + 1), seq_support_end(s, n)) + 1;
    for (long k = 0; k <= top; ++k) {
        const Rational lhs = c1 * seq_summand(s, n + 1, k) + c0 * seq_summand(s, n, k);
        if (lhs != cert_G(s, n, k + 1) - cert_G(s, n, k)) return false;
    }
    return true;
}

Rational sequence_sum(Seq s, unsigned n)
{
    if (s == Seq::z_dbltilde) {
        Rational sum(0);
        for (unsigned k = 0; k <= 3 * n + 1; ++k) sum += summand_f(n, k);
        return sum;
    }
    const Rational a = n + seq_offset(s);
    return pfq_exact({{a, 3 * a - q(1, 2), q(3, 2) - 3 * a}, {3 * a, q(1, 2)}, q(3, 4)});
}

Rational sequence_closed(Seq s, unsigned n)
{
    Rational v;
    switch (s) {
        case Seq::z_dbltilde: return 0;
        case Seq::z_tilde: v = poch(q(5, 6), n) * poch(q(7, 6), n) / poch(q(7, 6), 2 * n); break;
        case Seq::z: v = poch(q(1, 2), n) * poch(q(5, 6), n) / poch(q(1, 2), 2 * n); break;
    }
    return n % 2 ? Rational(-v) : v;
}

bool t_reduction_check(unsigned n, unsigned delta)
{
    const unsigned e = 2 * n + delta;
    const Rational lhs = 2 * rpow(q(12), e) * poch(q(5, 6), e);
    Rational rhs = tilde_h(e, 3 * n + delta, delta, q(3, 2), 0) * rpow(q(2), 4 * n + 2 * delta + 1) *
                   big(factorial(3 * n + delta)) / (rpow(q(3), n) * big(factorial(n)));
    if (n % 2) rhs = -rhs;
    return lhs == rhs;
}

}  // namespace airyderiv
