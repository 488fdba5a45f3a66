#include "airyderiv/airy_rst.hpp"

#include "airyderiv/hyper.hpp"

#include <stdexcept>

namespace airyderiv {

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
Rational big(const BigInt& v) { return Rational(v); }

}  // namespace

std::vector<RSTTriple> rst_recurrence(unsigned N)
{
    std::vector<RSTTriple> out;
    out.reserve(N + 1);
    out.push_back({0, Poly::constant(1), Poly{}, Poly{}});
    for (unsigned n = 0; n < N; ++n) {
        const auto& c = out.back();
        Poly r = derivative(c.r) + (c.s * Rational(2)).shifted_up(1);
        Poly s = c.r + derivative(c.s) + c.t.shifted_up(1);
        Poly t = c.s * Rational(2) + derivative(c.t);
        out.push_back({n + 1, std::move(r), std::move(s), std::move(t)});
    }
    return out;
}

Rational h_coeff(unsigned m, unsigned n)
{
    const Poly base(std::vector<Rational>{3, -3, 1});
    const Series s = series_sqrt_reciprocal(n) * series_reciprocal_power(base, m, n);
    return s.coeff(n) / 2;
}

Rational h_via_3f2(unsigned m, unsigned n)
{
    const long Q = n / 2, d = n % 2, M = m;
    const Rational f = pfq_exact({{q(-Q), q(-2 * M - 2 * Q - 1, 2), q(2 * M + 2 * Q + 2 * d + 3, 2)},
                                  {q(-M - Q), q(2 * d + 1, 2)},
                                  q(3, 4)});
    Rational pre = big(binom(M + Q, M)) * poch(q(2 * M + 2 * Q + 3, 2), static_cast<unsigned>(d)) /
                   (2 * rpow(q(3), M + Q + 1));
    if (Q % 2) pre = -pre;
    return pre * f;
}

Rational tilde_h(unsigned m, unsigned n, unsigned delta, const Rational& a, unsigned b)
{
    const long M = m, N = n, D = delta, B = b;
    const Rational f = pfq_exact({{q(M - N), 1 - a - N, N + D + a}, {q(B - N), q(2 * D + 1, 2)}, q(3, 4)});
    return poch(N + a, delta) * f;
}

namespace {

// q! (-1/3)^(q-m) / ((q-m)! (3m-2q-d)!) x^(3m-2q-d), summed over
// (2q+d)/3 <= m <= q with the weight w(m).
template <class Weight>
Poly assemble(unsigned qq, unsigned d, Weight w)
{
    Poly out;
    for (unsigned m = (2 * qq + d + 2) / 3; m <= qq; ++m) {
        const unsigned pw = 3 * m - 2 * qq - d;
        Rational c = w(m) * big(factorial(qq)) * rpow(q(-1, 3), qq - m) /
                     (big(factorial(qq - m)) * big(factorial(pw)));
        out += Poly::monomial(c, pw);
    }
    return out;
}

}  // namespace

Poly t_closed(unsigned n)
{
    if (n < 2) return {};
    const unsigned qq = (n - 2) / 2, d = (n - 2) % 2;
    return assemble(qq, d, [&](unsigned m) -> Rational { return tilde_h(m, qq, d, q(3, 2), 0) * rpow(q(2), 2 * m + 1); });
}

Poly s_closed(unsigned n)
{
    if (n < 1) return {};
    const unsigned qq = (n - 1) / 2, d = (n - 1) % 2;
    return assemble(qq, d, [&](unsigned m) -> Rational { return tilde_h(m, qq, d, q(1, 2), 0) * rpow(q(2), 2 * m); });
}

Poly r_closed(unsigned n)
{
    const unsigned qq = n / 2, d = n % 2;
    return assemble(qq, d, [&](unsigned m) -> Rational {
        Rational v = tilde_h(m, qq, d, q(-1, 2), 0);
        // Iverson guard [q > 0] on the second brace term
        if (qq > 0) v -= q(3 * m - 2 * qq - d, 2 * qq) * tilde_h(m, qq, d, q(1, 2), 1);
        return v * rpow(q(2), 2 * m);
    });
}

RSTTriple rst_convolution(unsigned n, const std::vector<PQPair>& pq)
{
    if (pq.size() <= n) throw std::out_of_range("rst_convolution: P/Q table too short");
    RSTTriple out{n, {}, {}, {}};
    Poly two_s;
    for (unsigned k = 0; k <= n; ++k) {
        const Rational c = big(binom(n, k));
        const auto& a = pq[k];
        const auto& b = pq[n - k];
        out.r += c * (a.p * b.p);
        two_s += c * (a.p * b.q + a.q * b.p);
        out.t += c * (a.q * b.q);
    }
    out.s = two_s * q(1, 2);
    return out;
}

bool satisfies_rst_recurrence(const std::vector<Poly>& ys)
{
    for (std::size_t n = 0; n + 3 < ys.size(); ++n)
        if (ys[n + 3] != (ys[n + 1] * Rational(4)).shifted_up(1) + ys[n] * Rational(4 * static_cast<long>(n) + 2))
            return false;
    return true;
}

std::vector<Poly> rst_general_solution(const Poly& y0, const Poly& y1, const Poly& y2, unsigned N)
{
    const auto rst = rst_recurrence(std::max(N, 2u));
    const Poly tc = y2 * q(1, 2) - y0.shifted_up(1);
    std::vector<Poly> ys;
    for (unsigned n = 0; n <= N; ++n) ys.push_back(y0 * rst[n].r + y1 * rst[n].s + tc * rst[n].t);
    const bool init = ys[0] == y0 && (N < 1 || ys[1] == y1) && (N < 2 || ys[2] == y2);
    if (!init || !satisfies_rst_recurrence(ys))
        throw std::logic_error("rst_general_solution: combination fails the recurrence");
    return ys;
}

std::vector<FamilyTerm> rst_small_x_leading(unsigned n)
{
    const unsigned k = n / 3;
    const long K = k;
    const Rational tw = rpow(q(12), K);
    auto ph = [k](long a, long b) { return poch(q(a, b), k); };
    using F = Family;
    switch (n % 3) {
        case 0:
            return {{F::T, 2, tw * (ph(5, 6) - 2 * ph(1, 2) + ph(1, 6))},
                    {F::S, 1, tw * (ph(1, 2) - ph(1, 6))},
                    {F::R, 0, tw * ph(1, 6)},
                    {F::R, 3, tw * ((2 * K + 1) * ph(1, 6) - ph(1, 2))}};
        case 1:
            return {{F::T, 1, 2 * tw * (ph(5, 6) - ph(1, 2))},
                    {F::T, 4, tw / 2 * ((2 * K + 3) * ph(5, 6) - (8 * K + 5) * ph(1, 2) + 2 * ph(7, 6))},
                    {F::S, 0, tw * ph(1, 2)},
                    {F::S, 3, tw * ((2 * K + 2) * ph(1, 2) - ph(5, 6) - ph(7, 6))},
                    {F::R, 2, tw * (ph(7, 6) - ph(1, 2))}};
        default:
            return {{F::T, 0, 2 * tw * ph(5, 6)},
                    {F::T, 3, 2 * tw * ((2 * K + 2) * ph(5, 6) - 3 * ph(3, 2) + ph(7, 6))},
                    {F::S, 2, tw * (3 * ph(3, 2) - ph(5, 6) - 2 * ph(7, 6))},
                    {F::R, 1, 12 * tw * poch(q(1, 6), k + 1)},
                    {F::R, 4, tw / 2 * ((2 * K + 5) * ph(7, 6) + ph(5, 6) - 6 * ph(3, 2))}};
    }
}

}  // namespace airyderiv
