#include "airyderiv/airy_pq.hpp"

#include "airyderiv/airy_rst.hpp"
#include "airyderiv/hyper.hpp"

#include <stdexcept>

namespace airyderiv {

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

Rational big(const BigInt& v) { return Rational(v); }

// m! / (3m - n)!, an integer since 3m - n <= m on the summation range.
BigInt falling_ratio(unsigned m, unsigned low)
{
    BigInt r = 1;
    for (unsigned i = low + 1; i <= m; ++i) r *= i;
    return r;
}

long floor_div(long a, long b)
{
    long d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

// first m with 3m >= n
unsigned m_low(unsigned n) { return (n + 2) / 3; }

}  // namespace

std::vector<PQPair> pq_recurrence(unsigned N)
{
    std::vector<PQPair> out;
    out.reserve(N + 1);
    out.push_back({0, Poly::constant(1), Poly{}});
    for (unsigned n = 0; n < N; ++n) {
        const auto& cur = out.back();
        Poly p = derivative(cur.p) + cur.q.shifted_up(1);
        Poly qq = cur.p + derivative(cur.q);
        out.push_back({n + 1, std::move(p), std::move(qq)});
    }
    return out;
}

std::vector<Rational> gtilde_row(unsigned m, unsigned order)
{
    const Poly base(std::vector<Rational>{1, -1, q(1, 3)});
    const Series s = series_reciprocal_power(base, m, order);
    return {s.coeffs().begin(), s.coeffs().end()};
}

Rational gtilde(unsigned m, unsigned n) { return gtilde_row(m, n)[n]; }

Rational gtilde_via_2f1(unsigned m, unsigned n)
{
    const long N = n;
    const Rational f = pfq_exact({{q(-N, 2), q(1 - N, 2)}, {q(2 * static_cast<long>(m) + 3, 2)}, q(-1, 3)});
    return big(binom(N + 2 * m + 1, N)) * f / rpow(q(2), N);
}

Poly q_closed(unsigned n)
{
    Poly out;
    for (unsigned m = m_low(n); 2 * m <= n; ++m) {
        const unsigned pw = 3 * m - n;
        const Rational g = gtilde(m, n - 2 * m);
        out += Poly::monomial(g * big(falling_ratio(m, pw)), pw);
    }
    return out;
}

Poly p_closed(unsigned n)
{
    Poly out;
    for (unsigned m = m_low(n); 2 * m <= n; ++m) {
        const unsigned pw = 3 * m - n;
        const auto row = gtilde_row(m, n - 2 * m);
        const Rational prev = n == 2 * m ? Rational(0) : row[n - 2 * m - 1];
        out += Poly::monomial((row[n - 2 * m] - prev) * big(falling_ratio(m, pw)), pw);
    }
    return out;
}

namespace {

// sum_{k=0}^{floor((m-kk)/2)} 3^(m+mm+k) x^(3k+ll)/(3k+ll)!
//   * sum_l (-1)^l binom(3k+ll, l) ((c-l)/3)_(m+mm+k)
Poly mp_double_sum(long m, long kk, long ll, long mm, long c)
{
    Poly out;
    const long top = floor_div(m - kk, 2);
    for (long k = 0; k <= top; ++k) {
        const long deg = 3 * k + ll;
        const auto len = static_cast<unsigned>(m + mm + k);
        Rational inner(0);
        for (long l = 0; l <= deg; ++l) {
            Rational t = big(binom(deg, l)) * poch(q(c - l, 3), len);
            inner += (l % 2) ? -t : t;
        }
        out += Poly::monomial(rpow(q(3), m + mm + k) * inner / big(factorial(static_cast<unsigned>(deg))),
                              static_cast<std::size_t>(deg));
    }
    return out;
}

}  // namespace

std::pair<Poly, Poly> pq_maurone_phares(unsigned n)
{
    struct Row {
        long k1, l1, m1, k2, l2, m2;
    };
    static constexpr Row kTable[3] = {{0, 0, 0, 1, 1, 0}, {1, 2, 1, 0, 0, 0}, {0, 1, 1, 1, 2, 1}};
    const long m = n / 3;
    const Row& r = kTable[n % 3];
    return {mp_double_sum(m, r.k1, r.l1, r.m1, 1), mp_double_sum(m, r.k2, r.l2, r.m2, 2)};
}

SmallXTerms pq_small_x_leading(unsigned n)
{
    const unsigned k = n / 3;
    const long K = k;
    const Rational p3 = rpow(q(3), K);
    auto ph = [k](long a, long b) { return poch(q(a, b), k); };
    SmallXTerms out;
    switch (n % 3) {
        case 0:
            out.p = {{0, p3 * ph(1, 3)}, {3, p3 / 2 * ((K + 1) * ph(1, 3) - ph(2, 3))}};
            out.q = {{1, p3 * (ph(2, 3) - ph(1, 3))}, {4, p3 / 8 * ((K + 2) * ph(2, 3) - (4 * K + 2) * ph(1, 3))}};
            break;
        case 1:
            out.p = {{2, p3 / 2 * (ph(4, 3) - ph(2, 3))}, {5, p3 / 40 * ((K + 8) * ph(4, 3) - (10 * K + 8) * ph(2, 3))}};
            out.q = {{0, p3 * ph(2, 3)}, {3, p3 / 2 * ((K + 1) * ph(2, 3) - ph(4, 3))}};
            break;
        default:
            out.p = {{1, p3 * ph(4, 3)}, {4, p3 / 8 * ((K + 4) * ph(4, 3) - 4 * ph(5, 3))}};
            out.q = {{2, p3 * (ph(5, 3) - ph(4, 3))}, {5, p3 / 40 * ((2 * K + 10) * ph(5, 3) - (5 * K + 10) * ph(4, 3))}};
            break;
    }
    return out;
}

namespace {

void push_term(std::vector<Term>& v, long power, const Rational& c)
{
    if (power >= 0) v.push_back({static_cast<unsigned>(power), c});
}

Rational bz(long n, long k) { return big(binom(n, k)); }

}  // namespace

LargeXTerms pq_large_x_terms(unsigned n)
{
    const long k = n;
    LargeXTerms out;
    push_term(out.p_even, k, 1);
    push_term(out.p_even, k - 3, bz(k, 3) * (3 * k - 5));
    push_term(out.p_even, k - 6, 10 * bz(k, 6) * (3 * k * k - 15 * k + 10));

    push_term(out.p_odd, k - 1, q(k * k));
    push_term(out.p_odd, k - 4, 4 * bz(k, 4) * (k * k - 2 * k - 1));
    push_term(out.p_odd, k - 7, 14 * bz(k, 7) * (3 * k * k * k - 17 * k * k + 8 * k + 8));

    push_term(out.q_even, k - 2, 2 * bz(k, 2));
    push_term(out.q_even, k - 5, 20 * bz(k, 5) * (k - 1));
    push_term(out.q_even, k - 8, 112 * bz(k, 8) * (3 * k - 2) * (k - 3));

    push_term(out.q_odd, k, 1);
    push_term(out.q_odd, k - 3, bz(k, 3) * (3 * k + 1));
    push_term(out.q_odd, k - 6, 10 * bz(k, 6) * (3 * k * k - 3 * k - 2));
    return out;
}

bool terms_match(const std::vector<Term>& terms, const Poly& p)
{
    for (const auto& t : terms)
        if (p.coeff(t.power) != t.coeff) return false;
    return true;
}

// ---------------------------------------------------------------------------

std::vector<Poly> z_recurrence(unsigned N)
{
    std::vector<Poly> z{Poly{}, Poly{}, Poly::constant(1)};
    for (unsigned n = 0; n + 3 <= N; ++n) z.push_back(z[n + 1].shifted_up(1) + z[n] * Rational(n + 1));
    z.resize(N + 1);
    return z;
}

Term z_small_x_leading(unsigned n)
{
    if (n < 2) throw std::domain_error("z_small_x_leading: Z_0 = Z_1 = 0");
    const unsigned k = n / 3;
    const Rational p3 = rpow(q(3), k);
    const Rational kf = big(factorial(k));
    switch (n % 3) {
        case 0: return {2, p3 / 2 * (kf - 2 * poch(q(2, 3), k) + poch(q(1, 3), k))};
        case 1: return {1, p3 * (kf - poch(q(2, 3), k))};
        default: return {0, p3 * kf};
    }
}

std::vector<Term> z_large_x_terms(unsigned k, bool odd)
{
    const long K = k;
    std::vector<Term> out;
    if (!odd) {
        push_term(out, K, 1);
        push_term(out, K - 3, q((K - 1) * (K - 2) * (3 * K * K + 7 * K + 6), 6));
    } else {
        push_term(out, K - 1, q(K * (K + 2)));
        push_term(out, K - 4, bz(K - 1, 3) * (K + 2) * (K * K + 2 * K + 3));
    }
    return out;
}

bool z_lambda_check(unsigned N)
{
    if (N < 2) throw std::domain_error("z_lambda_check: N >= 2 required");
    const auto z = z_recurrence(N);
    // lambda_{m,n} from the coefficient of x^(3m-n) in Z_{n+2}
    auto lambda = [&](long m, long n) -> Rational {
        if (m < 0 || n < 0 || 3 * m - n < 0 || n + 2 > static_cast<long>(N)) return 0;
        const auto pw = static_cast<unsigned>(3 * m - n);
        return z[n + 2].coeff(pw) / big(falling_ratio(static_cast<unsigned>(m), pw));
    };
    for (long n = 0; n + 2 <= static_cast<long>(N); ++n) {
        for (long m = 1; m <= n + 1; ++m) {
            if (3 * m < n) continue;
            if (m * lambda(m, n) != (3 * m - n) * lambda(m - 1, n - 2) + n * lambda(m - 1, n - 3)) return false;
        }
    }
    for (unsigned n = 2; n <= N; ++n) {
        const Term t = z_small_x_leading(n);
        if (z[n].coeff(t.power) != t.coeff) return false;
        for (unsigned i = 0; i < t.power; ++i)
            if (z[n].coeff(i) != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

LaplaceSeqs laplace_seqs(unsigned N)
{
    LaplaceSeqs s;
    auto run = [N](std::vector<Poly>& mu, std::vector<Poly>& nu, Poly mu0, Poly nu0, Poly mu1, Poly nu1) {
        mu = {std::move(mu0), std::move(mu1)};
        nu = {std::move(nu0), std::move(nu1)};
        for (unsigned k = 0; k + 2 <= N; ++k) {
            mu.push_back(nu[k] * Rational(2 * k + 2));
            nu.push_back(mu[k + 1] * Rational(2 * k + 3) + mu[k].shifted_up(1) * Rational(2 * k + 2));
        }
        mu.resize(N + 1);
        nu.resize(N + 1);
    };
    const Poly one = Poly::constant(1);
    run(s.mu, s.nu, one, Poly{}, Poly{}, one);
    run(s.mu_t, s.nu_t, Poly{}, one, Poly{}, Poly{});
    return s;
}

bool laplace_fourth_order_check(unsigned N)
{
    if (N < 4) throw std::domain_error("laplace_fourth_order_check: N >= 4 required");
    const auto s = laplace_seqs(N);
    auto check = [N](const std::vector<Poly>& y, long c1, long c2) {
        for (unsigned k = 0; k + 4 <= N; ++k) {
            const long K = k;
            const Poly rhs = y[k + 1] * Rational((2 * K + c1) * (2 * K + c2)) +
                             y[k].shifted_up(1) * Rational((2 * K + 2) * (2 * K + 6));
            if (y[k + 4] != rhs) return false;
        }
        return true;
    };
    return check(s.mu, 3, 6) && check(s.mu_t, 3, 6) && check(s.nu, 4, 7) && check(s.nu_t, 4, 7);
}

std::tuple<Poly, Poly, Poly, Poly> pq_parity_reconstruct(unsigned n)
{
    const auto s = laplace_seqs(std::max(n, 1u));
    auto build = [n](const std::vector<Poly>& y) {
        Poly out;
        for (unsigned k = 0; k <= n; ++k) out += (y[k] * big(binom(n, k))).shifted_up(n - k);
        return out;
    };
    return {build(s.mu), build(s.nu), build(s.mu_t), build(s.nu_t)};
}

// ---------------------------------------------------------------------------

char family_letter(Family f)
{
    static constexpr char kLetters[] = "PQZRST";
    return kLetters[static_cast<int>(f)];
}

unsigned reduction_shift(Family f, unsigned n)
{
    static constexpr unsigned kShift[3][3] = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    switch (f) {
        case Family::P:
        case Family::R: return kShift[0][n % 3];
        case Family::Q:
        case Family::S: return kShift[1][n % 3];
        default: return kShift[2][n % 3];
    }
}

Poly reduce(const Poly& p, unsigned shift)
{
    if (p.is_zero()) throw std::domain_error("reduce: zero polynomial has no reduced form");
    const auto c = p.coeffs();
    std::vector<Rational> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (i < shift || (i - shift) % 3 != 0)
            throw std::domain_error("reduce: polynomial lacks the x^shift * f(x^3) shape");
    }
    for (std::size_t i = shift; i < c.size(); i += 3) out.push_back(c[i]);
    return Poly(std::move(out));
}

Poly family_member(Family f, unsigned n)
{
    switch (f) {
        case Family::P: return pq_recurrence(n).back().p;
        case Family::Q: return pq_recurrence(n).back().q;
        case Family::Z: return z_recurrence(std::max(n, 2u))[n];
        case Family::R: return rst_recurrence(n).back().r;
        case Family::S: return rst_recurrence(n).back().s;
        case Family::T: return rst_recurrence(n).back().t;
    }
    return {};
}

Poly reduced_poly(Family f, unsigned n) { return reduce(family_member(f, n), reduction_shift(f, n)); }

}  // namespace airyderiv
