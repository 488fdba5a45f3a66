#include "airyderiv/airy_numeric.hpp"

#include "airyderiv/hyper.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

namespace airyderiv {

namespace {

void require_domain(double x, const char* what)
{
    if (!(std::abs(x) <= kAiryDomain)) throw std::domain_error(std::string(what) + ": |x| > 8");
}

}  // namespace

AiryConsts airy_consts()
{
    return {std::pow(3.0, -2.0 / 3) / gamma_numeric(2.0 / 3), std::pow(3.0, -1.0 / 3) / gamma_numeric(1.0 / 3)};
}

AiryQuad airy_atoms(double x, long double tol)
{
    require_domain(x, "airy_atoms");
    const long double X = x;
    const long double x3 = X * X * X;
    AiryQuad out{x, 1.0L, X, 0.0L, 1.0L};
    long double tf = 1.0L, tg = X, tfp = X * X / 2, tgp = 1.0L;
    out.fp = tfp;
    for (int k = 0; k < 400; ++k) {
        const long double K = k;
        tf *= x3 / ((3 * K + 2) * (3 * K + 3));
        tg *= x3 / ((3 * K + 3) * (3 * K + 4));
        tgp *= x3 / ((3 * K + 3) * (3 * K + 1));
        // fp starts at k = 1
        tfp *= x3 / ((3 * K + 5) * (3 * K + 3));
        out.f += tf;
        out.g += tg;
        out.fp += tfp;
        out.gp += tgp;
        const bool past_peak = std::fabs(x3) < (3 * K + 2) * (3 * K + 3);
        if (past_peak && std::fabs(tf) < tol * (std::fabs(out.f) + 1) &&
            std::fabs(tg) < tol * (std::fabs(out.g) + 1) && std::fabs(tfp) < tol * (std::fabs(out.fp) + 1) &&
            std::fabs(tgp) < tol * (std::fabs(out.gp) + 1))
            break;
    }
    return out;
}

AiBi ai_bi(double x)
{
    const AiryQuad a = airy_atoms(x);
    const AiryConsts c = airy_consts();
    const long double c1 = c.c1, c2 = c.c2, s3 = std::sqrt(3.0L);
    return {static_cast<double>(c1 * a.f - c2 * a.g), static_cast<double>(s3 * (c1 * a.f + c2 * a.g)),
            static_cast<double>(c1 * a.fp - c2 * a.gp), static_cast<double>(s3 * (c1 * a.fp + c2 * a.gp))};
}

double ai_derivative(unsigned n, double x, const PQPair& pq, AiryFn fn)
{
    if (pq.n != n) throw std::invalid_argument("ai_derivative: P/Q index mismatch");
    const AiBi v = ai_bi(x);
    const double y = fn == AiryFn::Ai ? v.ai : v.bi;
    const double yp = fn == AiryFn::Ai ? v.aip : v.bip;
    return eval_real(pq.p, x) * y + eval_real(pq.q, x) * yp;
}

double product_derivative(ProductKind which, unsigned n, double x, const RSTTriple& rst)
{
    if (rst.n != n) throw std::invalid_argument("product_derivative: R/S/T index mismatch");
    const AiBi v = ai_bi(x);
    double u = v.ai, up = v.aip, w = v.ai, wp = v.aip;
    if (which != ProductKind::AiAi) {
        w = v.bi;
        wp = v.bip;
    }
    if (which == ProductKind::BiBi) {
        u = v.bi;
        up = v.bip;
    }
    return eval_real(rst.r, x) * u * w + eval_real(rst.s, x) * (u * wp + up * w) + eval_real(rst.t, x) * up * wp;
}

GenfunErr genfun_check(double x, double t, unsigned N)
{
    if (std::abs(t) > 1.0) throw std::domain_error("genfun_check: |t| > 1");
    require_domain(x, "genfun_check");
    require_domain(x + t, "genfun_check");
    const AiryQuad a = airy_atoms(x);
    const AiryQuad b = airy_atoms(x + t);
    const auto pq = pq_recurrence(N);
    double sp = 0.0, sq = 0.0, tn = 1.0;
    for (unsigned n = 0; n <= N; ++n) {
        sp += eval_real(pq[n].p, x) * tn;
        sq += eval_real(pq[n].q, x) * tn;
        tn *= t / (n + 1);
    }
    const long double rp = a.gp * b.f - a.fp * b.g;
    const long double rq = a.f * b.g - a.g * b.f;
    return {static_cast<double>(std::fabs(sp - rp)), static_cast<double>(std::fabs(sq - rq))};
}

std::pair<double, double> lambda_tail(unsigned n, unsigned N, double t)
{
    if (!(t > 0.0 && t < 1.0)) throw std::domain_error("lambda_tail: t must lie in (0, 1)");
    using big = boost::multiprecision::cpp_bin_float_100;
    const big T = t;
    const big a = big(n) + big(1) / 2;
    big head = 0, term = 1;
    for (unsigned k = 0; k <= N; ++k) {
        head += term;
        term *= (a + k) * T / (k + 1);
    }
    const big closed = (pow(1 - T, -a) - head) / pow(T, static_cast<int>(N + 1));

    // tail: sum_{k > N} (a)_k t^(k-N-1) / k!
    const double ad = n + 0.5;
    double c = 1.0;
    for (unsigned k = 0; k <= N; ++k) c *= (ad + k) / (k + 1);
    double sum = 0.0;
    for (unsigned k = N + 1; k < N + 1 + kMaxSeriesTerms; ++k) {
        sum += c;
        if (c < 1e-18 * sum) break;
        c *= (ad + k) * t / (k + 1);
    }
    return {static_cast<double>(closed), sum};
}

}  // namespace airyderiv
