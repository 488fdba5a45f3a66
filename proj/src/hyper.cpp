#include "airyderiv/hyper.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

namespace airyderiv {

namespace {

// Returns M when q = -M for an integer M >= 0.
std::optional<unsigned long> nonpositive_integer(const Rational& q)
{
    if (q.get_den() != 1 || sgn(q) > 0) return std::nullopt;
    const BigInt m = -q.get_num();
    if (!m.fits_ulong_p()) throw std::domain_error("terminating index too large");
    return m.get_ui();
}

std::optional<unsigned long> nonpositive_integer(double x)
{
    if (x > 0.0 || x != std::nearbyint(x)) return std::nullopt;
    return static_cast<unsigned long>(-x);
}

std::optional<unsigned long> terminating_index(const std::vector<Rational>& upper)
{
    std::optional<unsigned long> m;
    for (const auto& u : upper)
        if (auto v = nonpositive_integer(u)) m = m ? std::min(*m, *v) : *v;
    return m;
}

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPi = std::numbers::pi;

void require_clear(std::initializer_list<double> gamma_args, std::initializer_list<double> nonzero,
                   const char* what)
{
    for (double g : gamma_args)
        if (near_nonpositive_integer(g)) throw PoleError(std::string(what) + ": parameter at a gamma pole");
    for (double z : nonzero)
        if (std::abs(z) <= kPoleRadius) throw PoleError(std::string(what) + ": vanishing denominator");
}

double pow3(double e) { return std::pow(3.0, e); }

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

// ---------------------------------------------------------------------------

Rational pfq_exact(const ExactHyperSpec& spec)
{
    const auto m = terminating_index(spec.upper);
    if (!m) throw std::domain_error("pfq_exact: series does not terminate");
    for (const auto& b : spec.lower)
        if (auto n = nonpositive_integer(b); n && *n < *m)
            throw std::domain_error("pfq_exact: lower parameter reaches zero before termination");

    Rational sum(1), term(1);
    for (unsigned long k = 0; k < *m; ++k) {
        for (const auto& a : spec.upper) term *= a + k;
        for (const auto& b : spec.lower) term /= b + k;
        term *= spec.arg;
        term /= k + 1;
        sum += term;
    }
    return sum;
}

double pfq_numeric(const HyperSpec& spec, double tol)
{
    std::optional<unsigned long> m;
    for (double u : spec.upper)
        if (auto v = nonpositive_integer(u)) m = m ? std::min(*m, *v) : *v;
    for (double b : spec.lower)
        if (auto n = nonpositive_integer(b); n && (!m || *n < *m))
            throw PoleError("pfq_numeric: lower parameter at a nonpositive integer");
    if (!m && std::abs(spec.arg) >= 1.0)
        throw std::domain_error("pfq_numeric: nonterminating series needs |z| < 1");

    double scale = 0.0;
    for (double u : spec.upper) scale = std::max(scale, std::abs(u));
    for (double b : spec.lower) scale = std::max(scale, std::abs(b));
    const auto k_min = static_cast<std::size_t>(scale) + 2;

    double sum = 1.0, comp = 0.0, term = 1.0;
    for (std::size_t k = 0; k < kMaxSeriesTerms; ++k) {
        if (m && k == *m) return sum;
        const double kd = static_cast<double>(k);
        for (double a : spec.upper) term *= a + kd;
        for (double b : spec.lower) term /= b + kd;
        term *= spec.arg / (kd + 1.0);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (!m && k + 1 >= k_min && (term == 0.0 || std::abs(term) <= tol * std::abs(sum))) return sum;
    }
    throw ConvergenceError("pfq_numeric: no convergence within the term cap");
}

double sinpi(double x)
{
    const double n = std::nearbyint(x);
    const double s = std::sin(kPi * (x - n));
    return std::fmod(std::abs(n), 2.0) == 1.0 ? -s : s;
}

double cospi(double x) { return sinpi(x + 0.5); }

double gamma_numeric(double x)
{
    if (nonpositive_integer(x)) throw PoleError("gamma_numeric: pole at a nonpositive integer");
    if (x < 0.5) return kPi / (sinpi(x) * gamma_numeric(1.0 - x));
    x -= 1.0;
    double acc = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (x + static_cast<double>(i));
    const double t = x + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

bool near_nonpositive_integer(double x, double radius)
{
    if (x > radius) return false;
    return std::abs(x - std::nearbyint(x)) <= radius;
}

double relative_error(double lhs, double rhs)
{
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

// ---------------------------------------------------------------------------

std::string_view name(Gauss2F1Id id)
{
    switch (id) {
        case Gauss2F1Id::A: return "2F1_A";
        case Gauss2F1Id::B52: return "2F1_B52";
        case Gauss2F1Id::B72: return "2F1_B72";
        case Gauss2F1Id::Cm12: return "2F1_Cm12";
        case Gauss2F1Id::C12: return "2F1_C12";
    }
    return "?";
}

std::string_view name(Value3F2Id id)
{
    switch (id) {
        case Value3F2Id::Ta: return "3F2_Ta";
        case Value3F2Id::Tb: return "3F2_Tb";
        case Value3F2Id::Sa: return "3F2_Sa";
        case Value3F2Id::Sb: return "3F2_Sb";
        case Value3F2Id::Ra: return "3F2_Ra";
        case Value3F2Id::Rb: return "3F2_Rb";
        case Value3F2Id::RPa: return "3F2_RPa";
        case Value3F2Id::RPb: return "3F2_RPb";
    }
    return "?";
}

std::string_view name(TwoParamId id)
{
    switch (id) {
        case TwoParamId::cos_case: return "3F2_cos_case";
        case TwoParamId::sin_case: return "3F2_sin_case";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// 2F1(a, a+1/2; c(a) | -1/3)

namespace {

template <class T>
T gauss_lower(Gauss2F1Id id, const T& a)
{
    switch (id) {
        case Gauss2F1Id::A: return T(3) / 2 - 2 * a;
        case Gauss2F1Id::B52: return T(5) / 2 - 2 * a;
        case Gauss2F1Id::B72: return T(7) / 2 - 2 * a;
        case Gauss2F1Id::Cm12: return T(-1) / 2 - 2 * a;
        case Gauss2F1Id::C12: return T(1) / 2 - 2 * a;
    }
    return T(0);
}

}  // namespace

PointCheck verify_2f1_value(Gauss2F1Id id, double a)
{
    const double c = gauss_lower<double>(id, a);
    const char* what = "verify_2f1_value";
    if (near_nonpositive_integer(c)) throw PoleError("verify_2f1_value: lower parameter at a pole");

    double rhs = 0.0;
    const double six = std::pow(6.0, -2.0 * a);
    switch (id) {
        case Gauss2F1Id::A:
            require_clear({2.0 / 3 - 2 * a, 2 - 4 * a, 2 - 6 * a}, {}, what);
            rhs = six * gamma_numeric(2.0 / 3 - 2 * a) * gamma_numeric(2 - 4 * a) /
                  (gamma_numeric(2.0 / 3) * gamma_numeric(2 - 6 * a));
            break;
        case Gauss2F1Id::B52:
            require_clear({5.0 / 3 - 2 * a, 4.0 / 3 - 2 * a, 4 - 4 * a, 4 - 6 * a}, {1 - 2 * a}, what);
            rhs = six / (1 - 2 * a) *
                  (2 * gamma_numeric(5.0 / 3 - 2 * a) / gamma_numeric(5.0 / 3) -
                   gamma_numeric(4.0 / 3 - 2 * a) / gamma_numeric(4.0 / 3)) *
                  gamma_numeric(4 - 4 * a) / gamma_numeric(4 - 6 * a);
            break;
        case Gauss2F1Id::B72:
            require_clear({8.0 / 3 - 2 * a, 7.0 / 3 - 2 * a, 6 - 4 * a, 6 - 6 * a}, {1 - 2 * a, 2 - 2 * a}, what);
            rhs = 6.0 * six / ((1 - 2 * a) * (2 - 2 * a)) *
                  (gamma_numeric(8.0 / 3 - 2 * a) / gamma_numeric(5.0 / 3) -
                   gamma_numeric(7.0 / 3 - 2 * a) / gamma_numeric(4.0 / 3)) *
                  gamma_numeric(6 - 4 * a) / gamma_numeric(6 - 6 * a);
            break;
        case Gauss2F1Id::Cm12:
            require_clear({1.0 / 3 - 2 * a, 2.0 / 3 - 2 * a, -1 - 4 * a, -1 - 6 * a}, {1 + 6 * a}, what);
            rhs = six / 3 *
                  (gamma_numeric(1.0 / 3 - 2 * a) / gamma_numeric(1.0 / 3) +
                   (1 + 3 * a) / (1 + 6 * a) * gamma_numeric(2.0 / 3 - 2 * a) / gamma_numeric(2.0 / 3)) *
                  gamma_numeric(-1 - 4 * a) / gamma_numeric(-1 - 6 * a);
            break;
        case Gauss2F1Id::C12:
            require_clear({1.0 / 3 - 2 * a, 2.0 / 3 - 2 * a, 1 - 4 * a, 1 - 6 * a}, {}, what);
            rhs = six / 2 *
                  (gamma_numeric(1.0 / 3 - 2 * a) / gamma_numeric(1.0 / 3) +
                   gamma_numeric(2.0 / 3 - 2 * a) / gamma_numeric(2.0 / 3)) *
                  gamma_numeric(1 - 4 * a) / gamma_numeric(1 - 6 * a);
            break;
    }
    const double lhs = pfq_numeric({{a, a + 0.5}, {c}, -1.0 / 3});
    return {a, 0.0, lhs, rhs, relative_error(lhs, rhs)};
}

ExactCheck verify_2f1_exact(Gauss2F1Id id, unsigned n)
{
    const Rational a = q(-static_cast<long>(n), 2);
    const Rational c = gauss_lower<Rational>(id, a);
    ExactCheck out{a, 0, pfq_exact({{a, a + q(1, 2)}, {c}, q(-1, 3)}), 0};

    const Rational six = rpow(q(6), n);
    auto fact = [](long k) { return Rational(factorial(static_cast<unsigned>(k))); };
    const long N = n;
    switch (id) {
        case Gauss2F1Id::A:
            out.rhs = six * poch(q(2, 3), n) * fact(2 * N + 1) / fact(3 * N + 1);
            break;
        case Gauss2F1Id::B52:
            out.rhs = six / (N + 1) * (2 * poch(q(5, 3), n) - poch(q(4, 3), n)) * fact(2 * N + 3) / fact(3 * N + 3);
            break;
        case Gauss2F1Id::B72:
            out.rhs = 6 * six / ((N + 1) * (N + 2)) * (poch(q(5, 3), n + 1) - poch(q(4, 3), n + 1)) *
                      fact(2 * N + 5) / fact(3 * N + 5);
            break;
        case Gauss2F1Id::Cm12: {
            // G(-1+2n)/G(-1+3n), with the a -> 0 limit 3/2
            const Rational g = n == 0 ? q(3, 2) : fact(2 * N - 2) / fact(3 * N - 2);
            const Rational mix = n == 0 ? Rational(1) : q(2 - 3 * N, 2) / (1 - 3 * N);
            out.rhs = six / 3 * (poch(q(1, 3), n) + mix * poch(q(2, 3), n)) * g;
            break;
        }
        case Gauss2F1Id::C12:
            out.rhs = six / 2 * (poch(q(1, 3), n) + poch(q(2, 3), n)) * fact(2 * N) / fact(3 * N);
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// 3F2(...; ... | 3/4), single parameter

namespace {

template <class T>
ExactHyperSpec spec3(const std::array<T, 3>& up, const std::array<T, 2>& lo, const T& arg)
{
    return {{up.begin(), up.end()}, {lo.begin(), lo.end()}, arg};
}

template <class T>
std::pair<std::array<T, 3>, std::array<T, 2>> value3f2_params(Value3F2Id id, const T& a)
{
    const T h = T(1) / 2;
    switch (id) {
        case Value3F2Id::Ta: return {{a, 3 * a - h, 3 * h - 3 * a}, {3 * a, h}};
        case Value3F2Id::Tb: return {{a, 3 * a - 3 * h, 7 * h - 3 * a}, {3 * a - 1, 3 * h}};
        case Value3F2Id::Sa: return {{a, h - 3 * a, h + 3 * a}, {3 * a, h}};
        case Value3F2Id::Sb: return {{a, 3 * a - h, 5 * h - 3 * a}, {3 * a - 1, 3 * h}};
        case Value3F2Id::Ra: return {{a, 3 * a + 3 * h, -h - 3 * a}, {3 * a, h}};
        case Value3F2Id::Rb: return {{a, 3 * a + h, 3 * h - 3 * a}, {3 * a - 1, 3 * h}};
        case Value3F2Id::RPa: return {{a, 3 * a + h, h - 3 * a}, {3 * a - 1, h}};
        case Value3F2Id::RPb: return {{a, 3 * a - h, 5 * h - 3 * a}, {3 * a - 2, 3 * h}};
    }
    return {};
}

// K_T, K_S, K_R: the gamma-sine kernels shared by the a- and b-variants.
double kernel_t(double a)
{
    return 2 * gamma_numeric(1.0 / 6) * gamma_numeric(3 * a) * sinpi(a + 1.0 / 6) /
           (pow3(3 * a) * gamma_numeric(2 * a + 1.0 / 6) * gamma_numeric(a));
}

double kernel_s(double a)
{
    return 4 * std::sqrt(kPi) * gamma_numeric(3 * a) * cospi(a) /
           (pow3(3 * a) * gamma_numeric(2 * a + 0.5) * gamma_numeric(a));
}

double kernel_r(double a)
{
    return 2 * gamma_numeric(5.0 / 6) * gamma_numeric(3 * a) * sinpi(1.0 / 6 - a) /
           (pow3(3 * a) * gamma_numeric(2 * a + 5.0 / 6) * gamma_numeric(a));
}

// (-1)^n 3^(3n+d) (c)_(2n+d) n! / (3n+d)!
Rational value_base(const Rational& c, unsigned d, unsigned n)
{
    Rational r = rpow(q(3), 3 * n + d) * poch(c, 2 * n + d) * Rational(factorial(n)) /
                 Rational(factorial(3 * n + d));
    return n % 2 ? -r : r;
}

}  // namespace

PointCheck verify_3f2_value(Value3F2Id id, double a)
{
    const auto [up, lo] = value3f2_params<double>(id, a);
    for (double b : lo)
        if (near_nonpositive_integer(b)) throw PoleError("verify_3f2_value: lower parameter at a pole");
    const char* what = "verify_3f2_value";
    require_clear({3 * a, a}, {1 - 3 * a}, what);

    double rhs = 0.0;
    switch (id) {
        case Value3F2Id::Ta:
        case Value3F2Id::Tb:
            require_clear({2 * a + 1.0 / 6}, {5 - 6 * a}, what);
            rhs = kernel_t(a);
            if (id == Value3F2Id::Tb) rhs *= (5 - 12 * a) / ((1 - 3 * a) * (5 - 6 * a));
            break;
        case Value3F2Id::Sa:
        case Value3F2Id::Sb:
            require_clear({2 * a + 0.5}, {1 - 2 * a}, what);
            rhs = kernel_s(a);
            if (id == Value3F2Id::Sb) rhs *= (1 - 4 * a) / ((1 - 2 * a) * (1 - 3 * a));
            break;
        case Value3F2Id::Ra:
        case Value3F2Id::Rb:
            require_clear({2 * a + 5.0 / 6}, {1 - 6 * a}, what);
            rhs = kernel_r(a);
            if (id == Value3F2Id::Rb) rhs *= (1 - 12 * a) / ((1 - 3 * a) * (1 - 6 * a));
            break;
        case Value3F2Id::RPa:
            require_clear({2 * a + 1.0 / 6, 2 * a + 5.0 / 6}, {}, what);
            rhs = (kernel_t(a) / 2 + (1 - 12 * a) * kernel_r(a) / 2) / (1 - 3 * a);
            break;
        case Value3F2Id::RPb:
            require_clear({2 * a + 1.0 / 6, 2 * a + 5.0 / 6}, {1 - 2 * a, 2 - 3 * a}, what);
            rhs = ((5 - 12 * a) * kernel_t(a) / 2 + (1 - 12 * a) * (7 - 12 * a) * kernel_r(a) / 2) /
                  (3 * (1 - 2 * a) * (1 - 3 * a) * (2 - 3 * a));
            break;
    }
    const double lhs = pfq_numeric({{up.begin(), up.end()}, {lo.begin(), lo.end()}, 0.75});
    return {a, 0.0, lhs, rhs, relative_error(lhs, rhs)};
}

ExactCheck verify_3f2_exact(Value3F2Id id, unsigned n)
{
    const Rational a = -static_cast<long>(n);
    const auto [up, lo] = value3f2_params<Rational>(id, a);
    ExactCheck out{a, 0, pfq_exact(spec3<Rational>(up, lo, q(3, 4))), 0};

    const long N = n;
    const Rational t_a = value_base(q(5, 6), 0, n);
    const Rational t_b = value_base(q(5, 6), 1, n) / (3 * N + q(5, 2));
    switch (id) {
        case Value3F2Id::Ta: out.rhs = t_a; break;
        case Value3F2Id::Tb: out.rhs = t_b; break;
        case Value3F2Id::Sa: out.rhs = value_base(q(1, 2), 0, n); break;
        case Value3F2Id::Sb: out.rhs = value_base(q(1, 2), 1, n) / (3 * N + q(3, 2)); break;
        case Value3F2Id::Ra: out.rhs = value_base(q(1, 6), 0, n); break;
        case Value3F2Id::Rb: out.rhs = value_base(q(1, 6), 1, n) / (3 * N + q(1, 2)); break;
        case Value3F2Id::RPa: out.rhs = value_base(q(1, 6), 1, n) + t_a / (6 * N + 2); break;
        case Value3F2Id::RPb:
            out.rhs = (value_base(q(1, 6), 2, n) + (3 * N + q(5, 2)) * t_b / (6 * N + 4)) / (3 * N + q(3, 2));
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Two-parameter 3F2 at 3/4

PointCheck verify_3f2_two_param(TwoParamId id, double a, double b)
{
    const char* what = "verify_3f2_two_param";
    double lhs = 0.0, rhs = 0.0;
    if (id == TwoParamId::cos_case) {
        if (near_nonpositive_integer(3 * b)) throw PoleError("verify_3f2_two_param: lower parameter at a pole");
        require_clear({0.5 + a - b, 3 * b, 0.5 + a + b, b}, {}, what);
        lhs = pfq_numeric({{b, 0.5 - 3 * a, 0.5 + 3 * a}, {3 * b, 0.5}, 0.75});
        rhs = 4 * gamma_numeric(0.5 + a - b) * gamma_numeric(3 * b) /
              (pow3(3 * b) * gamma_numeric(0.5 + a + b) * gamma_numeric(b)) * cospi(a) * cospi(b - a);
    } else {
        if (near_nonpositive_integer(3 * b - 1))
            throw PoleError("verify_3f2_two_param: lower parameter at a pole");
        require_clear({1 + a - b, 3 * b - 1, a + b, b}, {a}, what);
        lhs = pfq_numeric({{b, 1 - 3 * a, 1 + 3 * a}, {3 * b - 1, 1.5}, 0.75});
        rhs = 4 * gamma_numeric(1 + a - b) * gamma_numeric(3 * b - 1) /
              (pow3(3 * b) * a * gamma_numeric(a + b) * gamma_numeric(b)) * sinpi(a) * sinpi(b - a);
    }
    return {a, b, lhs, rhs, relative_error(lhs, rhs)};
}

ExactCheck verify_3f2_two_param_exact(TwoParamId id, unsigned n, unsigned j)
{
    const Rational h = q(1, 2);
    ExactCheck out;
    const Rational sign = j % 2 ? -1 : 1;
    if (id == TwoParamId::cos_case) {
        const Rational a = q(2 * static_cast<long>(n) + 1, 6);
        const Rational b = a + j;
        out.a = a;
        out.b = b;
        out.lhs = pfq_exact({{b, h - 3 * a, h + 3 * a}, {3 * b, h}, q(3, 4)});
        // sin(pi (2n+1)/3) / (sqrt(3)/2)
        static constexpr int kS[] = {1, 0, -1};
        out.rhs = sign * poch(h, n + 3 * j) * kS[n % 3] /
                  (rpow(q(3), n + 3 * j) * poch(h - j, j) * poch(2 * a + h, j) * poch(a, j) * poch(1 - a, n));
    } else {
        const Rational a = q(static_cast<long>(n) + 1, 3);
        const Rational b = a + j + h;
        out.a = a;
        out.b = b;
        out.lhs = pfq_exact({{b, 1 - 3 * a, 1 + 3 * a}, {3 * b - 1, 3 * h}, q(3, 4)});
        // sin(2 pi (n+1)/3) / (sqrt(3)/2)
        static constexpr int kS[] = {1, -1, 0};
        out.rhs = sign * poch(h, n + 1 + 3 * j) * kS[n % 3] /
                  (rpow(q(3), n + 3 * j + 2) * a * poch(h - j, j) * poch(2 * a + h, j) * poch(a + h, j) *
                   poch(h - a, n + 1));
    }
    return out;
}

// ---------------------------------------------------------------------------

double bold_f(double a)
{
    if (near_nonpositive_integer(3 * a)) throw PoleError("bold_f: lower parameter at a pole");
    return pfq_numeric({{a, 3 * a - 0.5, 1.5 - 3 * a}, {3 * a, 0.5}, 0.75});
}

namespace {

// G(5/6-2a) G(1-a) / (3^(3a) G(5/6) G(1-3a))
double tau_ratio(double a)
{
    require_clear({5.0 / 6 - 2 * a, 1 - a, 1 - 3 * a}, {}, "tau");
    return gamma_numeric(5.0 / 6 - 2 * a) * gamma_numeric(1 - a) /
           (pow3(3 * a) * gamma_numeric(5.0 / 6) * gamma_numeric(1 - 3 * a));
}

}  // namespace

F0Tau f0_and_tau(double a)
{
    require_clear({1.0 / 6, a + 1.0 / 3, a + 2.0 / 3, 2 * a + 1.0 / 6}, {}, "f0_and_tau");
    F0Tau out;
    out.f0 = gamma_numeric(1.0 / 6) * gamma_numeric(a + 1.0 / 3) * gamma_numeric(a + 2.0 / 3) *
             sinpi(a + 1.0 / 6) / (kPi * std::sqrt(3.0) * gamma_numeric(2 * a + 1.0 / 6));
    out.tau = bold_f(a) / tau_ratio(a);
    return out;
}

double tau_tilde(double a)
{
    const double den = 2 * sinpi(a - 1.0 / 3) * sinpi(a - 2.0 / 3);
    if (std::abs(den) <= kPoleRadius) throw PoleError("tau_tilde: pole");
    return -sinpi(a - 5.0 / 6) * sinpi(2 * a - 5.0 / 6) / den;
}

double tau_constant_ratio(double a) { return bold_f(a) / (tau_tilde(a) * tau_ratio(a)); }

}  // namespace airyderiv
