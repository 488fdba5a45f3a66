#pragma once

// Hypergeometric evaluation (exact terminating and double-precision),
// gamma, and the 2F1 / 3F2 special-value identities tied to the Airy
// polynomial coefficients.

#include "airyderiv/ratcore.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace airyderiv {

/// Raised when a parameter lands on (or within the fixed radius of) a pole.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a nonterminating series does not meet its tolerance within
/// the term cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kPoleRadius = 1e-6;
inline constexpr std::size_t kMaxSeriesTerms = 1'000'000;

struct ExactHyperSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational arg;
};

struct HyperSpec {
    std::vector<double> upper;
    std::vector<double> lower;
    double arg = 0.0;
};

/// Terminating pFq summed exactly.  The series stops at the first
/// nonpositive-integer upper parameter -M.  A lower parameter -N with N >= M
/// follows the limit convention (only the lower parameter is perturbed), so
/// the truncated sum through k = M is the value.  Throws std::domain_error
/// for nonterminating input or when a lower parameter reaches zero first.
Rational pfq_exact(const ExactHyperSpec& spec);

/// Double-precision partial sums with Kahan compensation.  Terminating
/// inputs are summed to the end; otherwise |arg| < 1 is required and
/// summation stops once a term's contribution drops below tol relative to
/// the sum.  Throws PoleError for an unpaired nonpositive-integer lower
/// parameter and ConvergenceError past kMaxSeriesTerms.
double pfq_numeric(const HyperSpec& spec, double tol = 1e-17);

/// Lanczos (g = 7, 9 terms) with reflection below 1/2.  Throws PoleError at
/// nonpositive integers.
double gamma_numeric(double x);

/// sin(pi x) and cos(pi x) with exact argument reduction.
double sinpi(double x);
double cospi(double x);

/// True when x lies within `radius` of 0, -1, -2, ...
bool near_nonpositive_integer(double x, double radius = kPoleRadius);

double relative_error(double lhs, double rhs);

// ---------------------------------------------------------------------------

enum class Gauss2F1Id { A, B52, B72, Cm12, C12 };
enum class Value3F2Id { Ta, Tb, Sa, Sb, Ra, Rb, RPa, RPb };
enum class TwoParamId { cos_case, sin_case };

inline constexpr Gauss2F1Id kAll2F1[] = {Gauss2F1Id::A, Gauss2F1Id::B52, Gauss2F1Id::B72, Gauss2F1Id::Cm12,
                                         Gauss2F1Id::C12};
inline constexpr Value3F2Id kAll3F2[] = {Value3F2Id::Ta, Value3F2Id::Tb, Value3F2Id::Sa,  Value3F2Id::Sb,
                                         Value3F2Id::Ra, Value3F2Id::Rb, Value3F2Id::RPa, Value3F2Id::RPb};
inline constexpr TwoParamId kAllTwoParam[] = {TwoParamId::cos_case, TwoParamId::sin_case};

std::string_view name(Gauss2F1Id id);
std::string_view name(Value3F2Id id);
std::string_view name(TwoParamId id);

/// One floating comparison of an identity at a parameter point.
struct PointCheck {
    double a = 0.0;
    double b = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_err = 0.0;
};

/// One exact comparison at a terminating parameter point.
struct ExactCheck {
    Rational a;
    Rational b;
    Rational lhs;
    Rational rhs;
    bool pass() const { return lhs == rhs; }
};

/// Aggregate for one identity over all its test points.
struct IdentityReport {
    std::string identity_id;
    std::vector<double> test_points;
    double max_rel_err = 0.0;
    unsigned exact_passes = 0;
    unsigned exact_total = 0;
    double tolerance = 0.0;
    bool verdict = false;
};

/// Left side by pfq_numeric, right side from the gamma closed form.  Throws
/// PoleError when a is within kPoleRadius of a pole of either side.
PointCheck verify_2f1_value(Gauss2F1Id id, double a);
/// Exact check at the terminating point a = -n/2; the right side becomes a
/// Pochhammer/factorial ratio.
ExactCheck verify_2f1_exact(Gauss2F1Id id, unsigned n);

PointCheck verify_3f2_value(Value3F2Id id, double a);
/// Exact check at a = -n.  The left side uses the limit convention for the
/// paired lower parameter; the right side is the coefficient identity
/// (polynomial constant or linear coefficient) it came from.
ExactCheck verify_3f2_exact(Value3F2Id id, unsigned n);

PointCheck verify_3f2_two_param(TwoParamId id, double a, double b);
/// Exact check at a point where the series terminates through the a-built
/// upper parameter: cos_case at a = (2n+1)/6, b = a + j; sin_case at
/// a = (n+1)/3, b = a + j + 1/2.  There the gamma right side collapses to
/// a rational number.
ExactCheck verify_3f2_two_param_exact(TwoParamId id, unsigned n, unsigned j);

// ---------------------------------------------------------------------------

/// F(a) = 3F2(a, 3a-1/2, 3/2-3a; 3a, 1/2 | 3/4) in double precision.
double bold_f(double a);

struct F0Tau {
    double f0 = 0.0;
    double tau = 0.0;
};

/// Closed form F0(a) and tau(a) = F(a) * 3^(3a) G(5/6) G(1-3a) / (G(5/6-2a) G(1-a)).
F0Tau f0_and_tau(double a);

/// sin-ratio guess for tau: the product of the observed zeros over the poles.
double tau_tilde(double a);

/// F(a) / (tau_tilde(a) * G(5/6-2a) G(1-a) / (3^(3a) G(5/6) G(1-3a))); equals -2.
double tau_constant_ratio(double a);

}  // namespace airyderiv
