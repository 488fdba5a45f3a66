#pragma once

// Double-precision Airy atoms f, g, Ai/Bi and their derivatives through the
// polynomial families, product derivatives, generating-function checks and
// the tail function Lambda_{n,N}(t).

#include "airyderiv/airy_pq.hpp"
#include "airyderiv/airy_rst.hpp"

#include <utility>

namespace airyderiv {

inline constexpr double kAiryDomain = 8.0;

/// Values carried in extended precision: at |x| = 6 the products in the
/// Wronskian reach 1e8, where a double ulp is already 1.5e-8.
struct AiryQuad {
    double x = 0.0;
    long double f = 0.0, g = 0.0, fp = 0.0, gp = 0.0;
};

struct AiryConsts {
    double c1 = 0.0;  // 3^(-2/3) / G(2/3)
    double c2 = 0.0;  // 3^(-1/3) / G(1/3)
};

AiryConsts airy_consts();

/// Maclaurin series of f, g and their derivatives, truncated once a term
/// drops below tol * (|partial sum| + 1).  Throws std::domain_error for |x| > 8.
AiryQuad airy_atoms(double x, long double tol = 1e-20L);

struct AiBi {
    double ai = 0.0, bi = 0.0, aip = 0.0, bip = 0.0;
};
AiBi ai_bi(double x);

enum class AiryFn { Ai, Bi };

/// P_n(x) Ai(x) + Q_n(x) Ai'(x) (or the Bi analogue).  Throws
/// std::invalid_argument when pq.n != n.
double ai_derivative(unsigned n, double x, const PQPair& pq, AiryFn fn = AiryFn::Ai);

enum class ProductKind { AiAi, AiBi, BiBi };

/// n-th derivative of Ai^2, Ai Bi or Bi^2 from R_n, S_n, T_n.  Throws
/// std::invalid_argument when rst.n != n.
double product_derivative(ProductKind which, unsigned n, double x, const RSTTriple& rst);

struct GenfunErr {
    double err_p = 0.0;
    double err_q = 0.0;
};
/// Truncated exponential generating functions of P_n and Q_n against the
/// atom combinations.  Throws std::domain_error outside |x|, |x+t| <= 8,
/// |t| <= 1.
GenfunErr genfun_check(double x, double t, unsigned N);

/// Lambda_{n,N}(t) from the closed form (evaluated in 100-digit binary
/// floating point, since the bracket cancels) and from the tail series.
/// Throws std::domain_error unless 0 < t < 1.
std::pair<double, double> lambda_tail(unsigned n, unsigned N, double t);

}  // namespace airyderiv
