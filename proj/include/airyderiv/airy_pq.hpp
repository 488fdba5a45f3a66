#pragma once

// P_n, Q_n with Ai^(n) = P_n Ai + Q_n Ai', the third solution family Z_n and
// the Laplace-coefficient sequences, each by every available route.

#include "airyderiv/ratcore.hpp"

#include <tuple>
#include <vector>

namespace airyderiv {

struct PQPair {
    unsigned n = 0;
    Poly p;
    Poly q;
};

/// (power, coefficient) pairs of a partial expansion.
struct Term {
    unsigned power = 0;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// P_0 .. P_N and Q_0 .. Q_N from P' + xQ, P + Q'.
std::vector<PQPair> pq_recurrence(unsigned N);

/// [t^n] (1 - t + t^2/3)^-(m+1), by series extraction.
Rational gtilde(unsigned m, unsigned n);
/// g~_{m,0..order} from one series expansion.
std::vector<Rational> gtilde_row(unsigned m, unsigned order);
/// 2^-n binom(n+2m+1, n) 2F1(-n/2, -(n-1)/2; m+3/2 | -1/3), summed exactly.
Rational gtilde_via_2f1(unsigned m, unsigned n);

/// Q_{n+1} from the g~ sum over n/3 <= m <= n/2.  Input n yields Q_{n+1}.
Poly q_closed(unsigned n);
/// P_n from the g~ differences; g~_{m,-1} = 0.
Poly p_closed(unsigned n);
/// Double-sum route, branch n mod 3.  Returns (P_n, Q_n).
std::pair<Poly, Poly> pq_maurone_phares(unsigned n);

struct SmallXTerms {
    std::vector<Term> p;
    std::vector<Term> q;
};
/// First one or two terms of P_n and Q_n at x -> 0 from the mod-3 formulas.
SmallXTerms pq_small_x_leading(unsigned n);

struct LargeXTerms {
    std::vector<Term> p_even;  // P_{2n}
    std::vector<Term> p_odd;   // P_{2n+1}
    std::vector<Term> q_even;  // Q_{2n}
    std::vector<Term> q_odd;   // Q_{2n+1}
};
/// Up to three leading terms (powers k, k-3, k-6; negative powers dropped).
LargeXTerms pq_large_x_terms(unsigned n);

/// True when every listed coefficient matches p exactly.
bool terms_match(const std::vector<Term>& terms, const Poly& p);

/// Z_0 .. Z_N with Z_0 = Z_1 = 0, Z_2 = 1.
std::vector<Poly> z_recurrence(unsigned N);
/// lambda recurrence for the coefficients of Z and the small-x values of Z.
/// Throws std::domain_error for N < 2.
bool z_lambda_check(unsigned N);
/// Small-x leading term of Z_n (n >= 2).
Term z_small_x_leading(unsigned n);
/// Two leading large-x terms of Z_{2k+2} (odd = false) or Z_{2k+3}.
std::vector<Term> z_large_x_terms(unsigned k, bool odd);

struct LaplaceSeqs {
    std::vector<Poly> mu, nu, mu_t, nu_t;
};
/// Index k = 0 .. N of the four sequences.
LaplaceSeqs laplace_seqs(unsigned N);
/// Fourth-order equations on all four sequences for k <= N-4.  Throws
/// std::domain_error for N < 4.
bool laplace_fourth_order_check(unsigned N);
/// (P_{2n}, P_{2n+1}, Q_{2n}, Q_{2n+1}) as binomial sums of the Laplace
/// coefficients.
std::tuple<Poly, Poly, Poly, Poly> pq_parity_reconstruct(unsigned n);

enum class Family { P, Q, Z, R, S, T };
char family_letter(Family f);

/// Exponent of the x-power removed from family member n.
unsigned reduction_shift(Family f, unsigned n);
/// Divide p by x^shift and substitute x^3 -> x.  Throws std::domain_error
/// for the zero polynomial or when p does not have that shape.
Poly reduce(const Poly& p, unsigned shift);
/// Reduced member n of a family.  Throws std::domain_error when the member
/// is the zero polynomial.
Poly reduced_poly(Family f, unsigned n);

/// Family member n from its recurrence.
Poly family_member(Family f, unsigned n);

}  // namespace airyderiv
