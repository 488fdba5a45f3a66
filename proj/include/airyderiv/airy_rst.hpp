#pragma once

// R_n, S_n, T_n with (Ai^2)^(n) = R_n Ai^2 + 2 S_n Ai Ai' + T_n Ai'^2 (and the
// same for Ai Bi, Bi^2), by recurrence, h~ closed form and P/Q convolution.

#include "airyderiv/airy_pq.hpp"
#include "airyderiv/ratcore.hpp"

#include <vector>

namespace airyderiv {

struct RSTTriple {
    unsigned n = 0;
    Poly r;
    Poly s;
    Poly t;
};

/// R_0 .. R_N etc. from (1, 0, 0).
std::vector<RSTTriple> rst_recurrence(unsigned N);

/// [s^n] (1/2)(1-s)^(-1/2) (3-3s+s^2)^-(m+1).
Rational h_coeff(unsigned m, unsigned n);
/// Reversed-order terminating 3F2 at 3/4 for h_{m,n}.
Rational h_via_3f2(unsigned m, unsigned n);

/// (n+a)_delta 3F2(m-n, 1-a-n, n+delta+a; b-n, delta+1/2 | 3/4) with the
/// paired-lower-parameter limit convention.  Throws std::domain_error when
/// the convention does not apply (lower cutoff reached first).
Rational tilde_h(unsigned m, unsigned n, unsigned delta, const Rational& a, unsigned b);

/// Closed forms indexed by the plain family index n.
Poly t_closed(unsigned n);
Poly s_closed(unsigned n);
Poly r_closed(unsigned n);

/// Triple n from binomial products of the P/Q table.  Throws
/// std::out_of_range when pq does not cover 0 .. n.
RSTTriple rst_convolution(unsigned n, const std::vector<PQPair>& pq);

/// Y_n = Y0 R_n + Y1 S_n + (Y2/2 - x Y0) T_n for n = 0 .. N.  Throws
/// std::logic_error if the result breaks Y_{n+3} = 4x Y_{n+1} + (4n+2) Y_n
/// or the initial values.
std::vector<Poly> rst_general_solution(const Poly& y0, const Poly& y1, const Poly& y2, unsigned N);

/// True when ys satisfies Y_{n+3} = 4x Y_{n+1} + (4n+2) Y_n throughout.
bool satisfies_rst_recurrence(const std::vector<Poly>& ys);

struct FamilyTerm {
    Family family;
    unsigned power = 0;
    Rational coeff;
};
/// Small-x leading terms of R_n, S_n, T_n from the mod-3 formulas.
std::vector<FamilyTerm> rst_small_x_leading(unsigned n);

}  // namespace airyderiv
