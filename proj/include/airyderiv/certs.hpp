#pragma once

// Exact verification of the creative-telescoping certificate for the
// terminating values of F(a) = 3F2(a, 3a-1/2, 3/2-3a; 3a, 1/2 | 3/4) at
// a = n + 5/6, and of the related sequences a = n + 1/2, n + 1/6.

#include "airyderiv/ratcore.hpp"

#include <stdexcept>
#include <utility>

namespace airyderiv {

/// z: a = n + 1/6, z_tilde: a = n + 1/2, z_dbltilde: a = n + 5/6.
enum class Seq { z, z_tilde, z_dbltilde };

class CertificateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Offset of the sequence (1/6, 1/2, 5/6) and the shift n -> n - shift
/// (2/3, 1/3, 0) that maps the z_dbltilde certificate onto it.
Rational seq_offset(Seq s);
Rational seq_shift(Seq s);

/// binom(3n+1+k, 2k) (n+5/6)_k / (3n+5/2)_k (-3)^k.  Throws
/// std::out_of_range unless 0 <= k <= 3n+1.
Rational summand_f(unsigned n, unsigned k);

/// k-th term of F at a = n + offset(s); zero outside the support.
Rational seq_summand(Seq s, unsigned n, long k);

/// Last k of the support (the terminating index).
long seq_support_end(Seq s, unsigned n);

/// Operator coefficients (c1, c0) of L = c1 N + c0 at (possibly shifted) n.
std::pair<Rational, Rational> cert_operator(const Rational& n);

/// R(n, k) as transcribed.  Throws CertificateError where the denominator
/// vanishes.
Rational cert_R(const Rational& n, const Rational& k);

/// G(n, k) = R(n - shift, k) f(n, k).  Where R has a pole just past the
/// support, f has a matching zero, and G takes the value of the cancelled
/// factorial form.
Rational cert_G(Seq s, unsigned n, long k);

/// L(n) f(n, k) = G(n, k+1) - G(n, k) for every k in 0 .. end(n+1) + 1.
bool telescoping_check(unsigned n, Seq s = Seq::z_dbltilde);

/// F at the terminating point, summed exactly.
Rational sequence_sum(Seq s, unsigned n);
/// Closed value F0 at the same point.
Rational sequence_closed(Seq s, unsigned n);

/// 2 12^(2n+d) (5/6)_(2n+d) = h~(2n+d, 3n+d, d, 3/2, 0) 2^(4n+2d+1) (3n+d)! / ((-3)^n n!).
bool t_reduction_check(unsigned n, unsigned delta);

}  // namespace airyderiv
