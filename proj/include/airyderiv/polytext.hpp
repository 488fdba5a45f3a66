#pragma once

// Text form of polynomials: descending powers, unit coefficients elided,
// e.g. "x^7+770x^4+8680x".  Non-integer coefficients print as "(3/2)x^2".

#include "airyderiv/ratcore.hpp"

#include <string>
#include <string_view>

namespace airyderiv {

std::string format_poly(const Poly& p);

/// Inverse of format_poly; also accepts spaces and "*" between coefficient
/// and x.  Throws std::invalid_argument on malformed text.
Poly parse_poly(std::string_view text);

}  // namespace airyderiv
