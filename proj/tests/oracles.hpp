#pragma once

// Independent oracles for the numeric checks.  Nothing here calls the
// library's series or gamma code.

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// Ai(0), Ai'(0) from std::tgamma
inline double ai0() { return 1.0 / (std::pow(3.0, 2.0 / 3) * std::tgamma(2.0 / 3)); }
inline double aip0() { return -1.0 / (std::pow(3.0, 1.0 / 3) * std::tgamma(1.0 / 3)); }
inline double bi0() { return std::sqrt(3.0) * ai0(); }
inline double bip0() { return -std::sqrt(3.0) * aip0(); }

// n-th derivative at x of the Maclaurin series with y'' = x y, y(0) = y0,
// y'(0) = y1.  Coefficients a_{j+3} = a_j / ((j+3)(j+2)).
inline double maclaurin_derivative(unsigned n, double x, double y0, double y1, unsigned terms = 220)
{
    std::vector<double> a(terms + 3, 0.0);
    a[0] = y0;
    a[1] = y1;
    for (unsigned j = 0; j + 3 < a.size(); ++j) a[j + 3] = a[j] / ((j + 3.0) * (j + 2.0));
    double sum = 0.0;
    for (unsigned j = n; j < a.size(); ++j) {
        double c = a[j];
        for (unsigned i = 0; i < n; ++i) c *= static_cast<double>(j - i);
        sum += c * std::pow(x, static_cast<double>(j - n));
    }
    return sum;
}

inline double ai_deriv(unsigned n, double x) { return maclaurin_derivative(n, x, ai0(), aip0()); }
inline double bi_deriv(unsigned n, double x) { return maclaurin_derivative(n, x, bi0(), bip0()); }

// Richardson-extrapolated central difference of h at x, step h0, two levels.
inline double richardson_diff(const std::function<double(double)>& h, double x, double h0 = 1e-4)
{
    auto d = [&](double s) { return (h(x + s) - h(x - s)) / (2 * s); };
    const double d1 = d(h0), d2 = d(h0 / 2), d3 = d(h0 / 4);
    const double r1 = (4 * d2 - d1) / 3, r2 = (4 * d3 - d2) / 3;
    return (16 * r2 - r1) / 15;
}

}  // namespace oracle
