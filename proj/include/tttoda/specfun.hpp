#pragma once

#include <complex>

namespace ttt {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kZeta3 = 1.2020569031595942853997381615114500;

// Laurent coefficients of Gamma(-t) = r0/t + l0 + m0c t + n0c t^2 + O(t^3).
struct GammaLaurent {
    double r0, l0, m0c, n0c;
};

double gamma_fn(double x);
// Principal branch; continuous on every vertical line with Re z > 0.
cplx log_gamma_c(cplx z);
cplx gamma_c(cplx z);
double digamma(double x);
// n-th derivative of digamma.
double polygamma(int n, double x);
GammaLaurent gamma_laurent();

}  // namespace ttt
