#pragma once

// Gamma-function products attached to the four resonant boundary cases, and
// their logarithmic derivatives written as digamma sums. `a` is the single
// free exponent of the case (a = 2 m0 + 3 on the edges).

namespace ttt::gp {

// E1
double F(double a, double t);  // Gamma(-t) Gamma(a/4 - t)
double G(double a, double t);  // Gamma(a/8 - t)^2 Gamma(a/4 - t)
double H(double a, double t);  // Gamma(-t) Gamma(a/8 - t)^2
double dlogF(double a, double t);
// E3
double P(double a, double t);  // Gamma(a/4 - t)^2
double Q(double t);            // Gamma(-t)^2
double dlogP(double a, double t);
double dlogQ(double t);
// V2
double S(double t);  // Gamma(1/2 - t)^2
double T(double t);  // -t Gamma(-t)^2
double dlogS(double t);
double dlogT(double t);

// Coefficients of Gamma(-t)^4 = R0 t^-4 + L0 t^-3 + M0 t^-2 + N0 t^-1 + O(1).
struct QuarticLaurent {
    double R0, L0, M0, N0;
};
QuarticLaurent quartic_laurent();

}  // namespace ttt::gp
