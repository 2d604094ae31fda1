#include "tttoda/gamma_products.hpp"

#include <cmath>

#include "tttoda/specfun.hpp"

namespace ttt::gp {

double F(double a, double t) { return gamma_fn(-t) * gamma_fn(a / 4 - t); }
double G(double a, double t) {
    double g = gamma_fn(a / 8 - t);
    return g * g * gamma_fn(a / 4 - t);
}
double H(double a, double t) {
    double g = gamma_fn(a / 8 - t);
    return gamma_fn(-t) * g * g;
}
double dlogF(double a, double t) { return -digamma(-t) - digamma(a / 4 - t); }

double P(double a, double t) {
    double g = gamma_fn(a / 4 - t);
    return g * g;
}
double Q(double t) {
    double g = gamma_fn(-t);
    return g * g;
}
double dlogP(double a, double t) { return -2 * digamma(a / 4 - t); }
double dlogQ(double t) { return -2 * digamma(-t); }

double S(double t) {
    double g = gamma_fn(0.5 - t);
    return g * g;
}
double T(double t) {
    double g = gamma_fn(-t);
    return -t * g * g;
}
double dlogS(double t) { return -2 * digamma(0.5 - t); }
double dlogT(double t) { return 1 / t - 2 * digamma(-t); }

QuarticLaurent quartic_laurent() {
    const double g = kEulerGamma, p2 = kPi * kPi;
    return {1.0, 4 * g, 8 * g * g + p2 / 3,
            32.0 / 3 * g * g * g + 4.0 / 3 * g * p2 + 4.0 / 3 * kZeta3};
}

}  // namespace ttt::gp
