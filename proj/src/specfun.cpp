#include "tttoda/specfun.hpp"

#include "tttoda/errors.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <cmath>
#include <string>

namespace ttt {

namespace {

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && std::floor(x) == x;
}

void require_regular(double x)
{
    if (is_nonpositive_integer(x) || !std::isfinite(x))
        throw Error(ErrorKind::PoleArgument, "gamma pole at x = " + std::to_string(x));
}

// B_{2k} / (2k (2k-1)) for k = 1..9
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
};

cplx stirling(cplx z)
{
    const cplx zi = 1.0 / z;
    const cplx zi2 = zi * zi;
    cplx sum = 0.0;
    cplx p = zi;
    for (double c : kStirling) {
        sum += c * p;
        p *= zi2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + sum;
}

}  // namespace

double gamma_fn(double x)
{
    require_regular(x);
    return std::tgamma(x);
}

cplx log_gamma_c(cplx z)
{
    if (z.imag() == 0.0 && is_nonpositive_integer(z.real()))
        throw Error(ErrorKind::PoleArgument, "log-gamma pole at z = " + std::to_string(z.real()));
    if (z.real() < 0.5) {
        // reflection; continuity is only promised for Re z > 0
        return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_c(1.0 - z);
    }
    constexpr double kShift = 15.0;
    cplx acc = 0.0;
    while (z.real() < kShift) {
        acc -= std::log(z);
        z += 1.0;
    }
    return acc + stirling(z);
}

cplx gamma_c(cplx z)
{
    if (z.imag() == 0.0)
        return gamma_fn(z.real());
    return std::exp(log_gamma_c(z));
}

double digamma(double x)
{
    require_regular(x);
    return boost::math::digamma(x);
}

double polygamma(int n, double x)
{
    require_regular(x);
    if (n == 0)
        return boost::math::digamma(x);
    return boost::math::polygamma(n, x);
}

GammaLaurent gamma_laurent()
{
    const double g = kEulerGamma;
    const double pi2 = kPi * kPi;
    return {-1.0, -g, -(g * g + pi2 / 6.0) / 2.0, (-g * g * g - pi2 * g / 2.0 - 2.0 * kZeta3) / 6.0};
}

}  // namespace ttt
