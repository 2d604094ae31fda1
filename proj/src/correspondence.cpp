#include "tttoda/correspondence.hpp"

#include <cmath>

#include "tttoda/errors.hpp"
#include "tttoda/gamma_products.hpp"
#include "tttoda/specfun.hpp"

namespace ttt {

namespace {

void require_interior(const GammaData& g)
{
    const BoundaryCase k = classify(g);
    if (k != BoundaryCase::Interior)
        throw Error(ErrorKind::ResonantPoint,
                    std::string("point lies on boundary component ") + case_name(k));
}

double horner(const std::vector<double>& c, double L)
{
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * L + *it;
    return v;
}

double horner_deriv(const std::vector<double>& c, double L)
{
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) v = v * L + double(k) * c[k];
    return v;
}

double positive_or_throw(double v, const char* what)
{
    if (!(v > 0.0))
        throw Error(ErrorKind::InvalidArgument,
                    std::string(what) + " is not positive in this gauge (log(c/N^4) out of range)");
    return v;
}

}  // namespace

double ProfileChannel::poly_at(double x) const { return horner(poly, std::log(x / 4.0)); }

double ProfileChannel::dpoly_at(double x) const { return horner_deriv(poly, std::log(x / 4.0)) / x; }

double ProfileChannel::value(double x) const { return klog * std::log(x) + mult * std::log(poly_at(x)); }

double ProfileChannel::deriv(double x) const { return klog / x + mult * dpoly_at(x) / poly_at(x); }

StokesData stokes_from_gamma(const GammaData& g)
{
    const double p = std::cos(kPi * (g.gamma0 + 1.0) / 4.0);
    const double q = std::cos(kPi * (g.gamma1 + 3.0) / 4.0);
    return {-2.0 * p - 2.0 * q, -2.0 - 4.0 * p * q};
}

StokesData stokes_from_alpha(const AlphaData& a)
{
    const double p = std::cos(kPi * a.alpha0 / a.N);
    const double q = std::cos(kPi * a.alpha2 / a.N);
    return {-2.0 * p + 2.0 * q, -2.0 + 4.0 * p * q};
}

std::pair<double, double> rho_from_holo(const WeightData& w)
{
    return {-2.0 * std::log(w.chat0), -2.0 * std::log(w.chat1)};
}

double gamma_ratio1(const GammaData& g)
{
    const double x = g.gamma0, y = g.gamma1;
    return gamma_fn(x / 4 + 0.25) * gamma_fn((x + y) / 8 + 0.5) * gamma_fn((x - y) / 8 + 0.75) /
           (gamma_fn((y - x) / 8 + 0.25) * gamma_fn(-(x + y) / 8 + 0.5) * gamma_fn(-x / 4 + 0.75));
}

double gamma_ratio2(const GammaData& g)
{
    const double x = g.gamma0, y = g.gamma1;
    return gamma_fn((y - x) / 8 + 0.25) * gamma_fn((x + y) / 8 + 0.5) * gamma_fn(y / 4 + 0.75) /
           (gamma_fn(-y / 4 + 0.25) * gamma_fn(-(x + y) / 8 + 0.5) * gamma_fn((x - y) / 8 + 0.75));
}

namespace {

// Alpha-gauge gamma ratios; e1 = c0 c^{(2m0-1)/4} N^{-2m0} r1, e2 = c2^{-1} c^{(1+2m1)/4} N^{-2m1} r2.
std::pair<double, double> alpha_ratios(const AlphaData& a)
{
    const double N = a.N;
    const double r1 = gamma_fn(a.alpha0 / N) * gamma_fn((a.alpha0 + a.alpha1) / N) *
                      gamma_fn((a.alpha0 + a.alpha1 + a.alpha2) / N) /
                      (gamma_fn(a.alpha1 / N) * gamma_fn((a.alpha1 + a.alpha2) / N) *
                       gamma_fn((a.alpha1 + a.alpha2 + a.alpha3) / N));
    const double r2 = gamma_fn(a.alpha3 / N) * gamma_fn((a.alpha3 + a.alpha0) / N) *
                      gamma_fn((a.alpha3 + a.alpha0 + a.alpha1) / N) /
                      (gamma_fn(a.alpha2 / N) * gamma_fn((a.alpha2 + a.alpha3) / N) *
                       gamma_fn((a.alpha2 + a.alpha3 + a.alpha0) / N));
    return {r1, r2};
}

}  // namespace

ConnectionParams connection_from_holo(const AlphaData& a, const HoloData& h)
{
    const GammaData g = gamma_from_alpha(a);
    require_interior(g);
    const double m0 = -g.gamma0 / 2, m1 = -g.gamma1 / 2;
    const double c = h.c0 * h.c1 * h.c2 * h.c3;
    const auto [r1, r2] = alpha_ratios(a);
    ConnectionParams p;
    p.e1 = h.c0 * std::pow(c, (2 * m0 - 1) / 4) * std::pow(a.N, -2 * m0) * r1;
    p.e2 = std::pow(c, (1 + 2 * m1) / 4) * std::pow(a.N, -2 * m1) * r2 / h.c2;
    return p;
}

ConnectionParams connection_from_asymptotic(const GammaData& g)
{
    require_interior(g);
    if (!g.rho0 || !g.rho1)
        throw Error(ErrorKind::InvalidArgument, "asymptotic data needs rho0 and rho1");
    ConnectionParams p;
    p.e1 = std::exp(*g.rho0) * std::exp2(2 * g.gamma0) * gamma_ratio1(g);
    p.e2 = std::exp(*g.rho1) * std::exp2(2 * g.gamma1) * gamma_ratio2(g);
    return p;
}

std::pair<double, double> global_rho(const GammaData& g)
{
    require_interior(g);
    return {-std::log(std::exp2(2 * g.gamma0) * gamma_ratio1(g)),
            -std::log(std::exp2(2 * g.gamma1) * gamma_ratio2(g))};
}

std::pair<double, double> global_chat_resonant(BoundaryCase kase, const GammaData& gin, double ell0)
{
    const GammaData g = snap(gin);
    if (classify(g) != kase || kase == BoundaryCase::Interior)
        throw Error(ErrorKind::WrongCase, std::string("point is not on component ") + case_name(kase));
    if (kase == BoundaryCase::E2 || kase == BoundaryCase::V3) {
        const auto [r0, r1] = global_chat_resonant(reflect(kase), reflect(g), ell0);
        return {1.0 / r1, 1.0 / r0};
    }
    const double eu = kEulerGamma;
    const double a = 3.0 - g.gamma0;
    switch (kase) {
    case BoundaryCase::E1: {
        const double c0sq = -std::exp2(-2 - 2 * a) * a * a * a * gp::H(a, a / 4) / gp::G(a, 0.0);
        const double c1m2 = -eu - 4 / a - 0.5 * gp::dlogF(a, a / 8) - 0.5 * ell0;
        return {std::sqrt(positive_or_throw(c0sq, "chat0^2")),
                1.0 / std::sqrt(positive_or_throw(c1m2, "chat1^-2"))};
    }
    case BoundaryCase::E3: {
        const double prod = std::exp2(-2 * a) * a * a * gp::Q(a / 4) / gp::P(a, 0.0);
        const double quot =
            -eu - 2 / a - 0.25 * gp::dlogP(a, 0.0) - 0.25 * gp::dlogQ(a / 4) - 0.5 * ell0;
        positive_or_throw(prod, "chat0 chat1");
        positive_or_throw(quot, "chat1/chat0");
        return {std::sqrt(prod / quot), std::sqrt(prod * quot)};
    }
    case BoundaryCase::V1: {
        const double quot = 2 * eu + 0.5 * ell0;
        const double c0m2 = 4.0 / 3 * eu * eu * eu + kZeta3 / 24 + eu * eu * ell0 +
                            0.25 * eu * ell0 * ell0 + ell0 * ell0 * ell0 / 48;
        const double c0 = 1.0 / std::sqrt(positive_or_throw(c0m2, "chat0^-2"));
        return {c0, positive_or_throw(quot, "chat1/chat0") * c0};
    }
    case BoundaryCase::V2: {
        const double c0sq = -eu - 2 - 0.5 * gp::dlogS(1.0) - 0.5 * ell0;
        const double c1m2 = -eu - 1 - 0.5 * gp::dlogT(0.5) - 0.5 * ell0;
        return {std::sqrt(positive_or_throw(c0sq, "chat0^2")),
                1.0 / std::sqrt(positive_or_throw(c1m2, "chat1^-2"))};
    }
    default: break;
    }
    throw Error(ErrorKind::WrongCase, "unhandled component");
}

double canonical_ell0(BoundaryCase kase, const GammaData& gin)
{
    const GammaData g = snap(gin);
    if (classify(g) != kase || kase == BoundaryCase::Interior)
        throw Error(ErrorKind::WrongCase, std::string("point is not on component ") + case_name(kase));
    if (kase == BoundaryCase::E2 || kase == BoundaryCase::V3) return canonical_ell0(reflect(kase), reflect(g));
    const double eu = kEulerGamma;
    const double a = 3.0 - g.gamma0;
    // The log(c/N^4)-dependent quantity of each case is set to 1.
    switch (kase) {
    case BoundaryCase::E1: return 2 * (-eu - 4 / a - 0.5 * gp::dlogF(a, a / 8) - 1);
    case BoundaryCase::E3: return 2 * (-eu - 2 / a - 0.25 * gp::dlogP(a, 0.0) - 0.25 * gp::dlogQ(a / 4) - 1);
    case BoundaryCase::V1: return 2 * (1 - 2 * eu);
    case BoundaryCase::V2: return 2 * (-eu - 2 - 0.5 * gp::dlogS(1.0) - 1);
    default: break;
    }
    throw Error(ErrorKind::WrongCase, "unhandled component");
}

HoloData global_holo(const GammaData& gin, double N, double cProd)
{
    const BoundaryCase k = classify(gin);
    const GammaData g = snap(gin);
    if (std::isnan(cProd))
        cProd = k == BoundaryCase::Interior ? 1.0 : std::pow(N, 4) * std::exp(canonical_ell0(k, g));
    if (k != BoundaryCase::Interior) {
        const auto [c0, c1] = global_chat_resonant(k, g, std::log(cProd / std::pow(N, 4)));
        return holo_from_chat(g, c0, c1, N, cProd);
    }
    const AlphaData a = rescale(alpha_from_gamma(g), N);
    const double m0 = -g.gamma0 / 2, m1 = -g.gamma1 / 2;
    const auto [r1, r2] = alpha_ratios(a);
    const double c0 = std::pow(N, 2 * m0) * std::pow(cProd, (1 - 2 * m0) / 4) / r1;
    const double c2 = std::pow(N, -2 * m1) * std::pow(cProd, (1 + 2 * m1) / 4) * r2;
    return make_holo(c0, std::sqrt(cProd / (c0 * c2)), c2);
}

ResonantProfile resonant_profile(const GammaData& gin, BoundaryCase kase)
{
    const GammaData g = snap(gin);
    if (classify(g) != kase || kase == BoundaryCase::Interior)
        throw Error(ErrorKind::WrongCase, std::string("point is not on component ") + case_name(kase));
    ResonantProfile p;
    p.kase = kase;
    if (kase == BoundaryCase::E2 || kase == BoundaryCase::V3) {
        // w -> (-w1, -w0) under the reflection.
        ResonantProfile r = resonant_profile(reflect(g), reflect(kase));
        for (auto& ch : r.channels) {
            const double c0 = ch.cw0;
            ch.cw0 = -ch.cw1;
            ch.cw1 = -c0;
        }
        r.kase = kase;
        return r;
    }
    const double eu = kEulerGamma;
    const double a = 3.0 - g.gamma0;
    switch (kase) {
    case BoundaryCase::E1: {
        const double k0 = -std::exp2(2 + 2 * a) / (a * a * a) * gp::G(a, 0.0) / gp::H(a, a / 4);
        p.channels.push_back({"2w0", 1, 0, g.gamma0, 1, {k0}});
        p.channels.push_back({"2w1", 0, 1, 1, 1, {-eu - 4 / a - 0.5 * gp::dlogF(a, a / 8), -2}});
        break;
    }
    case BoundaryCase::E3: {
        const double k0 = std::exp2(-2 * a) * a * a * gp::Q(a / 4) / gp::P(a, 0.0);
        p.channels.push_back({"2(w0+w1)", 1, 1, g.gamma0 + g.gamma1, -2, {k0}});
        p.channels.push_back(
            {"2(w0-w1)", 1, -1, 2, 2,
             {-eu - 2 / a - 0.25 * gp::dlogP(a, 0.0) - 0.25 * gp::dlogQ(a / 4), -2}});
        break;
    }
    case BoundaryCase::V1: {
        const double z3 = kZeta3, e2 = eu * eu, e3 = e2 * eu;
        p.channels.push_back(
            {"2w0", 1, 0, 3, 1, {-z3 / 24 - 4.0 / 3 * e3, -4 * e2, -4 * eu, -4.0 / 3}});
        p.channels.push_back({"2(w0+w1)", 1, 1, 4, 1,
                              {-eu * z3 / 12 + 4.0 / 3 * e3 * eu, 16.0 / 3 * e3 - z3 / 12, 8 * e2,
                               16.0 / 3 * eu, 4.0 / 3}});
        break;
    }
    case BoundaryCase::V2: {
        const double k = -eu - 2 - 0.5 * gp::dlogS(1.0);
        p.channels.push_back({"2w0", 1, 0, -1, -1, {k, -2}});
        p.channels.push_back({"2w1", 0, 1, 1, 1, {-eu - 1 - 0.5 * gp::dlogT(0.5), -2}});
        break;
    }
    default: throw Error(ErrorKind::WrongCase, "unhandled component");
    }
    return p;
}

}  // namespace ttt
