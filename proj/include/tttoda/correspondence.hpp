#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "tttoda/core_data.hpp"

namespace ttt {

struct StokesData {
    double s1 = 0.0, s2 = 0.0;
};

// Generic points use e1, e2. E1/E3 use e1, f1. V1/V2 use f1, f2.
struct ConnectionParams {
    BoundaryCase kase = BoundaryCase::Interior;
    double e1 = 1.0, e2 = 1.0;
    double f1 = 0.0, f2 = 0.0;
};

// One channel of the small-x expansion of a global resonant solution:
//   2 (cw0 w0 + cw1 w1) = klog log x + mult log Poly(L),   L = log(x/4),
// with Poly(L) = sum_k poly[k] L^k.
struct ProfileChannel {
    std::string name;
    double cw0 = 0.0, cw1 = 0.0;
    double klog = 0.0;
    double mult = 1.0;
    std::vector<double> poly;

    double poly_at(double x) const;
    double dpoly_at(double x) const;  // d Poly / dx
    // Right-hand side and its x-derivative.
    double value(double x) const;
    double deriv(double x) const;
};

struct ResonantProfile {
    BoundaryCase kase = BoundaryCase::Interior;
    std::vector<ProfileChannel> channels;
};

StokesData stokes_from_gamma(const GammaData& g);
StokesData stokes_from_alpha(const AlphaData& a);

std::pair<double, double> rho_from_holo(const WeightData& w);

// Gamma ratios of the generic connection parameters in the gamma gauge, so
// that e1 = exp(rho0) 2^{2 gamma0} ratio1 and e2 = exp(rho1) 2^{2 gamma1} ratio2.
double gamma_ratio1(const GammaData& g);
double gamma_ratio2(const GammaData& g);

ConnectionParams connection_from_holo(const AlphaData& a, const HoloData& h);
ConnectionParams connection_from_asymptotic(const GammaData& g);

// Holomorphic data of the global solution in the gauge (N, cProd). NaN cProd
// picks 1 at interior points and exp(canonical_ell0) N^4 at resonant ones.
HoloData global_holo(const GammaData& g, double N = 1.0, double cProd = std::numeric_limits<double>::quiet_NaN());
// A gauge log(c/N^4) in which the resonant global solution exists (the
// positivity constraints of the resonant holomorphic data hold).
double canonical_ell0(BoundaryCase kase, const GammaData& g);
// chat of the global solution on a resonant component; ell0 = log(c / N^4).
std::pair<double, double> global_chat_resonant(BoundaryCase kase, const GammaData& g, double ell0);
std::pair<double, double> global_rho(const GammaData& g);

ResonantProfile resonant_profile(const GammaData& g, BoundaryCase kase);

}  // namespace ttt
