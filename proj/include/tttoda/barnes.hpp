#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "tttoda/core_data.hpp"

namespace ttt {

using cplx = std::complex<double>;

// Exponents of T = (th - a0)(th - a1)(th - a2)(th - a3) - s^4, th = s d/ds, a0 = 0.
struct BarnesSpec {
    double a1 = 1, a2 = 2, a3 = 3;
    double m0 = 0;
    BoundaryCase kase = BoundaryCase::Interior;
};
BarnesSpec barnes_spec(double a1, double a2, double a3);
BarnesSpec barnes_spec(const GammaData& g);

// Leading constant of g0(s) ~ kappa0 s^{m0} e^{-s}.
cplx laplace_constant(double m0);

// g0(s) = sum coef * s^expo * (log s)^logp.
struct SeriesTerm {
    cplx coef;
    double expo;
    int logp;
};
struct SeriesExpansion {
    std::vector<SeriesTerm> terms;
    cplx operator()(cplx s) const;
};
// Residue series, truncated for the given s.
SeriesExpansion g0_expansion(const BarnesSpec& spec, cplx s);
cplx g0_series(const BarnesSpec& spec, cplx s, double s_max = 10.0);

// Vertical-line integral at Re t = c. NaN picks c = -max(1/4, |s|/4), which
// sits near the saddle for large |s| and avoids cancellation.
cplx g0_quadrature(const BarnesSpec& spec, cplx s, double c = std::numeric_limits<double>::quiet_NaN(),
                   double truncation_scale = 1.0);
cplx g0_laplace(const BarnesSpec& spec, double s);
// Triple integral over (0, inf)^3, trapezoid in y = log x. Real s in [1, 8].
cplx g0_triple(const BarnesSpec& spec, double s, double step = 0.2);

// |T g0| / |g0| at s0 with T applied exactly to the truncated series.
double scalar_ode_residual(const BarnesSpec& spec, double s0);
// Same operator applied to an arbitrary expansion (negative controls).
double scalar_ode_residual(const BarnesSpec& spec, const SeriesExpansion& e, double s0);

}  // namespace ttt
