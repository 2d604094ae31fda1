#pragma once

#include <array>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tttoda/correspondence.hpp"

namespace ttt {

// Radial reduction of the anti-symmetric Toda system. w2 = -w1, w3 = -w0 are implied.
struct TodaState {
    double x = 1.0;
    double w0 = 0.0, w1 = 0.0;
    double dw0 = 0.0, dw1 = 0.0;
};

struct TodaSample {
    TodaState s;
    double err_est = 0.0;  // normalized local error of the step that produced the sample
};

struct Trajectory {
    std::vector<TodaSample> samples;
    std::string direction;    // "inward" or "outward"
    std::string initializer;  // free-form label
    double rtol = 1e-11, atol = 1e-13;
    long steps = 0, rejected = 0;
    // Largest |y' - f(y)| / (1 + |f(y)|) at step midpoints of the dense output.
    double ode_residual = 0.0;

    const TodaState& front() const { return samples.front().s; }
    const TodaState& back() const { return samples.back().s; }
};

struct TodaTolerance {
    double rtol = 1e-11;
    double atol = 1e-13;
    double blowup_norm = 1e8;
};

// (w0'', w1'') at the given state. Throws Overflow if an exponent exceeds 700.
std::pair<double, double> rhs(const TodaState& s);

// Adaptive Dormand-Prince 5(4). Samples are the accepted step endpoints plus
// `dense_per_step` interior points from the continuous extension.
Trajectory integrate(const TodaState& init, double x_to, const TodaTolerance& tol = {}, int dense_per_step = 0,
                     const std::string& initializer = "");

TodaState init_small_x(const GammaData& g, double x0 = 1e-4);
TodaState init_small_x_resonant(const ResonantProfile& p, double x0 = 1e-4);
TodaState init_large_x(const StokesData& s, double x1 = 8.0);
// Same leading asymptotics, but each channel is the exact decaying solution
// c K0(kappa x) of the linearized system, so no 1/x truncation error enters.
// The v channel also carries the particular solution forced by u^2.
TodaState init_large_x_bessel(const StokesData& s, double x1 = 8.0);

// Inward run from the large-x data of s. atol is scaled down to the size of
// the initial state so the exponentially small data are resolved.
struct InwardOptions {
    double x1 = 8.0, x0 = 1e-4;
    bool bessel = true;
    int dense_per_step = 4;
    TodaTolerance tol;
};
Trajectory integrate_inward(const StokesData& s, const InwardOptions& o = {});

struct SmallFit {
    double gamma0, gamma1, rho0, rho1;
};
// Least squares of 2 w_i against (log x, 1) on [xlo, xhi]. Nonpositive xhi
// means [x_min, 10 x_min].
SmallFit fit_small_x(const Trajectory& t, double xlo = 0.0, double xhi = 0.0);

// Fit with the leading small-x corrections C x^k added to the basis, where k
// runs over the exponents 2 + gamma1 - gamma0, 2 + 2 gamma0, 2 - 2 gamma1 and
// their sums of two and three, taken from a first plain fit. Exponents below `kmin`
// (near-resonant) or above `kmax` are left out.
SmallFit fit_small_x_refined(const Trajectory& t, double xlo = 0.0, double xhi = 0.0, double kmin = 0.3,
                             double kmax = 4.0);

struct LargeFit {
    double s1 = 0.0, s2 = 0.0;
    bool s1_below_noise = false, s2_below_noise = false;
    int n1 = 0, n2 = 0;  // samples used
};
// Regression of the rescaled u, v channels against constants. Windows default
// to the last decade of the trajectory for u and [3, 5] for v. Channels with
// no sample above the noise floor are flagged; `strict` throws SignalBelowNoise.
LargeFit fit_large_x(const Trajectory& t, std::array<double, 2> u_window = {0, 0},
                     std::array<double, 2> v_window = {3, 5}, bool strict = false);

void write_csv(std::ostream& os, const Trajectory& t);

}  // namespace ttt
