#include "tttoda/toda_ode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <boost/math/special_functions/bessel.hpp>

#include "tttoda/dopri5.hpp"
#include "tttoda/errors.hpp"
#include "tttoda/specfun.hpp"

namespace ttt {

namespace {

constexpr double kMaxExp = 700.0;
const double kSqrt2 = std::sqrt(2.0);

// The integrator works in tau = log x with p_i = x w_i', where the radial
// Laplacian becomes d^2/dtau^2 / x^2:
//   p_i' = 2 x^2 (...),  w_i' = p_i.
using Y = std::array<double, 4>;

struct Forcing {
    double f0, f1;
    double maxarg;
};

Forcing forcing(double w0, double w1)
{
    const double a = 2 * (w1 - w0), b = 4 * w0, c = -4 * w1;
    const double m = std::max({a, b, c});
    if (!(m <= kMaxExp)) return {0, 0, m};
    // expm1 keeps the near-zero regime at large x free of cancellation.
    const double ea = std::expm1(a);
    return {2 * (std::expm1(b) - ea), 2 * (ea - std::expm1(c)), m};
}

Y log_rhs(double tau, const Y& y)
{
    const Forcing f = forcing(y[0], y[1]);
    if (f.maxarg > kMaxExp) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf, inf, inf, inf};
    }
    const double x2 = std::exp(2 * tau);
    return {y[2], y[3], x2 * f.f0, x2 * f.f1};
}

TodaState to_state(double tau, const Y& y)
{
    const double x = std::exp(tau);
    return {x, y[0], y[1], y[2] / x, y[3] / x};
}

double state_norm(const TodaState& s)
{
    return std::max({std::abs(s.w0), std::abs(s.w1), std::abs(s.dw0), std::abs(s.dw1)});
}

}  // namespace

std::pair<double, double> rhs(const TodaState& s)
{
    if (!(s.x > 0)) throw Error(ErrorKind::InvalidArgument, "rhs needs x > 0");
    const Forcing f = forcing(s.w0, s.w1);
    if (f.maxarg > kMaxExp) throw Error(ErrorKind::Overflow, "exponent argument exceeds 700");
    return {f.f0 - s.dw0 / s.x, f.f1 - s.dw1 / s.x};
}

Trajectory integrate(const TodaState& init, double x_to, const TodaTolerance& tol, int dense_per_step,
                     const std::string& initializer)
{
    if (!(init.x > 0) || !(x_to > 0) || init.x == x_to)
        throw Error(ErrorKind::InvalidArgument, "integration needs distinct positive endpoints");
    for (double v : {init.w0, init.w1, init.dw0, init.dw1})
        if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "initial state is not finite");
    if (forcing(init.w0, init.w1).maxarg > kMaxExp)
        throw Error(ErrorKind::Overflow, "initial exponent exceeds 700");

    Trajectory tr;
    tr.direction = x_to < init.x ? "inward" : "outward";
    tr.initializer = initializer;
    tr.rtol = tol.rtol;
    tr.atol = tol.atol;
    tr.samples.push_back({init, 0.0});

    Dopri5<double, 4> rk;
    rk.rtol = tol.rtol;
    rk.atol = tol.atol;
    rk.h_min = 1e-13;
    rk.h_max = 0.25;
    bool blown = false;
    rk.stop = [&](double tau, const Y& y) {
        blown = state_norm(to_state(tau, y)) > tol.blowup_norm;
        return blown;
    };
    auto obs = [&](const Dopri5<double, 4>::Dense& d, const Y& y1) {
        // ODE residual at the step midpoint, derivative of the interpolant by central differences.
        const double tm = d.x0 + 0.5 * d.h, dt = 1e-3 * std::abs(d.h);
        const Y ym = d(tm), yp = d(tm + dt), yn = d(tm - dt), fm = log_rhs(tm, ym);
        for (int i = 0; i < 4; ++i) {
            const double r = std::abs((yp[i] - yn[i]) / (2 * dt) - fm[i]) / (1 + std::abs(fm[i]));
            if (std::isfinite(r)) tr.ode_residual = std::max(tr.ode_residual, r);
        }
        const double err = rk.err_est;
        for (int k = 1; k <= dense_per_step; ++k) {
            const double tk = d.x0 + d.h * k / (dense_per_step + 1);
            tr.samples.push_back({to_state(tk, d(tk)), err});
        }
        tr.samples.push_back({to_state(d.x0 + d.h, y1), err});
    };
    Y y{init.w0, init.w1, init.x * init.dw0, init.x * init.dw1};
    const double tau0 = std::log(init.x), tau1 = std::log(x_to);
    const auto st = rk.integrate(log_rhs, tau0, y, tau1, obs);
    tr.steps = rk.steps;
    tr.rejected = rk.rejected;
    // Snap the final abscissa onto x_to exactly.
    if (st == Dopri5<double, 4>::Status::Ok) tr.samples.back().s.x = x_to;

    char where[64];
    std::snprintf(where, sizeof where, " near x = %.6g", tr.back().x);
    if (st == Dopri5<double, 4>::Status::Stopped || blown)
        throw Error(ErrorKind::BlowUp, std::string("state norm exceeded the blow-up bound") + where);
    if (st != Dopri5<double, 4>::Status::Ok) {
        // Logarithmic singularities of the Toda system show up as step collapse
        // with a large exponent; report those as blow-up.
        const TodaState& s = tr.back();
        if (forcing(s.w0, s.w1).maxarg > 50 || state_norm(s) > tol.blowup_norm)
            throw Error(ErrorKind::BlowUp, std::string("solution runs into a singularity") + where);
        throw Error(ErrorKind::StepUnderflow, std::string("step size collapsed") + where);
    }
    return tr;
}

TodaState init_small_x(const GammaData& g, double x0)
{
    double r0, r1;
    if (g.rho0 && g.rho1) {
        r0 = *g.rho0;
        r1 = *g.rho1;
    } else {
        std::tie(r0, r1) = global_rho(g);
    }
    const double L = std::log(x0);
    return {x0, 0.5 * (g.gamma0 * L + r0), 0.5 * (g.gamma1 * L + r1), g.gamma0 / (2 * x0), g.gamma1 / (2 * x0)};
}

TodaState init_small_x_resonant(const ResonantProfile& p, double x0)
{
    if (p.channels.size() != 2) throw Error(ErrorKind::InvalidArgument, "resonant profile needs two channels");
    const ProfileChannel &a = p.channels[0], &b = p.channels[1];
    const double det = a.cw0 * b.cw1 - a.cw1 * b.cw0;
    if (det == 0) throw Error(ErrorKind::StructureInconsistent, "profile channels are dependent");
    auto solve = [&](double ra, double rb) {
        return std::pair{(ra * b.cw1 - a.cw1 * rb) / det, (a.cw0 * rb - ra * b.cw0) / det};
    };
    const auto [w0, w1] = solve(0.5 * a.value(x0), 0.5 * b.value(x0));
    const auto [d0, d1] = solve(0.5 * a.deriv(x0), 0.5 * b.deriv(x0));
    for (double v : {w0, w1, d0, d1})
        if (!std::isfinite(v))
            throw Error(ErrorKind::InvalidArgument, "resonant profile is not defined at this x0");
    return {x0, w0, w1, d0, d1};
}

TodaState init_large_x(const StokesData& s, double x1)
{
    const double sp = std::sqrt(kPi);
    const double A = -s.s1 * std::pow(2.0, -0.75) / sp, B = s.s2 * std::pow(2.0, -1.5) / sp;
    const double ku = 2 * kSqrt2, kv = 4.0;
    const double rx = 1 / std::sqrt(x1);
    const double u = A * rx * std::exp(-ku * x1), v = B * rx * std::exp(-kv * x1);
    const double du = A * std::exp(-ku * x1) * (-ku * rx - 0.5 * rx / x1);
    const double dv = B * std::exp(-kv * x1) * (-kv * rx - 0.5 * rx / x1);
    return {x1, 0.5 * (u + v), 0.5 * (u - v), 0.5 * (du + dv), 0.5 * (du - dv)};
}

TodaState init_large_x_bessel(const StokesData& s, double x1)
{
    using boost::math::cyl_bessel_k;
    const double sp = std::sqrt(kPi);
    const double ku = 2 * kSqrt2, kv = 4.0;
    const double A = -s.s1 * std::pow(2.0, -0.75) / sp * std::sqrt(2 * ku / kPi);
    const double B = s.s2 * std::pow(2.0, -1.5) / sp * std::sqrt(2 * kv / kPi);
    const double u = A * cyl_bessel_k(0, ku * x1), du = -A * ku * cyl_bessel_k(1, ku * x1);
    // v'' + v'/x = 16 v + 8 u^2 at second order; u^2 - u'^2/16 solves the
    // forced part up to O(u^2 / x^2).
    const double v = B * cyl_bessel_k(0, kv * x1) + u * u - du * du / 16;
    const double dv = -B * kv * cyl_bessel_k(1, kv * x1) + u * du + du * du / (8 * x1);
    return {x1, 0.5 * (u + v), 0.5 * (u - v), 0.5 * (du + dv), 0.5 * (du - dv)};
}

Trajectory integrate_inward(const StokesData& s, const InwardOptions& o)
{
    const TodaState in = o.bessel ? init_large_x_bessel(s, o.x1) : init_large_x(s, o.x1);
    TodaTolerance tol = o.tol;
    const double size = std::abs(in.w0) + std::abs(in.w1);
    if (size > 0) tol.atol = o.tol.atol * std::min(1.0, size);
    return integrate(in, o.x0, tol, o.dense_per_step, o.bessel ? "large-x K0" : "large-x leading");
}

namespace {

std::pair<double, double> small_window(const Trajectory& t, double xlo, double xhi)
{
    if (t.samples.empty()) throw Error(ErrorKind::InvalidArgument, "empty trajectory");
    double xmin = t.samples.front().s.x;
    for (const auto& s : t.samples) xmin = std::min(xmin, s.s.x);
    if (xhi <= 0) return {xmin, 10 * xmin};
    return {xlo, xhi};
}

// Least squares by Householder QR; returns the first two coefficients.
std::pair<double, double> lsq_head(std::vector<std::vector<double>> A, std::vector<double> b)
{
    const std::size_t m = A.size(), n = A.front().size();
    if (m < n + 1) throw Error(ErrorKind::InvalidArgument, "fit window holds too few samples");
    for (std::size_t k = 0; k < n; ++k) {
        double nrm = 0;
        for (std::size_t i = k; i < m; ++i) nrm += A[i][k] * A[i][k];
        nrm = std::sqrt(nrm);
        if (nrm == 0) throw Error(ErrorKind::InvalidArgument, "degenerate fit basis");
        const double alpha = A[k][k] > 0 ? -nrm : nrm;
        std::vector<double> v(m, 0.0);
        for (std::size_t i = k; i < m; ++i) v[i] = A[i][k];
        v[k] -= alpha;
        double vv = 0;
        for (std::size_t i = k; i < m; ++i) vv += v[i] * v[i];
        if (vv == 0) continue;
        for (std::size_t j = k; j < n; ++j) {
            double d = 0;
            for (std::size_t i = k; i < m; ++i) d += v[i] * A[i][j];
            for (std::size_t i = k; i < m; ++i) A[i][j] -= 2 * d / vv * v[i];
        }
        double d = 0;
        for (std::size_t i = k; i < m; ++i) d += v[i] * b[i];
        for (std::size_t i = k; i < m; ++i) b[i] -= 2 * d / vv * v[i];
    }
    std::vector<double> c(n);
    for (std::size_t k = n; k-- > 0;) {
        double r = b[k];
        for (std::size_t j = k + 1; j < n; ++j) r -= A[k][j] * c[j];
        c[k] = r / A[k][k];
    }
    return {c[0], c[1]};
}

}  // namespace

SmallFit fit_small_x_refined(const Trajectory& t, double xlo, double xhi, double kmin, double kmax)
{
    std::tie(xlo, xhi) = small_window(t, xlo, xhi);
    SmallFit f = fit_small_x(t, xlo, xhi);
    const double slack = 1e-12 * xhi;
    for (int pass = 0; pass < 2; ++pass) {
        double base[3] = {2 + f.gamma1 - f.gamma0, 2 + 2 * f.gamma0, 2 - 2 * f.gamma1};
        std::vector<double> ks;
        auto add = [&](double k) {
            if (k < kmin || k > kmax) return;
            // Nearly equal exponents make the basis collinear over one decade.
            for (double q : ks)
                if (std::abs(q - k) < 0.2) return;
            ks.push_back(k);
        };
        // Sums involving a near-resonant exponent are as unreliable as the exponent itself.
        for (int i = 0; i < 3; ++i) {
            if (base[i] < kmin) base[i] = 2 * kmax;
        }
        for (int i = 0; i < 3; ++i) {
            add(base[i]);
            for (int j = i; j < 3; ++j) {
                add(base[i] + base[j]);
                for (int l = j; l < 3; ++l) add(base[i] + base[j] + base[l]);
            }
        }
        std::vector<std::vector<double>> A;
        std::vector<double> b0, b1;
        const double lc = std::log(std::sqrt(xlo * xhi));
        for (const auto& sm : t.samples) {
            const double x = sm.s.x;
            if (x < xlo - slack || x > xhi + slack) continue;
            std::vector<double> row{std::log(x) - lc, 1.0};
            for (double k : ks) row.push_back(std::pow(x / xhi, k));
            A.push_back(row);
            b0.push_back(2 * sm.s.w0);
            b1.push_back(2 * sm.s.w1);
        }
        if (A.empty()) throw Error(ErrorKind::InvalidArgument, "fit window holds no samples");
        const auto [g0, r0] = lsq_head(A, b0);
        const auto [g1, r1] = lsq_head(A, b1);
        f = {g0, g1, r0 - g0 * lc, r1 - g1 * lc};
    }
    return f;
}

SmallFit fit_small_x(const Trajectory& t, double xlo, double xhi)
{
    std::tie(xlo, xhi) = small_window(t, xlo, xhi);
    const double slack = 1e-12 * xhi;
    std::vector<std::array<double, 3>> pts;  // log x, 2 w0, 2 w1
    for (const auto& sm : t.samples)
        if (sm.s.x >= xlo - slack && sm.s.x <= xhi + slack)
            pts.push_back({std::log(sm.s.x), 2 * sm.s.w0, 2 * sm.s.w1});
    const double n = static_cast<double>(pts.size());
    double mL = 0, m0 = 0, m1 = 0;
    for (const auto& q : pts) {
        mL += q[0] / n;
        m0 += q[1] / n;
        m1 += q[2] / n;
    }
    double sLL = 0, sL0 = 0, sL1 = 0;
    for (const auto& q : pts) {
        const double d = q[0] - mL;
        sLL += d * d;
        sL0 += d * (q[1] - m0);
        sL1 += d * (q[2] - m1);
    }
    if (pts.size() < 2 || !(sLL > 0))
        throw Error(ErrorKind::InvalidArgument, "fit window holds fewer than two distinct samples");
    SmallFit f;
    f.gamma0 = sL0 / sLL;
    f.gamma1 = sL1 / sLL;
    f.rho0 = m0 - f.gamma0 * mL;
    f.rho1 = m1 - f.gamma1 * mL;
    return f;
}

LargeFit fit_large_x(const Trajectory& t, std::array<double, 2> uw, std::array<double, 2> vw, bool strict)
{
    if (t.samples.empty()) throw Error(ErrorKind::InvalidArgument, "empty trajectory");
    double xmax = 0;
    for (const auto& s : t.samples) xmax = std::max(xmax, s.s.x);
    if (uw[1] <= 0) uw = {xmax / 10, xmax};
    auto above_noise = [&](double y) { return std::abs(y) > 1e2 * (t.atol + t.rtol * std::abs(y)); };
    const double sp = std::sqrt(kPi);
    double su = 0, sv = 0;
    LargeFit f;
    for (const auto& sm : t.samples) {
        const TodaState& s = sm.s;
        const double u = s.w0 + s.w1, v = s.w0 - s.w1;
        if (s.x >= uw[0] && s.x <= uw[1] && above_noise(u)) {
            su += u * std::sqrt(s.x) * std::exp(2 * kSqrt2 * s.x);
            ++f.n1;
        }
        if (s.x >= vw[0] && s.x <= vw[1] && above_noise(v)) {
            sv += v * std::sqrt(s.x) * std::exp(4 * s.x);
            ++f.n2;
        }
    }
    f.s1_below_noise = f.n1 == 0;
    f.s2_below_noise = f.n2 == 0;
    if (f.n1) f.s1 = -su / f.n1 * std::pow(2.0, 0.75) * sp;
    if (f.n2) f.s2 = sv / f.n2 * std::pow(2.0, 1.5) * sp;
    if (strict && (f.s1_below_noise || f.s2_below_noise))
        throw Error(ErrorKind::SignalBelowNoise, "a large-x channel has no sample above the noise floor");
    return f;
}

void write_csv(std::ostream& os, const Trajectory& t)
{
    os << "x,w0,w1,dw0,dw1,err_est\n";
    char buf[256];
    for (const auto& sm : t.samples) {
        const TodaState& s = sm.s;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", s.x, s.w0, s.w1, s.dw0, s.dw1,
                      sm.err_est);
        os << buf;
    }
}

}  // namespace ttt
