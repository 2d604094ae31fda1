#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oracles/oracle_values.hpp"
#include "tttoda/errors.hpp"
#include "tttoda/specfun.hpp"
#include "tttoda/toda_ode.hpp"

using namespace ttt;
using doctest::Approx;

namespace {

Trajectory synthetic(double xlo, double xhi, int n, auto state_at)
{
    Trajectory t;
    for (int i = 0; i < n; ++i) {
        const double x = xlo * std::pow(xhi / xlo, double(i) / (n - 1));
        t.samples.push_back({state_at(x), 0.0});
    }
    return t;
}

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("toda")
{
    TEST_CASE("zero state is a fixed point")
    {
        const auto [a, b] = rhs({3.0, 0, 0, 0, 0});
        CHECK(a == 0.0);
        CHECK(b == 0.0);
        const Trajectory t = integrate({10.0, 0, 0, 0, 0}, 1e-3);
        for (const auto& s : t.samples) {
            CHECK(s.s.w0 == 0.0);
            CHECK(s.s.w1 == 0.0);
        }
        CHECK(t.back().x == 1e-3);
    }

    TEST_CASE("linearized rates of the u and v channels")
    {
        const double e = 1e-9, x = 2.0;
        // u = w0 + w1 = e, v = 0, no first-derivative term
        auto [a0, a1] = rhs({x, e / 2, e / 2, 0, 0});
        CHECK((a0 + a1) / e == Approx(8.0).epsilon(1e-6));
        CHECK(std::abs(a0 - a1) / e < 1e-6);
        std::tie(a0, a1) = rhs({x, e / 2, -e / 2, 0, 0});
        CHECK((a0 - a1) / e == Approx(16.0).epsilon(1e-6));
        // 2 sqrt 2 and 4 are the decay rates
        CHECK(std::sqrt(8.0) == Approx(2 * std::sqrt(2.0)));
    }

    TEST_CASE("first-derivative term of the radial Laplacian")
    {
        const auto [a0, a1] = rhs({0.5, 0, 0, 1.0, -2.0});
        CHECK(a0 == Approx(-2.0));
        CHECK(a1 == Approx(4.0));
    }

    TEST_CASE("reflection w -> (-w1, -w0) commutes with the flow")
    {
        const TodaState a{1.0, 0.03, -0.01, 0.02, 0.005};
        const TodaState b{1.0, -a.w1, -a.w0, -a.dw1, -a.dw0};
        const Trajectory ta = integrate(a, 2.0), tb = integrate(b, 2.0);
        CHECK(std::abs(tb.back().w0 + ta.back().w1) < 1e-10);
        CHECK(std::abs(tb.back().w1 + ta.back().w0) < 1e-10);
        CHECK(std::abs(tb.back().dw0 + ta.back().dw1) < 1e-10);
    }

    TEST_CASE("rhs reports overflow")
    {
        CHECK(kind_of([] { rhs({1.0, 400, -400, 0, 0}); }) == ErrorKind::Overflow);
    }

    TEST_CASE("leading large-x data at x = 6 for gamma = (1, 0)")
    {
        const auto s = stokes_from_gamma({1, 0});
        const TodaState st = init_large_x(s, 6.0);
        CHECK(st.w0 + st.w1 == Approx(oracle::kU6At10).epsilon(1e-13));
        const TodaState z = init_large_x({0, 0}, 6.0);
        CHECK(z.w0 == 0.0);
        CHECK(z.dw1 == 0.0);
        // derivative of A x^{-1/2} e^{-k x}
        const double h = 1e-5;
        const TodaState p = init_large_x(s, 6.0 + h), m = init_large_x(s, 6.0 - h);
        CHECK((p.w0 - m.w0) / (2 * h) == Approx(st.dw0).epsilon(1e-8));
    }

    TEST_CASE("Bessel large-x data agrees with the leading terms to O(1/x)")
    {
        const auto s = stokes_from_gamma({0.5, 0.5});
        const TodaState a = init_large_x(s, 20.0), b = init_large_x_bessel(s, 20.0);
        const double u = a.w0 + a.w1, ub = b.w0 + b.w1;
        CHECK(std::abs(ub / u - 1) < 1.0 / (8 * 2 * std::sqrt(2.0) * 20.0) * 1.1);
        CHECK(std::abs(ub / u - 1) > 0);
    }

    TEST_CASE("small-x data from gamma and rho")
    {
        GammaData g{1, 0, 0.2, -0.3};
        const TodaState s = init_small_x(g, 1e-4);
        CHECK(2 * s.w0 == Approx(std::log(1e-4) + 0.2));
        CHECK(2 * s.w1 == Approx(-0.3));
        CHECK(s.dw0 == Approx(0.5e4));
        const TodaState gs = init_small_x({1, 0}, 1e-4);
        CHECK(2 * gs.w0 - std::log(1e-4) == Approx(oracle::kRho0At10).epsilon(1e-12));
    }

    TEST_CASE("V1 resonant data at x0 = 1e-4")
    {
        const double x0 = 1e-4, L = std::log(x0 / 4), eu = kEulerGamma;
        const TodaState s = init_small_x_resonant(resonant_profile({3, 1}, BoundaryCase::V1), x0);
        const double ref = 0.5 * (3 * std::log(x0) + std::log(-kZeta3 / 24 - 4.0 / 3 * eu * eu * eu -
                                                              4 * eu * eu * L - 4 * eu * L * L - 4.0 / 3 * L * L * L));
        CHECK(s.w0 == Approx(ref).epsilon(1e-12));
    }

    TEST_CASE("V2 resonant derivative at x0 = 1e-4")
    {
        const double x0 = 1e-4;
        const TodaState s = init_small_x_resonant(resonant_profile({-1, 1}, BoundaryCase::V2), x0);
        const double ref =
            0.5 * (1 / x0 + (-2 / x0) / (-2 * kEulerGamma + 2 * std::log(2.0) - 2 * std::log(x0)));
        CHECK(s.dw1 == Approx(ref).epsilon(1e-12));
    }

    TEST_CASE("small-x regression recovers exact log-linear data")
    {
        const double g0 = 0.7, g1 = -0.4, r0 = 0.31, r1 = -1.2;
        const Trajectory t = synthetic(1e-4, 1e-3, 40, [&](double x) {
            return TodaState{x, 0.5 * (g0 * std::log(x) + r0), 0.5 * (g1 * std::log(x) + r1), 0, 0};
        });
        const SmallFit f = fit_small_x(t);
        CHECK(std::abs(f.gamma0 - g0) < 1e-12);
        CHECK(std::abs(f.gamma1 - g1) < 1e-12);
        CHECK(std::abs(f.rho0 - r0) < 1e-12);
        CHECK(std::abs(f.rho1 - r1) < 1e-12);
    }

    TEST_CASE("large-x regression recovers the amplitudes of exact leading data")
    {
        const StokesData s{1.3, -0.7};
        const Trajectory t = synthetic(2.0, 8.0, 200, [&](double x) { return init_large_x(s, x); });
        const LargeFit f = fit_large_x(t);
        CHECK(f.s1 == Approx(s.s1).epsilon(1e-12));
        CHECK(f.s2 == Approx(s.s2).epsilon(1e-12));
        CHECK_FALSE(f.s1_below_noise);
        CHECK_FALSE(f.s2_below_noise);
    }

    TEST_CASE("zero trajectory is flagged as below the noise floor")
    {
        const Trajectory t = integrate({8.0, 0, 0, 0, 0}, 1.0, {}, 4);
        const LargeFit f = fit_large_x(t);
        CHECK(f.s1_below_noise);
        CHECK(f.s2_below_noise);
        CHECK(kind_of([&] { fit_large_x(t, {0, 0}, {3, 5}, true); }) == ErrorKind::SignalBelowNoise);
    }

    TEST_CASE("outward integration with perturbed rho blows up")
    {
        GammaData g{1, 0};
        auto [r0, r1] = global_rho(g);
        g.rho0 = r0 + 0.1;
        g.rho1 = r1;
        CHECK(kind_of([&] { integrate(init_small_x(g, 1e-4), 8.0); }) == ErrorKind::BlowUp);
    }

    TEST_CASE("inward integration of the global solution reaches small x")
    {
        InwardOptions o;
        o.x0 = 1e-3;
        const Trajectory t = integrate_inward(stokes_from_gamma({0.5, -0.5}), o);
        CHECK(t.direction == "inward");
        CHECK(t.back().x == 1e-3);
        CHECK(t.ode_residual < 1e-6);
        const SmallFit f = fit_small_x_refined(t);
        CHECK(std::abs(f.gamma0 - 0.5) < 1e-5);
        CHECK(std::abs(f.gamma1 + 0.5) < 1e-5);
    }

    TEST_CASE("CSV layout")
    {
        const Trajectory t = integrate({2.0, 0.01, -0.01, 0, 0}, 1.0);
        std::ostringstream os;
        write_csv(os, t);
        const std::string s = os.str();
        CHECK(s.rfind("x,w0,w1,dw0,dw1,err_est\n", 0) == 0);
        const auto lines = std::count(s.begin(), s.end(), '\n');
        CHECK(lines == static_cast<long>(t.samples.size()) + 1);
    }
}
