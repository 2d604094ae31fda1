#include <doctest.h>

#include <cmath>

#include "oracles/oracle_values.hpp"
#include "tttoda/barnes.hpp"
#include "tttoda/errors.hpp"
#include "tttoda/specfun.hpp"

using namespace ttt;
using doctest::Approx;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("specfun")
{
    TEST_CASE("real gamma at half integers, integers and negative arguments")
    {
        CHECK(gamma_fn(0.5) == Approx(std::sqrt(kPi)).epsilon(1e-15));
        CHECK(gamma_fn(5.0) == Approx(24.0).epsilon(1e-15));
        CHECK(gamma_fn(-0.5) == Approx(-2 * std::sqrt(kPi)).epsilon(1e-14));
        CHECK(gamma_fn(0.125) == Approx(std::tgamma(0.125)).epsilon(1e-14));
    }

    TEST_CASE("complex gamma: real axis, recurrence and reflection")
    {
        for (double x : {0.3, 1.7, 4.2, 11.5})
            CHECK(rel(gamma_c(x), std::tgamma(x)) < 1e-13);
        for (cplx z : {cplx(0.3, 2.0), cplx(-2.7, 0.4), cplx(5.0, -7.0), cplx(0.1, 30.0)}) {
            CHECK(rel(gamma_c(z + 1.0), z * gamma_c(z)) < 1e-12);
            CHECK(rel(gamma_c(z) * gamma_c(1.0 - z), kPi / std::sin(kPi * z)) < 1e-12);
            CHECK(std::abs(std::exp(log_gamma_c(z)) - gamma_c(z)) / std::abs(gamma_c(z)) < 1e-12);
        }
    }

    TEST_CASE("digamma and polygamma special values")
    {
        CHECK(digamma(1.0) == Approx(-kEulerGamma).epsilon(1e-15));
        CHECK(digamma(0.5) == Approx(-kEulerGamma - 2 * std::log(2.0)).epsilon(1e-14));
        CHECK(polygamma(1, 1.0) == Approx(kPi * kPi / 6).epsilon(1e-14));
        CHECK(polygamma(2, 1.0) == Approx(-2 * kZeta3).epsilon(1e-14));
        CHECK(digamma(-0.5) == Approx(digamma(0.5) + 2.0).epsilon(1e-14));
    }

    TEST_CASE("Laurent coefficients of gamma at its pole")
    {
        const auto L = gamma_laurent();
        CHECK(L.r0 == -1.0);
        CHECK(L.l0 == Approx(-kEulerGamma).epsilon(1e-16));
        CHECK(L.n0c == Approx(oracle::kLaurentN0).epsilon(1e-15));
        // Gamma(-e) = r0/e + l0 + m0 e + n0 e^2 + O(e^3)
        const double e = 1e-3;
        const double series = L.r0 / e + L.l0 + L.m0c * e + L.n0c * e * e;
        CHECK(std::abs(std::tgamma(-e) - series) < 5e-9);
    }
}

TEST_SUITE("barnes")
{
    TEST_CASE("series and contour routes against the mpmath values")
    {
        for (const auto& v : oracle::kG0Values) {
            const BarnesSpec spec = barnes_spec(v.a1, v.a2, v.a3);
            const cplx s(v.s_re, v.s_im), ref(v.re, v.im);
            CAPTURE(v.a1);
            CAPTURE(v.a3);
            CAPTURE(s);
            CHECK(rel(g0_series(spec, s), ref) < 1e-8);
            CHECK(rel(g0_quadrature(spec, s), ref) < 1e-8);
        }
    }

    TEST_CASE("triple-integral route for real s")
    {
        for (const auto& v : oracle::kG0Values) {
            if (v.a1 != 1 || v.a3 != 3 || v.s_im != 0 || v.s_re < 2) continue;
            const BarnesSpec spec = barnes_spec(v.a1, v.a2, v.a3);
            CHECK(rel(g0_triple(spec, v.s_re), cplx(v.re, v.im)) < 1e-5);
        }
    }

    TEST_CASE("series is analytic in s: Cauchy-Riemann by central differences")
    {
        const BarnesSpec spec = barnes_spec(1, 2, 3);
        const cplx s = 0.5 * std::exp(cplx(0, 0.3));
        const double h = 1e-4;
        const cplx dx = (g0_series(spec, s + h) - g0_series(spec, s - h)) / (2 * h);
        const cplx dy = (g0_series(spec, s + cplx(0, h)) - g0_series(spec, s - cplx(0, h))) / cplx(0, 2 * h);
        CHECK(std::abs(dx - dy) / std::abs(dx) < 1e-7);
    }

    TEST_CASE("constant term of the generic expansion")
    {
        const BarnesSpec spec = barnes_spec(1, 2, 3);
        const SeriesExpansion e = g0_expansion(spec, 1.0);
        cplx c0 = 0;
        for (const auto& t : e.terms)
            if (t.expo == 0 && t.logp == 0) c0 += t.coef;
        CHECK(std::abs(c0.real()) < 1e-12);
        CHECK(c0.imag() == Approx(oracle::kC0Generic123Im).epsilon(1e-13));
        for (const auto& t : e.terms) CHECK(t.logp == 0);
    }

    TEST_CASE("resonant expansion carries logarithms")
    {
        const SeriesExpansion e = g0_expansion(barnes_spec(1, 1, 2), 1.0);
        int maxlog = 0;
        for (const auto& t : e.terms) maxlog = std::max(maxlog, t.logp);
        CHECK(maxlog >= 1);
        const SeriesExpansion v = g0_expansion(barnes_spec(0, 0, 0), 1.0);
        maxlog = 0;
        for (const auto& t : v.terms) maxlog = std::max(maxlog, t.logp);
        CHECK(maxlog == 3);
    }

    TEST_CASE("scalar ODE annihilates the series")
    {
        CHECK(scalar_ode_residual(barnes_spec(1, 2, 3), 1.0) < 1e-10);
        CHECK(scalar_ode_residual(barnes_spec(1, 1, 2), 0.8) < 1e-9);
        CHECK(scalar_ode_residual(barnes_spec(0, 0, 0), 1.2) < 1e-9);
    }

    TEST_CASE("contour against the leading exponential asymptotics")
    {
        for (const auto& r : oracle::kLaplaceRatios) {
            const BarnesSpec spec = barnes_spec(r.a1, r.a2, r.a3);
            const cplx q = g0_quadrature(spec, r.s), l = g0_laplace(spec, r.s);
            CAPTURE(r.s);
            CHECK(std::abs(q / l - r.ratio) < 1e-6);
        }
    }

    TEST_CASE("Barnes exponents from gamma follow the weights")
    {
        const BarnesSpec v1 = barnes_spec(GammaData{3, 1});
        CHECK(v1.kase == BoundaryCase::V1);
        CHECK(v1.m0 == Approx(-1.5));
        const BarnesSpec g = barnes_spec(1, 2, 3);
        CHECK(g.kase == BoundaryCase::Interior);
        CHECK(std::abs(g.m0) < 1e-15);
    }
}
