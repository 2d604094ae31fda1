#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>

namespace ttt {

// Dormand-Prince 5(4) with the 4th order continuous extension. The
// independent variable is real; the state is an array of double or complex.
template <class T, std::size_t N>
struct Dopri5 {
    using State = std::array<T, N>;
    using Rhs = std::function<State(double, const State&)>;
    // Called once per accepted step with an interpolant over [x0, x1].
    struct Dense {
        double x0, h;
        State r1, r2, r3, r4, r5;
        State operator()(double x) const
        {
            const double s = (x - x0) / h, s1 = 1.0 - s;
            State y;
            for (std::size_t i = 0; i < N; ++i)
                y[i] = r1[i] + s * (r2[i] + s1 * (r3[i] + s * (r4[i] + s1 * r5[i])));
            return y;
        }
    };
    using Observer = std::function<void(const Dense&, const State& y1)>;

    enum class Status { Ok, StepUnderflow, TooManySteps, Stopped };

    double rtol = 1e-10, atol = 1e-12;
    double h_init = 0.0;
    double h_min = 1e-14;
    double h_max = 0.0;  // 0 means unbounded
    long max_steps = 2000000;
    // Optional abort test on every accepted state; return true to stop.
    std::function<bool(double, const State&)> stop;

    long steps = 0, rejected = 0;
    double err_est = 0.0;  // largest accepted normalized local error

    Status integrate(const Rhs& f, double x, State& y, double xend, const Observer& obs = nullptr)
    {
        static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                                a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                                a64 = 49.0 / 176, a65 = -5103.0 / 18656;
        static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                                a75 = -2187.0 / 6784, a76 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                                e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
        static constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                                d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                                d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;

        const double dir = xend >= x ? 1.0 : -1.0;
        const double span = std::abs(xend - x);
        if (span == 0) return Status::Ok;
        double h = h_init > 0 ? h_init : std::min(span, 1e-3 * std::max(1.0, span));
        if (h_max > 0) h = std::min(h, h_max);
        State k1 = f(x, y), k2, k3, k4, k5, k6, k7, yt, y1;
        auto comb = [&](const State& base, double hh, std::initializer_list<std::pair<double, const State*>> terms) {
            State out = base;
            for (auto& [c, k] : terms)
                if (c != 0)
                    for (std::size_t i = 0; i < N; ++i) out[i] += (hh * c) * (*k)[i];
            return out;
        };
        while (true) {
            if (steps + rejected >= max_steps) return Status::TooManySteps;
            const double rem = std::abs(xend - x);
            bool last = false;
            if (h >= rem) {
                h = rem;
                last = true;
            }
            const double hs = dir * h;
            yt = comb(y, hs, {{a21, &k1}});
            k2 = f(x + c2 * hs, yt);
            yt = comb(y, hs, {{a31, &k1}, {a32, &k2}});
            k3 = f(x + c3 * hs, yt);
            yt = comb(y, hs, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
            k4 = f(x + c4 * hs, yt);
            yt = comb(y, hs, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
            k5 = f(x + c5 * hs, yt);
            yt = comb(y, hs, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
            k6 = f(x + hs, yt);
            y1 = comb(y, hs, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
            k7 = f(x + hs, y1);
            double err = 0;
            for (std::size_t i = 0; i < N; ++i) {
                const T e = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
                const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
                const double r = std::abs(e) / sc;
                err += r * r;
            }
            err = std::sqrt(err / N);
            if (!std::isfinite(err)) err = 1e10;
            if (err <= 1.0) {
                ++steps;
                err_est = std::max(err_est, err);
                if (obs) {
                    Dense d;
                    d.x0 = x;
                    d.h = hs;
                    d.r1 = y;
                    for (std::size_t i = 0; i < N; ++i) {
                        const T ydiff = y1[i] - y[i];
                        const T bspl = hs * k1[i] - ydiff;
                        d.r2[i] = ydiff;
                        d.r3[i] = bspl;
                        d.r4[i] = ydiff - hs * k7[i] - bspl;
                        d.r5[i] = hs * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                                        d7 * k7[i]);
                    }
                    obs(d, y1);
                }
                x = last ? xend : x + hs;
                y = y1;
                k1 = k7;
                if (stop && stop(x, y)) return Status::Stopped;
                if (last) return Status::Ok;
                const double fac = err == 0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
                h *= fac;
            } else {
                ++rejected;
                h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
            }
            if (h_max > 0) h = std::min(h, h_max);
            if (h < h_min * std::max(1.0, std::abs(x))) return Status::StepUnderflow;
        }
    }
};

}  // namespace ttt
