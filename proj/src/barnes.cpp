#include "tttoda/barnes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "tttoda/errors.hpp"
#include "tttoda/specfun.hpp"

namespace ttt {

namespace {

const cplx kTwoPiI(0.0, 2.0 * kPi);
constexpr double kMergeTol = 1e-10;
constexpr double kIllTol = 1e-6;
constexpr int kMaxTerms = 200;

std::array<double, 4> quarter(const BarnesSpec& sp) { return {0.0, sp.a1 / 4, sp.a2 / 4, sp.a3 / 4}; }

// Globally adaptive Gauss-Kronrod (7/15) on a complex integrand. Stops when
// the summed error estimate falls below tol times the L1 mass, so panels
// with cancelling oscillation do not force deep local refinement.
template <class F>
cplx adaptive_gk(const F& f, double a, double b, double tol, int max_panels = 4000)
{
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    const auto& x = GK::abscissa();
    const auto& wk = GK::weights();
    const auto& wg = boost::math::quadrature::gauss<double, 7>::weights();
    struct Panel {
        double lo, hi;
        cplx val;
        double err, l1;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    auto eval = [&](double lo, double hi) {
        const double c = (lo + hi) / 2, h = (hi - lo) / 2;
        const cplx f0 = f(c);
        cplx k = wk[0] * f0, g = wg[0] * f0;
        double l1 = wk[0] * std::abs(f0);
        for (std::size_t i = 1; i < x.size(); ++i) {
            const cplx fp = f(c + h * x[i]), fm = f(c - h * x[i]);
            k += wk[i] * (fp + fm);
            l1 += wk[i] * (std::abs(fp) + std::abs(fm));
            if (i % 2 == 0) g += wg[i / 2] * (fp + fm);
        }
        return Panel{lo, hi, k * h, std::abs((k - g) * h), l1 * h};
    };
    std::priority_queue<Panel> q;
    const int init = 16;
    for (int i = 0; i < init; ++i) q.push(eval(a + (b - a) * i / init, a + (b - a) * (i + 1) / init));
    while (true) {
        cplx total = 0;
        double err = 0, l1 = 0;
        auto copy = q;
        while (!copy.empty()) {
            total += copy.top().val;
            err += copy.top().err;
            l1 += copy.top().l1;
            copy.pop();
        }
        if (err <= tol * l1 || int(q.size()) >= max_panels) {
            if (err > 1e3 * tol * l1) throw Error(ErrorKind::NonConvergent, "contour quadrature did not converge");
            return total;
        }
        for (int r = 0; r < 8 && !q.empty(); ++r) {
            const Panel p = q.top();
            q.pop();
            const double mid = (p.lo + p.hi) / 2;
            q.push(eval(p.lo, mid));
            q.push(eval(mid, p.hi));
        }
    }
}

}  // namespace

BarnesSpec barnes_spec(double a1, double a2, double a3)
{
    const double tol = 1e-12;
    if (!(a1 >= -tol && a1 <= a2 + tol && a2 <= a3 + tol && a3 <= 4 + tol))
        throw Error(ErrorKind::OutsideRegion, "exponents must satisfy 0 <= a1 <= a2 <= a3 <= 4");
    BarnesSpec s;
    s.a1 = a1;
    s.a2 = a2;
    s.a3 = a3;
    s.m0 = (a1 + a2 + a3) / 4 - 1.5;
    s.kase = BoundaryCase::Interior;
    return s;
}

BarnesSpec barnes_spec(const GammaData& g)
{
    if (!in_region(g)) throw Error(ErrorKind::OutsideRegion, "gamma outside the closed region");
    const BoundaryCase k = classify(g);
    const GammaData p = snap(g);
    const double m0 = -p.gamma0 / 2, m1 = -p.gamma1 / 2;
    BarnesSpec s = barnes_spec(m0 - m1 + 1, m0 + m1 + 2, 2 * m0 + 3);
    s.kase = k;
    return s;
}

cplx laplace_constant(double m0) { return cplx(0.0, std::pow(kPi, 2.5) * std::exp2(-2 * m0 + 1.5)); }

cplx SeriesExpansion::operator()(cplx s) const
{
    const cplx ls = std::log(s);
    cplx sum = 0;
    for (const auto& t : terms) sum += t.coef * std::exp(t.expo * ls) * std::pow(ls, t.logp);
    return sum;
}

SeriesExpansion g0_expansion(const BarnesSpec& spec, cplx s)
{
    // Poles of Gamma(b0 - t)...Gamma(b3 - t) sit at b_i + k. Exponents equal
    // modulo 1 form one group whose coinciding poles have order > 1.
    std::array<double, 4> b = quarter(spec);
    struct Group {
        double p0;
        std::vector<std::pair<int, int>> members;  // (index, integer offset)
    };
    std::vector<Group> groups;
    std::array<bool, 4> used{};
    for (int i = 0; i < 4; ++i) {
        if (used[i]) continue;
        Group g{b[i], {}};
        for (int j = i; j < 4; ++j) {
            if (used[j]) continue;
            const double d = b[j] - b[i];
            const double frac = std::abs(d - std::round(d));
            if (frac < kMergeTol / 4) {
                used[j] = true;
                g.members.push_back({j, 0});
                g.p0 = std::min(g.p0, b[i] + std::round(d));
            } else if (frac < kIllTol / 4) {
                throw Error(ErrorKind::NearResonanceIllConditioned,
                            "exponents nearly differ by a multiple of 4; use the resonant point");
            }
        }
        for (auto& [j, off] : g.members) {
            off = int(std::lround(b[j] - g.p0));
            b[j] = g.p0 + off;
        }
        groups.push_back(g);
    }

    SeriesExpansion out;
    const cplx ls = std::log(s);
    for (const Group& g : groups) {
        int small = 0;
        for (int k = 0; k < kMaxTerms; ++k) {
            const double p = g.p0 + k;
            double logabs = -8 * p * std::log(2.0), sign = 1, c1 = -8 * std::log(2.0), c2 = 0, c3 = 0;
            int q = 0;
            for (int i = 0; i < 4; ++i) {
                int off = -1;
                for (auto [j, o] : g.members)
                    if (j == i) off = o;
                if (off >= 0 && off <= k) {
                    // Gamma(-n - e) = e^{-1} (-(-1)^n / n!) exp((gamma - H1) e + (zeta2 + H2) e^2/2 + (zeta3 - H3) e^3/3)
                    const int n = k - off;
                    double H1 = 0, H2 = 0, H3 = 0;
                    for (int j = 1; j <= n; ++j) {
                        H1 += 1.0 / j;
                        H2 += 1.0 / (double(j) * j);
                        H3 += 1.0 / (double(j) * j * j);
                    }
                    ++q;
                    logabs -= std::lgamma(n + 1.0);
                    sign *= (n % 2 == 0) ? -1.0 : 1.0;
                    c1 += kEulerGamma - H1;
                    c2 += (kPi * kPi / 6 + H2) / 2;
                    c3 += (kZeta3 - H3) / 3;
                } else {
                    // Gamma(z - e) = Gamma(z) exp(-psi e + psi' e^2/2 - psi'' e^3/6)
                    const double z = b[i] - p;
                    const double gz = gamma_fn(z);
                    logabs += std::log(std::abs(gz));
                    if (gz < 0) sign = -sign;
                    c1 -= digamma(z);
                    c2 += polygamma(1, z) / 2;
                    c3 -= polygamma(2, z) / 6;
                }
            }
            const double e[4] = {1.0, c1, c2 + c1 * c1 / 2, c3 + c1 * c2 + c1 * c1 * c1 / 6};
            const double lead = sign * std::exp(logabs);
            double jfact = 1, fourj = 1;
            double mag = 0;
            for (int j = 0; j < q; ++j) {
                if (j > 0) {
                    jfact *= j;
                    fourj *= 4;
                }
                const cplx coef = -kTwoPiI * lead * e[q - 1 - j] * fourj / jfact;
                out.terms.push_back({coef, 4 * p, j});
                mag += std::abs(coef * std::exp(4 * p * ls) * std::pow(ls, j));
            }
            if (k > 0 && mag < 1e-16 * std::abs(out(s)))
                ++small;
            else
                small = 0;
            if (small >= 3) break;
            if (k == kMaxTerms - 1) throw Error(ErrorKind::NonConvergent, "residue series needs more than 200 terms");
        }
    }
    return out;
}

cplx g0_series(const BarnesSpec& spec, cplx s, double s_max)
{
    if (std::abs(s) > s_max) throw Error(ErrorKind::InvalidArgument, "|s| exceeds the series window");
    if (std::abs(s) == 0) throw Error(ErrorKind::InvalidArgument, "s must be nonzero");
    return g0_expansion(spec, s)(s);
}

cplx g0_quadrature(const BarnesSpec& spec, cplx s, double c, double truncation_scale)
{
    if (std::isnan(c)) c = -std::max(0.25, std::abs(s) / 4);
    if (!(c < 0)) throw Error(ErrorKind::ContourTooClose, "contour abscissa must be negative");
    if (!(std::abs(std::arg(s)) < kPi / 2) || std::abs(s) == 0)
        throw Error(ErrorKind::NonConvergent, "the vertical-line integral needs |arg s| < pi/2");
    const auto b = quarter(spec);
    const cplx logX = -8 * std::log(2.0) + 4.0 * std::log(s);
    auto logf = [&](double y) {
        const cplx t(c, y);
        cplx l = t * logX;
        for (double bi : b) l += log_gamma_c(bi - t);
        return l;
    };
    // Peak over a coarse grid; the integrand is smooth and unimodal in |.|.
    double peak = -1e300;
    for (double y = -40; y <= 40; y += 0.5) peak = std::max(peak, logf(y).real());
    const double drop = 41.5;  // 1e-18
    double Y = 4;
    while ((logf(Y).real() > peak - drop || logf(-Y).real() > peak - drop) && Y < 1e4) Y *= 1.25;
    Y *= truncation_scale;
    auto f = [&](double y) { return std::exp(logf(y) - peak) * cplx(0, 1); };
    cplx sum = adaptive_gk(f, -Y, Y, 1e-14);
    return sum * std::exp(cplx(peak, 0));
}

cplx g0_laplace(const BarnesSpec& spec, double s)
{
    if (!(s > 0)) throw Error(ErrorKind::InvalidArgument, "Laplace asymptotics need real s > 0");
    return laplace_constant(spec.m0) * std::pow(s, spec.m0) * std::exp(-s);
}

cplx g0_triple(const BarnesSpec& spec, double s, double step)
{
    if (!(s >= 1 && s <= 8)) throw Error(ErrorKind::InvalidArgument, "triple integral window is 1 <= s <= 8");
    const double l = s / 4;
    const double e[3] = {spec.a1 / 4, spec.a2 / 4, spec.a3 / 4};
    // Exponent l (x1 + x2 + x3 + 1/(x1 x2 x3)) exceeds ~50 outside the box.
    const double hi = std::log(50 / l);
    const double lo = -3 * std::log(50 / (3 * l));
    const int n = int(std::ceil((hi - lo) / step)) + 1;
    if (double(n) * n * n > 5e7) throw Error(ErrorKind::CubatureBudgetExceeded, "grid exceeds 5e7 points");
    std::vector<double> ex(n);
    for (int i = 0; i < n; ++i) ex[i] = std::exp(lo + i * step);
    double sum = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double xi = ex[i], xj = ex[j];
            const double yij = lo + i * step, yjj = lo + j * step;
            const double base = e[0] * yij + e[1] * yjj;
            for (int k = 0; k < n; ++k) {
                const double yk = lo + k * step;
                const double arg = l * (xi + xj + ex[k] + std::exp(-(yij + yjj + yk)));
                if (arg > 745) continue;
                sum += std::exp(base + e[2] * yk - arg);
            }
        }
    sum *= step * step * step;
    return kTwoPiI * std::pow(l, e[0] + e[1] + e[2]) * sum;
}

double scalar_ode_residual(const BarnesSpec& spec, const SeriesExpansion& ex, double s0)
{
    const double a[4] = {0.0, spec.a1, spec.a2, spec.a3};
    const double L = std::log(s0);
    // Each term c s^e L^p: theta acts as e + d/dL on the polynomial in L.
    cplx Tg = 0, g = 0;
    for (const auto& t : ex.terms) {
        std::array<cplx, 4> poly{};  // coefficients of L^0..L^3
        poly[t.logp] = t.coef;
        for (double ai : a) {
            std::array<cplx, 4> np{};
            for (int p = 0; p < 4; ++p) {
                np[p] += (t.expo - ai) * poly[p];
                if (p > 0) np[p - 1] += double(p) * poly[p];
            }
            poly = np;
        }
        const double se = std::pow(s0, t.expo);
        cplx v = 0;
        for (int p = 3; p >= 0; --p) v = v * L + poly[p];
        Tg += se * v;
        const cplx gt = t.coef * se * std::pow(L, t.logp);
        g += gt;
        Tg -= std::pow(s0, 4) * gt;
    }
    return std::abs(Tg) / std::abs(g);
}

double scalar_ode_residual(const BarnesSpec& spec, double s0)
{
    return scalar_ode_residual(spec, g0_expansion(spec, s0), s0);
}

}  // namespace ttt
