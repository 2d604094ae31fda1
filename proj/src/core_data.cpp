#include "tttoda/core_data.hpp"

#include "tttoda/errors.hpp"

#include <cmath>
#include <sstream>

namespace ttt {

const char* case_name(BoundaryCase c)
{
    switch (c) {
    case BoundaryCase::Interior: return "Interior";
    case BoundaryCase::E1: return "E1";
    case BoundaryCase::E2: return "E2";
    case BoundaryCase::E3: return "E3";
    case BoundaryCase::V1: return "V1";
    case BoundaryCase::V2: return "V2";
    case BoundaryCase::V3: return "V3";
    }
    return "?";
}

bool is_resonant(BoundaryCase c)
{
    return c != BoundaryCase::Interior;
}

EdgeDistances edge_distances(const GammaData& g)
{
    // edges: E2 is gamma0 = -1, E3 is gamma1 = gamma0 - 2, E1 is gamma1 = 1
    return {1.0 - g.gamma1, g.gamma0 + 1.0, g.gamma1 - g.gamma0 + 2.0};
}

bool in_region(const GammaData& g, double eps)
{
    const auto d = edge_distances(g);
    return d.e1 >= -eps && d.e2 >= -eps && d.e3 >= -eps;
}

namespace {

void require_region(const GammaData& g)
{
    if (!std::isfinite(g.gamma0) || !std::isfinite(g.gamma1) || !in_region(g)) {
        std::ostringstream os;
        os << "gamma = (" << g.gamma0 << ", " << g.gamma1 << ") violates 0 <= g0+1 <= g1+3 <= 4";
        throw Error(ErrorKind::OutsideRegion, os.str());
    }
}

}  // namespace

BoundaryCase classify(const GammaData& g)
{
    require_region(g);
    const auto d = edge_distances(g);
    const bool on1 = d.e1 <= kEpsRes;
    const bool on2 = d.e2 <= kEpsRes;
    const bool on3 = d.e3 <= kEpsRes;
    if (on1 && on3) return BoundaryCase::V1;
    if (on1 && on2) return BoundaryCase::V2;
    if (on2 && on3) return BoundaryCase::V3;
    if (on1) return BoundaryCase::E1;
    if (on2) return BoundaryCase::E2;
    if (on3) return BoundaryCase::E3;
    return BoundaryCase::Interior;
}

GammaData snap(const GammaData& g)
{
    GammaData out = g;
    switch (classify(g)) {
    case BoundaryCase::Interior: break;
    case BoundaryCase::V1: out.gamma0 = 3.0; out.gamma1 = 1.0; break;
    case BoundaryCase::V2: out.gamma0 = -1.0; out.gamma1 = 1.0; break;
    case BoundaryCase::V3: out.gamma0 = -1.0; out.gamma1 = -3.0; break;
    case BoundaryCase::E1: out.gamma1 = 1.0; break;
    case BoundaryCase::E2: out.gamma0 = -1.0; break;
    case BoundaryCase::E3: {
        // orthogonal projection onto gamma1 = gamma0 - 2
        const double mid = 0.5 * (g.gamma0 + g.gamma1 + 2.0);
        out.gamma0 = mid;
        out.gamma1 = mid - 2.0;
        break;
    }
    }
    return out;
}

AlphaData alpha_from_gamma(const GammaData& g)
{
    require_region(g);
    AlphaData a;
    a.alpha0 = (g.gamma0 + 1.0) / 4.0;
    a.alpha2 = (1.0 - g.gamma1) / 4.0;
    a.alpha1 = (g.gamma1 - g.gamma0 + 2.0) / 8.0;
    a.alpha3 = a.alpha1;
    a.N = 1.0;
    return a;
}

GammaData gamma_from_alpha(const AlphaData& a)
{
    const double tol = kEpsGeo * std::max(1.0, a.N);
    if (a.alpha0 < -tol || a.alpha1 < -tol || a.alpha2 < -tol || a.alpha3 < -tol || !(a.N > 0.0))
        throw Error(ErrorKind::NegativeAlpha, "alpha_i must be >= 0 with N > 0");
    if (std::abs(a.alpha1 - a.alpha3) > tol)
        throw Error(ErrorKind::InvalidArgument, "alpha1 must equal alpha3");
    GammaData g;
    g.gamma0 = (3.0 * a.alpha0 - 2.0 * a.alpha1 - a.alpha2) / a.N;
    g.gamma1 = (a.alpha0 + 2.0 * a.alpha1 - 3.0 * a.alpha2) / a.N;
    return g;
}

AlphaData rescale(const AlphaData& a, double N)
{
    if (!(N > 0.0) || !(a.N > 0.0))
        throw Error(ErrorKind::InvalidArgument, "gauge N must be positive");
    const double f = N / a.N;
    return {a.alpha0 * f, a.alpha1 * f, a.alpha2 * f, a.alpha3 * f, N};
}

HoloData canonical_holo(double c0, double c2)
{
    const double c1 = 1.0 / std::sqrt(c0 * c2);
    return make_holo(c0, c1, c2);
}

HoloData make_holo(double c0, double c1, double c2)
{
    if (!(c0 > 0.0 && c1 > 0.0 && c2 > 0.0))
        throw Error(ErrorKind::InvalidArgument, "holomorphic data must be positive");
    return {c0, c1, c2, c1, c0 * c1 * c1 * c2};
}

WeightData weights(const GammaData& g, const HoloData& h, double N)
{
    require_region(g);
    if (!(h.c0 > 0.0 && h.c1 > 0.0 && h.c2 > 0.0 && h.c3 > 0.0))
        throw Error(ErrorKind::InvalidArgument, "holomorphic data must be positive");
    WeightData w;
    w.m0 = -g.gamma0 / 2.0;
    w.m1 = -g.gamma1 / 2.0;
    w.m2 = -w.m1;
    w.m3 = -w.m0;
    w.a1 = w.m0 - w.m1 + 1.0;
    w.a2 = w.m0 - w.m2 + 2.0;
    w.a3 = w.m0 - w.m3 + 3.0;
    const double c = h.c0 * h.c1 * h.c2 * h.c3;
    w.chat0 = std::pow(h.c0, -0.5) * std::pow(c, (1.0 - 2.0 * w.m0) / 8.0) * std::pow(N / 4.0, w.m0);
    w.chat1 = std::pow(h.c2, 0.5) * std::pow(c, (-1.0 - 2.0 * w.m1) / 8.0) * std::pow(N / 4.0, w.m1);
    w.N = N;
    w.cProd = c;
    return w;
}

HoloData holo_from_chat(const GammaData& g, double chat0, double chat1, double N, double cProd)
{
    const double m0 = -g.gamma0 / 2.0;
    const double m1 = -g.gamma1 / 2.0;
    const double r0 = chat0 / (std::pow(cProd, (1.0 - 2.0 * m0) / 8.0) * std::pow(N / 4.0, m0));
    const double r1 = chat1 / (std::pow(cProd, (-1.0 - 2.0 * m1) / 8.0) * std::pow(N / 4.0, m1));
    const double c0 = 1.0 / (r0 * r0);
    const double c2 = r1 * r1;
    const double c1 = std::sqrt(cProd / (c0 * c2));
    return make_holo(c0, c1, c2);
}

GammaData reflect(const GammaData& g)
{
    GammaData r;
    r.gamma0 = -g.gamma1;
    r.gamma1 = -g.gamma0;
    if (g.rho0 && g.rho1) {
        r.rho0 = -*g.rho1;
        r.rho1 = -*g.rho0;
    }
    return r;
}

BoundaryCase reflect(BoundaryCase c)
{
    switch (c) {
    case BoundaryCase::E1: return BoundaryCase::E2;
    case BoundaryCase::E2: return BoundaryCase::E1;
    case BoundaryCase::V1: return BoundaryCase::V3;
    case BoundaryCase::V3: return BoundaryCase::V1;
    default: return c;
    }
}

}  // namespace ttt
