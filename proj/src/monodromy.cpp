#include "tttoda/monodromy.hpp"

#include <cmath>
#include <string>

#include "tttoda/barnes.hpp"
#include "tttoda/errors.hpp"
#include "tttoda/gamma_products.hpp"
#include "tttoda/specfun.hpp"

namespace ttt {

namespace {

const cplx I1(0.0, 1.0);
const cplx kTwoPiI(0.0, 2.0 * kPi);
const cplx kLogOmega(0.0, kPi / 2);  // log(omega)

Mat4 mpow(const Mat4& x, int n)
{
    Mat4 r = Mat4::identity();
    for (int k = 0; k < n; ++k) r = r * x;
    return r;
}

double rel(const Mat4& lhs, const Mat4& rhs)
{
    return frobenius(lhs - rhs) / std::max(1.0, frobenius(rhs));
}

double poly_diff(const Mat4& x, const Mat4& y)
{
    const auto a = char_poly(x), b = char_poly(y);
    double d = 0;
    for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(a[k] - b[k]));
    return d;
}

cplx kappa0(double m0) { return laplace_constant(m0); }

Mat4 chat_diag(const WeightData& w)
{
    return Mat4::diag(w.chat0, w.chat1, 1.0 / w.chat1, 1.0 / w.chat0);
}

Mat4 p_matrix(double r1)
{
    Mat4 P = Mat4::identity();
    P(0, 1) = omega_pow(0.5) * r1;
    return P;
}

void check(double res, double tol, const char* what)
{
    if (!(res <= tol))
        throw Error(ErrorKind::StructureInconsistent,
                    std::string(what) + " self-check failed, residual " + std::to_string(res));
}

}  // namespace

StructureMatrices structure()
{
    StructureMatrices s;
    s.omega = omega_pow(1.0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s.Omega(i, j) = omega_pow(double(i * j));
    s.d4 = Mat4::diag(1.0, omega_pow(1), omega_pow(2), omega_pow(3));
    s.Pi = Mat4::unit(0, 1) + Mat4::unit(1, 2) + Mat4::unit(2, 3) + Mat4::unit(3, 0);
    s.Delta = Mat4::unit(0, 3) + Mat4::unit(1, 2) + Mat4::unit(2, 1) + Mat4::unit(3, 0);
    s.C = Mat4::unit(0, 0) + Mat4::unit(1, 3) + Mat4::unit(2, 2) + Mat4::unit(3, 1);
    return s;
}

StokesPair stokes_pair(double r1, double r2)
{
    StokesPair sp;
    sp.P1 = Mat4::identity();
    sp.P1(1, 0) = omega_pow(2.5) * r1;
    sp.P1(2, 3) = omega_pow(-0.5) * r1;
    sp.P5q = Mat4::identity();
    sp.P5q(1, 3) = omega_pow(1.0) * r2;
    return sp;
}

Mat4 stokes_P(const StokesPair& sp, int q)
{
    // P_{k+1/2} = Pi P_k Pi^{-1}; Pi^4 = I.
    const Mat4 Pi = structure().Pi;
    const int base = ((q % 2) + 2) % 2 == 0 ? 4 : 5;
    const int steps = (q - base) / 2;
    const int n = ((steps % 4) + 4) % 4;
    const Mat4 Pn = mpow(Pi, n);
    const Mat4 Pinv = mpow(Pi, (4 - n) % 4);
    return Pn * (base == 4 ? sp.P1 : sp.P5q) * Pinv;
}

Mat4 stokes_R(const StokesPair& sp, int q)
{
    return stokes_P(sp, q) * stokes_P(sp, q + 1) * stokes_P(sp, q + 2) * stokes_P(sp, q + 3);
}

StokesData r_from_m(double m0, double m1)
{
    return {2 * std::cos(kPi / 4 * (2 * m0 + 3)) + 2 * std::cos(kPi / 4 * (2 * m1 + 1)),
            -2 + 2 * std::cos(kPi / 2 * (m0 + m1)) + 2 * std::sin(kPi / 2 * (m0 - m1))};
}

Mat4 m_matrix(const WeightData& w) { return Mat4::diag(w.m0, w.m1, w.m2, w.m3); }

Mat4 omega_m(const WeightData& w, double x)
{
    return Mat4::diag(omega_pow(x * w.m0), omega_pow(x * w.m1), omega_pow(x * w.m2), omega_pow(x * w.m3));
}

GenericD1Parts d1_generic_parts(const WeightData& w, const StokesData& r)
{
    const double a[4] = {0.0, w.a1, w.a2, w.a3};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const double d = (a[j] - a[i]) / 4;
            if (std::abs(d - std::round(d)) < kEpsRes)
                throw Error(ErrorKind::ResonantPoint, "exponents differ by an integer");
        }
    GenericD1Parts p;
    p.kappa0 = kappa0(w.m0);
    p.P = p_matrix(r.s1);
    const double mp[4] = {w.m0, w.m1 - 1, w.m2 - 2, w.m3 - 3};
    for (int j = 0; j < 4; ++j) {
        p.K(0, j) = omega_pow(2 * mp[j]);
        p.K(1, j) = omega_pow(mp[j]);
        p.K(2, j) = 1.0;
        p.K(3, j) = omega_pow(-mp[j]);
    }
    cplx C[4];
    for (int i = 0; i < 4; ++i) {
        cplx c = kTwoPiI * std::exp2(-2 * a[i]);
        for (int j = 0; j < 4; ++j)
            if (j != i) c *= gamma_fn((a[j] - a[i]) / 4);
        C[i] = c;
    }
    p.GammaDiag = Mat4::diag(C[0], C[1] * a[1], C[2] * a[2] * (a[2] - a[1]),
                             C[3] * a[3] * (a[3] - a[1]) * (a[3] - a[2]));
    p.chatDiag = chat_diag(w);
    p.D1 = p.kappa0 * (inv_transpose(p.P * p.K) * inverse(p.GammaDiag) * inverse(p.chatDiag));
    return p;
}

Mat4 d1_generic(const WeightData& w, const StokesData& r) { return d1_generic_parts(w, r).D1; }

GenericResiduals generic_identities(const WeightData& w, const StokesData& r)
{
    const StructureMatrices s = structure();
    const StokesPair sp = stokes_pair(r.s1, r.s2);
    const Mat4 D1 = d1_generic(w, r);
    const Mat4 D1inv = inverse(D1);
    const Mat4 cyc = sp.P1 * sp.P5q * s.Pi;
    const Mat4 target = inverse(s.d4) * omega_m(w, 1);
    GenericResiduals res;
    res.cyclic = rel(D1inv * cyc * D1, target);
    const Mat4 rhs = stokes_R(sp, 4) * (0.25 * (s.d4 * inv_transpose(D1) * omega_m(w, 2) * s.Delta));
    res.antisym = rel(D1, rhs);
    res.monodromy = rel(stokes_R(sp, 4) * stokes_R(sp, 8), D1 * omega_m(w, 4) * D1inv);
    res.eigen = poly_diff(cyc, target);
    res.cond = cond1(D1);
    return res;
}

E1Factor e1_factor_generic(const GammaData& g, const WeightData& w)
{
    const StructureMatrices s = structure();
    const StokesData r = stokes_from_gamma(g);
    const GenericD1Parts p = d1_generic_parts(w, r);
    GammaData ga = g;
    const auto [rho0, rho1] = rho_from_holo(w);
    ga.rho0 = rho0;
    ga.rho1 = rho1;
    E1Factor f;
    f.params = connection_from_asymptotic(ga);
    const Mat4 PK = p.P * p.K;
    const double e1 = f.params.e1, e2 = f.params.e2;
    f.route_i = inv_transpose(PK) * Mat4::diag(e1, e2, 1 / e2, 1 / e1) * transpose(PK);
    f.route_ii = p.D1 * s.Delta * inverse(conj(p.D1)) * inverse(s.d4);
    f.route_diff = rel(f.route_i, f.route_ii);
    f.reality_residual = rel(p.D1, s.d4 * conj(p.D1) * s.Delta);
    return f;
}

namespace {

struct CaseData {
    Mat4 E, U, Ktilde, Delta0, Amat;
    std::array<double, 4> Fhat;  // chat0 chat_i^{-1} F_i
};

CaseData case_data(BoundaryCase kase, double a, double m0, double t)
{
    CaseData d;
    const cplx lw = kLogOmega;
    auto w = [](double x) { return omega_pow(x); };
    switch (kase) {
    case BoundaryCase::E1:
        d.E = Mat4::unit(1, 2);
        d.U = Mat4::identity() - (2.0 / a) * Mat4::unit(1, 2);
        d.Ktilde = Mat4::rows({{w(2 * m0), w(-3) * 2.0 * lw, w(-3), w(-2 * m0 - 6)},
                               {w(m0), w(-1.5) * lw, w(-1.5), w(-m0 - 3)},
                               {1.0, 0.0, 1.0, 1.0},
                               {w(-m0), -w(1.5) * lw, w(1.5), w(m0 + 3)}});
        d.Delta0 = Mat4::rows({{0, 0, 0, 1}, {0, -1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}});
        d.Amat = Mat4::identity() - Mat4::unit(1, 2);
        d.Fhat = {1.0, a / 2 * std::pow(t, -a / 2), -a / 2 * std::pow(t, -a / 2), a * a * a / 4 * std::pow(t, -a)};
        break;
    case BoundaryCase::E3:
        d.E = Mat4::unit(0, 1) + Mat4::unit(2, 3);
        d.U = Mat4::identity() - (2.0 / a) * Mat4::unit(2, 3);
        d.Ktilde = Mat4::rows({{w(2 * m0) * 2.0 * lw, w(2 * m0), w(-2 * m0 - 6) * 2.0 * lw, w(-2 * m0 - 6)},
                               {w(m0) * lw, w(m0), w(-m0 - 3) * lw, w(-m0 - 3)},
                               {0.0, 1.0, 0.0, 1.0},
                               {-w(-m0) * lw, w(-m0), -w(m0 + 3) * lw, w(m0 + 3)}});
        d.Delta0 = Mat4::rows({{0, 0, -1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, 1, 0, 0}});
        d.Amat = Mat4::identity() - Mat4::unit(0, 1) - Mat4::unit(2, 3);
        d.Fhat = {1.0, -1.0, a * a * std::pow(t, -a), -a * a * std::pow(t, -a)};
        break;
    case BoundaryCase::V1: {
        d.E = Mat4::unit(0, 1) + Mat4::unit(1, 2) + Mat4::unit(2, 3);
        d.U = Mat4::identity();
        const cplx pre[4] = {w(-3), w(-1.5), 0.0, w(1.5)};
        const cplx ls[4] = {2.0 * lw, lw, 0.0, -lw};
        for (int i = 0; i < 4; ++i) {
            const cplx l = ls[i];
            d.Ktilde(i, 0) = pre[i] * l * l * l / 6.0;
            d.Ktilde(i, 1) = pre[i] * l * l / 2.0;
            d.Ktilde(i, 2) = pre[i] * l;
            d.Ktilde(i, 3) = pre[i];
        }
        d.Ktilde(2, 3) = 1.0;
        // Fixed by conj(Ktilde) = -d4 Ktilde Delta0.
        d.Delta0 = Mat4::diag(-1, 1, -1, 1);
        d.Fhat = {1.0, -1.0, 1.0, -1.0};
        break;
    }
    case BoundaryCase::V2:
        d.E = Mat4::unit(3, 0) + Mat4::unit(1, 2);
        d.U = Mat4::identity() - 0.5 * Mat4::unit(1, 2) - 1.25 * Mat4::unit(3, 0);
        d.Ktilde = Mat4::rows({{w(1), w(-3) * 2.0 * lw, w(-3), w(-7) * 2.0 * lw},
                               {w(0.5), w(-1.5) * lw, w(-1.5), w(-3.5) * lw},
                               {1.0, 0.0, 1.0, 0.0},
                               {w(-0.5), -w(1.5) * lw, w(1.5), -w(3.5) * lw}});
        d.Delta0 = Mat4::diag(1, -1, 1, -1);
        d.Amat = Mat4::identity() - Mat4::unit(1, 2) - Mat4::unit(3, 0);
        d.Fhat = {-16 * std::pow(t, -4), 2 * std::pow(t, -2), -2 * std::pow(t, -2), 16 * std::pow(t, -4)};
        break;
    default:
        throw Error(ErrorKind::WrongCase, "resonant structure needs E1, E3, V1 or V2");
    }
    return d;
}

// Scalars A_i (with ell) and A_i^flat (with ell0).
void atilde_scalars(BoundaryCase kase, double a, double t, double ell, double ell0,
                    std::array<cplx, 4>& A, std::array<cplx, 4>& Af)
{
    const double eu = kEulerGamma;
    switch (kase) {
    case BoundaryCase::E1: {
        const double Fv = gp::F(a, a / 8), dF = gp::dlogF(a, a / 8);
        const double pre = std::exp2(-a) * std::pow(t, a / 2) * Fv;
        A[0] = kTwoPiI * gp::G(a, 0.0);
        A[1] = -kTwoPiI * pre * (2 * eu + dF + ell);
        A[2] = kTwoPiI * 4.0 * pre;
        A[3] = kTwoPiI * std::exp2(-2 * a) * std::pow(t, a) * gp::H(a, a / 4);
        Af = A;
        Af[1] = -kTwoPiI * pre * (2 * eu + 8 / a + dF + ell0);
        break;
    }
    case BoundaryCase::E3: {
        const double P0 = gp::P(a, 0.0), dP = gp::dlogP(a, 0.0);
        const double Qv = gp::Q(a / 4), dQ = gp::dlogQ(a / 4);
        const double pre = std::exp2(-2 * a) * std::pow(t, a) * Qv;
        A[0] = -kTwoPiI * P0 * (2 * eu + dP + ell);
        A[1] = kTwoPiI * 4.0 * P0;
        A[2] = -kTwoPiI * pre * (2 * eu + dQ + ell);
        A[3] = kTwoPiI * 4.0 * pre;
        Af = A;
        Af[0] = -kTwoPiI * P0 * (2 * eu + dP + ell0);
        Af[2] = -kTwoPiI * pre * (2 * eu + 8 / a + dQ + ell0);
        break;
    }
    case BoundaryCase::V1: {
        const auto q = gp::quartic_laurent();
        auto fill = [&](double l, std::array<cplx, 4>& X) {
            X[0] = -kTwoPiI * (q.N0 + q.M0 * l + q.L0 * l * l / 2 + q.R0 * l * l * l / 6);
            X[1] = kTwoPiI * (4 * q.M0 + 4 * q.L0 * l + 2 * q.R0 * l * l);
            X[2] = -kTwoPiI * (16 * q.L0 + 16 * q.R0 * l);
            X[3] = kTwoPiI * 64.0 * q.R0;
        };
        fill(ell, A);
        fill(ell0, Af);
        break;
    }
    case BoundaryCase::V2: {
        const double S1 = gp::S(1.0), dS = gp::dlogS(1.0);
        const double Th = gp::T(0.5), dT = gp::dlogT(0.5);
        const double t2 = t * t, t4 = t2 * t2;
        A[0] = -kTwoPiI * std::exp2(-6) * t4 * S1;
        A[1] = -kTwoPiI * std::exp2(-4) * t2 * Th * (2 * eu + dT + ell);
        A[2] = kTwoPiI * std::exp2(-2) * t2 * Th;
        A[3] = kTwoPiI * std::exp2(-8) * t4 * S1 * (2 * eu - 1 + dS + ell);
        Af = A;
        Af[1] = -kTwoPiI * std::exp2(-4) * t2 * Th * (2 * eu + 2 + dT + ell0);
        Af[3] = kTwoPiI * std::exp2(-8) * t4 * S1 * (2 * eu + 4 + dS + ell0);
        break;
    }
    default: throw Error(ErrorKind::WrongCase, "resonant structure needs E1, E3, V1 or V2");
    }
}

Mat4 atilde_matrix(BoundaryCase kase, const std::array<cplx, 4>& A)
{
    switch (kase) {
    case BoundaryCase::E1:
        return Mat4::rows({{A[0], 0, 0, 0}, {0, A[2], 0, 0}, {0, A[1], A[2], 0}, {0, 0, 0, A[3]}});
    case BoundaryCase::E3:
        return Mat4::rows({{A[1], 0, 0, 0}, {A[0], A[1], 0, 0}, {0, 0, A[3], 0}, {0, 0, A[2], A[3]}});
    case BoundaryCase::V1:
        return Mat4::rows({{A[3], 0, 0, 0}, {A[2], A[3], 0, 0}, {A[1], A[2], A[3], 0}, {A[0], A[1], A[2], A[3]}});
    case BoundaryCase::V2:
        return Mat4::rows({{A[0], 0, 0, A[3]}, {0, A[2], 0, 0}, {0, A[1], A[2], 0}, {0, 0, 0, A[0]}});
    default: throw Error(ErrorKind::WrongCase, "resonant structure needs E1, E3, V1 or V2");
    }
}

}  // namespace

ResonantParts resonant_structure(BoundaryCase kase, const GammaData& gin, const WeightData& w, double t)
{
    const GammaData g = snap(gin);
    if (classify(g) != kase)
        throw Error(ErrorKind::WrongCase, std::string("point is not on component ") + case_name(kase));
    ResonantParts rp;
    rp.kase = kase;
    rp.t = t;
    rp.N = w.N;
    rp.a = 3.0 - g.gamma0;
    rp.ell = std::log(std::exp2(-8) * std::pow(t, 4));
    rp.ell0 = std::log(w.cProd / std::pow(w.N, 4));
    const double m0 = -g.gamma0 / 2;
    const CaseData d = case_data(kase, rp.a, m0, t);
    const StructureMatrices s = structure();
    rp.E = d.E;
    rp.U = d.U;
    rp.Ktilde = d.Ktilde;
    rp.Delta0 = d.Delta0;
    const Mat4 ch = chat_diag(w);
    rp.Fdiag = Mat4::diag(d.Fhat[0] * ch(0, 0) / w.chat0, d.Fhat[1] * ch(1, 1) / w.chat0,
                          d.Fhat[2] * ch(2, 2) / w.chat0, d.Fhat[3] * ch(3, 3) / w.chat0);
    rp.M = rp.Fdiag * rp.E * inverse(rp.Fdiag);
    const Mat4 M2 = -(ch * rp.E * inverse(ch));
    rp.Lambda = (-w.N / 4) * rp.M;
    atilde_scalars(kase, rp.a, t, rp.ell, rp.ell0, rp.At, rp.AtFlat);
    rp.Atilde = atilde_matrix(kase, rp.At);
    rp.AtildeFlat = atilde_matrix(kase, rp.AtFlat);
    if (kase == BoundaryCase::V1) {
        const cplx q = rp.Lambda(1, 2) / rp.Lambda(0, 1);
        rp.Delta1 = Mat4::rows({{1, 1, 0.5 * q, 1}, {0, 1, q, 0.5 * q}, {0, 0, 1, 1}, {0, 0, 0, 1}}) *
                    Mat4::diag(1, -1, 1, -1);
        rp.Amat = Mat4::identity();
    } else {
        rp.Amat = d.Amat;
        rp.Delta1 = transpose(d.Amat) * s.Delta * inv_transpose(d.Amat);
    }

    // Construction self-checks.
    const double scale = std::max(1.0, frobenius(rp.M));
    rp.res_M = frobenius(rp.M - M2) / scale;
    rp.res_K = frobenius(conj(rp.Ktilde) + s.d4 * rp.Ktilde * rp.Delta0) / frobenius(rp.Ktilde);
    rp.res_Delta1 = frobenius(rp.Delta1 * rp.Lambda + rp.Lambda * rp.Delta1) / std::max(1.0, frobenius(rp.Lambda));
    const Mat4 M4 = rp.M * rp.M * rp.M * rp.M;
    rp.res_nil = frobenius(M4) / std::pow(scale, 4);
    const Mat4 flat = rp.Atilde * exp_nilpotent(transpose(rp.E), (rp.ell - rp.ell0) / 4) * transpose(rp.U);
    rp.res_Aflat = frobenius(flat - rp.AtildeFlat) / frobenius(rp.AtildeFlat);
    check(rp.res_M, 1e-12, "M = F E F^-1 = -chat E chat^-1");
    check(rp.res_K, 1e-12, "conj(Ktilde) = -d4 Ktilde Delta0");
    check(rp.res_Delta1, 1e-12, "Delta1 Lambda = -Lambda Delta1");
    check(rp.res_nil, 1e-12, "M nilpotent");
    check(rp.res_Aflat, 1e-12, "Atilde flat");
    return rp;
}

Mat4 d1_resonant(const ResonantParts& rp, const WeightData& w)
{
    const StokesData r = r_from_m(w.m0, w.m1);
    const Mat4 PK = p_matrix(r.s1) * rp.Ktilde;
    return (kappa0(w.m0) / w.chat0) * (inv_transpose(PK) * inv_transpose(rp.AtildeFlat) * inverse(rp.Fdiag));
}

ResonantResiduals resonant_identities(const ResonantParts& rp, const GammaData& g, const WeightData& w)
{
    const StructureMatrices s = structure();
    const StokesData r = r_from_m(w.m0, w.m1);
    const StokesPair sp = stokes_pair(r.s1, r.s2);
    const Mat4 D = d1_resonant(rp, w);
    const Mat4 cyc = sp.P1 * sp.P5q * s.Pi;
    const Mat4 target = inverse(s.d4) * omega_m(w, 1) * exp_nilpotent(rp.M, cplx(0, kPi / 2));
    ResonantResiduals res;
    res.cyclic = rel(inverse(D) * cyc * D, target);
    const Mat4 rhs = stokes_R(sp, 4) * (0.25 * (s.d4 * inv_transpose(D) *
                                                exp_nilpotent(transpose(rp.M), cplx(0, kPi)) *
                                                omega_m(w, 2) * s.Delta));
    res.antisym = rel(D, rhs);
    res.eigen = poly_diff(cyc, inverse(s.d4) * omega_m(w, 1));
    const ResonantParts rp2 = resonant_structure(rp.kase, g, w, 2 * rp.t);
    res.t_independence = rel(d1_resonant(rp2, w), D);
    return res;
}

E1Factor e1_factor_resonant(const ResonantParts& rp, const WeightData& w)
{
    const StructureMatrices s = structure();
    const auto& A = rp.At;
    const auto& Af = rp.AtFlat;
    const cplx F0 = rp.Fdiag(0, 0), F1 = rp.Fdiag(1, 1), F2 = rp.Fdiag(2, 2), F3 = rp.Fdiag(3, 3);
    E1Factor f;
    f.params.kase = rp.kase;
    Mat4 Ecal = Mat4::identity(), Fcal = Mat4::identity();
    switch (rp.kase) {
    case BoundaryCase::E1: {
        const cplx e1 = -A[3] * F3 / (A[0] * F0);
        const cplx f1 = -F2 / F1 - 2.0 * Af[1] / A[2];
        Ecal = Mat4::diag(e1, 1, 1, 1.0 / e1);
        Fcal = Fcal + f1 * Mat4::unit(1, 2);
        f.params.e1 = e1.real();
        f.params.f1 = f1.real();
        break;
    }
    case BoundaryCase::E3: {
        const cplx e1 = A[3] * F2 / (A[1] * F0);
        const cplx f1 = -F3 / F2 - Af[2] / A[3] - Af[0] / A[1];
        Ecal = Mat4::diag(e1, e1, 1.0 / e1, 1.0 / e1);
        Fcal = Fcal + f1 * (Mat4::unit(0, 1) + Mat4::unit(2, 3));
        f.params.e1 = e1.real();
        f.params.f1 = f1.real();
        break;
    }
    case BoundaryCase::V1: {
        const cplx q = Af[2] / A[3];
        const cplx f1 = F1 / F0 - 2.0 * q;
        const cplx r10 = F1 / F0;
        const cplx f2 = F3 / F0 - r10 * r10 * q + 2.0 * r10 * q * q - 2.0 * q * q * q +
                        2.0 * Af[1] * Af[2] / (A[3] * A[3]) - 2.0 * Af[0] / A[3];
        Fcal = Mat4::rows({{1, f1, 0.5 * f1 * f1, f2}, {0, 1, f1, 0.5 * f1 * f1}, {0, 0, 1, f1}, {0, 0, 0, 1}});
        f.params.f1 = f1.real();
        f.params.f2 = f2.real();
        f.params.e1 = 1;
        f.params.e2 = 1;
        break;
    }
    case BoundaryCase::V2: {
        const cplx f1 = -F2 / F1 - 2.0 * Af[1] / A[2];
        const cplx f2 = -F0 / F3 - 2.0 * Af[3] / A[0];
        Fcal = Fcal + f1 * Mat4::unit(1, 2) + f2 * Mat4::unit(3, 0);
        f.params.f1 = f1.real();
        f.params.f2 = f2.real();
        f.params.e1 = 1;
        f.params.e2 = 1;
        break;
    }
    default: throw Error(ErrorKind::WrongCase, "resonant structure needs E1, E3, V1 or V2");
    }
    f.route_i = Ecal * Fcal;
    f.route_ii = -(inv_transpose(rp.AtildeFlat) * inverse(rp.Fdiag) * rp.Delta1 * rp.Fdiag *
                   transpose(rp.AtildeFlat) * rp.Delta0);
    f.route_diff = rel(f.route_i, f.route_ii);
    const Mat4 D = d1_resonant(rp, w);
    f.reality_residual = rel(D, s.d4 * conj(D) * rp.Delta1);
    return f;
}

}  // namespace ttt
