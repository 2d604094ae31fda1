// Direct numerical extraction of D1 from the lambda-ODE
//   dPhi/dlambda = [ -(t/lambda^2) S + m/lambda ] Phi,   S = h Pi h^{-1},
// by matching the formal solution at 0 with the convergent one at infinity.

#include <cmath>
#include <vector>

#include "tttoda/dopri5.hpp"
#include "tttoda/errors.hpp"
#include "tttoda/monodromy.hpp"
#include "tttoda/specfun.hpp"

namespace ttt {

namespace {

using Vec = std::array<cplx, 4>;

Vec mat_vec(const Mat4& M, const Vec& v)
{
    Vec r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += M(i, j) * v[j];
    return r;
}

struct Problem {
    double t;
    Mat4 S, m, O0, B;
    cplx d[4];
};

// Coefficients F_k of the formal series O0 (I + sum F_k lambda^k) e^{(t/lambda) d4}.
std::vector<Mat4> formal_series(const Problem& p, int order)
{
    std::vector<Mat4> F{Mat4::identity()};
    for (int k = 0; k < order; ++k) {
        // t [F_{k+1}, d4] = (k - B) F_k off the diagonal.
        const Mat4 rhs = (cplx(k) * Mat4::identity() - p.B) * F[k];
        Mat4 Fn;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) Fn(i, j) = rhs(i, j) / (p.t * (p.d[j] - p.d[i]));
        // Diagonal from the next order: (k+1 - B_ii) F_ii = sum_{l != i} B_il F_li.
        for (int i = 0; i < 4; ++i) {
            cplx s = 0;
            for (int l = 0; l < 4; ++l)
                if (l != i) s += p.B(i, l) * Fn(l, i);
            Fn(i, i) = s / (cplx(k + 1) - p.B(i, i));
        }
        F.push_back(Fn);
    }
    return F;
}

// Convergent expansion (sum G_k lambda^{-k}) lambda^m at infinity.
Mat4 phi_infinity(const Problem& p, cplx lam, const double mm[4])
{
    Mat4 G = Mat4::identity(), H = Mat4::identity();
    cplx mu = 1.0 / lam, pw = 1.0;
    for (int k = 1; k < 200; ++k) {
        const Mat4 rhs = (-p.t) * (p.S * G);
        Mat4 Gn;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const double den = mm[j] - mm[i] - k;
                if (std::abs(den) > kEpsRes)
                    Gn(i, j) = rhs(i, j) / den;
                else if (std::abs(rhs(i, j)) > 1e-10 * std::max(1.0, max_abs(rhs)))
                    throw Error(ErrorKind::ResonantPoint, "logarithmic term at infinity");
            }
        G = Gn;
        pw *= mu;
        const Mat4 term = pw * G;
        H += term;
        if (max_abs(term) < 1e-18 * max_abs(H)) break;
    }
    const double la = std::log(std::abs(lam)), arg = std::arg(lam);
    Mat4 L;
    for (int i = 0; i < 4; ++i) L(i, i) = std::exp(mm[i] * cplx(la, arg));
    return H * L;
}

// Column j of Phi^{(0)}_1 at lambda = R e^{i phi_end}, continued from the ray
// arg lambda = theta where that column is the most recessive one.
Vec column(const Problem& p, const std::vector<Mat4>& F, int j, double theta, double rho0, double R,
           double phi_end)
{
    const cplx dj = p.d[j];
    auto rhs_at = [&](cplx lam, const Vec& z, cplx dlam) {
        // z = exp(-t d_j / lambda) Phi_j
        Vec r{};
        const cplx a = p.t / (lam * lam);
        for (int i = 0; i < 4; ++i) {
            cplx s = 0;
            for (int k = 0; k < 4; ++k) s += (-a * p.S(i, k) + (i == k ? p.m(i, i) / lam : 0.0)) * z[k];
            r[i] = dlam * (s + a * dj * z[i]);
        }
        return r;
    };
    const cplx lam0 = std::polar(rho0, theta);
    Mat4 Y;
    cplx pw = 1.0;
    for (const Mat4& Fk : F) {
        Y += pw * Fk;
        pw *= lam0;
    }
    Vec z{};
    const Mat4 O0Y = p.O0 * Y;
    for (int i = 0; i < 4; ++i) z[i] = O0Y(i, j);

    Dopri5<cplx, 4> ray;
    ray.rtol = 1e-12;
    ray.atol = 1e-14;
    auto fr = [&](double u, const Vec& zz) {
        const cplx lam = std::exp(cplx(u, theta));
        return rhs_at(lam, zz, lam);
    };
    if (ray.integrate(fr, std::log(rho0), z, std::log(R)) != Dopri5<cplx, 4>::Status::Ok)
        throw Error(ErrorKind::StiffFailure, "lambda-ODE step control collapsed on the radial leg");
    Dopri5<cplx, 4> arc;
    arc.rtol = 1e-12;
    arc.atol = 1e-14;
    auto fa = [&](double ph, const Vec& zz) {
        const cplx lam = std::polar(R, ph);
        return rhs_at(lam, zz, cplx(0, 1) * lam);
    };
    if (arc.integrate(fa, theta, z, phi_end) != Dopri5<cplx, 4>::Status::Ok)
        throw Error(ErrorKind::StiffFailure, "lambda-ODE step control collapsed on the arc");
    const cplx e = std::exp(p.t * dj / std::polar(R, phi_end));
    for (auto& v : z) v *= e;
    return z;
}

}  // namespace

Mat4 numeric_d1_oracle(const WeightData& w, double t, double rho0)
{
    if (!(t > 0) || !(rho0 > 0)) throw Error(ErrorKind::InvalidArgument, "oracle needs t > 0 and rho0 > 0");
    const StructureMatrices s = structure();
    const double mm[4] = {w.m0, w.m1, w.m2, w.m3};
    Problem p;
    p.t = t;
    const double chat[4] = {w.chat0, w.chat1, 1 / w.chat1, 1 / w.chat0};
    Mat4 h;
    for (int i = 0; i < 4; ++i) h(i, i) = chat[i] * std::pow(t, mm[i]);
    p.S = h * s.Pi * inverse(h);
    p.m = m_matrix(w);
    p.O0 = h * s.Omega;
    p.B = inverse(p.O0) * p.m * p.O0;
    for (int i = 0; i < 4; ++i) p.d[i] = s.d4(i, i);
    const auto F = formal_series(p, 2);

    const double R = 1.0;
    // Rays on which columns 1, 2, 3 are the most recessive inside the sector.
    const double theta[4] = {0.0, -kPi / 2, 0.0, 3 * kPi / 8};
    Mat4 Phi;
    for (int j = 1; j < 4; ++j) {
        const Vec c = column(p, F, j, theta[j], rho0, R, 0.0);
        for (int i = 0; i < 4; ++i) Phi(i, j) = c[i];
    }
    // Column 0 from the cyclic symmetry Phi_1(lambda) = d4^{-1} Phi_{1/2}(omega lambda) Pi^{-1}
    // with Phi_{1/2} = Phi_1 (P_{1/2} P_{3/4})^{-1}.
    const StokesData r = r_from_m(w.m0, w.m1);
    const StokesPair sp = stokes_pair(r.s1, r.s2);
    const Vec e1{0.0, 1.0, 0.0, 0.0};
    const Vec u = mat_vec(inverse(stokes_P(sp, 2) * stokes_P(sp, 3)), e1);
    if (std::abs(u[0]) > 1e-12)
        throw Error(ErrorKind::StructureInconsistent, "column recursion needs column 0 of Phi_1");
    Vec c0{};
    for (int j = 1; j < 4; ++j) {
        if (u[j] == 0.0) continue;
        const Vec c = column(p, F, j, theta[j], rho0, R, kPi / 2);
        for (int i = 0; i < 4; ++i) c0[i] += u[j] * c[i];
    }
    const Mat4 d4inv = inverse(s.d4);
    for (int i = 0; i < 4; ++i) Phi(i, 0) = d4inv(i, i) * c0[i];

    const Mat4 Pinf = phi_infinity(p, cplx(R, 0.0), mm);
    return inverse(Phi) * Pinf;
}

}  // namespace ttt
