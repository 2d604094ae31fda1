#pragma once

#include <array>

#include "tttoda/core_data.hpp"
#include "tttoda/correspondence.hpp"
#include "tttoda/linalg4.hpp"

namespace ttt {

struct StructureMatrices {
    cplx omega;
    Mat4 Omega, d4, Pi, Delta, C;
};
StructureMatrices structure();

// P_1 and P_{1 1/4}; every other P_k follows from the cyclic and
// anti-symmetry recursions.
struct StokesPair {
    Mat4 P1, P5q;
};
StokesPair stokes_pair(double r1, double r2);
// P_k and R_k for k = q/4.
Mat4 stokes_P(const StokesPair& sp, int q);
Mat4 stokes_R(const StokesPair& sp, int q);
StokesData r_from_m(double m0, double m1);

// diag(omega^{x m_i}) and the m matrix itself.
Mat4 m_matrix(const WeightData& w);
Mat4 omega_m(const WeightData& w, double x);

struct GenericD1Parts {
    cplx kappa0;
    Mat4 P, K, GammaDiag, chatDiag;
    Mat4 D1;
};
GenericD1Parts d1_generic_parts(const WeightData& w, const StokesData& r);
Mat4 d1_generic(const WeightData& w, const StokesData& r);

struct GenericResiduals {
    double cyclic = 0, antisym = 0, monodromy = 0, eigen = 0;
    double cond = 0;
};
GenericResiduals generic_identities(const WeightData& w, const StokesData& r);

struct E1Factor {
    Mat4 route_i, route_ii;
    double route_diff = 0;
    // || D1 - d4 conj(D1) Delta || (generic) or || D1flat - d4 conj(D1flat) Delta1 || (resonant)
    double reality_residual = 0;
    ConnectionParams params;
};
E1Factor e1_factor_generic(const GammaData& g, const WeightData& w);

struct ResonantParts {
    BoundaryCase kase = BoundaryCase::E1;
    double a = 0, t = 1, ell = 0, ell0 = 0, N = 1;
    Mat4 E, Fdiag, U, M, Lambda, Ktilde, Atilde, AtildeFlat, Delta0, Delta1, Amat;
    std::array<cplx, 4> At{}, AtFlat{};
    // construction self-check residuals
    double res_M = 0, res_K = 0, res_Delta1 = 0, res_nil = 0, res_Aflat = 0;
};
// Valid for E1, E3, V1, V2 (E2 and V3 go through reflect()).
ResonantParts resonant_structure(BoundaryCase kase, const GammaData& g, const WeightData& w, double t = 1.0);
// D1flat = D1 z^Lambda, independent of z.
Mat4 d1_resonant(const ResonantParts& rp, const WeightData& w);

struct ResonantResiduals {
    double cyclic = 0, antisym = 0, eigen = 0, t_independence = 0;
};
ResonantResiduals resonant_identities(const ResonantParts& rp, const GammaData& g, const WeightData& w);

E1Factor e1_factor_resonant(const ResonantParts& rp, const WeightData& w);

// D1 by direct integration of the lambda-ODE with h_i = chat_i t^{m_i}.
// Non-resonant points only.
Mat4 numeric_d1_oracle(const WeightData& w, double t = 1.0, double rho0 = 1e-2);

}  // namespace ttt
