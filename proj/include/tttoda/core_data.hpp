#pragma once

#include <optional>
#include <string>

namespace ttt {

inline constexpr double kEpsGeo = 1e-12;
inline constexpr double kEpsRes = 1e-8;

struct GammaData {
    double gamma0 = 0.0;
    double gamma1 = 0.0;
    std::optional<double> rho0;
    std::optional<double> rho1;
};

struct AlphaData {
    double alpha0 = 0.25, alpha1 = 0.25, alpha2 = 0.25, alpha3 = 0.25;
    double N = 1.0;
};

// c1 == c3; cProd = c0 c1 c2 c3.
struct HoloData {
    double c0 = 1.0, c1 = 1.0, c2 = 1.0, c3 = 1.0;
    double cProd = 1.0;
};

struct WeightData {
    double m0, m1, m2, m3;
    double a1, a2, a3;
    double chat0, chat1;
    double N = 1.0;      // gauge the ĉ values were computed in
    double cProd = 1.0;
};

enum class BoundaryCase { Interior, E1, E2, E3, V1, V2, V3 };

const char* case_name(BoundaryCase c);
bool is_resonant(BoundaryCase c);

bool in_region(const GammaData& g, double eps = kEpsGeo);
// Signed distances to the three edges, positive inside.
struct EdgeDistances {
    double e1, e2, e3;
};
EdgeDistances edge_distances(const GammaData& g);

BoundaryCase classify(const GammaData& g);
// Projects a point classified as boundary exactly onto its component.
GammaData snap(const GammaData& g);

AlphaData alpha_from_gamma(const GammaData& g);
GammaData gamma_from_alpha(const AlphaData& a);
AlphaData rescale(const AlphaData& a, double N);

// Canonical holomorphic gauge: c1 = c3 fixed so that the product is 1.
HoloData canonical_holo(double c0, double c2);
HoloData make_holo(double c0, double c1, double c2);

WeightData weights(const GammaData& g, const HoloData& h, double N = 1.0);
// Inverse of the ĉ normalization: holomorphic data with the requested ĉ.
HoloData holo_from_chat(const GammaData& g, double chat0, double chat1, double N = 1.0, double cProd = 1.0);

GammaData reflect(const GammaData& g);
BoundaryCase reflect(BoundaryCase c);

}  // namespace ttt
