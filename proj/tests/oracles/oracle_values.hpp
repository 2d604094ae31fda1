// Generated by tests/oracles/make_oracle_values.py (mpmath, 40 digits). Do not edit.
#pragma once

namespace oracle {

struct GammaPoint {
    double gamma0, gamma1, s1, s2, rho0, rho1;
};

inline constexpr GammaPoint kGammaPoints[] = {
    {0, 0, 0.0, 0.0, 0.0, 0.0},
    {1, 0, 1.4142135623730950488, -2.0, 1.0495097759902786842, -0.34657359027997265471},
    {0.5, 0.5, 1.0823922002923939688, -0.5857864376269049512, 0.39159439270683677647, 0.65791538328344190773},
    {-0.5, -0.5, -1.0823922002923939688, -0.5857864376269049512, -0.65791538328344190773, -0.39159439270683677647},
    {1.5, 0.2, 2.3834008534800744019, -3.2383896009963736273, 1.6520929024832423828, -0.34509426948941728413},
    {0, -1.5, -2.1795804271032745923, -3.0823922002923939688, 0.83889087937445116849, -1.8996519328838803344},
    {2.5, 0.8, 3.8231357462128489755, -5.6500201695035376669, 4.0424693774042151386, 0.92335878572012324586},
    {-0.8, 0.9, 0.01845798627598049184, 1.9385745082616091832, -1.6322161781060319277, 2.3138799032188463542},
};

inline constexpr double kRho0At10 = 1.0495097759902786842;
inline constexpr double kLaurentN0 = -0.90747907608088628902;
inline constexpr double kV1ChatMinus2 = 0.30650639339322921478;
inline constexpr double kE1W0ConstAt1 = 0.78318878541367355294;
inline constexpr double kU6At10 = -8.2579107176841895997e-9;
inline constexpr double kC0Generic123Im = 49.4788589023862961;

struct G0Value {
    double a1, a2, a3, s_re, s_im, re, im;
};

inline constexpr G0Value kG0Values[] = {
    {1, 2, 3, 0.5, 0.0, 0.0, 30.010444931892665462},
    {1, 2, 3, 1.0, 0.0, 0.0, 18.202254962810514616},
    {1, 2, 3, 2.0, 0.0, 0.0, 6.6962353837788447548},
    {1, 2, 3, 4.0, 0.0, 0.0, 0.90623691228273784402},
    {1, 2, 3, 0.47766824456280301146, 0.14776010333066978225, 4.5180049056978006292, 30.35377100954565382},
    {1, 1, 2, 0.5, 0.0, 0.0, 56.467134781427955352},
    {1, 1, 2, 1.0, 0.0, 0.0, 28.176675003118291445},
    {1, 1, 2, 2.0, 0.0, 0.0, 8.1477185679794905105},
    {1, 1, 2, 0.47766824456280301146, 0.14776010333066978225, 12.768559413292592017, 56.574184274189710778},
    {0, 0, 0, 0.5, 0.0, 0.0, 341.6791102921632218},
    {0, 0, 0, 1.0, 0.0, 0.0, 94.807212659766561946},
    {0, 0, 0, 2.0, 0.0, 0.0, 14.734020863986833244},
    {0, 0, 0, 0.47766824456280301146, 0.14776010333066978225, 158.84818710961971351, 314.37107114930566231},
    {2, 2, 4, 0.5, 0.0, 0.0, 16.348418568129964926},
    {2, 2, 4, 1.0, 0.0, 0.0, 11.881172496404264111},
    {2, 2, 4, 2.0, 0.0, 0.0, 5.5216836909543753795},
    {2, 2, 4, 0.47766824456280301146, 0.14776010333066978225, 1.3544734006200258427, 16.576530851109113577},
};

struct LaplaceRatio {
    double a1, a2, a3, s, ratio;
};

inline constexpr LaplaceRatio kLaplaceRatios[] = {
    {1, 2, 3, 30, 1.0},
    {1, 2, 3, 40, 1.0},
    {1, 2, 3, 60, 1.0},
    {0, 0, 0, 30, 0.97971981991963215588},
    {0, 0, 0, 40, 0.98468777018256126718},
    {0, 0, 0, 60, 0.9897230463900094007},
};

}  // namespace oracle
