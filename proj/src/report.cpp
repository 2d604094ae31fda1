#include "report.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <vector>

#include "tttoda/barnes.hpp"
#include "tttoda/errors.hpp"
#include "tttoda/monodromy.hpp"
#include "tttoda/toda_ode.hpp"

namespace ttt::report {

namespace {

class Opts {
public:
    explicit Opts(const Options& o) : o_(o) {}

    bool has(const std::string& k) const { return o_.count(k) != 0; }
    std::string str(const std::string& k, const std::string& def = "") const
    {
        auto it = o_.find(k);
        return it == o_.end() ? def : it->second;
    }
    std::vector<double> nums(const std::string& k) const
    {
        std::string s = str(k);
        for (char& c : s)
            if (c == ',') c = ' ';
        std::istringstream is(s);
        std::vector<double> v;
        std::string tok;
        while (is >> tok) {
            std::size_t used = 0;
            double d = 0;
            try {
                d = std::stod(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw Error(ErrorKind::InvalidArgument, "option " + k + ": not a number: " + tok);
            v.push_back(d);
        }
        return v;
    }
    std::vector<double> nums(const std::string& k, std::size_t n) const
    {
        auto v = nums(k);
        if (v.size() != n)
            throw Error(ErrorKind::InvalidArgument, "option " + k + " needs " + std::to_string(n) + " numbers");
        return v;
    }
    double num(const std::string& k, double def) const { return has(k) ? nums(k, 1)[0] : def; }
    bool flag(const std::string& k, bool def = false) const
    {
        if (!has(k)) return def;
        const std::string v = str(k);
        if (v.empty() || v == "1" || v == "true" || v == "yes" || v == "on") return true;
        if (v == "0" || v == "false" || v == "no" || v == "off") return false;
        throw Error(ErrorKind::InvalidArgument, "option " + k + ": expected a boolean, got " + v);
    }

private:
    const Options& o_;
};

json cnum(cplx z) { return json::array({z.real(), z.imag()}); }

json mat(const Mat4& m)
{
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json r = json::array();
        for (int j = 0; j < 4; ++j) r.push_back(cnum(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

// Collects outputs (value + formula tag) and residual checks.
struct Builder {
    json inputs = json::object();
    json outputs = json::object();
    json residuals = json::object();
    json tolerances = json::object();
    json notes = json::array();
    bool pass = true;

    void out(const std::string& name, json value, const std::string& formula)
    {
        outputs[name] = {{"value", std::move(value)}, {"formula", formula}};
    }
    // Records |value| <= tol; tol < 0 means informational only.
    void check(const std::string& name, double value, double tol, const std::string& formula)
    {
        json r = {{"value", value}, {"formula", formula}};
        if (tol >= 0) {
            const bool ok = std::isfinite(value) && std::abs(value) <= tol;
            r["tolerance"] = tol;
            r["pass"] = ok;
            pass = pass && ok;
        }
        residuals[name] = r;
    }
};

GammaData read_gamma(const Opts& o)
{
    const auto v = o.nums("gamma", 2);
    GammaData g{v[0], v[1]};
    if (o.has("rho")) {
        const auto r = o.nums("rho", 2);
        g.rho0 = r[0];
        g.rho1 = r[1];
    }
    return g;
}

HoloData read_holo(const Opts& o)
{
    const auto v = o.nums("holo");
    if (v.size() == 2) return canonical_holo(v[0], v[1]);
    if (v.size() == 3) return make_holo(v[0], v[1], v[2]);
    throw Error(ErrorKind::InvalidArgument, "option holo needs c0 c2 or c0 c1 c2");
}

json holo_json(const HoloData& h)
{
    return {{"c0", h.c0}, {"c1", h.c1}, {"c2", h.c2}, {"c3", h.c3}, {"c", h.cProd}};
}

json alpha_json(const AlphaData& a)
{
    return {{"alpha", {a.alpha0, a.alpha1, a.alpha2, a.alpha3}}, {"N", a.N}};
}

json profile_json(const ResonantProfile& p)
{
    json ch = json::array();
    for (const auto& c : p.channels)
        ch.push_back({{"channel", c.name},
                      {"w0_coefficient", c.cw0},
                      {"w1_coefficient", c.cw1},
                      {"log_x_coefficient", c.klog},
                      {"log_poly_multiplier", c.mult},
                      {"poly_in_log_x_over_4", c.poly}});
    return ch;
}

const char* kStokesTag = "s1 = -2cos(pi(g0+1)/4) - 2cos(pi(g1+3)/4), s2 = -2 - 4cos(pi(g0+1)/4)cos(pi(g1+3)/4)";
const char* kStokesAlphaTag = "s1 = -2cos(pi a0/N) + 2cos(pi a2/N), s2 = -2 + 4cos(pi a0/N)cos(pi a2/N)";
const char* kRhoTag = "rho_i = -log(2^{2 g_i} * gamma-function ratio_i) (global solution)";
const char* kConnTag = "e1 = e^{rho0} 2^{2 g0} ratio1, e2 = e^{rho1} 2^{2 g1} ratio2";
const char* kConnHoloTag = "e1 = c0 c^{(2m0-1)/4} N^{-2m0} r1, e2 = c2^{-1} c^{(1+2m1)/4} N^{-2m1} r2";

// ---------------------------------------------------------------- correspond
void correspond(const Opts& o, Builder& b)
{
    // Asymptotic gauge (gamma, optional rho) or holomorphic gauge (alpha, optional c).
    if (o.has("gamma") == o.has("alpha"))
        throw Error(ErrorKind::InvalidArgument, "give exactly one of --gamma and --alpha");
    if (o.has("holo") && !o.has("alpha")) throw Error(ErrorKind::InvalidArgument, "--holo goes with --alpha");
    const double N = o.num("N", 1.0);
    GammaData g;
    std::optional<HoloData> holo;
    if (o.has("gamma")) {
        g = read_gamma(o);
        b.inputs = {{"gauge", "asymptotic"}, {"gamma", {g.gamma0, g.gamma1}}};
        if (g.rho0) b.inputs["rho"] = {*g.rho0, *g.rho1};
    } else {
        const auto v = o.nums("alpha", 4);
        g = gamma_from_alpha(AlphaData{v[0], v[1], v[2], v[3], N});
        b.inputs = {{"gauge", "holomorphic"}, {"alpha", v}, {"N", N}};
        if (o.has("holo")) {
            holo = read_holo(o);
            b.inputs["holo"] = holo_json(*holo);
        }
    }
    const BoundaryCase k = classify(g);
    const EdgeDistances d = edge_distances(g);
    b.out("classification", case_name(k), "edges g1 = 1, g0 = -1, g1 = g0 - 2 with tolerance 1e-8");
    b.out("edge_distances", {d.e1, d.e2, d.e3}, "signed distances to the three edges");
    const GammaData gs = snap(g);
    b.out("gamma", {gs.gamma0, gs.gamma1}, "input exponents, snapped onto the boundary component");
    const AlphaData a = rescale(alpha_from_gamma(gs), N);
    b.out("alpha", alpha_json(a), "a0 = N(g0+1)/4, a1 = a3 = N(g1-g0+2)/8, a2 = N(1-g1)/4");
    const StokesData s = stokes_from_gamma(gs);
    const StokesData sa = stokes_from_alpha(a);
    b.out("stokes", {s.s1, s.s2}, kStokesTag);
    b.check("stokes_gauge_consistency", std::max(std::abs(s.s1 - sa.s1), std::abs(s.s2 - sa.s2)), 1e-12,
            kStokesAlphaTag);

    if (k == BoundaryCase::Interior) {
        const auto [r0, r1] = global_rho(gs);
        b.out("rho_global", {r0, r1}, kRhoTag);
        const HoloData hg = global_holo(gs, N);
        b.out("holo_global", holo_json(hg), "c of the global solution, gauge c = 1");
        GammaData gr = gs;
        gr.rho0 = g.rho0.value_or(r0);
        gr.rho1 = g.rho1.value_or(r1);
        const ConnectionParams pa = connection_from_asymptotic(gr);
        b.out("connection_from_asymptotic", {{"e1", pa.e1}, {"e2", pa.e2}}, kConnTag);
        const HoloData h = holo.value_or(hg);
        const ConnectionParams ph = connection_from_holo(a, h);
        b.out("connection_from_holo", {{"e1", ph.e1}, {"e2", ph.e2}}, kConnHoloTag);
        // Composite route: holomorphic data -> rho -> connection parameters.
        const WeightData w = weights(gs, h, N);
        const auto [hr0, hr1] = rho_from_holo(w);
        GammaData gh = gs;
        gh.rho0 = hr0;
        gh.rho1 = hr1;
        b.out("rho_from_holo", {hr0, hr1}, "rho_i = -2 log chat_i");
        const ConnectionParams pc = connection_from_asymptotic(gh);
        b.check("composite_identity", std::max(std::abs(pc.e1 - ph.e1), std::abs(pc.e2 - ph.e2)), 1e-10,
                "connection_from_asymptotic(rho_from_holo) vs connection_from_holo");
        if (!g.rho0 && !holo)
            b.check("global_criterion", std::max(std::abs(pa.e1 - 1), std::abs(pa.e2 - 1)), 1e-10,
                    "e1 = e2 = 1 for the global solution");
    } else {
        b.out("resonant_profile", profile_json(resonant_profile(gs, k)),
              "2(cw0 w0 + cw1 w1) ~ klog log x + mult log Poly(log(x/4)) as x -> 0");
        const double ell0 = canonical_ell0(k, gs);
        b.out("resonant_gauge_log_c", ell0, "log(c/N^4) at which the global resonant data are real");
        b.out("holo_global", holo_json(global_holo(gs, N)), "resonant global holomorphic data");
        b.notes.push_back("rho is not defined on the boundary; the small-x behavior is the log-polynomial profile");
    }
}

// ----------------------------------------------------------------- monodromy
double entrywise_rel(const Mat4& x, const Mat4& ref)
{
    const double scale = max_abs(ref);
    double r = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r = std::max(r, std::abs(x(i, j) - ref(i, j)) / std::max(std::abs(ref(i, j)), 1e-12 * scale));
    return r;
}

BoundaryCase parse_case(const std::string& s)
{
    for (BoundaryCase c : {BoundaryCase::Interior, BoundaryCase::E1, BoundaryCase::E2, BoundaryCase::E3,
                           BoundaryCase::V1, BoundaryCase::V2, BoundaryCase::V3})
        if (s == case_name(c)) return c;
    throw Error(ErrorKind::InvalidArgument, "unknown case " + s);
}

void monodromy(const Opts& o, Builder& b)
{
    GammaData g = read_gamma(o);
    const double N = o.num("N", 1.0);
    const double t = o.num("t", 1.0);
    BoundaryCase k = classify(g);
    const std::string want = o.str("resonant_case", "auto");
    if (want != "auto" && parse_case(want) != k)
        throw Error(ErrorKind::WrongCase, std::string("point is classified as ") + case_name(k) + ", not " + want);
    g = snap(g);
    b.inputs = {{"gamma", {g.gamma0, g.gamma1}}, {"N", N}, {"t", t}};
    const bool global = o.flag("global") || !o.has("holo");
    b.out("classification", case_name(k), "edges g1 = 1, g0 = -1, g1 = g0 - 2 with tolerance 1e-8");
    b.tolerances["identities"] = 1e-10;

    if (k == BoundaryCase::Interior) {
        const HoloData h = global ? global_holo(g, N) : read_holo(o);
        b.inputs["holo"] = global ? json("global") : holo_json(h);
        const WeightData w = weights(g, h, N);
        const StokesData r = r_from_m(w.m0, w.m1);
        const GenericD1Parts parts = d1_generic_parts(w, r);
        b.out("kappa0", cnum(parts.kappa0), "i pi^{5/2} 2^{-2m0+3/2}");
        b.out("D1", mat(parts.D1), "D1 = kappa0 (P K)^{-T} Gamma^{-1} chat^{-1}");
        const GenericResiduals res = generic_identities(w, r);
        b.check("cyclic", res.cyclic, 1e-10, "D1 cyclic symmetry");
        b.check("antisymmetry", res.antisym, 1e-10, "D1 anti-symmetry");
        b.check("monodromy", res.monodromy, 1e-10, "R1 R2 = D1 omega^{4m} D1^{-1}");
        b.check("eigenvalues", res.eigen, 1e-10, "spectrum of R1 R2 equals omega^{4m}");
        b.out("condition_number", res.cond, "1-norm condition number of D1");
        const E1Factor f = e1_factor_generic(g, w);
        b.out("connection_factor", mat(f.route_i), "E1 = D1 (d4 conj(D1) Delta)^{-1}");
        b.out("connection_params", {{"e1", f.params.e1}, {"e2", f.params.e2}}, kConnTag);
        b.check("factor_routes", f.route_diff, 1e-10, "E1 by matrix route vs closed form in e1, e2");
        if (global) {
            b.check("factor_identity", frobenius(f.route_i - Mat4::identity()), 1e-10, "E1 = I (global solution)");
            b.check("reality", f.reality_residual, 1e-10, "D1 = d4 conj(D1) Delta");
            b.check("e_params", std::max(std::abs(f.params.e1 - 1), std::abs(f.params.e2 - 1)), 1e-10,
                    "e1 = e2 = 1");
        }
        if (o.flag("oracle")) {
            const Mat4 O = numeric_d1_oracle(w, t, o.num("oracle_rho0", 1e-2));
            b.out("D1_oracle", mat(O), "lambda-ODE integration, Phi0^{-1} Phi_inf at |lambda| = 1");
            b.check("oracle_vs_closed_form", entrywise_rel(O, d1_generic(w, r)), 1e-4,
                    "entrywise relative difference");
        }
        return;
    }

    // Resonant components; E2 and V3 are computed at the reflected point.
    GammaData gc = g;
    BoundaryCase kc = k;
    if (k == BoundaryCase::E2 || k == BoundaryCase::V3) {
        gc = reflect(g);
        kc = reflect(k);
        b.notes.push_back(std::string("computed at the reflected point on ") + case_name(kc));
        b.out("reflected_gamma", {gc.gamma0, gc.gamma1}, "(g0, g1) -> (-g1, -g0)");
    }
    if (o.flag("oracle")) b.notes.push_back("the lambda-ODE oracle only covers non-resonant points; skipped");
    const HoloData h = global ? global_holo(gc, N) : read_holo(o);
    b.inputs["holo"] = global ? json("global") : holo_json(h);
    const WeightData w = weights(gc, h, N);
    const ResonantParts rp = resonant_structure(kc, gc, w, t);
    b.out("log_c_gauge", rp.ell0, "log(c/N^4) of the resonant gauge");
    b.out("M", mat(rp.M), "M = F E F^{-1}");
    b.out("Lambda", mat(rp.Lambda), "Lambda = -(N/4) M");
    b.out("Ktilde", mat(rp.Ktilde), "resonant replacement of K");
    b.out("Delta0", mat(rp.Delta0), "conj(Ktilde) = -d4 Ktilde Delta0");
    b.out("Delta1", mat(rp.Delta1), "Delta1 = A^T Delta A^{-T}");
    const Mat4 D1f = d1_resonant(rp, w);
    b.out("D1_flat", mat(D1f), "D1flat = kappa0 chat0^{-1} (P Ktilde)^{-T} Atilde^{-T} F^{-1}");
    b.check("structure_M", rp.res_M, 1e-12, "F E F^{-1} = -chat E chat^{-1}");
    b.check("structure_Ktilde", rp.res_K, 1e-12, "conj(Ktilde) = -d4 Ktilde Delta0");
    b.check("structure_Delta1", rp.res_Delta1, 1e-12, "Delta1 Lambda = -Lambda Delta1");
    b.check("structure_nilpotent", rp.res_nil, 1e-12, "M^4 = 0");
    const ResonantResiduals rr = resonant_identities(rp, gc, w);
    b.check("cyclic", rr.cyclic, 1e-10, "D1flat cyclic symmetry");
    b.check("antisymmetry", rr.antisym, 1e-10, "D1flat anti-symmetry");
    b.check("eigenvalues", rr.eigen, 1e-10, "spectrum of the monodromy");
    b.check("t_independence", rr.t_independence, 1e-10, "D1flat at t vs 2t");
    const E1Factor f = e1_factor_resonant(rp, w);
    b.out("connection_factor", mat(f.route_i), "E1flat = D1flat (d4 conj(D1flat) Delta1)^{-1}");
    json params = json::object();
    if (kc == BoundaryCase::E1 || kc == BoundaryCase::E3) params = {{"e1", f.params.e1}, {"f1", f.params.f1}};
    else params = {{"f1", f.params.f1}, {"f2", f.params.f2}};
    b.out("connection_params", params, "resonant connection parameters read off E1flat");
    b.check("factor_routes", f.route_diff, 1e-10, "E1flat by matrix route vs closed form");
    if (global) {
        b.check("reality", f.reality_residual, 1e-10, "D1flat = d4 conj(D1flat) Delta1");
        double dev = std::max(std::abs(f.params.f1), std::abs(f.params.f2));
        if (kc == BoundaryCase::E1 || kc == BoundaryCase::E3)
            dev = std::max(std::abs(f.params.e1 - 1), std::abs(f.params.f1));
        b.check("global_params", dev, 1e-10, "e = 1, f = 0");
    }
}

// ------------------------------------------------------------------- connect
void connect(const Opts& o, Builder& b, std::string& csv)
{
    GammaData g = read_gamma(o);
    const BoundaryCase k = classify(g);
    g = snap(g);
    const double x1 = o.num("x1", 8.0), x0 = o.num("x0", 1e-4);
    TodaTolerance tol;
    tol.rtol = o.num("rtol", tol.rtol);
    tol.atol = o.num("atol", tol.atol);
    const std::string init = o.str("init", "bessel");
    if (init != "bessel" && init != "leading") throw Error(ErrorKind::InvalidArgument, "init is bessel or leading");
    b.inputs = {{"gamma", {g.gamma0, g.gamma1}}, {"x1", x1}, {"x0", x0}, {"init", init}};
    b.tolerances = {{"rtol", tol.rtol}, {"atol", tol.atol}};
    b.out("classification", case_name(k), "edges g1 = 1, g0 = -1, g1 = g0 - 2 with tolerance 1e-8");
    const StokesData s = stokes_from_gamma(g);
    b.out("stokes", {s.s1, s.s2}, kStokesTag);

    std::ostringstream os;
    if (o.flag("outward")) {
        if (k != BoundaryCase::Interior) throw Error(ErrorKind::ResonantPoint, "outward demo needs an interior point");
        const double dr = o.num("perturb_rho", 0.0);
        const auto [r0, r1] = global_rho(g);
        GammaData gp = g;
        gp.rho0 = r0 + dr;
        gp.rho1 = r1 + dr;
        b.inputs["direction"] = "outward";
        b.inputs["perturb_rho"] = dr;
        b.out("rho_start", {*gp.rho0, *gp.rho1}, "global rho shifted by perturb_rho");
        const Trajectory tr = integrate(init_small_x(gp, x0), x1, tol, 4, "small-x leading");
        write_csv(os, tr);
        csv = os.str();
        const LargeFit lf = fit_large_x(tr);
        b.out("reached_x", tr.back().x, "outward integration end point");
        b.out("stokes_fit", {lf.s1, lf.s2}, "regression of u x^{1/2} e^{2 sqrt2 x}, v x^{1/2} e^{4x}");
        b.notes.push_back("outward integration is unstable; a perturbed rho is expected to blow up");
        return;
    }

    InwardOptions io;
    io.x1 = x1;
    io.x0 = x0;
    io.bessel = init == "bessel";
    io.tol = tol;
    const Trajectory tr = integrate_inward(s, io);
    write_csv(os, tr);
    csv = os.str();
    b.out("steps", tr.steps, "accepted steps");
    b.check("ode_residual", tr.ode_residual, 1e-6, "|y' - f(y)| / (1 + |f|) at step midpoints");

    if (k == BoundaryCase::Interior) {
        const auto [r0, r1] = global_rho(g);
        const SmallFit plain = fit_small_x(tr);
        const SmallFit fit = fit_small_x_refined(tr);
        b.out("rho_global", {r0, r1}, kRhoTag);
        b.out("fit_plain", {{"gamma", {plain.gamma0, plain.gamma1}}, {"rho", {plain.rho0, plain.rho1}}},
              "least squares of 2w_i on (log x, 1) over [x0, 10 x0]");
        b.out("fit", {{"gamma", {fit.gamma0, fit.gamma1}}, {"rho", {fit.rho0, fit.rho1}}},
              "same, with the leading x^k corrections in the basis");
        b.check("gamma_error", std::max(std::abs(fit.gamma0 - g.gamma0), std::abs(fit.gamma1 - g.gamma1)), 1e-6,
                "|gamma_hat - gamma|");
        b.check("rho_error", std::max(std::abs(fit.rho0 - r0), std::abs(fit.rho1 - r1)), 2e-3,
                "|rho_hat - rho_global|");
        const double x1c = o.num("x1_check", 10.0);
        if (x1c > 0 && x1c != x1) {
            InwardOptions io2 = io;
            io2.x1 = x1c;
            const SmallFit f2 = fit_small_x_refined(integrate_inward(s, io2));
            b.inputs["x1_check"] = x1c;
            b.check("rho_shift_x1", std::max(std::abs(f2.rho0 - fit.rho0), std::abs(f2.rho1 - fit.rho1)), 5e-4,
                    "|rho_hat(x1_check) - rho_hat(x1)|");
        }
        return;
    }
    // Resonant: compare with the log-polynomial profile at x0.
    const ResonantProfile p = resonant_profile(g, k);
    const TodaState& e = tr.back();
    json ch = json::array();
    for (const auto& c : p.channels) {
        const double lhs = 2 * (c.cw0 * e.w0 + c.cw1 * e.w1) - c.klog * std::log(e.x);
        const double poly = c.poly_at(e.x);
        const double rhs = c.mult * std::log(std::abs(poly));
        ch.push_back({{"channel", c.name}, {"numeric", lhs}, {"profile", rhs},
                      {"poly_relative_gap", std::expm1((lhs - rhs) / c.mult)}});
        b.check("profile_" + c.name, lhs - rhs, 1e-2,
                "(channel - klog log x) - mult log Poly at x0; resonant error terms are unspecified, "
                "tolerance calibrated empirically");
    }
    b.out("profile_comparison", ch, "integrated solution vs log-polynomial profile at x0");
    b.notes.push_back("resonant tolerances are empirical: the asymptotic error exponents are not given in closed form");
}

// -------------------------------------------------------------------- barnes
void barnes(const Opts& o, Builder& b)
{
    const auto av = o.nums("a", 3);
    const BarnesSpec spec = barnes_spec(av[0], av[1], av[2]);
    const auto sv = o.nums("s");
    if (sv.empty() || sv.size() > 2) throw Error(ErrorKind::InvalidArgument, "option s needs re [im]");
    const cplx s(sv[0], sv.size() == 2 ? sv[1] : 0.0);
    std::string routes = o.str("routes", "series,contour,triple,laplace");
    for (char& c : routes)
        if (c == ',') c = ' ';
    b.inputs = {{"a", av}, {"s", cnum(s)}, {"routes", routes}};
    b.out("m0", spec.m0, "m0 = (a1 + a2 + a3)/4 - 3/2");
    std::istringstream is(routes);
    std::string r;
    std::map<std::string, cplx> val;
    while (is >> r) {
        if (r == "series") {
            if (std::abs(s) > 10) {
                b.notes.push_back("series route skipped: needs |s| <= 10");
                continue;
            }
            val[r] = g0_series(spec, s);
            b.out("series", cnum(val[r]), "residue sum over the poles of the gamma product");
        } else if (r == "contour") {
            val[r] = g0_quadrature(spec, s, o.num("c", std::numeric_limits<double>::quiet_NaN()));
            b.out("contour", cnum(val[r]), "vertical-line integral, global adaptive Gauss-Kronrod");
        } else if (r == "triple") {
            if (s.imag() != 0 || s.real() < 1 || s.real() > 8) {
                b.notes.push_back("triple route skipped: needs real s in [1, 8]");
                continue;
            }
            val[r] = g0_triple(spec, s.real(), o.num("step", 0.2));
            b.out("triple", cnum(val[r]), "triple integral over (0, inf)^3, trapezoid in log x");
        } else if (r == "laplace") {
            if (s.imag() != 0 || s.real() <= 0) {
                b.notes.push_back("laplace route skipped: needs real s > 0");
                continue;
            }
            val[r] = g0_laplace(spec, s.real());
            b.out("laplace", cnum(val[r]), "kappa0 s^{m0} e^{-s}");
        } else {
            throw Error(ErrorKind::InvalidArgument, "unknown route " + r);
        }
    }
    auto rel = [&](const std::string& x, const std::string& y) { return std::abs(val[x] - val[y]) / std::abs(val[y]); };
    if (val.count("series") && val.count("contour"))
        b.check("series_vs_contour", rel("contour", "series"), 1e-8, "|contour - series| / |series|");
    const std::string ref = val.count("series") ? "series" : "contour";
    if (val.count("triple") && val.count(ref)) b.check("triple_vs_" + ref, rel("triple", ref), 1e-5, "relative");
    if (val.count("laplace") && val.count("contour")) {
        const double ratio = std::abs(val["contour"] / val["laplace"]);
        b.out("laplace_ratio", ratio, "|contour / laplace|");
        b.check("laplace_deviation", ratio - 1, s.real() >= 30 ? 2e-2 : -1, "ratio - 1, checked for s >= 30");
    }
    if (std::abs(s) <= 10 && s.imag() == 0 && s.real() > 0)
        b.check("T_residual", scalar_ode_residual(spec, s.real()), 1e-9, "|T g0| / |g0| on the series");
}

}  // namespace

Result run(const std::string& command, const Options& opts)
{
    Result res;
    Builder b;
    const Opts o(opts);
    const auto t0 = std::chrono::steady_clock::now();
    json err;
    try {
        if (command == "correspond") correspond(o, b);
        else if (command == "monodromy") monodromy(o, b);
        else if (command == "connect") connect(o, b, res.csv);
        else if (command == "barnes") barnes(o, b);
        else throw Error(ErrorKind::InvalidArgument, "unknown command " + command);
    } catch (const Error& e) {
        res.code = static_cast<int>(e.family());
        err = {{"kind", kind_name(e.kind())}, {"message", e.what()}};
    } catch (const std::exception& e) {
        res.code = 1;
        err = {{"kind", "Internal"}, {"message", e.what()}};
    }
    json& j = res.report;
    j["schema"] = "tttoda-report";
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["inputs"] = b.inputs;
    j["outputs"] = b.outputs;
    j["residuals"] = b.residuals;
    j["tolerances"] = b.tolerances;
    j["notes"] = b.notes;
    j["pass"] = res.code == 0 && b.pass;
    j["exit_code"] = res.code;
    if (!err.is_null()) j["error"] = err;
    if (o.flag("timing", true))
        j["runtime_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace ttt::report
