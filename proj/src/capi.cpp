#include "tttoda/tttoda.h"

#include <string>

#include "report.hpp"
#include "tttoda/barnes.hpp"
#include "tttoda/errors.hpp"
#include "tttoda/monodromy.hpp"
#include "tttoda/toda_ode.hpp"

struct tttoda_trajectory {
    ttt::Trajectory t;
};

struct tttoda_options {
    ttt::report::Options kv;
};

struct tttoda_report {
    std::string json, csv;
    bool passed = false;
};

namespace {

thread_local std::string g_last_error;

template <class F>
int guarded(F&& f)
{
    try {
        f();
        g_last_error.clear();
        return TTTODA_OK;
    } catch (const ttt::Error& e) {
        g_last_error = e.what();
        return static_cast<int>(e.family());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TTTODA_E_USAGE;
    }
}

void need(const void* p, const char* what)
{
    if (!p) throw ttt::Error(ttt::ErrorKind::InvalidArgument, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* tttoda_version(void) { return "1.0.0"; }

const char* tttoda_schema_version(void) { return ttt::report::kSchemaVersion; }

const char* tttoda_last_error(void) { return g_last_error.c_str(); }

int tttoda_stokes_from_gamma(double gamma0, double gamma1, double* s1, double* s2)
{
    return guarded([&] {
        need(s1, "s1");
        need(s2, "s2");
        const ttt::GammaData g{gamma0, gamma1};
        if (!ttt::in_region(g)) throw ttt::Error(ttt::ErrorKind::OutsideRegion, "gamma outside the region");
        const auto s = ttt::stokes_from_gamma(g);
        *s1 = s.s1;
        *s2 = s.s2;
    });
}

int tttoda_global_rho(double gamma0, double gamma1, double* rho0, double* rho1)
{
    return guarded([&] {
        need(rho0, "rho0");
        need(rho1, "rho1");
        std::tie(*rho0, *rho1) = ttt::global_rho({gamma0, gamma1});
    });
}

int tttoda_classify(double gamma0, double gamma1, int* kase)
{
    return guarded([&] {
        need(kase, "kase");
        *kase = static_cast<int>(ttt::classify({gamma0, gamma1}));
    });
}

int tttoda_connection_matrix(double gamma0, double gamma1, double* out32)
{
    return guarded([&] {
        need(out32, "out32");
        using namespace ttt;
        GammaData g{gamma0, gamma1};
        BoundaryCase k = classify(g);
        g = snap(g);
        if (k == BoundaryCase::E2 || k == BoundaryCase::V3) {
            g = reflect(g);
            k = reflect(k);
        }
        const WeightData w = weights(g, global_holo(g));
        const Mat4 D = k == BoundaryCase::Interior ? d1_generic(w, r_from_m(w.m0, w.m1))
                                                   : d1_resonant(resonant_structure(k, g, w), w);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                out32[2 * (4 * i + j)] = D(i, j).real();
                out32[2 * (4 * i + j) + 1] = D(i, j).imag();
            }
    });
}

int tttoda_g0(double a1, double a2, double a3, double s_re, double s_im, const char* route, double* re,
              double* im)
{
    return guarded([&] {
        need(route, "route");
        need(re, "re");
        need(im, "im");
        using namespace ttt;
        const BarnesSpec spec = barnes_spec(a1, a2, a3);
        const cplx s(s_re, s_im);
        const std::string r = route;
        cplx v;
        if (r == "series") v = g0_series(spec, s);
        else if (r == "contour") v = g0_quadrature(spec, s);
        else if (r == "triple" && s_im == 0) v = g0_triple(spec, s_re);
        else if (r == "laplace" && s_im == 0) v = g0_laplace(spec, s_re);
        else throw Error(ErrorKind::InvalidArgument, "unknown route or complex s for a real-only route");
        *re = v.real();
        *im = v.imag();
    });
}

int tttoda_integrate_inward(double s1, double s2, double x1, double x0, tttoda_trajectory** out)
{
    return guarded([&] {
        need(out, "out");
        *out = nullptr;
        ttt::InwardOptions o;
        o.x1 = x1;
        o.x0 = x0;
        auto* t = new tttoda_trajectory{ttt::integrate_inward({s1, s2}, o)};
        *out = t;
    });
}

int tttoda_trajectory_size(const tttoda_trajectory* t, int* n)
{
    return guarded([&] {
        need(t, "trajectory");
        need(n, "n");
        *n = static_cast<int>(t->t.samples.size());
    });
}

int tttoda_trajectory_sample(const tttoda_trajectory* t, int i, double* out5)
{
    return guarded([&] {
        need(t, "trajectory");
        need(out5, "out5");
        if (i < 0 || i >= static_cast<int>(t->t.samples.size()))
            throw ttt::Error(ttt::ErrorKind::InvalidArgument, "sample index out of range");
        const auto& s = t->t.samples[i].s;
        out5[0] = s.x;
        out5[1] = s.w0;
        out5[2] = s.w1;
        out5[3] = s.dw0;
        out5[4] = s.dw1;
    });
}

int tttoda_trajectory_fit_small(const tttoda_trajectory* t, double* gamma2, double* rho2)
{
    return guarded([&] {
        need(t, "trajectory");
        need(gamma2, "gamma2");
        need(rho2, "rho2");
        const auto f = ttt::fit_small_x_refined(t->t);
        gamma2[0] = f.gamma0;
        gamma2[1] = f.gamma1;
        rho2[0] = f.rho0;
        rho2[1] = f.rho1;
    });
}

void tttoda_trajectory_free(tttoda_trajectory* t) { delete t; }

int tttoda_options_new(tttoda_options** out)
{
    return guarded([&] {
        need(out, "out");
        *out = new tttoda_options;
    });
}

int tttoda_options_set(tttoda_options* o, const char* key, const char* value)
{
    return guarded([&] {
        need(o, "options");
        need(key, "key");
        need(value, "value");
        o->kv[key] = value;
    });
}

void tttoda_options_free(tttoda_options* o) { delete o; }

int tttoda_run(const char* command, const tttoda_options* o, tttoda_report** out)
{
    if (!command || !out) {
        g_last_error = "command and out must be non-null";
        return TTTODA_E_USAGE;
    }
    *out = nullptr;
    try {
        static const ttt::report::Options empty;
        ttt::report::Result r = ttt::report::run(command, o ? o->kv : empty);
        auto* rep = new tttoda_report;
        rep->json = r.report.dump(2);
        rep->csv = std::move(r.csv);
        rep->passed = r.report["pass"].get<bool>();
        *out = rep;
        g_last_error = r.report.contains("error") ? r.report["error"]["message"].get<std::string>() : "";
        return r.code;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TTTODA_E_USAGE;
    }
}

const char* tttoda_report_json(const tttoda_report* r) { return r ? r->json.c_str() : ""; }

const char* tttoda_report_csv(const tttoda_report* r) { return r ? r->csv.c_str() : ""; }

int tttoda_report_passed(const tttoda_report* r) { return r && r->passed ? 1 : 0; }

void tttoda_report_free(tttoda_report* r) { delete r; }

}  // extern "C"
