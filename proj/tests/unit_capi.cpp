#include <doctest.h>

#include <cmath>
#include <string>

#include <json.hpp>

#include "oracles/oracle_values.hpp"
#include "tttoda/tttoda.h"

using doctest::Approx;
using json = nlohmann::json;

namespace {

json run(const char* cmd, std::initializer_list<std::pair<const char*, const char*>> kv, int* code)
{
    tttoda_options* o = nullptr;
    REQUIRE(tttoda_options_new(&o) == TTTODA_OK);
    for (const auto& [k, v] : kv) REQUIRE(tttoda_options_set(o, k, v) == TTTODA_OK);
    tttoda_report* r = nullptr;
    *code = tttoda_run(cmd, o, &r);
    REQUIRE(r != nullptr);
    json j = json::parse(tttoda_report_json(r));
    CHECK(tttoda_report_passed(r) == (j["pass"].get<bool>() ? 1 : 0));
    tttoda_report_free(r);
    tttoda_options_free(o);
    return j;
}

}  // namespace

TEST_SUITE("capi")
{
    TEST_CASE("versions")
    {
        CHECK(std::string(tttoda_schema_version()) == "1.0.0");
        CHECK(std::string(tttoda_version()).size() > 0);
    }

    TEST_CASE("direct evaluations")
    {
        double s1, s2, r0, r1;
        REQUIRE(tttoda_stokes_from_gamma(3, 1, &s1, &s2) == TTTODA_OK);
        CHECK(s1 == Approx(4));
        CHECK(s2 == Approx(-6));
        REQUIRE(tttoda_global_rho(1, 0, &r0, &r1) == TTTODA_OK);
        CHECK(r0 == Approx(oracle::kRho0At10).epsilon(1e-13));
        int k = -1;
        REQUIRE(tttoda_classify(-1, -3, &k) == TTTODA_OK);
        CHECK(k == 6);
        REQUIRE(tttoda_classify(0.2, 0.1, &k) == TTTODA_OK);
        CHECK(k == 0);
        double re, im;
        REQUIRE(tttoda_g0(1, 2, 3, 1.0, 0.0, "series", &re, &im) == TTTODA_OK);
        CHECK(im == Approx(oracle::kG0Values[1].im).epsilon(1e-8));
        double D[32];
        REQUIRE(tttoda_connection_matrix(0, 0, D) == TTTODA_OK);
        double norm = 0;
        for (double x : D) norm += x * x;
        CHECK(norm > 0);
        REQUIRE(tttoda_connection_matrix(3, 1, D) == TTTODA_OK);
    }

    TEST_CASE("error codes and messages")
    {
        double s1, s2;
        CHECK(tttoda_stokes_from_gamma(5, 0, &s1, &s2) == TTTODA_E_DOMAIN);
        CHECK(std::string(tttoda_last_error()).find("OutsideRegion") != std::string::npos);
        CHECK(tttoda_global_rho(2, 0, &s1, &s2) == TTTODA_E_DOMAIN);
        CHECK(tttoda_stokes_from_gamma(0, 0, nullptr, &s2) == TTTODA_E_USAGE);
        CHECK(tttoda_g0(1, 2, 3, 1, 0.5, "triple", &s1, &s2) == TTTODA_E_USAGE);
        CHECK(tttoda_stokes_from_gamma(0, 0, &s1, &s2) == TTTODA_OK);
        CHECK(std::string(tttoda_last_error()).empty());
    }

    TEST_CASE("trajectory handle")
    {
        double s1, s2;
        REQUIRE(tttoda_stokes_from_gamma(1, 0, &s1, &s2) == TTTODA_OK);
        tttoda_trajectory* t = nullptr;
        REQUIRE(tttoda_integrate_inward(s1, s2, 8.0, 1e-4, &t) == TTTODA_OK);
        int n = 0;
        REQUIRE(tttoda_trajectory_size(t, &n) == TTTODA_OK);
        CHECK(n > 10);
        double first[5], last[5];
        REQUIRE(tttoda_trajectory_sample(t, 0, first) == TTTODA_OK);
        REQUIRE(tttoda_trajectory_sample(t, n - 1, last) == TTTODA_OK);
        CHECK(first[0] == 8.0);
        CHECK(last[0] == 1e-4);
        CHECK(tttoda_trajectory_sample(t, n, last) == TTTODA_E_USAGE);
        double g[2], r[2];
        REQUIRE(tttoda_trajectory_fit_small(t, g, r) == TTTODA_OK);
        CHECK(std::abs(g[0] - 1) < 1e-6);
        CHECK(std::abs(r[0] - oracle::kRho0At10) < 2e-3);
        tttoda_trajectory_free(t);
        tttoda_trajectory_free(nullptr);
    }

    TEST_CASE("correspond report")
    {
        int code = -1;
        const json j = run("correspond", {{"gamma", "0 0"}}, &code);
        CHECK(code == 0);
        CHECK(j["schema"] == "tttoda-report");
        CHECK(j["schema_version"] == "1.0.0");
        CHECK(j["command"] == "correspond");
        CHECK(j["pass"] == true);
        CHECK(j["outputs"]["classification"]["value"] == "Interior");
        for (double a : j["outputs"]["alpha"]["value"]["alpha"]) CHECK(a == Approx(0.25));
        CHECK_FALSE(j.contains("error"));
    }

    TEST_CASE("failing commands still produce a report")
    {
        int code = -1;
        json j = run("correspond", {{"gamma", "5 0"}}, &code);
        CHECK(code == TTTODA_E_DOMAIN);
        CHECK(j["exit_code"] == 2);
        CHECK(j["pass"] == false);
        CHECK(j["error"]["kind"] == "OutsideRegion");
        j = run("correspond", {}, &code);
        CHECK(code == TTTODA_E_USAGE);
        j = run("frobnicate", {}, &code);
        CHECK(code == TTTODA_E_USAGE);
        j = run("connect", {{"gamma", "1 0"}, {"outward", "true"}, {"perturb_rho", "0.1"}}, &code);
        CHECK(code == TTTODA_E_ODE);
        CHECK(j["error"]["kind"] == "BlowUp");
    }

    TEST_CASE("connect report carries the CSV")
    {
        tttoda_options* o = nullptr;
        REQUIRE(tttoda_options_new(&o) == TTTODA_OK);
        tttoda_options_set(o, "gamma", "1,0");
        tttoda_report* r = nullptr;
        CHECK(tttoda_run("connect", o, &r) == 0);
        CHECK(std::string(tttoda_report_csv(r)).rfind("x,w0,w1,dw0,dw1,err_est", 0) == 0);
        tttoda_report_free(r);
        tttoda_options_free(o);
    }

    TEST_CASE("monodromy and barnes reports")
    {
        int code = -1;
        json j = run("monodromy", {{"gamma", "1 0"}, {"global", "true"}}, &code);
        CHECK(code == 0);
        CHECK(j["residuals"]["factor_identity"]["value"].get<double>() < 1e-10);
        j = run("monodromy", {{"gamma", "-1 -3"}}, &code);
        CHECK(code == 0);
        CHECK(j["outputs"]["classification"]["value"] == "V3");
        j = run("barnes", {{"a", "1 2 3"}, {"s", "2"}}, &code);
        CHECK(code == 0);
        CHECK(j["residuals"]["series_vs_contour"]["value"].get<double>() < 1e-8);
    }
}
