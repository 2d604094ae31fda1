// Command-line front end. Everything numeric goes through the C API.
//
// Exit codes: 0 ok, 1 usage, 2 domain, 3 structure, 4 ODE, 5 quadrature,
// 6 completed but a tolerance check failed.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tttoda/tttoda.h"

namespace {

constexpr int kExitChecksFailed = 6;

using Options = std::map<std::string, std::string>;

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// key = value lines, '#' comments, optional quotes, [section] prefixes keys
// with "section.". Only keys for `command` (bare or "command.key") are kept.
Options read_config(const std::string& path, const std::string& command)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    Options out;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad section");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (val.size() >= 2 && (val.front() == '"' || val.front() == '\'') && val.back() == val.front())
            val = val.substr(1, val.size() - 2);
        std::replace(key.begin(), key.end(), '-', '_');
        if (!section.empty()) key = section + "." + key;
        const std::string prefix = command + ".";
        if (key.rfind(prefix, 0) == 0) out[key.substr(prefix.size())] = val;
        else if (key.find('.') == std::string::npos && !out.count(key)) out[key] = val;
    }
    return out;
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// Owns the C handles of one run.
struct Run {
    int code = 0;
    bool passed = false;
    std::string json, csv;
};

Run run_command(const std::string& command, const Options& opts)
{
    tttoda_options* o = nullptr;
    tttoda_options_new(&o);
    std::unique_ptr<tttoda_options, void (*)(tttoda_options*)> og(o, tttoda_options_free);
    for (const auto& [k, v] : opts) tttoda_options_set(o, k.c_str(), v.c_str());
    tttoda_report* r = nullptr;
    Run out;
    out.code = tttoda_run(command.c_str(), o, &r);
    if (!r) throw std::runtime_error(tttoda_last_error());
    std::unique_ptr<tttoda_report, void (*)(tttoda_report*)> rg(r, tttoda_report_free);
    out.json = tttoda_report_json(r);
    out.csv = tttoda_report_csv(r);
    out.passed = tttoda_report_passed(r) != 0;
    return out;
}

int exit_code(const Run& r) { return r.code != 0 ? r.code : (r.passed ? 0 : kExitChecksFailed); }

void print_residuals(const std::string& json)
{
    const auto j = nlohmann::ordered_json::parse(json);
    for (const auto& [name, r] : j["residuals"].items()) {
        const std::string status = r.contains("pass") ? (r["pass"].get<bool>() ? "pass" : "FAIL") : "info";
        std::fprintf(stderr, "  %-28s %12.3e  tol %-9s %s\n", name.c_str(), r["value"].is_number() ? r["value"].get<double>() : NAN,
                     r.contains("tolerance") ? short_num(r["tolerance"].get<double>()).c_str() : "-", status.c_str());
    }
    if (j.contains("error"))
        std::fprintf(stderr, "  error: %s\n", j["error"]["message"].get<std::string>().c_str());
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

unsigned thread_count()
{
    if (const char* e = std::getenv("TTT_THREADS")) {
        const int n = std::atoi(e);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct SweepPoint {
    int i, j;
    double g0, g1;
};

int sweep(int n, const std::string& dir, bool with_connect, bool quiet)
{
    if (n < 2 || n > 64) throw CLI::ValidationError("--grid", "needs 2 <= n <= 64");
    std::vector<SweepPoint> pts;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double g0 = -1.0 + 4.0 * i / (n - 1), g1 = -3.0 + 4.0 * j / (n - 1);
            int kase;
            if (tttoda_classify(g0, g1, &kase) == TTTODA_OK) pts.push_back({i, j, g0, g1});
        }
    std::vector<nlohmann::ordered_json> results(pts.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < pts.size();) {
            const SweepPoint& p = pts[k];
            Options opts{{"gamma", fmt(p.g0) + " " + fmt(p.g1)}, {"timing", "false"}};
            nlohmann::ordered_json j;
            j["gamma"] = {p.g0, p.g1};
            bool pass = true;
            int code = 0;
            std::vector<std::string> cmds{"correspond", "monodromy"};
            if (with_connect) cmds.push_back("connect");
            for (const auto& c : cmds) {
                const Run r = run_command(c, opts);
                j[c] = nlohmann::ordered_json::parse(r.json);
                pass = pass && r.passed;
                if (code == 0) code = exit_code(r);
            }
            j["pass"] = pass;
            j["exit_code"] = code;
            results[k] = std::move(j);
        }
    };
    std::vector<std::thread> pool;
    const unsigned nt = std::min<unsigned>(thread_count(), static_cast<unsigned>(pts.size()));
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    nlohmann::ordered_json summary;
    summary["schema"] = "tttoda-sweep";
    summary["schema_version"] = tttoda_schema_version();
    summary["grid"] = n;
    summary["connect"] = with_connect;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    int failed = 0, first_code = 0;
    if (!dir.empty()) std::filesystem::create_directories(dir);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const auto& p = pts[k];
        const auto& j = results[k];
        const std::string name = "point_" + std::to_string(p.i) + "_" + std::to_string(p.j) + ".json";
        if (!dir.empty()) write_file(dir + "/" + name, j.dump(2) + "\n");
        const bool pass = j["pass"].get<bool>();
        if (!pass) {
            ++failed;
            if (first_code == 0) first_code = j["exit_code"].get<int>();
        }
        rows.push_back({{"gamma", j["gamma"]},
                        {"case", j["correspond"]["outputs"].contains("classification")
                                     ? j["correspond"]["outputs"]["classification"]["value"]
                                     : nlohmann::ordered_json("?")},
                        {"pass", pass},
                        {"exit_code", j["exit_code"]},
                        {"file", name}});
        if (!quiet && !pass) std::fprintf(stderr, "FAIL at gamma = (%g, %g)\n", p.g0, p.g1);
    }
    summary["points"] = rows;
    summary["total"] = pts.size();
    summary["failed"] = failed;
    summary["pass"] = failed == 0;
    const std::string text = summary.dump(2) + "\n";
    if (!dir.empty()) write_file(dir + "/summary.json", text);
    std::cout << text;
    if (failed == 0) return 0;
    return first_code != 0 ? first_code : kExitChecksFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"tt*-Toda correspondences, connection matrices, Barnes integrals and the connection problem"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config;
    bool quiet = false, json_out = true;
    app.add_option("--config", config, "key = value file; [command] sections apply to one subcommand");
    app.add_flag("--quiet", quiet, "suppress the residual table on stderr");
    app.add_flag("--json", json_out, "JSON report on stdout (default)");

    // Values are collected as strings and handed to the library verbatim.
    std::map<std::string, std::vector<std::string>> vals;
    std::map<std::string, bool> flags;
    std::string out_prefix, csv_path;
    auto opt = [&](CLI::App* sc, const std::string& flag, int n, const std::string& help) {
        std::string key = flag.substr(2);
        std::replace(key.begin(), key.end(), '-', '_');
        auto* o = sc->add_option(flag, vals[key], help);
        if (n > 0) o->expected(n);
        else o->expected(1, 2);
        o->allow_extra_args(false);
    };
    auto flg = [&](CLI::App* sc, const std::string& flag, const std::string& help) {
        std::string key = flag.substr(2);
        std::replace(key.begin(), key.end(), '-', '_');
        sc->add_flag(flag, flags[key], help);
    };

    auto* cor = app.add_subcommand("correspond", "convert between asymptotic, holomorphic and Stokes data");
    opt(cor, "--gamma", 2, "asymptotic exponents g0 g1");
    opt(cor, "--rho", 2, "asymptotic constants rho0 rho1");
    opt(cor, "--alpha", 4, "holomorphic exponents a0 a1 a2 a3");
    opt(cor, "--holo", 0, "holomorphic coefficients c0 c2 (canonical) or c0 c1 c2; with --alpha");
    opt(cor, "--N", 1, "holomorphic normalization N");

    auto* mon = app.add_subcommand("monodromy", "connection matrix D1 and its identities");
    opt(mon, "--gamma", 2, "asymptotic exponents g0 g1");
    opt(mon, "--holo", 0, "holomorphic coefficients (default: the global solution)");
    opt(mon, "--N", 1, "holomorphic normalization N");
    opt(mon, "--t", 1, "deformation parameter t");
    opt(mon, "--resonant-case", 1, "auto or the expected component (E1, E2, E3, V1, V2, V3)");
    opt(mon, "--oracle-rho0", 1, "starting radius of the lambda-ODE oracle");
    flg(mon, "--global", "use the holomorphic data of the global solution");
    flg(mon, "--oracle", "compare with direct integration of the lambda-ODE");

    auto* con = app.add_subcommand("connect", "integrate the Toda ODE inward and fit the small-x asymptotics");
    opt(con, "--gamma", 2, "asymptotic exponents g0 g1");
    opt(con, "--x1", 1, "large-x starting point");
    opt(con, "--x0", 1, "small-x end point");
    opt(con, "--x1-check", 1, "second starting point for the convergence check (0 disables)");
    opt(con, "--init", 1, "large-x initializer: bessel or leading");
    opt(con, "--rtol", 1, "relative tolerance");
    opt(con, "--atol", 1, "absolute tolerance");
    opt(con, "--perturb-rho", 1, "shift of rho for the outward demonstration");
    flg(con, "--outward", "integrate outward from small-x data instead");
    con->add_option("--csv", csv_path, "trajectory CSV path");

    auto* bar = app.add_subcommand("barnes", "evaluate the Barnes integral g0(s) along several routes");
    opt(bar, "--a", 3, "exponents a1 a2 a3");
    opt(bar, "--s", 0, "argument s (re [im])");
    opt(bar, "--routes", 1, "comma-separated subset of series,contour,triple,laplace");
    opt(bar, "--c", 1, "contour abscissa");
    opt(bar, "--step", 1, "triple-integral step in log x");

    auto* swp = app.add_subcommand("sweep", "run correspond and monodromy over a grid of region points");
    int grid = 5;
    std::string report_dir;
    bool sweep_connect = false;
    swp->add_option("--grid", grid, "points per axis (<= 64)");
    swp->add_option("--report", report_dir, "directory for per-point JSON and summary.json");
    swp->add_flag("--connect", sweep_connect, "also run the connection problem at interior points");

    for (auto* sc : {cor, mon, con, bar}) sc->add_option("--out", out_prefix, "write PREFIX.json (and PREFIX.csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    (void)json_out;

    try {
        if (swp->parsed()) return sweep(grid, report_dir, sweep_connect, quiet);
        CLI::App* sc = app.get_subcommands().front();
        const std::string command = sc->get_name();
        Options opts = config.empty() ? Options{} : read_config(config, command);
        for (const auto& [k, v] : vals) {
            if (v.empty()) continue;
            std::string joined;
            for (const auto& s : v) joined += (joined.empty() ? "" : " ") + s;
            opts[k] = joined;
        }
        for (const auto& [k, on] : flags)
            if (on) opts[k] = "true";
        const Run r = run_command(command, opts);
        if (!out_prefix.empty()) {
            write_file(out_prefix + ".json", r.json + "\n");
            if (!r.csv.empty()) write_file(out_prefix + ".csv", r.csv);
        }
        if (!csv_path.empty() && !r.csv.empty()) write_file(csv_path, r.csv);
        std::cout << r.json << "\n";
        if (!quiet) print_residuals(r.json);
        return exit_code(r);
    } catch (const CLI::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
