#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitSuiteFailure = 2;

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << content;
    return static_cast<bool>(f);
}

qso::cli::Format parse_format(const std::string& s) {
    if (s == "csv") return qso::cli::Format::Csv;
    if (s == "json") return qso::cli::Format::Json;
    throw CLI::ValidationError("--format", "expected csv or json");
}

struct AxisParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

qso::cli::AxisSpec parse_axis(const std::string& spec) {
    // name:lo:hi:count, e.g. a:0:1:101
    qso::cli::AxisSpec ax;
    const auto p1 = spec.find(':');
    const auto p2 = spec.find(':', p1 + 1);
    const auto p3 = spec.find(':', p2 + 1);
    if (p1 != 1 || p2 == std::string::npos || p3 == std::string::npos) {
        throw AxisParseError("--axis expects name:lo:hi:count, got '" + spec + "'");
    }
    ax.name = spec[0];
    ax.lo = std::stod(spec.substr(p1 + 1, p2 - p1 - 1));
    ax.hi = std::stod(spec.substr(p2 + 1, p3 - p2 - 1));
    ax.count = std::stoll(spec.substr(p3 + 1));
    return ax;
}

std::pair<char, double> parse_fix(const std::string& spec) {
    // name=value, e.g. c=0.5
    const auto eq = spec.find('=');
    if (eq != 1) throw AxisParseError("--fix expects name=value, got '" + spec + "'");
    return {spec[0], std::stod(spec.substr(eq + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Piecewise quadratic interval map explorer: orbits, regimes, "
                 "fixed-point sets, trapping sets and 2-cycles"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format_name = "csv";

    // --- simulate ---------------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "Iterate an orbit and detect its behavior");
    qso::cli::SimulateConfig sim_cfg;
    std::int64_t sim_n = -1;
    std::string sim_cobweb;
    sim->add_option("--a", sim_cfg.a, "left coefficient")->required();
    sim->add_option("--b", sim_cfg.b, "middle coefficient")->required();
    sim->add_option("--c", sim_cfg.c, "right coefficient")->required();
    sim->add_option("--x0", sim_cfg.x0, "start point in [0,1]")->required();
    sim->add_option("--n", sim_n, "raw iteration count (skips detection)");
    sim->add_option("--budget", sim_cfg.budget, "detection budget");
    sim->add_option("--tol", sim_cfg.tol, "detection tolerance");
    sim->add_option("--out", out_path, "trajectory output path");
    sim->add_option("--cobweb", sim_cobweb, "write (x_k, x_{k+1}) pairs to this path");
    sim->add_option("--format", format_name, "csv|json");

    // --- classify ---------------------------------------------------------
    auto* cls = app.add_subcommand("classify", "Regime, fixed-point set, trapping sets");
    qso::cli::ClassifyConfig cls_cfg;
    cls->add_option("--a", cls_cfg.a, "left coefficient")->required();
    cls->add_option("--b", cls_cfg.b, "middle coefficient")->required();
    cls->add_option("--c", cls_cfg.c, "right coefficient")->required();
    cls->add_option("--format", format_name, "csv|json (json prints the machine form)");
    cls->add_option("--out", out_path, "write the machine form here");

    // --- cycle ------------------------------------------------------------
    auto* cyc = app.add_subcommand("cycle", "Solve 2-cycles: forward, inverse, oracle, scan");
    qso::cli::CycleConfig cyc_cfg;
    qso::cli::MirrorScanConfig scan_cfg;
    bool do_scan = false;
    double cx1 = 0, cx2 = 0, ca = 0, cb = 0, cc = 0;
    auto* ox1 = cyc->add_option("--x1", cx1, "first cycle point");
    auto* ox2 = cyc->add_option("--x2", cx2, "second cycle point");
    auto* oa = cyc->add_option("--a", ca, "left coefficient");
    auto* ob = cyc->add_option("--b", cb, "middle coefficient");
    auto* oc = cyc->add_option("--c", cc, "right coefficient (mirror mode)");
    cyc->add_flag("--mirror", cyc_cfg.mirror, "solve around 2/3 with (b, c)");
    cyc->add_flag("--oracle", cyc_cfg.oracle, "append the brute-force result");
    cyc->add_option("--grid", cyc_cfg.grid, "oracle grid size");
    cyc->add_flag("--mirror-scan", do_scan, "emit the (b,c) admissibility scan CSV");
    cyc->add_option("--lattice", scan_cfg.lattice, "scan lattice per axis");
    cyc->add_option("--out", out_path, "output path");
    cyc->add_option("--format", format_name, "csv|json");

    // --- verify -----------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "Run the numerical verification suites");
    qso::cli::VerifyConfig ver_cfg;
    ver->add_option("--theorem", ver_cfg.theorem, "2.1..2.7, pt or base (default: all)");
    ver->add_option("--seed", ver_cfg.options.seed, "suite seed");
    ver->add_option("--draws", ver_cfg.options.param_draws, "parameter draws per clause");
    ver->add_option("--budget", ver_cfg.options.budget, "orbit budget");

    // --- sweep ------------------------------------------------------------
    auto* swp = app.add_subcommand("sweep", "Sweep the parameter cube and tag each cell");
    qso::cli::SweepConfig swp_cfg;
    std::vector<std::string> axis_specs;
    std::vector<std::string> fix_specs;
    double swp_x0 = -1.0;
    swp->add_option("--axis", axis_specs, "swept axis name:lo:hi:count (repeatable)")
        ->required();
    swp->add_option("--fix", fix_specs, "fixed coefficient name=value (repeatable)");
    swp->add_option("--x0", swp_x0, "single start (default: canonical start set)");
    swp->add_flag("--cycles", swp_cfg.cycles, "append closed-form cycle columns");
    swp->add_option("--budget", swp_cfg.budget, "detection budget");
    swp->add_option("--tol", swp_cfg.tol, "detection tolerance");
    swp->add_option("--threads", swp_cfg.threads, "worker threads (0: hardware)");
    swp->add_option("--out", out_path, "output path");
    swp->add_option("--format", format_name, "csv|json");

    CLI11_PARSE(app, argc, argv);

    try {
        const qso::cli::Format format = parse_format(format_name);

        if (sim->parsed()) {
            if (sim_n >= 0) sim_cfg.n = sim_n;
            sim_cfg.format = format;
            if (!sim_cobweb.empty()) sim_cfg.cobweb_out = sim_cobweb;
            const auto out = qso::cli::run_simulate(sim_cfg);
            std::cout << out.summary_line << "\n";
            if (!out_path.empty() && !write_file(out_path, out.payload)) {
                std::cerr << "error: cannot write --out " << out_path << "\n";
                return kExitValidation;
            }
            if (!sim_cobweb.empty() && !write_file(sim_cobweb, out.cobweb)) {
                std::cerr << "error: cannot write --cobweb " << sim_cobweb << "\n";
                return kExitValidation;
            }
            return kExitOk;
        }

        if (cls->parsed()) {
            const auto out = qso::cli::run_classify(cls_cfg);
            if (format == qso::cli::Format::Json) {
                std::cout << out.json.dump(2) << "\n";
            } else {
                std::cout << out.report;
            }
            if (!out_path.empty() && !write_file(out_path, out.json.dump(2) + "\n")) {
                std::cerr << "error: cannot write --out " << out_path << "\n";
                return kExitValidation;
            }
            return kExitOk;
        }

        if (cyc->parsed()) {
            if (do_scan) {
                const auto out = qso::cli::run_mirror_scan(scan_cfg);
                if (out_path.empty()) {
                    std::cout << out.csv;
                } else if (!write_file(out_path, out.csv)) {
                    std::cerr << "error: cannot write --out " << out_path << "\n";
                    return kExitValidation;
                }
                std::cerr << "admissible cells: " << out.found << "\n";
                return kExitOk;
            }
            if (ox1->count()) cyc_cfg.x1 = cx1;
            if (ox2->count()) cyc_cfg.x2 = cx2;
            if (oa->count()) cyc_cfg.a = ca;
            if (ob->count()) cyc_cfg.b = cb;
            if (oc->count()) cyc_cfg.c = cc;
            const auto out = qso::cli::run_cycle(cyc_cfg);
            if (format == qso::cli::Format::Json) {
                std::cout << out.json.dump(2) << "\n";
            } else {
                std::cout << out.text << "\n";
            }
            if (!out_path.empty() && !write_file(out_path, out.json.dump(2) + "\n")) {
                std::cerr << "error: cannot write --out " << out_path << "\n";
                return kExitValidation;
            }
            return kExitOk;
        }

        if (ver->parsed()) {
            const auto out = qso::cli::run_verify(ver_cfg);
            std::cout << out.report;
            return out.all_pass ? kExitOk : kExitSuiteFailure;
        }

        if (swp->parsed()) {
            for (const auto& s : axis_specs) swp_cfg.axes.push_back(parse_axis(s));
            for (const auto& s : fix_specs) swp_cfg.fixed.insert(parse_fix(s));
            if (swp_x0 >= 0.0) swp_cfg.starts = {swp_x0};
            swp_cfg.format = format;
            const auto out = qso::cli::run_sweep(swp_cfg);
            if (out_path.empty()) {
                std::cout << out.payload;
            } else if (!write_file(out_path, out.payload)) {
                std::cerr << "error: cannot write --out " << out_path << "\n";
                return kExitValidation;
            }
            std::cerr << "cells: " << out.cells << " rows: " << out.rows << "\n";
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
