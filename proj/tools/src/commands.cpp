#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <variant>

#include "qso/regimes.hpp"

namespace qso::cli {

namespace {

std::string behavior_tag(const Behavior& b) {
    struct Visitor {
        std::string operator()(const BudgetExhausted&) const { return "BudgetExhausted"; }
        std::string operator()(const ConvergedTo&) const { return "ConvergedTo"; }
        std::string operator()(const AbsorbedAt&) const { return "AbsorbedAt"; }
        std::string operator()(const Trapped&) const { return "Trapped"; }
        std::string operator()(const CycleDetected&) const { return "CycleDetected"; }
    };
    return std::visit(Visitor{}, b);
}

std::string behavior_value(const Behavior& b) {
    struct Visitor {
        std::string operator()(const BudgetExhausted&) const { return ""; }
        std::string operator()(const ConvergedTo& v) const { return to_string_roundtrip(v.limit); }
        std::string operator()(const AbsorbedAt& v) const {
            return to_string_roundtrip(v.fixed_point);
        }
        std::string operator()(const Trapped& v) const { return std::to_string(v.entry_step); }
        std::string operator()(const CycleDetected& v) const { return std::to_string(v.period); }
    };
    return std::visit(Visitor{}, b);
}

std::string behavior_detail(const Behavior& b) {
    struct Visitor {
        std::string operator()(const BudgetExhausted&) const { return ""; }
        std::string operator()(const ConvergedTo&) const { return ""; }
        std::string operator()(const AbsorbedAt& v) const {
            return "step " + std::to_string(v.step);
        }
        std::string operator()(const Trapped& v) const { return v.set.text(); }
        std::string operator()(const CycleDetected& v) const {
            std::string s;
            for (std::size_t i = 0; i < v.orbit.size(); ++i) {
                if (i > 0) s += ";";
                s += to_string_roundtrip(v.orbit[i]);
            }
            return s;
        }
    };
    return std::visit(Visitor{}, b);
}

}  // namespace

const std::vector<double>& canonical_starts() {
    static const std::vector<double> starts = {0.1, 0.2, 0.45, 0.55, 0.8, 0.9};
    return starts;
}

SimulateOutcome run_simulate(const SimulateConfig& cfg) {
    const Params p(cfg.a, cfg.b, cfg.c);
    SimulateOutcome out{cfg.n ? iterate(p, cfg.x0, *cfg.n)
                              : detect_behavior(p, cfg.x0, cfg.budget, cfg.tol),
                        "", "", ""};

    out.summary_line = summary(out.record.behavior);
    // When the orbit is trapped or cycling next to the 1/3 breakpoint, report
    // the closed-form 2-cycle alongside.
    const bool near13_regime = classify(p).kind == RegimeCase::ABnotC;
    if (near13_regime && (std::holds_alternative<Trapped>(out.record.behavior) ||
                          std::holds_alternative<CycleDetected>(out.record.behavior))) {
        if (const auto cyc = orbit_from_params(cfg.a, cfg.b)) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "; 2-cycle {%.9g, %.9g} multiplier %.9g", cyc->x1,
                          cyc->x2, cyc->multiplier);
            out.summary_line += buf;
        }
    }

    if (cfg.format == Format::Csv) {
        out.payload = orbit_csv(out.record);
    } else {
        out.payload = to_json(out.record).dump(2);
        out.payload += '\n';
    }

    if (cfg.cobweb_out) {
        out.cobweb = "x,fx\r\n";
        for (std::size_t i = 0; i + 1 < out.record.samples.size(); ++i) {
            const auto& [s0, x0] = out.record.samples[i];
            const auto& [s1, x1] = out.record.samples[i + 1];
            if (s1 != s0 + 1) break;  // strided tail is useless for cobwebs
            out.cobweb += to_string_roundtrip(x0) + "," + to_string_roundtrip(x1) + "\r\n";
        }
    }
    return out;
}

ClassifyOutcome run_classify(const ClassifyConfig& cfg) {
    const Params p(cfg.a, cfg.b, cfg.c);
    const Regime r = classify(p);
    const IntervalSet fix = fixed_point_set(p);
    const auto traps = trapping_sets(p);

    ClassifyOutcome out;
    out.report = std::string("regime: ") + to_string(r.kind) + " (a" + to_string(r.a) +
                 ", b" + to_string(r.b) + ", c" + to_string(r.c) + ")\n";
    out.report += "fixed points: " + fix.text() + "\n";

    nlohmann::json stab = nlohmann::json::array();
    for (const auto& c : fix.components()) {
        if (!c.is_point()) continue;
        const StabilityClass s = stability_of(p, c.lo);
        out.report += "stability at " + to_string_roundtrip(c.lo) + ": " + to_string(s) + "\n";
        stab.push_back({{"point", c.lo}, {"class", to_string(s)}});
    }

    nlohmann::json jtraps = nlohmann::json::array();
    for (const auto& t : traps) {
        out.report += t.label + " = " + t.set.text() + " invariant (basin " + t.basin.text() +
                      ")\n";
        jtraps.push_back({{"label", t.label},
                          {"set", to_json(t.set)},
                          {"basin", to_json(t.basin)},
                          {"role", t.role == TrappingRole::Invariant ? "invariant" : "absorbing"}});
    }

    out.json = {{"params", to_json(p)},
                {"regime", to_string(r.kind)},
                {"sides", {{"a", to_string(r.a)}, {"b", to_string(r.b)}, {"c", to_string(r.c)}}},
                {"fixed_points", to_json(fix)},
                {"stability", stab},
                {"trapping_sets", jtraps}};
    return out;
}

CycleOutcome run_cycle(const CycleConfig& cfg) {
    CycleOutcome out;
    const bool forward = cfg.x1.has_value() || cfg.x2.has_value();
    const bool inverse = cfg.a.has_value() || cfg.b.has_value() || cfg.c.has_value();
    if (forward == inverse) {
        throw std::invalid_argument("cycle: provide either --x1/--x2 or coefficients");
    }

    if (forward) {
        if (!cfg.x1 || !cfg.x2) throw std::invalid_argument("cycle: both --x1 and --x2 required");
        const auto [a, b] = params_from_orbit(*cfg.x1, *cfg.x2);
        out.forward_ab = {a, b};
        out.text = "a=" + to_string_roundtrip(a) + " b=" + to_string_roundtrip(b);
        out.json = {{"a", a},
                    {"b", b},
                    {"x1", *cfg.x1},
                    {"x2", *cfg.x2},
                    {"condition_pc", validate_condition_pc(*cfg.x1, *cfg.x2)}};
        return out;
    }

    out.inverse_mode = true;
    Params p(0.5, 0.5, 0.5);
    CycleSide side = CycleSide::Near13;
    if (cfg.mirror) {
        if (!cfg.b || !cfg.c) throw std::invalid_argument("cycle --mirror: --b and --c required");
        out.cycle = orbit_from_params_mirror(*cfg.b, *cfg.c);
        p = Params(0.5, *cfg.b, *cfg.c);
        side = CycleSide::Near23;
    } else {
        if (!cfg.a || !cfg.b) throw std::invalid_argument("cycle: --a and --b required");
        out.cycle = orbit_from_params(*cfg.a, *cfg.b);
        p = Params(*cfg.a, *cfg.b, 0.5);
    }

    if (out.cycle) {
        // Multiplier taxonomy, same band as for fixed points. The source maps
        // prove nothing about cycle stability; this is a derived diagnostic.
        const double mag = std::fabs(out.cycle->multiplier);
        const char* stability = std::fabs(mag - 1.0) <= kIndifferentBand
                                    ? "indifferent"
                                    : (mag < 1.0 ? "attracting" : "repelling");
        out.text = "x1=" + to_string_roundtrip(out.cycle->x1) +
                   " x2=" + to_string_roundtrip(out.cycle->x2) +
                   " multiplier=" + to_string_roundtrip(out.cycle->multiplier) + " (" +
                   stability + ")";
        out.json = to_json(*out.cycle);
        out.json["stability"] = stability;
    } else {
        out.text = "none";
        out.json = nullptr;
    }

    if (cfg.oracle) {
        out.oracle_ran = true;
        out.oracle_cycles = brute_force_two_cycles(p, side, cfg.grid);
        nlohmann::json joracle = nlohmann::json::array();
        for (const auto& c : out.oracle_cycles) joracle.push_back(to_json(c));
        out.json = {{"closed_form", out.cycle ? to_json(*out.cycle) : nlohmann::json(nullptr)},
                    {"oracle", joracle}};
        out.text += "; oracle found " + std::to_string(out.oracle_cycles.size());
        for (const auto& c : out.oracle_cycles) {
            out.text += " {" + to_string_roundtrip(c.x1) + ", " + to_string_roundtrip(c.x2) + "}";
        }
    }
    return out;
}

MirrorScanOutcome run_mirror_scan(const MirrorScanConfig& cfg) {
    if (cfg.lattice < 2) throw std::invalid_argument("mirror-scan: lattice must be >= 2");
    MirrorScanOutcome out;
    out.csv = "b,c,found,x1,x2\r\n";
    for (std::int64_t i = 0; i < cfg.lattice; ++i) {
        for (std::int64_t j = 0; j < cfg.lattice; ++j) {
            const double b = static_cast<double>(i) / static_cast<double>(cfg.lattice - 1);
            const double c = static_cast<double>(j) / static_cast<double>(cfg.lattice - 1);
            const Params p(0.5, b, c);
            const auto cycles = brute_force_two_cycles(p, CycleSide::Near23, cfg.oracle_grid);
            out.csv += to_string_roundtrip(b) + "," + to_string_roundtrip(c) + ",";
            if (cycles.empty()) {
                out.csv += "0,,";
            } else {
                ++out.found;
                out.csv += "1," + to_string_roundtrip(cycles[0].x1) + "," +
                           to_string_roundtrip(cycles[0].x2);
            }
            out.csv += "\r\n";
        }
    }
    return out;
}

VerifyOutcome run_verify(const VerifyConfig& cfg) {
    VerifyOutcome out;
    out.results = run_suites(cfg.theorem, cfg.options);
    if (out.results.empty()) {
        throw std::invalid_argument("verify: unknown suite filter '" + cfg.theorem + "'");
    }
    for (const auto& r : out.results) {
        out.all_pass = out.all_pass && r.pass;
        out.report += (r.pass ? "[PASS] " : "[FAIL] ") + r.id + " " + r.description +
                      " (checks " + std::to_string(r.checks) + ", failures " +
                      std::to_string(r.failures) + ")";
        if (!r.pass && !r.detail.empty()) out.report += " :: " + r.detail;
        out.report += "\n";
    }
    out.full_coverage = covers_manifest(out.results);
    if (cfg.theorem.empty() || cfg.theorem == "all") {
        out.report += "coverage: " + std::to_string(out.results.size()) + "/" +
                      std::to_string(clause_manifest().size()) + " clauses\n";
        out.all_pass = out.all_pass && out.full_coverage;
    }
    out.report += std::string("result: ") + (out.all_pass ? "PASS" : "FAIL") + "\n";
    return out;
}

SweepOutcome run_sweep(const SweepConfig& cfg) {
    if (cfg.axes.empty() || cfg.axes.size() > 3) {
        throw std::invalid_argument("sweep: between 1 and 3 axes required");
    }
    // Every coefficient must be swept or fixed, exactly once.
    std::map<char, bool> seen = {{'a', false}, {'b', false}, {'c', false}};
    for (const auto& ax : cfg.axes) {
        if (seen.find(ax.name) == seen.end() || seen[ax.name]) {
            throw std::invalid_argument(std::string("sweep: bad or repeated axis '") + ax.name +
                                        "'");
        }
        if (ax.count < 1 || ax.lo > ax.hi || (ax.count > 1 && ax.lo == ax.hi)) {
            throw std::invalid_argument("sweep: invalid axis range");
        }
        seen[ax.name] = true;
    }
    for (const auto& [name, value] : cfg.fixed) {
        if (seen.find(name) == seen.end() || seen[name]) {
            throw std::invalid_argument(std::string("sweep: bad or repeated --fix '") + name +
                                        "'");
        }
        seen[name] = true;
    }
    for (const auto& [name, covered] : seen) {
        if (!covered) {
            throw std::invalid_argument(std::string("sweep: coefficient '") + name +
                                        "' neither swept nor fixed");
        }
    }

    const std::vector<double>& starts = cfg.starts.empty() ? canonical_starts() : cfg.starts;

    std::int64_t cells = 1;
    for (const auto& ax : cfg.axes) cells *= ax.count;

    struct Row {
        double a, b, c;
        std::string regime;
        double x0;
        Behavior behavior;
        std::optional<TwoCycle> cycle;
    };
    std::vector<Row> rows(static_cast<std::size_t>(cells) * starts.size());

    auto cell_params = [&](std::int64_t index) {
        double coef[3];
        coef[0] = cfg.fixed.count('a') ? cfg.fixed.at('a') : 0.0;
        coef[1] = cfg.fixed.count('b') ? cfg.fixed.at('b') : 0.0;
        coef[2] = cfg.fixed.count('c') ? cfg.fixed.at('c') : 0.0;
        std::int64_t rest = index;
        for (const auto& ax : cfg.axes) {
            const std::int64_t i = rest % ax.count;
            rest /= ax.count;
            const double v = ax.count == 1
                                 ? ax.lo
                                 : ax.lo + (ax.hi - ax.lo) * static_cast<double>(i) /
                                               static_cast<double>(ax.count - 1);
            coef[ax.name - 'a'] = v;
        }
        return Params(coef[0], coef[1], coef[2]);
    };

    auto work = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t cell = begin; cell < end; ++cell) {
            const Params p = cell_params(cell);
            const Regime r = classify(p);
            std::optional<TwoCycle> cyc;
            if (cfg.cycles) cyc = orbit_from_params(p.a(), p.b());
            for (std::size_t s = 0; s < starts.size(); ++s) {
                const OrbitRecord rec = detect_behavior(p, starts[s], cfg.budget, cfg.tol);
                rows[static_cast<std::size_t>(cell) * starts.size() + s] =
                    Row{p.a(), p.b(), p.c(), to_string(r.kind), starts[s], rec.behavior, cyc};
            }
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::int64_t workers =
        std::min<std::int64_t>(cells, cfg.threads > 0 ? cfg.threads : static_cast<int>(hw));
    if (workers > 1) {
        std::vector<std::thread> pool;
        const std::int64_t chunk = (cells + workers - 1) / workers;
        for (std::int64_t w = 0; w < workers; ++w) {
            const std::int64_t begin = w * chunk;
            const std::int64_t end = std::min(cells, begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    } else {
        work(0, cells);
    }

    SweepOutcome out;
    out.cells = cells;
    out.rows = static_cast<std::int64_t>(rows.size());
    if (cfg.format == Format::Csv) {
        std::string csv = "a,b,c,regime,x0,behavior,value,detail";
        if (cfg.cycles) csv += ",cycle_found,cycle_x1,cycle_x2";
        csv += "\r\n";
        for (const Row& row : rows) {
            csv += to_string_roundtrip(row.a) + "," + to_string_roundtrip(row.b) + "," +
                   to_string_roundtrip(row.c) + "," + row.regime + "," +
                   to_string_roundtrip(row.x0) + "," + behavior_tag(row.behavior) + "," +
                   behavior_value(row.behavior) + "," + csv_field(behavior_detail(row.behavior));
            if (cfg.cycles) {
                if (row.cycle) {
                    csv += ",1," + to_string_roundtrip(row.cycle->x1) + "," +
                           to_string_roundtrip(row.cycle->x2);
                } else {
                    csv += ",0,,";
                }
            }
            csv += "\r\n";
        }
        out.payload = std::move(csv);
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const Row& row : rows) {
            nlohmann::json j = {{"a", row.a},           {"b", row.b},
                                {"c", row.c},           {"regime", row.regime},
                                {"x0", row.x0},         {"behavior", to_json(row.behavior)}};
            if (cfg.cycles) {
                j["cycle"] = row.cycle ? to_json(*row.cycle) : nlohmann::json(nullptr);
            }
            arr.push_back(std::move(j));
        }
        out.payload = arr.dump(2);
        out.payload += '\n';
    }
    return out;
}

}  // namespace qso::cli
