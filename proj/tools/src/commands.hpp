#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qso/dynamics.hpp"
#include "qso/periodic.hpp"
#include "qso/serialize.hpp"
#include "qso/theorems.hpp"

// Command implementations behind the CLI, exposed as plain functions so the
// acceptance suite can drive the exact command paths in-process.

namespace qso::cli {

enum class Format { Csv, Json };

struct SimulateConfig {
    double a = 0.5;
    double b = 0.5;
    double c = 0.5;
    double x0 = 0.5;
    std::optional<std::int64_t> n;  // raw iteration when set; detection otherwise
    std::int64_t budget = kDefaultBudget;
    double tol = kDefaultTol;
    Format format = Format::Csv;
    std::optional<std::string> out;
    std::optional<std::string> cobweb_out;
};

struct SimulateOutcome {
    OrbitRecord record;
    std::string summary_line;
    std::string payload;  // trajectory in the requested format
    std::string cobweb;   // (x_k, x_{k+1}) pairs, CSV
};

SimulateOutcome run_simulate(const SimulateConfig& cfg);

struct ClassifyConfig {
    double a = 0.5;
    double b = 0.5;
    double c = 0.5;
};

struct ClassifyOutcome {
    std::string report;    // human-readable lines
    nlohmann::json json;
};

ClassifyOutcome run_classify(const ClassifyConfig& cfg);

struct CycleConfig {
    std::optional<double> x1, x2;  // forward mode
    std::optional<double> a, b;    // inverse mode near 1/3
    std::optional<double> c;       // with b: mirror inverse mode near 2/3
    bool mirror = false;
    bool oracle = false;
    std::int64_t grid = 100000;
};

struct CycleOutcome {
    std::optional<std::pair<double, double>> forward_ab;
    bool inverse_mode = false;
    std::optional<TwoCycle> cycle;
    std::vector<TwoCycle> oracle_cycles;
    bool oracle_ran = false;
    std::string text;
    nlohmann::json json;
};

CycleOutcome run_cycle(const CycleConfig& cfg);

struct MirrorScanConfig {
    std::int64_t lattice = 41;      // (b, c) values per axis
    std::int64_t oracle_grid = 4000;
};

struct MirrorScanOutcome {
    std::string csv;  // b,c,found,x1,x2
    std::int64_t found = 0;
};

MirrorScanOutcome run_mirror_scan(const MirrorScanConfig& cfg);

struct VerifyConfig {
    std::string theorem;  // "", "2.1".."2.7", "pt", "base"
    SuiteOptions options;
};

struct VerifyOutcome {
    std::vector<ClauseResult> results;
    bool all_pass = true;
    bool full_coverage = false;
    std::string report;
};

VerifyOutcome run_verify(const VerifyConfig& cfg);

struct AxisSpec {
    char name = 'a';
    double lo = 0.0;
    double hi = 1.0;
    std::int64_t count = 2;
};

struct SweepConfig {
    std::vector<AxisSpec> axes;
    std::map<char, double> fixed;
    std::vector<double> starts;  // empty: canonical start set
    bool cycles = false;
    std::int64_t budget = kDefaultBudget;
    double tol = kDefaultTol;
    int threads = 0;  // 0: hardware concurrency
    Format format = Format::Csv;
};

struct SweepOutcome {
    std::string payload;
    std::int64_t cells = 0;
    std::int64_t rows = 0;
};

SweepOutcome run_sweep(const SweepConfig& cfg);

/// Default start set for sweeps: two starts per piece, off the breakpoints.
const std::vector<double>& canonical_starts();

}  // namespace qso::cli
