#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qso/map.hpp"

// Numerical verification suites for the claimed dynamics, organised as
// clauses grouped 2.1–2.7 (one group per parameter case), pt (2-cycles) and
// base (the trivial and uniform cases). Each clause draws parameters inside
// its sign regime, runs the relevant checks at the configured scale and
// reports pass/fail with counts. Runs are deterministic for a given seed:
// every clause derives its own generator from (seed, clause id).

namespace qso {

struct SuiteOptions {
    std::uint64_t seed = 0;

    int param_draws = 6;        // parameter draws per clause
    int limit_starts = 30;      // starts per draw for limit clauses
    int absorb_starts = 30;     // starts per draw for absorption clauses
    std::int64_t budget = 1000000;
    double tol = 1e-9;

    std::int64_t scan_grid = 20000;  // fixed-point scan resolution

    std::int64_t invariance_samples = 2000;
    std::int64_t attraction_starts = 100;
    std::int64_t attraction_budget = 100000;

    std::int64_t oracle_grid = 100000;  // brute-force grid for the numeric example
    std::int64_t agreement_grid = 4000; // brute-force grid for the (a,b) sweep
    int agreement_lattice = 21;         // (a,b) lattice per axis
    int discriminant_lattice = 200;
    int equivalence_samples = 10000;
    int roundtrip_samples = 500;
    int mirror_samples = 120;

    // Free coefficients are drawn at least this far from 1/2; contraction
    // ratios degenerate toward 1 at the boundary and no fixed budget covers
    // that honestly.
    double param_margin = 0.01;
    double start_margin = 1e-6;
};

struct ClauseResult {
    std::string id;
    std::string description;
    bool pass = true;
    std::int64_t checks = 0;
    std::int64_t failures = 0;
    std::string detail;  // first few failure contexts
};

/// All clause ids with their descriptions, in run order.
const std::vector<std::pair<std::string, std::string>>& clause_manifest();

/// Runs the clauses whose id starts with `filter` ("2.4", "pt", "base");
/// empty or "all" runs everything. Unknown filters yield an empty vector.
std::vector<ClauseResult> run_suites(std::string_view filter, const SuiteOptions& opts);

/// True iff `results` contains every id in the manifest.
bool covers_manifest(const std::vector<ClauseResult>& results);

}  // namespace qso
