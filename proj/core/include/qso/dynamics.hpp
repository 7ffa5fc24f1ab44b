#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qso/interval_set.hpp"
#include "qso/map.hpp"

// Orbit iteration and terminal-behavior detection. Because whole pieces of
// the map can be the identity, orbits may land on a fixed point exactly after
// finitely many steps; detection distinguishes that from asymptotic
// convergence, capture by an invariant trapping set, and cycling.

namespace qso {

struct ConvergedTo {
    double limit;  // 0 or 1
};

struct AbsorbedAt {
    double fixed_point;  // eval(p, fixed_point) == fixed_point bit-exactly
    std::int64_t step;   // first step at which the orbit sits on it
};

struct Trapped {
    IntervalSet set;
    std::int64_t entry_step;
};

struct CycleDetected {
    int period;
    std::vector<double> orbit;
};

struct BudgetExhausted {};

using Behavior =
    std::variant<BudgetExhausted, ConvergedTo, AbsorbedAt, Trapped, CycleDetected>;

/// One-line rendering, e.g. "ConvergedTo 0" or "AbsorbedAt 0.42 step 17".
std::string summary(const Behavior& behavior);

struct OrbitRecord {
    double x0;
    Params params;
    /// (step, value) pairs; every step up to 4096, then step k only when
    /// k % ceil(k/4096) == 0. The final iterate is always kept.
    std::vector<std::pair<std::int64_t, double>> samples;
    Behavior behavior;
    std::int64_t steps_used = 0;
};

inline constexpr std::int64_t kDefaultBudget = 1000000;
inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kConfirmWindow = 32;  // consecutive iterates confirming a verdict
inline constexpr int kCycleCap = 64;       // largest reported prime period

/// Raw iteration: first n+1 iterates, behavior BudgetExhausted, no detection.
OrbitRecord iterate(const Params& p, double x0, std::int64_t n);

/// Iterate until exact absorption, confirmed convergence to 0 or 1, confirmed
/// capture by a known trapping set, a confirmed cycle, or budget exhaustion.
OrbitRecord detect_behavior(const Params& p, double x0,
                            std::int64_t budget = kDefaultBudget,
                            double tol = kDefaultTol);

enum class TrappingRole { Absorbing, Invariant };

struct TrappingSet {
    std::string label;  // A2, A3, B2, C2
    IntervalSet set;    // f(set) ⊆ set
    IntervalSet basin;  // companion region whose orbits enter `set`
    TrappingRole role;
};

/// Invariant sets of the current regime/sign combination; empty for regimes
/// without one. Endpoints are the breakpoint images under the active
/// branches, which keeps invariance exact in floating point.
std::vector<TrappingSet> trapping_sets(const Params& p);

struct InvarianceReport {
    std::int64_t samples = 0;
    std::int64_t violations = 0;
    double worst_violation = 0.0;  // largest distance of an image outside the set
    double worst_point = 0.0;      // sample producing it
    double worst_image = 0.0;

    bool all_inside() const noexcept { return violations == 0; }
};

/// Evaluates eval on stratified points of `set` (endpoints and points
/// adjacent to the breakpoints included) and reports whether every image
/// stays inside.
InvarianceReport verify_invariance(const Params& p, const IntervalSet& set,
                                   std::int64_t samples);

struct AttractionReport {
    std::int64_t starts = 0;
    std::int64_t entered = 0;
    std::int64_t max_entry_step = -1;
    std::vector<double> failed_starts;

    bool all_entered() const noexcept { return entered == starts; }
};

/// Iterates stratified starts from `outer` and records the first entry step
/// into `inner`, up to `budget` steps per start.
AttractionReport verify_attraction(const Params& p, const IntervalSet& outer,
                                   const IntervalSet& inner, std::int64_t starts,
                                   std::int64_t budget);

/// Stratified sample of an IntervalSet, proportional to component length.
/// margin == 0 keeps closed endpoints exactly (open endpoints are nudged one
/// ulp inward) and adds the points adjacent to 1/3 and 2/3 when inside;
/// margin > 0 keeps every sample at least `margin` away from the endpoints.
std::vector<double> stratified_points(const IntervalSet& set, std::int64_t count,
                                      double margin);

}  // namespace qso
