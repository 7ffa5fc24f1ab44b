#include "qso/theorems.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "qso/dynamics.hpp"
#include "qso/interval_set.hpp"
#include "qso/periodic.hpp"
#include "qso/regimes.hpp"

namespace qso {

namespace {

// ---------------------------------------------------------------------------
// deterministic drawing

struct Rng {
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform01() { return (gen() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::mt19937_64 gen;
};

std::uint64_t clause_seed(std::uint64_t base, std::string_view id) {
    std::uint64_t h = 1469598103934665603ull ^ base;
    for (char ch : id) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    return h;
}

enum class Side { Below, Above, Half, Any };

double draw_coef(Rng& rng, Side side, double margin) {
    switch (side) {
        case Side::Half: return 0.5;
        case Side::Below: return rng.uniform(0.0, 0.5 - margin);
        case Side::Above: return rng.uniform(0.5 + margin, 1.0);
        case Side::Any:
            return rng.uniform01() < 0.5 ? draw_coef(rng, Side::Below, margin)
                                         : draw_coef(rng, Side::Above, margin);
    }
    return 0.5;
}

struct DrawSpec {
    Side a = Side::Half;
    Side b = Side::Half;
    Side c = Side::Half;
    bool uniform = false;  // one value for all three coefficients
};

Params draw_params(Rng& rng, const DrawSpec& spec, double margin) {
    if (spec.uniform) {
        const double u = draw_coef(rng, spec.a, margin);
        return Params(u, u, u);
    }
    const double a = draw_coef(rng, spec.a, margin);
    const double b = draw_coef(rng, spec.b, margin);
    const double c = draw_coef(rng, spec.c, margin);
    return Params(a, b, c);
}

std::string describe_params(const Params& p) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "(a=%.12g, b=%.12g, c=%.12g)", p.a(), p.b(), p.c());
    return buf;
}

// ---------------------------------------------------------------------------
// assertion bookkeeping

struct Check {
    explicit Check(ClauseResult& r) : result(r) {}

    void expect(bool ok, const std::function<std::string()>& context) {
        ++result.checks;
        if (ok) return;
        ++result.failures;
        result.pass = false;
        if (result.failures <= 3) {
            if (!result.detail.empty()) result.detail += "; ";
            result.detail += context();
        }
    }

    void expect(bool ok, const std::string& context) {
        expect(ok, [&context] { return context; });
    }

    ClauseResult& result;
};

bool limits_to(const OrbitRecord& rec, double v) {
    if (const auto* c = std::get_if<ConvergedTo>(&rec.behavior)) return c->limit == v;
    if (const auto* a = std::get_if<AbsorbedAt>(&rec.behavior)) return a->fixed_point == v;
    return false;
}

// Breakpoint images under explicit branches; these are the exact endpoints of
// the absorption targets and trapping sets.
double left13(const Params& p) { return eval_branch(p, PieceId::Left, kOneThird); }
double mid13(const Params& p) { return eval_branch(p, PieceId::Middle, kOneThird); }
double mid23(const Params& p) { return eval_branch(p, PieceId::Middle, kTwoThirds); }
double right23(const Params& p) { return eval_branch(p, PieceId::Right, kTwoThirds); }

// ---------------------------------------------------------------------------
// clause bodies

// Fixed-point set against a brute-force scan: node-wise agreement between
// membership and exact fixedness, plus rejection of any refined sign-change
// root outside the set.
void check_fixed_set(const SuiteOptions& o, Rng& rng, ClauseResult& r, DrawSpec spec) {
    Check ck(r);
    for (int d = 0; d < o.param_draws; ++d) {
        const Params p = draw_params(rng, spec, o.param_margin);
        const IntervalSet fix = fixed_point_set(p);
        const std::int64_t n = o.scan_grid;
        double prev_gap = 0.0;
        double prev_x = 0.0;
        for (std::int64_t i = 0; i <= n; ++i) {
            const double x = static_cast<double>(i) / static_cast<double>(n);
            const double gap = eval(p, x) - x;
            const bool is_fixed = gap == 0.0;
            const bool member = fix.contains(x);
            ck.expect(is_fixed == member, [&] {
                char buf[128];
                std::snprintf(buf, sizeof(buf), "node %.17g: fixed=%d member=%d %s", x,
                              is_fixed, member, describe_params(p).c_str());
                return std::string(buf);
            });
            if (i > 0 && prev_gap * gap < 0.0) {
                // Strict sign change: either a root or a branch jump. Refine
                // and accept only genuine roots; they must lie in the set.
                double a = prev_x, b = x, fa = prev_gap;
                while (b - a > 1e-13) {
                    const double m = a + (b - a) / 2.0;
                    if (m == a || m == b) break;
                    const double fm = eval(p, m) - m;
                    if (fm == 0.0) { a = b = m; break; }
                    if ((fa < 0.0) == (fm < 0.0)) { a = m; fa = fm; } else { b = m; }
                }
                const double root = a + (b - a) / 2.0;
                if (std::fabs(eval(p, root) - root) <= 1e-9) {
                    ck.expect(fix.contains(root), [&] {
                        return "scan root " + std::to_string(root) + " outside set " +
                               describe_params(p);
                    });
                }
            }
            prev_gap = gap;
            prev_x = x;
        }
    }
}

void check_limit(const SuiteOptions& o, Rng& rng, ClauseResult& r, DrawSpec spec,
                 const IntervalSet& region, double limit) {
    Check ck(r);
    for (int d = 0; d < o.param_draws; ++d) {
        const Params p = draw_params(rng, spec, o.param_margin);
        for (double x0 : stratified_points(region, o.limit_starts, o.start_margin)) {
            const OrbitRecord rec = detect_behavior(p, x0, o.budget, o.tol);
            ck.expect(limits_to(rec, limit), [&] {
                return "x0=" + std::to_string(x0) + " -> " + summary(rec.behavior) +
                       " expected limit " + std::to_string(limit) + " " + describe_params(p);
            });
        }
    }
}

using TargetFn = IntervalSet (*)(const Params&);

void check_absorb(const SuiteOptions& o, Rng& rng, ClauseResult& r, DrawSpec spec,
                  const IntervalSet& region, TargetFn target_of) {
    Check ck(r);
    for (int d = 0; d < o.param_draws; ++d) {
        const Params p = draw_params(rng, spec, o.param_margin);
        const IntervalSet target = target_of(p);
        const IntervalSet fix = fixed_point_set(p);
        for (double x0 : stratified_points(region, o.absorb_starts, o.start_margin)) {
            const OrbitRecord rec = detect_behavior(p, x0, o.budget, o.tol);
            const auto* ab = std::get_if<AbsorbedAt>(&rec.behavior);
            ck.expect(ab != nullptr, [&] {
                return "x0=" + std::to_string(x0) + " -> " + summary(rec.behavior) +
                       " expected absorption " + describe_params(p);
            });
            if (!ab) continue;
            ck.expect(eval(p, ab->fixed_point) == ab->fixed_point,
                      "absorbed point not bit-exactly fixed");
            ck.expect(target.contains(ab->fixed_point), [&] {
                return "absorbed at " + std::to_string(ab->fixed_point) + " outside target " +
                       target.text() + " " + describe_params(p);
            });
            ck.expect(fix.contains(ab->fixed_point), "absorbed point outside Fix");
        }
    }
}

void check_trapping(const SuiteOptions& o, Rng& rng, ClauseResult& r, DrawSpec spec,
                    const std::string& label, bool attraction) {
    Check ck(r);
    for (int d = 0; d < o.param_draws; ++d) {
        const Params p = draw_params(rng, spec, o.param_margin);
        const auto traps = trapping_sets(p);
        ck.expect(traps.size() == 1 && traps.front().label == label,
                  "expected exactly one trapping set " + label + " " + describe_params(p));
        if (traps.size() != 1) continue;
        const TrappingSet& t = traps.front();
        if (attraction) {
            const AttractionReport rep =
                verify_attraction(p, t.basin, t.set, o.attraction_starts, o.attraction_budget);
            ck.expect(rep.all_entered(), [&] {
                return std::to_string(rep.starts - rep.entered) + "/" +
                       std::to_string(rep.starts) + " starts never entered " + t.set.text() +
                       " " + describe_params(p);
            });
        } else {
            const InvarianceReport rep = verify_invariance(p, t.set, o.invariance_samples);
            ck.expect(rep.all_inside(), [&] {
                char buf[160];
                std::snprintf(buf, sizeof(buf),
                              "%lld violations, worst %.3g at x=%.17g %s",
                              static_cast<long long>(rep.violations), rep.worst_violation,
                              rep.worst_point, describe_params(p).c_str());
                return std::string(buf);
            });
        }
    }
}

// Basin split: orbits below the threshold tend to 0, at/above it to 1.
void check_split(const SuiteOptions& o, Rng& rng, ClauseResult& r, DrawSpec spec,
                 double threshold, bool threshold_goes_up) {
    Check ck(r);
    for (int d = 0; d < o.param_draws; ++d) {
        const Params p = draw_params(rng, spec, o.param_margin);
        auto run = [&](double x0, double limit) {
            const OrbitRecord rec = detect_behavior(p, x0, o.budget, o.tol);
            ck.expect(limits_to(rec, limit), [&] {
                return "x0=" + std::to_string(x0) + " -> " + summary(rec.behavior) +
                       " expected limit " + std::to_string(limit) + " " + describe_params(p);
            });
        };
        run(threshold - 1e-3, 0.0);
        run(threshold + 1e-3, 1.0);
        for (double x0 :
             stratified_points(IntervalSet::closed(0.0, threshold - 1e-3), 5, o.start_margin)) {
            run(x0, 0.0);
        }
        for (double x0 :
             stratified_points(IntervalSet::closed(threshold + 1e-3, 1.0), 5, o.start_margin)) {
            run(x0, 1.0);
        }
        // The threshold itself follows the piece convention: at 2/3 the right
        // branch applies (limit 1); at 1/3 the left branch applies (limit 0).
        run(threshold, threshold_goes_up ? 1.0 : 0.0);
    }
}

// ---------------------------------------------------------------------------
// pt clauses

void pt_discriminant(const SuiteOptions& o, Rng&, ClauseResult& r) {
    Check ck(r);
    const int n = o.discriminant_lattice;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double a = static_cast<double>(i) / (n - 1);
            const double b = static_cast<double>(j) / (n - 1);
            const double t = (2.0 * a - 1.0) * (2.0 * b - 1.0);
            const double disc = t * (t - 4.0);
            ck.expect((disc >= 0.0) == (t <= 0.0), [&] {
                return "a=" + std::to_string(a) + " b=" + std::to_string(b);
            });
        }
    }
}

void pt_equivalence(const SuiteOptions& o, Rng& rng, ClauseResult& r) {
    Check ck(r);
    // Straddling pairs x1 < 1/3 < x2: the window condition and the
    // coefficient box are equivalent.
    for (int i = 0; i < o.equivalence_samples; ++i) {
        const double x1 = rng.uniform(1e-9, kOneThird - 1e-9);
        const double x2 = rng.uniform(kOneThird + 1e-9, 1.0 - 1e-9);
        const auto [a, b] = params_from_orbit(x1, x2);
        const bool box = 0.5 < a && a < 1.0 && 0.0 < b && b < 0.5;
        const bool pc = validate_condition_pc(x1, x2);
        ck.expect(box == pc, [&] {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "x1=%.17g x2=%.17g a=%.17g b=%.17g", x1, x2, a, b);
            return std::string(buf);
        });
    }
    // Over the full square only the forward implication holds (the window
    // encodes the straddle, the box does not).
    for (int i = 0; i < o.equivalence_samples; ++i) {
        const double x1 = rng.uniform(1e-9, 1.0 - 1e-9);
        const double x2 = rng.uniform(1e-9, 1.0 - 1e-9);
        if (x1 == x2) continue;
        if (!validate_condition_pc(x1, x2)) continue;
        const auto [a, b] = params_from_orbit(x1, x2);
        ck.expect(0.5 < a && a < 1.0 && 0.0 < b && b < 0.5, [&] {
            return "pc holds but box fails at x1=" + std::to_string(x1) +
                   " x2=" + std::to_string(x2);
        });
    }
}

void pt_roundtrip(const SuiteOptions& o, Rng& rng, ClauseResult& r) {
    Check ck(r);
    static const double lower = 1.0 - std::sqrt(6.0) / 3.0;
    for (int i = 0; i < o.roundtrip_samples; ++i) {
        const double x1 = rng.uniform(lower + 1e-6, kOneThird - 1e-6);
        const double cap = x1 * (2.0 - x1);
        const double x2 = rng.uniform(kOneThird + 1e-6, cap - 1e-6);
        const auto [a, b] = params_from_orbit(x1, x2);
        ck.expect(0.5 < a && a < 1.0 && 0.0 < b && b < 0.5,
                  "window pair escaped the coefficient box");
        const auto cyc = orbit_from_params(a, b);
        ck.expect(cyc.has_value(), [&] {
            return "no cycle recovered for x1=" + std::to_string(x1) +
                   " x2=" + std::to_string(x2);
        });
        if (!cyc) continue;
        ck.expect(std::fabs(cyc->x1 - x1) <= kRoundTripTol &&
                      std::fabs(cyc->x2 - x2) <= kRoundTripTol,
                  [&] {
                      char buf[160];
                      std::snprintf(buf, sizeof(buf), "roundtrip drift: (%.17g,%.17g) -> (%.17g,%.17g)",
                                    x1, x2, cyc->x1, cyc->x2);
                      return std::string(buf);
                  });
        ck.expect(cyc->valid, "cycle round-trip flag false");
        // Residuals of the defining equations.
        const Params p(a, b, 0.5);
        ck.expect(std::fabs(eval_branch(p, PieceId::Left, cyc->x1) - cyc->x2) <= kCycleResidualTol,
                  "first equation residual too large");
        ck.expect(std::fabs(eval_branch(p, PieceId::Middle, cyc->x2) - cyc->x1) <= kCycleResidualTol,
                  "second equation residual too large");
    }
}

void pt_example(const SuiteOptions& o, Rng&, ClauseResult& r) {
    Check ck(r);
    const auto [a, b] = params_from_orbit(0.2, 0.34);
    ck.expect(a == 0.9375, "forward a != 0.9375 exactly");
    ck.expect(std::fabs(b - 0.188057041) <= 1e-9, "forward b off by more than 1e-9");

    const auto cyc = orbit_from_params(0.9375, 0.188057041);
    ck.expect(cyc.has_value(), "inverse returned none");
    if (cyc) {
        ck.expect(std::fabs(cyc->x1 - 0.2) <= 1e-7 && std::fabs(cyc->x2 - 0.34) <= 1e-7,
                  "inverse cycle off the example");
        ck.expect(cyc->valid, "inverse cycle round trip failed");
        // Multiplier against a central finite difference of the second iterate.
        const Params p(0.9375, 0.188057041, 0.5);
        const double h = 1e-6;
        const double fd = (eval(p, eval(p, cyc->x1 + h)) - eval(p, eval(p, cyc->x1 - h))) /
                          (2.0 * h);
        ck.expect(std::fabs(fd - cyc->multiplier) <= 1e-5 * std::fabs(cyc->multiplier),
                  "multiplier disagrees with finite differences");
    }
    const Params p(0.9375, 0.188057041, 0.5);
    const auto found = brute_force_two_cycles(p, CycleSide::Near13, o.oracle_grid);
    ck.expect(found.size() == 1, "oracle cycle count != 1");
    if (found.size() == 1 && cyc) {
        ck.expect(std::fabs(found[0].x1 - cyc->x1) <= 1e-7 &&
                      std::fabs(found[0].x2 - cyc->x2) <= 1e-7,
                  "oracle and closed form disagree");
    }
    ck.expect(!orbit_from_params(0.3, 0.4).has_value(), "t > 0 must yield none");
}

// Cycles closer than 1e-9 to a piece edge are untestable in floating point:
// the true root can fall between the two doubles straddling the breakpoint,
// and piece membership there is a coin toss the two routes may call apart.
bool boundary_degenerate(const TwoCycle& c) {
    for (double x : {c.x1, c.x2}) {
        for (double edge : {0.0, kOneThird, kTwoThirds, 1.0}) {
            if (std::fabs(x - edge) < 1e-9) return true;
        }
    }
    return false;
}

void pt_agreement(const SuiteOptions& o, Rng&, ClauseResult& r) {
    Check ck(r);
    const int n = o.agreement_lattice;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double a = static_cast<double>(i) / (n - 1);
            const double b = static_cast<double>(j) / (n - 1);
            const auto cf = orbit_from_params(a, b);
            const Params p(a, b, 0.5);
            const auto bf = brute_force_two_cycles(p, CycleSide::Near13, o.agreement_grid);
            if (cf && boundary_degenerate(*cf)) continue;
            if (!bf.empty() && boundary_degenerate(bf.front())) continue;
            if (cf) {
                ck.expect(bf.size() == 1 && std::fabs(bf[0].x1 - cf->x1) <= 1e-7 &&
                              std::fabs(bf[0].x2 - cf->x2) <= 1e-7,
                          [&] {
                              return "closed form found a cycle the oracle disputes at a=" +
                                     std::to_string(a) + " b=" + std::to_string(b);
                          });
            } else {
                ck.expect(bf.empty(), [&] {
                    return "oracle found an unexpected cycle at a=" + std::to_string(a) +
                           " b=" + std::to_string(b);
                });
            }
        }
    }
}

void pt_mirror(const SuiteOptions& o, Rng& rng, ClauseResult& r) {
    Check ck(r);
    int admissible = 0;
    for (int i = 0; i < o.mirror_samples; ++i) {
        const double x1 = rng.uniform(kOneThird + 1e-6, kTwoThirds - 1e-6);
        const double x2 = rng.uniform(kTwoThirds + 1e-6, 1.0 - 1e-6);
        const auto [b, c] = params_from_orbit(x1, x2);
        if (!(b > 0.5 && b < 1.0 && c > 0.0 && c < 0.5)) continue;
        ++admissible;
        const auto cyc = orbit_from_params_mirror(b, c);
        ck.expect(cyc.has_value(), [&] {
            return "mirror inverse missed the pair x1=" + std::to_string(x1) +
                   " x2=" + std::to_string(x2);
        });
        if (!cyc) continue;
        ck.expect(std::fabs(cyc->x1 - x1) <= 1e-7 && std::fabs(cyc->x2 - x2) <= 1e-7,
                  "mirror roundtrip drift");
        ck.expect(cyc->side == CycleSide::Near23, "mirror cycle tagged with wrong side");
        // Oracle cross-check on the full map.
        const Params p(0.5, b, c);
        const auto bf = brute_force_two_cycles(p, CycleSide::Near23, o.agreement_grid);
        ck.expect(bf.size() == 1 && std::fabs(bf[0].x1 - x1) <= 1e-6,
                  "mirror oracle disagreement");
    }
    ck.expect(admissible > 0, "no admissible mirrored pairs sampled");
    ck.expect(!orbit_from_params_mirror(0.5, 0.5).has_value(), "identity pieces produced a cycle");
    ck.expect(!orbit_from_params_mirror(0.2, 0.8).has_value(),
              "(0.2, 0.8) must yield none");
}

// ---------------------------------------------------------------------------
// base clauses (trivial and uniform cases)

void base_trivial(const SuiteOptions& o, Rng& rng, ClauseResult& r) {
    Check ck(r);
    const Params p(0.5, 0.5, 0.5);
    ck.expect(classify(p).kind == RegimeCase::Trivial, "classification");
    const IntervalSet fix = fixed_point_set(p);
    ck.expect(fix.size() == 1 && fix.contains(0.0) && fix.contains(1.0) && fix.contains(0.37),
              "Fix != [0,1]");
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform01();
        ck.expect(eval(p, x) == x, "identity violated");
    }
    const OrbitRecord rec = detect_behavior(p, 0.77, o.budget, o.tol);
    const auto* ab = std::get_if<AbsorbedAt>(&rec.behavior);
    ck.expect(ab && ab->fixed_point == 0.77 && ab->step == 0, "identity must absorb immediately");
}

void base_uniform(const SuiteOptions& o, Rng& rng, ClauseResult& r) {
    Check ck(r);
    for (int d = 0; d < o.param_draws; ++d) {
        const bool below = d % 2 == 0;
        const double u = draw_coef(rng, below ? Side::Below : Side::Above, o.param_margin);
        const Params p(u, u, u);
        ck.expect(classify(p).kind == RegimeCase::UniformNontrivial, "classification");
        const IntervalSet fix = fixed_point_set(p);
        ck.expect(fix.size() == 2 && fix.contains(0.0) && fix.contains(1.0) && !fix.contains(0.5),
                  "Fix != {0,1}");
        const StabilityClass at0 = stability_of(p, 0.0);
        const StabilityClass at1 = stability_of(p, 1.0);
        if (below) {
            ck.expect(at0 == StabilityClass::Attracting && at1 == StabilityClass::Repelling,
                      "stability table (u < 1/2)");
        } else {
            ck.expect(at0 == StabilityClass::Repelling && at1 == StabilityClass::Attracting,
                      "stability table (u > 1/2)");
        }
        const double limit = below ? 0.0 : 1.0;
        for (double x0 :
             stratified_points(IntervalSet::interval(0.0, 1.0, false, false), o.limit_starts,
                               o.start_margin)) {
            const OrbitRecord rec = detect_behavior(p, x0, o.budget, o.tol);
            ck.expect(limits_to(rec, limit), [&] {
                return "x0=" + std::to_string(x0) + " -> " + summary(rec.behavior) + " " +
                       describe_params(p);
            });
        }
    }
}

// ---------------------------------------------------------------------------
// absorption targets (closed at attained fixed endpoints)

IntervalSet target_21_3(const Params& p) {
    return IntervalSet::interval(kOneThird, left13(p), false, true);
}
IntervalSet target_22_2(const Params& p) {
    return IntervalSet::interval(mid13(p), kOneThird, true, true);
}
IntervalSet target_22_3(const Params& p) {
    return IntervalSet::interval(kTwoThirds, mid23(p), true, true);
}
IntervalSet target_23_2(const Params& p) {
    return IntervalSet::interval(right23(p), kTwoThirds, true, false);
}
// Two-sided absorption (clause 2.5.5): the per-side targets may overlap
// inside the identity middle (a - c > 3/4), so they are checked per side.

// start regions
IntervalSet region_left_open0() { return IntervalSet::interval(0.0, kOneThird, false, true); }
IntervalSet region_middle() { return IntervalSet::interval(kOneThird, kTwoThirds, false, false); }
IntervalSet region_right_open1() { return IntervalSet::interval(kTwoThirds, 1.0, true, false); }
IntervalSet region_right_closed() { return IntervalSet::closed(kTwoThirds, 1.0); }
IntervalSet region_left_closed() { return IntervalSet::closed(0.0, kOneThird); }

// ---------------------------------------------------------------------------
// registry

struct Clause {
    const char* id;
    const char* desc;
    std::function<void(const SuiteOptions&, Rng&, ClauseResult&)> fn;
};

const std::vector<Clause>& registry() {
    static const std::vector<Clause> clauses = {
        {"base.1", "a=b=c=1/2: identity map, Fix=[0,1]", base_trivial},
        {"base.2", "a=b=c!=1/2: Fix={0,1}, stability table, limits", base_uniform},

        {"2.1.1", "Fix(f_a) = {0} u (1/3,1] vs scan",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_fixed_set(o, g, r, {Side::Any, Side::Half, Side::Half});
         }},
        {"2.1.2", "a<1/2: limit 0 from [0,1/3]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_limit(o, g, r, {Side::Below, Side::Half, Side::Half}, region_left_closed(), 0.0);
         }},
        {"2.1.3", "a>1/2: finite-time absorption into (1/3, f_a(1/3)]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_absorb(o, g, r, {Side::Above, Side::Half, Side::Half}, region_left_open0(),
                          target_21_3);
         }},

        {"2.2.1", "Fix(f_b) = [0,1/3] u [2/3,1] vs scan",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_fixed_set(o, g, r, {Side::Half, Side::Any, Side::Half});
         }},
        {"2.2.2", "b<1/2: absorption into [f_b(1/3), 1/3]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_absorb(o, g, r, {Side::Half, Side::Below, Side::Half}, region_middle(),
                          target_22_2);
         }},
        {"2.2.3", "b>1/2: absorption into [2/3, f_b(2/3)]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_absorb(o, g, r, {Side::Half, Side::Above, Side::Half}, region_middle(),
                          target_22_3);
         }},

        {"2.3.1", "Fix(f_c) = [0,2/3) u {1} vs scan",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_fixed_set(o, g, r, {Side::Half, Side::Half, Side::Any});
         }},
        {"2.3.2", "c<1/2: absorption into [f_c(2/3), 2/3)",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_absorb(o, g, r, {Side::Half, Side::Half, Side::Below}, region_right_open1(),
                          target_23_2);
         }},
        {"2.3.3", "c>1/2: limit 1 from [2/3,1]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_limit(o, g, r, {Side::Half, Side::Half, Side::Above}, region_right_closed(), 1.0);
         }},

        {"2.4.1", "Fix(f_ab) = {0} u [2/3,1] vs scan",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_fixed_set(o, g, r, {Side::Any, Side::Any, Side::Half});
         }},
        {"2.4.2", "a,b<1/2: limit 0 from [0,2/3)",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_limit(o, g, r, {Side::Below, Side::Below, Side::Half},
                         IntervalSet::interval(0.0, kTwoThirds, true, false), 0.0);
         }},
        {"2.4.3", "a<1/2, b>1/2: limit 0 from [0,1/3]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_limit(o, g, r, {Side::Below, Side::Above, Side::Half}, region_left_closed(), 0.0);
         }},
        {"2.4.4", "a<1/2, b>1/2: absorption into [2/3, f_b(2/3)] from the middle",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_absorb(o, g, r, {Side::Below, Side::Above, Side::Half}, region_middle(),
                          target_22_3);
         }},
        {"2.4.5", "a,b>1/2: absorption into [2/3, f_b(2/3)] from (0,2/3)",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_absorb(o, g, r, {Side::Above, Side::Above, Side::Half},
                          IntervalSet::interval(0.0, kTwoThirds, false, false), target_22_3);
         }},
        {"2.4.6.1", "a>1/2, b<1/2: A1 orbits enter A2",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_trapping(o, g, r, {Side::Above, Side::Below, Side::Half}, "A2", true);
         }},
        {"2.4.6.2", "a>1/2, b<1/2: f(A2) inside A2",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_trapping(o, g, r, {Side::Above, Side::Below, Side::Half}, "A2", false);
         }},

        {"2.5.1", "Fix(f_ac) = {0} u (1/3,2/3) u {1} vs scan",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_fixed_set(o, g, r, {Side::Any, Side::Half, Side::Any});
         }},
        {"2.5.2", "a<1/2, c<1/2: absorption into [f_c(2/3), 2/3) from [2/3,1)",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_absorb(o, g, r, {Side::Below, Side::Half, Side::Below}, region_right_open1(),
                          target_23_2);
         }},
        {"2.5.3", "a<1/2 (any c): limit 0 from [0,1/3]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_limit(o, g, r, {Side::Below, Side::Half, Side::Any}, region_left_closed(), 0.0);
         }},
        {"2.5.4", "c>1/2 (any a): limit 1 from [2/3,1]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_limit(o, g, r, {Side::Any, Side::Half, Side::Above}, region_right_closed(), 1.0);
         }},
        {"2.5.5", "a>1/2, c<1/2: two-sided absorption toward the identity middle",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_absorb(o, g, r, {Side::Above, Side::Half, Side::Below}, region_left_open0(),
                          target_21_3);
             check_absorb(o, g, r, {Side::Above, Side::Half, Side::Below}, region_right_open1(),
                          target_23_2);
         }},
        {"2.5.6", "a>1/2, c>1/2: absorption into (1/3, f_a(1/3)] from (0,1/3]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_absorb(o, g, r, {Side::Above, Side::Half, Side::Above}, region_left_open0(),
                          target_21_3);
         }},

        {"2.6.1", "Fix(f_bc) = [0,1/3] u {1} vs scan",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_fixed_set(o, g, r, {Side::Half, Side::Any, Side::Any});
         }},
        {"2.6.2", "b<1/2, c<1/2: absorption into [f_b(1/3), 1/3] from (1/3,1)",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_absorb(o, g, r, {Side::Half, Side::Below, Side::Below},
                          IntervalSet::interval(kOneThird, 1.0, false, false), target_22_2);
         }},
        {"2.6.3", "b<1/2, c>1/2: absorption into [f_b(1/3), 1/3] from the middle",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_absorb(o, g, r, {Side::Half, Side::Below, Side::Above}, region_middle(),
                          target_22_2);
         }},
        {"2.6.4", "b<1/2, c>1/2: limit 1 from [2/3,1]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_limit(o, g, r, {Side::Half, Side::Below, Side::Above}, region_right_closed(), 1.0);
         }},
        {"2.6.5", "b>1/2, c>1/2: limit 1 from (1/3,1]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_limit(o, g, r, {Side::Half, Side::Above, Side::Above},
                         IntervalSet::interval(kOneThird, 1.0, false, true), 1.0);
         }},
        {"2.6.6.1", "b>1/2, c<1/2: A1 orbits enter A2",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_trapping(o, g, r, {Side::Half, Side::Above, Side::Below}, "A2", true);
         }},
        {"2.6.6.2", "b>1/2, c<1/2: f(A2) inside A2",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_trapping(o, g, r, {Side::Half, Side::Above, Side::Below}, "A2", false);
         }},

        {"2.7.1", "Fix(f_abc) = {0,1} vs scan",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_fixed_set(o, g, r, {Side::Any, Side::Any, Side::Any});
         }},
        {"2.7.2", "a,b,c<1/2: limit 0 from [0,1]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_limit(o, g, r, {Side::Below, Side::Below, Side::Below},
                         IntervalSet::interval(0.0, 1.0, false, false), 0.0);
         }},
        {"2.7.3", "a,b<1/2, c>1/2: basin split at 2/3",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_split(o, g, r, {Side::Below, Side::Below, Side::Above}, kTwoThirds, true);
         }},
        {"2.7.4", "a<1/2, b>1/2, c<1/2: limit 0 from [0,1/3] (same claim as 2.7.5.1)",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_limit(o, g, r, {Side::Below, Side::Above, Side::Below}, region_left_closed(), 0.0);
         }},
        {"2.7.5.1", "a<1/2, b>1/2, c<1/2: limit 0 from A1=[0,1/3] (duplicate hypothesis)",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_limit(o, g, r, {Side::Below, Side::Above, Side::Below}, region_left_closed(), 0.0);
         }},
        {"2.7.5.2", "a<1/2, b>1/2, c<1/2: A2 orbits enter A3",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_trapping(o, g, r, {Side::Below, Side::Above, Side::Below}, "A3", true);
         }},
        {"2.7.5.3", "a<1/2, b>1/2, c<1/2: f(A3) inside A3",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_trapping(o, g, r, {Side::Below, Side::Above, Side::Below}, "A3", false);
         }},
        {"2.7.6", "a<1/2, b>1/2, c>1/2: basin split at 1/3",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_split(o, g, r, {Side::Below, Side::Above, Side::Above}, kOneThird, false);
         }},
        {"2.7.7.1", "a>1/2, b<1/2, c<1/2: B1 orbits enter B2",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_trapping(o, g, r, {Side::Above, Side::Below, Side::Below}, "B2", true);
         }},
        {"2.7.7.2", "a>1/2, b<1/2, c<1/2: f(B2) inside B2",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_trapping(o, g, r, {Side::Above, Side::Below, Side::Below}, "B2", false);
         }},
        {"2.7.8.1", "a>1/2, b<1/2, c>1/2: C1 orbits enter C2",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_trapping(o, g, r, {Side::Above, Side::Below, Side::Above}, "C2", true);
         }},
        {"2.7.8.2", "a>1/2, b<1/2, c>1/2: f(C2) inside C2",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_trapping(o, g, r, {Side::Above, Side::Below, Side::Above}, "C2", false);
         }},
        {"2.7.8.3", "a>1/2, b<1/2, c>1/2: limit 1 from C3=[2/3,1]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_limit(o, g, r, {Side::Above, Side::Below, Side::Above}, region_right_closed(), 1.0);
         }},
        {"2.7.9", "a,b,c>1/2: limit 1 from (0,1]",
         [](const SuiteOptions& o, Rng& g, ClauseResult& r) {
             check_limit(o, g, r, {Side::Above, Side::Above, Side::Above},
                         IntervalSet::interval(0.0, 1.0, false, true), 1.0);
         }},

        {"pt.1", "discriminant law: D >= 0 iff t <= 0", pt_discriminant},
        {"pt.2", "window condition equivalent to the coefficient box", pt_equivalence},
        {"pt.3", "orbit -> params -> orbit round trip inside the window", pt_roundtrip},
        {"pt.4", "numeric example (0.2, 0.34) <-> (0.9375, 0.188057041)", pt_example},
        {"pt.5", "closed form vs brute-force oracle over the (a,b) lattice", pt_agreement},
        {"pt.6", "mirrored cycles around 2/3 round trip and match the oracle", pt_mirror},
    };
    return clauses;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& clause_manifest() {
    static const std::vector<std::pair<std::string, std::string>> manifest = [] {
        std::vector<std::pair<std::string, std::string>> m;
        for (const Clause& c : registry()) m.emplace_back(c.id, c.desc);
        return m;
    }();
    return manifest;
}

std::vector<ClauseResult> run_suites(std::string_view filter, const SuiteOptions& opts) {
    std::vector<ClauseResult> results;
    const bool all = filter.empty() || filter == "all";
    for (const Clause& c : registry()) {
        const std::string_view id(c.id);
        if (!all) {
            const bool match = id == filter || (id.size() > filter.size() &&
                                                id.substr(0, filter.size()) == filter &&
                                                id[filter.size()] == '.');
            if (!match) continue;
        }
        ClauseResult r;
        r.id = c.id;
        r.description = c.desc;
        Rng rng(clause_seed(opts.seed, id));
        c.fn(opts, rng, r);
        results.push_back(std::move(r));
    }
    return results;
}

bool covers_manifest(const std::vector<ClauseResult>& results) {
    for (const auto& [id, desc] : clause_manifest()) {
        bool found = false;
        for (const ClauseResult& r : results) {
            if (r.id == id) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace qso
