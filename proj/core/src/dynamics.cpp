#include "qso/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qso/regimes.hpp"

namespace qso {

namespace {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

bool stored_step(std::int64_t k) {
    if (k <= 4096) return true;
    const std::int64_t stride = (k + 4095) / 4096;
    return k % stride == 0;
}

class SampleBuffer {
public:
    void push(std::int64_t step, double value) {
        if (stored_step(step)) {
            samples_.emplace_back(step, value);
        }
        last_ = {step, value};
    }

    std::vector<std::pair<std::int64_t, double>> take() {
        if (!samples_.empty() && samples_.back().first != last_.first) {
            samples_.push_back(last_);
        }
        return std::move(samples_);
    }

private:
    std::vector<std::pair<std::int64_t, double>> samples_;
    std::pair<std::int64_t, double> last_{0, 0.0};
};

void require_start(double x0) {
    if (!(x0 >= 0.0 && x0 <= 1.0)) {
        throw std::domain_error("x0 must lie in [0,1]");
    }
}

}  // namespace

std::string summary(const Behavior& behavior) {
    struct Visitor {
        std::string operator()(const BudgetExhausted&) const { return "BudgetExhausted"; }
        std::string operator()(const ConvergedTo& b) const {
            return "ConvergedTo " + format_number(b.limit);
        }
        std::string operator()(const AbsorbedAt& b) const {
            return "AbsorbedAt " + format_number(b.fixed_point) + " step " +
                   std::to_string(b.step);
        }
        std::string operator()(const Trapped& b) const {
            return "Trapped in " + b.set.text() + " since step " +
                   std::to_string(b.entry_step);
        }
        std::string operator()(const CycleDetected& b) const {
            std::string pts;
            for (std::size_t i = 0; i < b.orbit.size(); ++i) {
                if (i > 0) pts += ", ";
                pts += format_number(b.orbit[i]);
            }
            return "CycleDetected period " + std::to_string(b.period) + " {" + pts + "}";
        }
    };
    return std::visit(Visitor{}, behavior);
}

OrbitRecord iterate(const Params& p, double x0, std::int64_t n) {
    require_start(x0);
    if (n < 0) throw std::invalid_argument("iterate: n must be >= 0");
    SampleBuffer buf;
    double x = x0;
    buf.push(0, x);
    for (std::int64_t k = 1; k <= n; ++k) {
        x = eval(p, x);
        buf.push(k, x);
    }
    return OrbitRecord{x0, p, buf.take(), BudgetExhausted{}, n};
}

OrbitRecord detect_behavior(const Params& p, double x0, std::int64_t budget, double tol) {
    require_start(x0);
    if (budget < 1) throw std::invalid_argument("detect_behavior: budget must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("detect_behavior: tol must be > 0");

    const std::vector<TrappingSet> traps = trapping_sets(p);

    SampleBuffer buf;
    double x = x0;
    buf.push(0, x);

    // Convergence state: consecutive in-band monotone approach to 0 or 1.
    double conv_target = -1.0;
    int conv_run = 0;

    // Trapping state per set: start of the current consecutive inside-run.
    std::vector<std::int64_t> trap_entry(traps.size(), -1);

    // Cycle anchor (Brent-style doubling window).
    double anchor = x0;
    std::int64_t anchor_step = 0;
    std::int64_t power = 1;

    auto finish = [&](Behavior b, std::int64_t steps) {
        return OrbitRecord{x0, p, buf.take(), std::move(b), steps};
    };

    for (std::int64_t k = 0; k < budget; ++k) {
        const double xn = eval(p, x);
        const std::int64_t step = k + 1;
        buf.push(step, xn);

        // (i) exact absorption onto a fixed point. A fast-contracting orbit
        // can stall one ulp short of a vertex (the increment drops below the
        // local grid); that is convergence at floating-point resolution, not
        // identity-branch absorption, and the stalled point need not belong
        // to the fixed-point set.
        if (xn == x) {
            const double v = x < 0.5 ? 0.0 : 1.0;
            if (x != v && std::fabs(x - v) <= tol &&
                p.coefficient(piece_of(x)) != 0.5) {
                return finish(ConvergedTo{v}, step);
            }
            return finish(AbsorbedAt{x, k}, step);
        }

        // (ii) confirmed monotone convergence to 0 or 1
        {
            const double v = xn < 0.5 ? 0.0 : 1.0;
            const bool in_band =
                std::fabs(xn - v) <= tol && std::fabs(xn - v) <= std::fabs(x - v);
            if (in_band && v == conv_target) {
                ++conv_run;
            } else if (in_band) {
                conv_target = v;
                conv_run = 1;
            } else {
                conv_target = -1.0;
                conv_run = 0;
            }
            if (conv_run >= kConfirmWindow) {
                return finish(ConvergedTo{conv_target}, step);
            }
        }

        // (iii) confirmed capture by a known trapping set
        for (std::size_t i = 0; i < traps.size(); ++i) {
            if (traps[i].set.contains(xn)) {
                if (trap_entry[i] < 0) trap_entry[i] = step;
                if (step - trap_entry[i] + 1 >= kConfirmWindow) {
                    return finish(Trapped{traps[i].set, trap_entry[i]}, step);
                }
            } else {
                trap_entry[i] = -1;
            }
        }

        // (iv) cycle detection: anchor closeness, then replay confirmation
        if (std::fabs(xn - anchor) <= tol && step > anchor_step) {
            const std::int64_t lambda = step - anchor_step;
            if (lambda <= 4 * kCycleCap) {
                // Minimal divisor of lambda that replays back onto xn.
                for (std::int64_t d = 1; d <= lambda; ++d) {
                    if (lambda % d != 0 || d > kCycleCap) continue;
                    double z = xn;
                    std::vector<double> orbit;
                    orbit.reserve(static_cast<std::size_t>(d));
                    for (std::int64_t j = 0; j < d; ++j) {
                        orbit.push_back(z);
                        z = eval(p, z);
                    }
                    if (std::fabs(z - xn) > tol) continue;
                    const auto [mn, mx] = std::minmax_element(orbit.begin(), orbit.end());
                    // A near-fixed plateau is not a cycle; leave it to the
                    // absorption/convergence checks.
                    if (d < 2 || *mx - *mn <= 10.0 * tol) break;
                    return finish(CycleDetected{static_cast<int>(d), std::move(orbit)}, step);
                }
            }
        }
        if (step - anchor_step == power) {
            anchor = xn;
            anchor_step = step;
            power *= 2;
        }

        x = xn;
    }
    return finish(BudgetExhausted{}, budget);
}

std::vector<TrappingSet> trapping_sets(const Params& p) {
    const Regime r = classify(p);
    std::vector<TrappingSet> out;

    const auto below = [](CoefSide s) { return s == CoefSide::Below; };
    const auto above = [](CoefSide s) { return s == CoefSide::Above; };

    // Endpoint images of the stored breakpoints under the active branches.
    const auto left13 = [&p] { return eval_branch(p, PieceId::Left, kOneThird); };
    const auto mid13 = [&p] { return eval_branch(p, PieceId::Middle, kOneThird); };
    const auto mid23 = [&p] { return eval_branch(p, PieceId::Middle, kTwoThirds); };
    const auto right23 = [&p] { return eval_branch(p, PieceId::Right, kTwoThirds); };

    if (r.kind == RegimeCase::ABnotC && above(r.a) && below(r.b)) {
        // set spans the 1/3 breakpoint: [f_b(1/3), f_a(1/3)]
        const double lo = mid13();
        const double hi = left13();
        TrappingSet t;
        t.label = "A2";
        t.set = IntervalSet::closed(lo, hi);
        t.basin = IntervalSet::interval(0.0, lo, true, false)
                      .add_interval(hi, kTwoThirds, false, false);
        t.role = TrappingRole::Invariant;
        out.push_back(std::move(t));
    } else if (r.kind == RegimeCase::BCnotA && above(r.b) && below(r.c)) {
        // set spans the 2/3 breakpoint: [f_c(2/3), f_b(2/3)]
        const double lo = right23();
        const double hi = mid23();
        TrappingSet t;
        t.label = "A2";
        t.set = IntervalSet::closed(lo, hi);
        t.basin = IntervalSet::interval(kOneThird, lo, false, false)
                      .add_interval(hi, 1.0, false, true);
        t.role = TrappingRole::Invariant;
        out.push_back(std::move(t));
    } else if (r.kind == RegimeCase::AllThree && below(r.a) && above(r.b) && below(r.c)) {
        const double lo = right23();
        const double hi = mid23();
        TrappingSet t;
        t.label = "A3";
        t.set = IntervalSet::closed(lo, hi);
        t.basin = IntervalSet::interval(kOneThird, lo, false, false)
                      .add_interval(hi, 1.0, false, false);
        t.role = TrappingRole::Invariant;
        out.push_back(std::move(t));
    } else if (r.kind == RegimeCase::AllThree && above(r.a) && below(r.b) && below(r.c)) {
        const double lo = mid13();
        const double hi = left13();
        TrappingSet t;
        t.label = "B2";
        t.set = IntervalSet::closed(lo, hi);
        t.basin = IntervalSet::interval(0.0, lo, true, false)
                      .add_interval(hi, 1.0, false, true);
        t.role = TrappingRole::Invariant;
        out.push_back(std::move(t));
    } else if (r.kind == RegimeCase::AllThree && above(r.a) && below(r.b) && above(r.c)) {
        const double lo = mid13();
        const double hi = left13();
        TrappingSet t;
        t.label = "C2";
        t.set = IntervalSet::closed(lo, hi);
        t.basin = IntervalSet::interval(0.0, lo, true, false)
                      .add_interval(hi, kTwoThirds, false, false);
        t.role = TrappingRole::Invariant;
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<double> stratified_points(const IntervalSet& set, std::int64_t count,
                                      double margin) {
    std::vector<double> pts;
    if (set.empty() || count <= 0) return pts;

    double total_length = 0.0;
    for (const auto& c : set.components()) total_length += c.length();

    for (const auto& c : set.components()) {
        if (c.is_point()) {
            pts.push_back(c.lo);
            continue;
        }
        std::int64_t n;
        if (total_length > 0.0) {
            n = std::max<std::int64_t>(
                2, static_cast<std::int64_t>(std::llround(
                       static_cast<double>(count) * (c.length() / total_length))));
        } else {
            n = 2;
        }
        double lo = c.lo;
        double hi = c.hi;
        if (margin > 0.0) {
            lo += margin;
            hi -= margin;
            if (!(lo < hi)) {
                pts.push_back(c.lo + c.length() / 2.0);
                continue;
            }
        } else {
            if (!c.closed_lo) lo = std::nextafter(lo, hi);
            if (!c.closed_hi) hi = std::nextafter(hi, lo);
        }
        for (std::int64_t i = 0; i < n; ++i) {
            const double t = n == 1 ? 0.5 : static_cast<double>(i) / static_cast<double>(n - 1);
            double x = lo + t * (hi - lo);
            x = std::clamp(x, lo, hi);
            pts.push_back(x);
        }
        if (margin == 0.0) {
            // Probe the breakpoints and their neighbours when they fall inside.
            for (double bp : {kOneThird, kTwoThirds}) {
                for (double x : {std::nextafter(bp, 0.0), bp, std::nextafter(bp, 1.0)}) {
                    if (x > c.lo && x < c.hi) pts.push_back(x);
                }
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

InvarianceReport verify_invariance(const Params& p, const IntervalSet& set,
                                   std::int64_t samples) {
    if (samples < 1) throw std::invalid_argument("verify_invariance: samples must be >= 1");
    InvarianceReport rep;
    for (double x : stratified_points(set, samples, 0.0)) {
        const double image = eval(p, x);
        ++rep.samples;
        if (!set.contains(image)) {
            ++rep.violations;
            const double d = set.distance_to(image);
            if (rep.violations == 1 || d > rep.worst_violation) {
                rep.worst_violation = d;
                rep.worst_point = x;
                rep.worst_image = image;
            }
        }
    }
    return rep;
}

AttractionReport verify_attraction(const Params& p, const IntervalSet& outer,
                                   const IntervalSet& inner, std::int64_t starts,
                                   std::int64_t budget) {
    if (starts < 1) throw std::invalid_argument("verify_attraction: starts must be >= 1");
    if (budget < 1) throw std::invalid_argument("verify_attraction: budget must be >= 1");
    AttractionReport rep;
    for (double x0 : stratified_points(outer, starts, 1e-6)) {
        ++rep.starts;
        double x = x0;
        bool entered = false;
        for (std::int64_t k = 0; k <= budget; ++k) {
            if (inner.contains(x)) {
                entered = true;
                rep.max_entry_step = std::max(rep.max_entry_step, k);
                break;
            }
            if (k < budget) x = eval(p, x);
        }
        if (entered) {
            ++rep.entered;
        } else {
            rep.failed_starts.push_back(x0);
        }
    }
    return rep;
}

}  // namespace qso
