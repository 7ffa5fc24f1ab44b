#include <cmath>
#include <random>
#include <variant>

#include <stdexcept>

#include "doctest.h"
#include "qso/dynamics.hpp"
#include "qso/regimes.hpp"

using namespace qso;

namespace {

double uniform(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * ((g() >> 11) * 0x1.0p-53);
}

}  // namespace

TEST_CASE("raw iteration on the identity map is constant") {
    const OrbitRecord rec = iterate(Params(0.5, 0.5, 0.5), 0.77, 5);
    REQUIRE(rec.samples.size() == 6);
    for (const auto& [step, x] : rec.samples) CHECK(x == 0.77);
    CHECK(std::holds_alternative<BudgetExhausted>(rec.behavior));
    CHECK(rec.steps_used == 5);
}

TEST_CASE("raw iteration fixes the vertex") {
    const OrbitRecord rec = iterate(Params(0.9, 0.3, 0.7), 0.0, 3);
    for (const auto& [step, x] : rec.samples) CHECK(x == 0.0);
}

TEST_CASE("raw iteration squares under a = 0") {
    // oracle: direct squaring
    const OrbitRecord rec = iterate(Params(0.0, 0.5, 0.5), 0.2, 2);
    REQUIRE(rec.samples.size() == 3);
    const double x1 = 0.2 * 0.2;
    CHECK(rec.samples[0].second == 0.2);
    CHECK(rec.samples[1].second == x1);
    CHECK(rec.samples[2].second == x1 * x1);
    CHECK(rec.samples[1].second == doctest::Approx(0.04).epsilon(1e-14));
    CHECK(rec.samples[2].second == doctest::Approx(0.0016).epsilon(1e-14));
}

TEST_CASE("consecutive stored samples satisfy the orbit relation") {
    const Params p(0.3, 0.8, 0.6);
    const OrbitRecord rec = iterate(p, 0.41, 300);
    for (std::size_t i = 0; i + 1 < rec.samples.size(); ++i) {
        REQUIRE(rec.samples[i + 1].first == rec.samples[i].first + 1);
        CHECK(rec.samples[i + 1].second == eval(p, rec.samples[i].second));
    }
}

TEST_CASE("long orbits are strided with the final iterate kept") {
    const OrbitRecord rec = iterate(Params(0.49, 0.49, 0.49), 0.9, 20000);
    CHECK(rec.samples.back().first == 20000);
    for (const auto& [step, x] : rec.samples) {
        if (step <= 4096) continue;
        const std::int64_t stride = (step + 4095) / 4096;
        const bool kept = step % stride == 0 || step == 20000;
        CHECK(kept);
    }
    CHECK(rec.samples.size() < 21000);
}

TEST_CASE("detect: uniform below 1/2 converges to 0") {
    const OrbitRecord rec = detect_behavior(Params(0.2, 0.2, 0.2), 0.9, 10000, 1e-9);
    const auto* c = std::get_if<ConvergedTo>(&rec.behavior);
    REQUIRE(c != nullptr);
    CHECK(c->limit == 0.0);
}

TEST_CASE("detect: finite-time absorption onto the identity middle") {
    const Params p(0.9, 0.5, 0.5);
    const OrbitRecord rec = detect_behavior(p, 0.2, 1000, 1e-9);
    const auto* a = std::get_if<AbsorbedAt>(&rec.behavior);
    REQUIRE(a != nullptr);
    CHECK(eval(p, a->fixed_point) == a->fixed_point);  // bit-exact
    CHECK(a->fixed_point > kOneThird);
    CHECK(a->fixed_point <= eval_branch(p, PieceId::Left, kOneThird));
    CHECK(fixed_point_set(p).contains(a->fixed_point));
    CHECK(a->step >= 1);
}

TEST_CASE("detect: starting exactly on the breakpoint absorbs at the target's top") {
    const Params p(0.9, 0.5, 0.5);
    const OrbitRecord rec = detect_behavior(p, kOneThird, 100, 1e-9);
    const auto* a = std::get_if<AbsorbedAt>(&rec.behavior);
    REQUIRE(a != nullptr);
    CHECK(a->fixed_point == eval_branch(p, PieceId::Left, kOneThird));
    CHECK(a->step == 1);
}

TEST_CASE("detect: identity map absorbs immediately") {
    const OrbitRecord rec = detect_behavior(Params(0.5, 0.5, 0.5), 0.77, 100, 1e-9);
    const auto* a = std::get_if<AbsorbedAt>(&rec.behavior);
    REQUIRE(a != nullptr);
    CHECK(a->fixed_point == 0.77);
    CHECK(a->step == 0);
}

TEST_CASE("detect: the example cycle parameters trap or cycle inside A2") {
    const Params p(0.9375, 0.188057041, 0.5);
    const auto traps = trapping_sets(p);
    REQUIRE(traps.size() == 1);
    const OrbitRecord rec = detect_behavior(p, 0.25, 10000, 1e-9);
    const bool trapped = std::holds_alternative<Trapped>(rec.behavior);
    const bool cycled = std::holds_alternative<CycleDetected>(rec.behavior);
    CHECK((trapped || cycled));
    if (trapped) {
        const auto& t = std::get<Trapped>(rec.behavior);
        CHECK(t.set.contains(rec.samples.back().second));
    }
    if (cycled) {
        const auto& c = std::get<CycleDetected>(rec.behavior);
        CHECK(c.period == 2);
        for (double v : c.orbit) CHECK(traps.front().set.contains(v));
    }
}

TEST_CASE("detect: budget exhaustion is reported honestly") {
    // within tol of nothing and no structure to latch onto in 3 steps
    const OrbitRecord rec = detect_behavior(Params(0.2, 0.2, 0.2), 0.9, 3, 1e-9);
    CHECK(std::holds_alternative<BudgetExhausted>(rec.behavior));
    CHECK(rec.steps_used == 3);
}

TEST_CASE("detect is deterministic") {
    const Params p(0.9375, 0.188057041, 0.5);
    const OrbitRecord r1 = detect_behavior(p, 0.25, 5000, 1e-9);
    const OrbitRecord r2 = detect_behavior(p, 0.25, 5000, 1e-9);
    CHECK(r1.steps_used == r2.steps_used);
    CHECK(summary(r1.behavior) == summary(r2.behavior));
    REQUIRE(r1.samples.size() == r2.samples.size());
    for (std::size_t i = 0; i < r1.samples.size(); ++i) {
        CHECK(r1.samples[i] == r2.samples[i]);
    }
}

TEST_CASE("monotone orbits off identity branches") {
    std::mt19937_64 g(7);
    for (int trial = 0; trial < 20; ++trial) {
        const double u = uniform(g, 0.02, 0.48);
        const OrbitRecord dec = iterate(Params(u, u, u), 0.9, 60);
        for (std::size_t i = 0; i + 1 < dec.samples.size(); ++i) {
            if (dec.samples[i].second == 0.0) break;
            CHECK(dec.samples[i + 1].second < dec.samples[i].second);
        }
        const double v = uniform(g, 0.52, 0.98);
        const OrbitRecord inc = iterate(Params(v, v, v), 0.1, 60);
        for (std::size_t i = 0; i + 1 < inc.samples.size(); ++i) {
            if (inc.samples[i].second == 1.0) break;
            CHECK(inc.samples[i + 1].second > inc.samples[i].second);
        }
    }
}

TEST_CASE("trapping sets per regime and sign combination") {
    // a>1/2, b<1/2, c=1/2: A2 = [(1+4b)/9, (1+4a)/9]
    {
        const auto traps = trapping_sets(Params(0.9, 0.2, 0.5));
        REQUIRE(traps.size() == 1);
        CHECK(traps[0].label == "A2");
        CHECK(traps[0].role == TrappingRole::Invariant);
        REQUIRE(traps[0].set.size() == 1);
        const auto& c = traps[0].set.components()[0];
        CHECK(c.lo == doctest::Approx((1.0 + 4.0 * 0.2) / 9.0).epsilon(1e-12));
        CHECK(c.hi == doctest::Approx((1.0 + 4.0 * 0.9) / 9.0).epsilon(1e-12));
    }
    // a=1/2, b>1/2, c<1/2: A2 = [4(1+c)/9, 4(1+b)/9]
    {
        const auto traps = trapping_sets(Params(0.5, 0.9, 0.1));
        REQUIRE(traps.size() == 1);
        const auto& c = traps[0].set.components()[0];
        CHECK(c.lo == doctest::Approx(4.0 * 1.1 / 9.0).epsilon(1e-12));
        CHECK(c.hi == doctest::Approx(4.0 * 1.9 / 9.0).epsilon(1e-12));
    }
    // all below 1/2: no trapping set, orbits converge instead
    CHECK(trapping_sets(Params(0.3, 0.4, 0.2)).empty());
    // AllThree sign combinations
    CHECK(trapping_sets(Params(0.3, 0.9, 0.2))[0].label == "A3");
    CHECK(trapping_sets(Params(0.9, 0.2, 0.1))[0].label == "B2");
    CHECK(trapping_sets(Params(0.9, 0.2, 0.8))[0].label == "C2");
    CHECK(trapping_sets(Params(0.3, 0.2, 0.8)).empty());
}

TEST_CASE("verify_invariance: paper sets pass with zero violations") {
    const Params p(0.9, 0.2, 0.5);
    const auto traps = trapping_sets(p);
    REQUIRE(traps.size() == 1);
    const InvarianceReport rep = verify_invariance(p, traps[0].set, 10000);
    CHECK(rep.all_inside());
    CHECK(rep.violations == 0);
    CHECK(rep.samples >= 10000);
}

TEST_CASE("verify_invariance: identity map keeps any interval") {
    const InvarianceReport rep =
        verify_invariance(Params(0.5, 0.5, 0.5), IntervalSet::closed(0.1, 0.2), 100);
    CHECK(rep.all_inside());
}

TEST_CASE("verify_invariance: reports genuine violations") {
    // left branch with a>1/2 pushes points rightward out of [0, 0.1]
    const Params p(0.9, 0.2, 0.5);
    const InvarianceReport rep = verify_invariance(p, IntervalSet::closed(0.0, 0.1), 100);
    CHECK_FALSE(rep.all_inside());
    CHECK(rep.worst_violation > 0.0);
    CHECK(rep.worst_violation == doctest::Approx(eval(p, 0.1) - 0.1).epsilon(1e-9));
}

TEST_CASE("verify_attraction: basin orbits enter the trapping set") {
    const Params p(0.9, 0.2, 0.5);
    const auto traps = trapping_sets(p);
    REQUIRE(traps.size() == 1);
    const AttractionReport rep =
        verify_attraction(p, traps[0].basin, traps[0].set, 1000, 100000);
    CHECK(rep.all_entered());
    CHECK(rep.max_entry_step >= 0);
}

TEST_CASE("verify_attraction: identity never moves points between disjoint sets") {
    const AttractionReport rep =
        verify_attraction(Params(0.5, 0.5, 0.5), IntervalSet::closed(0.8, 0.9),
                          IntervalSet::closed(0.1, 0.2), 50, 1000);
    CHECK(rep.entered == 0);
    CHECK(rep.failed_starts.size() == static_cast<std::size_t>(rep.starts));
}

TEST_CASE("input guards") {
    const Params p(0.3, 0.3, 0.3);
    CHECK_THROWS_AS(iterate(p, 1.5, 3), std::domain_error);
    CHECK_THROWS_AS(iterate(p, 0.5, -1), std::invalid_argument);
    CHECK_THROWS_AS(detect_behavior(p, 0.5, 0, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(detect_behavior(p, 0.5, 10, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(verify_invariance(p, IntervalSet::whole(), 0), std::invalid_argument);
}
