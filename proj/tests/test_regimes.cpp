#include <cmath>
#include <random>

#include <stdexcept>

#include "doctest.h"
#include "qso/map.hpp"
#include "qso/regimes.hpp"

using namespace qso;

namespace {

double uniform(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * ((g() >> 11) * 0x1.0p-53);
}

// Independent restatement of the case table, for the partition property.
RegimeCase expected_case(double a, double b, double c) {
    if (a == b && b == c) return a == 0.5 ? RegimeCase::Trivial : RegimeCase::UniformNontrivial;
    const bool da = a != 0.5, db = b != 0.5, dc = c != 0.5;
    if (da && db && dc) return RegimeCase::AllThree;
    if (da && db) return RegimeCase::ABnotC;
    if (da && dc) return RegimeCase::ACnotB;
    if (db && dc) return RegimeCase::BCnotA;
    if (da) return RegimeCase::OnlyA;
    if (db) return RegimeCase::OnlyB;
    if (dc) return RegimeCase::OnlyC;
    return RegimeCase::Trivial;
}

}  // namespace

TEST_CASE("classification examples") {
    CHECK(classify(Params(0.5, 0.5, 0.5)).kind == RegimeCase::Trivial);
    CHECK(classify(Params(0.9, 0.5, 0.5)).kind == RegimeCase::OnlyA);
    CHECK(classify(Params(0.3, 0.7, 0.2)).kind == RegimeCase::AllThree);
    CHECK(classify(Params(0.3, 0.3, 0.3)).kind == RegimeCase::UniformNontrivial);
    CHECK(classify(Params(0.5, 0.8, 0.5)).kind == RegimeCase::OnlyB);
    CHECK(classify(Params(0.5, 0.5, 0.1)).kind == RegimeCase::OnlyC);
    CHECK(classify(Params(0.9, 0.2, 0.5)).kind == RegimeCase::ABnotC);
    CHECK(classify(Params(0.9, 0.5, 0.2)).kind == RegimeCase::ACnotB);
    CHECK(classify(Params(0.5, 0.9, 0.2)).kind == RegimeCase::BCnotA);

    const Regime r = classify(Params(0.9, 0.2, 0.5));
    CHECK(r.a == CoefSide::Above);
    CHECK(r.b == CoefSide::Below);
    CHECK(r.c == CoefSide::Half);
}

TEST_CASE("classification partitions a grid containing 1/2") {
    // 51 values per axis includes 0, 1/2 and 1 exactly
    for (int i = 0; i <= 50; ++i) {
        for (int j = 0; j <= 50; ++j) {
            for (int k = 0; k <= 50; ++k) {
                const double a = i / 50.0, b = j / 50.0, c = k / 50.0;
                CHECK(classify(Params(a, b, c)).kind == expected_case(a, b, c));
            }
        }
    }
}

TEST_CASE("fixed-point sets per regime") {
    // OnlyB
    {
        const IntervalSet s = fixed_point_set(Params(0.5, 0.8, 0.5));
        REQUIRE(s.size() == 2);
        CHECK(s.components()[0].lo == 0.0);
        CHECK(s.components()[0].hi == kOneThird);
        CHECK(s.components()[0].closed_hi);
        CHECK(s.components()[1].lo == kTwoThirds);
        CHECK(s.components()[1].closed_lo);
    }
    // AllThree
    {
        const IntervalSet s = fixed_point_set(Params(0.1, 0.9, 0.2));
        REQUIRE(s.size() == 2);
        CHECK(s.components()[0].is_point());
        CHECK(s.components()[0].lo == 0.0);
        CHECK(s.components()[1].is_point());
        CHECK(s.components()[1].lo == 1.0);
    }
    // Trivial
    {
        const IntervalSet s = fixed_point_set(Params(0.5, 0.5, 0.5));
        REQUIRE(s.size() == 1);
        CHECK(s.components()[0].lo == 0.0);
        CHECK(s.components()[0].hi == 1.0);
    }
    // OnlyA keeps the half-open boundary at 1/3
    {
        const IntervalSet s = fixed_point_set(Params(0.9, 0.5, 0.5));
        CHECK_FALSE(s.contains(kOneThird));
        CHECK(s.contains(std::nextafter(kOneThird, 1.0)));
        CHECK(s.contains(1.0));
        CHECK(s.contains(0.0));
    }
    // OnlyC is open at 2/3 even though OnlyB is closed there
    {
        const IntervalSet s = fixed_point_set(Params(0.5, 0.5, 0.9));
        CHECK(s.contains(std::nextafter(kTwoThirds, 0.0)));
        CHECK_FALSE(s.contains(kTwoThirds));
        CHECK(s.contains(1.0));
    }
    // ACnotB: middle identity interval is open on both sides
    {
        const IntervalSet s = fixed_point_set(Params(0.9, 0.5, 0.2));
        REQUIRE(s.size() == 3);
        CHECK_FALSE(s.contains(kOneThird));
        CHECK(s.contains(0.5));
        CHECK_FALSE(s.contains(kTwoThirds));
    }
}

TEST_CASE("fixed-point sets are sound: members fixed, non-members not") {
    std::mt19937_64 g(101);
    const double delta = 0.01;
    auto draw_free = [&](bool below) {
        return below ? uniform(g, 0.0, 0.5 - delta) : uniform(g, 0.5 + delta, 1.0);
    };
    for (int trial = 0; trial < 60; ++trial) {
        double coef[3] = {0.5, 0.5, 0.5};
        for (int i = 0; i < 3; ++i) {
            const int mode = static_cast<int>(g() % 3);
            if (mode == 0) coef[i] = 0.5;
            else coef[i] = draw_free(mode == 1);
        }
        const Params p(coef[0], coef[1], coef[2]);
        const IntervalSet fix = fixed_point_set(p);
        // members are exactly fixed
        for (const auto& c : fix.components()) {
            if (c.is_point()) {
                CHECK(eval(p, c.lo) == c.lo);
                continue;
            }
            for (int i = 0; i <= 40; ++i) {
                double x = c.lo + (c.hi - c.lo) * i / 40.0;
                if (x == c.lo && !c.closed_lo) x = std::nextafter(x, c.hi);
                if (x == c.hi && !c.closed_hi) x = std::nextafter(x, c.lo);
                CHECK(eval(p, x) == x);
            }
        }
        // complement points move (sampled away from breakpoints)
        for (int i = 0; i < 400; ++i) {
            const double x = uniform(g, 1e-9, 1.0 - 1e-9);
            if (fix.contains(x)) continue;
            if (std::fabs(x - kOneThird) < 1e-6 || std::fabs(x - kTwoThirds) < 1e-6) continue;
            CHECK(eval(p, x) != x);
        }
    }
}

TEST_CASE("stability of isolated fixed points") {
    const Params low(0.3, 0.3, 0.3);
    CHECK(stability_of(low, 0.0) == StabilityClass::Attracting);
    CHECK(stability_of(low, 1.0) == StabilityClass::Repelling);

    const Params high(0.8, 0.8, 0.8);
    CHECK(stability_of(high, 0.0) == StabilityClass::Repelling);
    CHECK(stability_of(high, 1.0) == StabilityClass::Attracting);

    const Params id(0.5, 0.5, 0.5);
    CHECK(stability_of(id, 0.4) == StabilityClass::Indifferent);

    CHECK_THROWS_AS(stability_of(low, 0.5), std::domain_error);
}

TEST_CASE("stability can be asked per branch at a breakpoint") {
    // OnlyA with a > 1/2: at 1/3 the left branch moves points, the middle
    // branch is the identity.
    const Params p(0.9, 0.5, 0.5);
    const double x = std::nextafter(kOneThird, 1.0);  // fixed (identity piece)
    CHECK(stability_of(p, x) == StabilityClass::Indifferent);
    CHECK(stability_of(p, x, PieceId::Middle) == StabilityClass::Indifferent);
}
