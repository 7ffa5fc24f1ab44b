#include <cmath>
#include <random>

#include <stdexcept>

#include "doctest.h"
#include "qso/map.hpp"

using namespace qso;

namespace {

double uniform(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * ((g() >> 11) * 0x1.0p-53);
}

// Reference form of the branch polynomial, used as an independent route.
double branch_reference(double k, double x) {
    return (1.0 - 2.0 * k) * x * x + 2.0 * k * x;
}

}  // namespace

TEST_CASE("piece_of splits [0,1] at the stored breakpoints") {
    CHECK(piece_of(0.0) == PieceId::Left);
    CHECK(piece_of(0.5) == PieceId::Middle);
    CHECK(piece_of(1.0) == PieceId::Right);

    CHECK(piece_of(kOneThird) == PieceId::Left);
    CHECK(piece_of(std::nextafter(kOneThird, 1.0)) == PieceId::Middle);
    CHECK(piece_of(kTwoThirds) == PieceId::Right);
    CHECK(piece_of(std::nextafter(kTwoThirds, 0.0)) == PieceId::Middle);

    CHECK_THROWS_AS(piece_of(-0.1), std::domain_error);
    CHECK_THROWS_AS(piece_of(1.1), std::domain_error);
    CHECK_THROWS_AS(piece_of(std::nan("")), std::domain_error);
}

TEST_CASE("every x maps to exactly one piece") {
    std::mt19937_64 g(7);
    for (int i = 0; i < 10000; ++i) {
        const double x = uniform(g, 0.0, 1.0);
        const PieceId p = piece_of(x);
        const bool left = x <= kOneThird;
        const bool right = x >= kTwoThirds;
        if (left) CHECK(p == PieceId::Left);
        else if (right) CHECK(p == PieceId::Right);
        else CHECK(p == PieceId::Middle);
    }
}

TEST_CASE("Params rejects out-of-range coefficients") {
    CHECK_THROWS_AS(Params(-0.1, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Params(0.5, 1.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Params(0.5, 0.5, std::nan("")), std::invalid_argument);
    const Params p(0.0, 0.5, 1.0);
    CHECK(p.coefficient(PieceId::Left) == 0.0);
    CHECK(p.coefficient(PieceId::Middle) == 0.5);
    CHECK(p.coefficient(PieceId::Right) == 1.0);
}

TEST_CASE("eval is the identity when all coefficients are 1/2") {
    const Params p(0.5, 0.5, 0.5);
    CHECK(eval(p, 0.4) == 0.4);
    std::mt19937_64 g(11);
    for (int i = 0; i < 5000; ++i) {
        const double x = uniform(g, 0.0, 1.0);
        CHECK(eval(p, x) == x);
    }
}

TEST_CASE("endpoints are fixed under every branch") {
    std::mt19937_64 g(13);
    for (int i = 0; i < 500; ++i) {
        const Params p(uniform(g, 0, 1), uniform(g, 0, 1), uniform(g, 0, 1));
        CHECK(eval(p, 0.0) == 0.0);
        CHECK(eval(p, 1.0) == 1.0);
    }
}

TEST_CASE("left branch attains (1+4a)/9 at the breakpoint") {
    // direct arithmetic: a=1 gives (1+4)/9 = 5/9
    const Params p(1.0, 0.5, 0.5);
    CHECK(piece_of(kOneThird) == PieceId::Left);
    CHECK(std::fabs(eval(p, kOneThird) - 5.0 / 9.0) <= 1e-15);

    std::mt19937_64 g(17);
    for (int i = 0; i < 200; ++i) {
        const double a = uniform(g, 0, 1);
        const Params q(a, 0.5, 0.5);
        const double bound = (1.0 + 4.0 * a) / 9.0;
        CHECK(std::fabs(eval_branch(q, PieceId::Left, kOneThird) - bound) <= 1e-15);
        // branch range on [0, 1/3]
        for (int j = 0; j <= 50; ++j) {
            const double x = kOneThird * j / 50.0;
            const double y = eval_branch(q, PieceId::Left, x);
            CHECK(y >= 0.0);
            CHECK(y <= bound + 1e-15);
        }
    }
}

TEST_CASE("eval agrees with the reference polynomial form") {
    std::mt19937_64 g(19);
    for (int i = 0; i < 20000; ++i) {
        const double k = uniform(g, 0, 1);
        const double x = uniform(g, 0, 1);
        const Params p(k, k, k);
        CHECK(eval(p, x) == doctest::Approx(branch_reference(k, x)).epsilon(1e-14));
    }
}

TEST_CASE("each branch is monotone on [0,1]") {
    std::mt19937_64 g(23);
    for (int trial = 0; trial < 40; ++trial) {
        const double k = uniform(g, 0, 1);
        const Params p(k, k, k);
        double prev = eval_branch(p, PieceId::Left, 0.0);
        for (int i = 1; i <= 2000; ++i) {
            const double x = static_cast<double>(i) / 2000.0;
            const double y = eval_branch(p, PieceId::Left, x);
            CHECK(y >= prev);  // weak in floating point
            prev = y;
        }
        // strict increase over spaced samples (derivative positive on [0,1))
        for (int i = 0; i < 100; ++i) {
            const double x = uniform(g, 0.0, 0.99);
            CHECK(eval_branch(p, PieceId::Left, x + 1e-3) > eval_branch(p, PieceId::Left, x));
        }
    }
}

TEST_CASE("derivative examples") {
    CHECK(eval_derivative(Params(0.2, 0.5, 0.5), 0.0) == doctest::Approx(0.4).epsilon(1e-12));
    const Params id(0.5, 0.5, 0.5);
    CHECK(eval_derivative(id, 0.123) == 1.0);
    CHECK(eval_derivative(id, 0.9) == 1.0);
    CHECK(eval_derivative(Params(0.5, 0.5, 0.8), 1.0) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("derivative matches central differences of eval") {
    std::mt19937_64 g(29);
    const double h = 1e-7;
    for (int i = 0; i < 2000; ++i) {
        const Params p(uniform(g, 0, 1), uniform(g, 0, 1), uniform(g, 0, 1));
        // interior samples at least 1e-3 from the breakpoints and endpoints
        double x = uniform(g, 1e-3, 1.0 - 1e-3);
        if (std::fabs(x - kOneThird) < 1e-3 || std::fabs(x - kTwoThirds) < 1e-3) continue;
        const double fd = (eval(p, x + h) - eval(p, x - h)) / (2.0 * h);
        const double d = eval_derivative(p, x);
        CHECK(std::fabs(fd - d) <= 1e-6 * std::max(1.0, std::fabs(d)));
    }
}

TEST_CASE("one-sided branch values at the breakpoints") {
    const Params p(0.9, 0.1, 0.5);
    // the two adjacent branches genuinely disagree at 1/3
    const double from_left = eval_branch(p, PieceId::Left, kOneThird);
    const double from_middle = eval_branch(p, PieceId::Middle, kOneThird);
    CHECK(from_left > from_middle);
    CHECK(eval(p, kOneThird) == from_left);
    CHECK(eval_branch_derivative(p, PieceId::Left, kOneThird) !=
          eval_branch_derivative(p, PieceId::Middle, kOneThird));
}

TEST_CASE("SimplexPoint stores the complement exactly") {
    const SimplexPoint z(0.3);
    CHECK(z.x() == 0.3);
    CHECK(z.y() == 1.0 - 0.3);
    CHECK_THROWS_AS(SimplexPoint(1.2), std::domain_error);
    CHECK_THROWS_AS(SimplexPoint::from_xy(0.5, 0.4), std::domain_error);
    const SimplexPoint w = SimplexPoint::from_xy(0.25, 0.75);
    CHECK(w.x() == 0.25);
}

TEST_CASE("qso_step fixes the vertices and matches eval bit-for-bit") {
    std::mt19937_64 g(31);
    const Params id(0.5, 0.5, 0.5);
    CHECK(qso_step(id, SimplexPoint(0.3)).x() == 0.3);
    for (int i = 0; i < 20000; ++i) {
        const Params p(uniform(g, 0, 1), uniform(g, 0, 1), uniform(g, 0, 1));
        CHECK(qso_step(p, SimplexPoint(1.0)).x() == 1.0);
        CHECK(qso_step(p, SimplexPoint(0.0)).x() == 0.0);
        const double x = uniform(g, 0, 1);
        const SimplexPoint next = qso_step(p, SimplexPoint(x));
        CHECK(next.x() == eval(p, x));            // reduction consistency
        CHECK(next.x() + next.y() == 1.0);        // simplex preservation
        CHECK(next.x() >= 0.0);
        CHECK(next.x() <= 1.0);
    }
}

TEST_CASE("qso_step with a = 0 squares left-piece points") {
    // direct substitution in the lifted operator: x' = x^2 when p(x) = 0
    const Params p(0.0, 0.5, 0.5);
    const SimplexPoint next = qso_step(p, SimplexPoint(0.2));
    CHECK(next.x() == 0.2 * 0.2);  // identical rounding to direct squaring
    CHECK(next.x() == doctest::Approx(0.04).epsilon(1e-15));
    CHECK(next.y() == doctest::Approx(0.96).epsilon(1e-15));
}
