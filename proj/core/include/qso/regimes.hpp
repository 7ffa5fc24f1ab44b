#pragma once

#include <optional>

#include "qso/interval_set.hpp"
#include "qso/map.hpp"

// Parameter regimes. Which coefficients differ from 1/2 decides which pieces
// act and which are the identity; that alone fixes the fixed-point set.

namespace qso {

enum class RegimeCase {
    Trivial,            // a = b = c = 1/2: f is the identity
    UniformNontrivial,  // a = b = c != 1/2: single smooth branch
    OnlyA,              // a != 1/2, b = c = 1/2
    OnlyB,              // b != 1/2, a = c = 1/2
    OnlyC,              // c != 1/2, a = b = 1/2
    ABnotC,             // a, b != 1/2, c = 1/2
    ACnotB,             // a, c != 1/2, b = 1/2
    BCnotA,             // b, c != 1/2, a = 1/2
    AllThree,           // a, b, c all != 1/2
};

/// Position of one coefficient relative to 1/2 (comparison is exact; 1/2 is
/// representable).
enum class CoefSide { Below, Half, Above };

struct Regime {
    RegimeCase kind;
    CoefSide a;
    CoefSide b;
    CoefSide c;
};

const char* to_string(RegimeCase kind) noexcept;
const char* to_string(CoefSide side) noexcept;

CoefSide side_of(double coefficient) noexcept;

/// Unique matching regime. Uniform cases (a == b == c) take precedence over
/// the per-coefficient split.
Regime classify(const Params& p) noexcept;

/// Closed-form fixed-point set of the regime.
IntervalSet fixed_point_set(const Params& p);

enum class StabilityClass { Attracting, Repelling, Indifferent };

const char* to_string(StabilityClass s) noexcept;

inline constexpr double kFixTolerance = 1e-12;    // |f(x*) - x*| bound for fixed points
inline constexpr double kIndifferentBand = 1e-9;  // band around |f'| = 1

/// Stability of the fixed point x* by |f'(x*)| against 1. `side` picks the
/// branch at a breakpoint. Throws std::domain_error when x* is not a fixed
/// point within kFixTolerance.
StabilityClass stability_of(const Params& p, double fixed_point,
                            std::optional<PieceId> side = std::nullopt);

}  // namespace qso
