#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qso/map.hpp"

// 2-periodic orbits straddling a breakpoint. A cycle {x1, x2} with x1 on the
// left piece and x2 on the middle piece solves
//
//   (1-2a)x1^2 + 2a x1 = x2,   (1-2b)x2^2 + 2b x2 = x1.
//
// Eliminating x1 gives a quartic in x2 whose roots 0 and 1 are fixed points;
// the remaining quadratic has discriminant proportional to D = t(t-4) with
// t = (2a-1)(2b-1), so real non-degenerate cycles require t < 0, and
//
//   x2 = ((2a-1)(2b+1) - sqrt(D)) / (2t),   x1 = f_b(x2).
//
// Inverting instead for the coefficients:
//
//   a = (x2 - x1^2) / (2 x1 (1-x1)),   b = (x1 - x2^2) / (2 x2 (1-x2)).
//
// The mirrored construction around 2/3 uses the same algebra with (b, c) and
// x1 on the middle piece, x2 on the right piece.

namespace qso {

enum class CycleSide { Near13, Near23 };

const char* to_string(CycleSide side) noexcept;

/// A 2-periodic orbit. `a` and `b` are the coefficients of the pieces holding
/// x1 and x2: the actual (a, b) of the map for Near13, (b, c) for Near23.
struct TwoCycle {
    double x1;
    double x2;
    double a;
    double b;
    double multiplier;  // f'(x1) * f'(x2), branch derivatives
    bool valid;         // params_from_orbit round trip within 1e-9
    CycleSide side;
};

inline constexpr double kCycleResidualTol = 1e-10;
inline constexpr double kRoundTripTol = 1e-9;

/// Unique coefficients making {x1, x2} a 2-cycle. No range check on the
/// result. Throws std::domain_error when x1 or x2 is outside (0,1) or
/// x1 == x2.
std::pair<double, double> params_from_orbit(double x1, double x2);

/// Existence window for cycles straddling 1/3:
/// 1 - sqrt(6)/3 < x1 < 1/3 and 1/3 < x2 < x1(2 - x1).
bool validate_condition_pc(double x1, double x2);

/// Closed-form cycle straddling 1/3 for coefficients (a, b), or nullopt when
/// t >= 0 or the recovered points violate piece membership.
std::optional<TwoCycle> orbit_from_params(double a, double b);

/// Mirrored cycle straddling 2/3 for middle/right coefficients (b, c). The
/// admissibility window has no closed form here; absence is reported as
/// nullopt.
std::optional<TwoCycle> orbit_from_params_mirror(double b, double c);

/// Independent oracle: scans the starting piece on a uniform grid, isolates
/// sign changes of f(f(x)) - x, refines each by bisection to 1e-13, discards
/// fixed points and jump artifacts, and returns the distinct 2-cycles found.
/// Requires grid >= 1000.
std::vector<TwoCycle> brute_force_two_cycles(const Params& p, CycleSide side,
                                             std::int64_t grid);

}  // namespace qso
