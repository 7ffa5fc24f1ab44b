#pragma once

#include <optional>

// Piecewise quadratic map of the unit interval,
//
//   f(x) = (1-2k)x^2 + 2kx,  with  k = a on [0,1/3], b on (1/3,2/3), c on [2/3,1],
//
// together with its two-species simplex lift
//
//   x' = x^2 + 2 p(x) x y,   y' = 2 (1 - p(x)) x y + y^2,   x + y = 1.
//
// Every branch is strictly increasing on [0,1], fixes 0 and 1, and is the
// identity when its coefficient equals 1/2.

namespace qso {

// Breakpoints are stored once as the nearest doubles; every piece comparison
// and every breakpoint-image computation uses these exact constants.
inline constexpr double kOneThird = 1.0 / 3.0;
inline constexpr double kTwoThirds = 2.0 / 3.0;

enum class PieceId { Left, Middle, Right };

const char* to_string(PieceId piece) noexcept;

/// Coefficient triple (a, b, c), each in [0,1]. Construction rejects
/// out-of-range and NaN values.
class Params {
public:
    Params(double a, double b, double c);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }

    double coefficient(PieceId piece) const noexcept;

private:
    double a_;
    double b_;
    double c_;
};

/// Point of the 1-simplex {(x, 1-x)}. Only x is stored; y is always the
/// floating-point complement, so x + y == 1 holds bit-exactly.
class SimplexPoint {
public:
    explicit SimplexPoint(double x);

    /// Construction from both coordinates; requires x, y >= 0 and x + y == 1.
    static SimplexPoint from_xy(double x, double y);

    double x() const noexcept { return x_; }
    double y() const noexcept { return 1.0 - x_; }

private:
    double x_;
};

/// Piece containing x: Left iff x <= 1/3, Middle iff 1/3 < x < 2/3,
/// Right iff x >= 2/3. Throws std::domain_error for x outside [0,1] or NaN.
PieceId piece_of(double x);

/// f(x) with the branch selected by piece_of(x). Result clamped to [0,1].
double eval(const Params& p, double x);

/// Branch polynomial of an explicit piece, evaluated anywhere on [0,1].
/// Needed for one-sided values at the breakpoints.
double eval_branch(const Params& p, PieceId piece, double x);

/// f'(x) = 2(1-2k)x + 2k for the branch selected by piece_of(x).
double eval_derivative(const Params& p, double x);

/// One-sided branch derivative at an explicit piece.
double eval_branch_derivative(const Params& p, PieceId piece, double x);

/// One step of the simplex operator. The first coordinate is computed via
/// eval, the second as its complement, so the reduced and lifted views agree
/// bit-for-bit.
SimplexPoint qso_step(const Params& p, SimplexPoint z);

}  // namespace qso
