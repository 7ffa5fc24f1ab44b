#include "qso/map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qso {

namespace {

void require_unit_interval(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) {  // also rejects NaN
        throw std::domain_error(std::string(what) + " must lie in [0,1], got " +
                                std::to_string(x));
    }
}

void require_coefficient(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0,1], got " +
                                    std::to_string(v));
    }
}

}  // namespace

const char* to_string(PieceId piece) noexcept {
    switch (piece) {
        case PieceId::Left: return "Left";
        case PieceId::Middle: return "Middle";
        case PieceId::Right: return "Right";
    }
    return "?";
}

Params::Params(double a, double b, double c) : a_(a), b_(b), c_(c) {
    require_coefficient(a, "coefficient a");
    require_coefficient(b, "coefficient b");
    require_coefficient(c, "coefficient c");
}

double Params::coefficient(PieceId piece) const noexcept {
    switch (piece) {
        case PieceId::Left: return a_;
        case PieceId::Middle: return b_;
        case PieceId::Right: return c_;
    }
    return a_;
}

SimplexPoint::SimplexPoint(double x) : x_(x) {
    require_unit_interval(x, "simplex coordinate x");
}

SimplexPoint SimplexPoint::from_xy(double x, double y) {
    if (!(x >= 0.0) || !(y >= 0.0) || x + y != 1.0) {
        throw std::domain_error("simplex point requires x, y >= 0 and x + y == 1");
    }
    return SimplexPoint(x);
}

PieceId piece_of(double x) {
    require_unit_interval(x, "x");
    if (x <= kOneThird) return PieceId::Left;
    if (x >= kTwoThirds) return PieceId::Right;
    return PieceId::Middle;
}

double eval_branch(const Params& p, PieceId piece, double x) {
    require_unit_interval(x, "x");
    const double k = p.coefficient(piece);
    double y;
    if (k <= 0.5) {
        // x * ((1-2k)x + 2k): both factors nonnegative and nondecreasing in x,
        // so the rounded result is nondecreasing too; exact at 0, 1, and for
        // the identity branch k = 1/2.
        y = x * ((1.0 - 2.0 * k) * x + 2.0 * k);
    } else {
        // Complement form 1 - (1-x)(1 - (2k-1)x): both factors nonnegative and
        // nonincreasing in x. 2k-1 is exact by Sterbenz for k in (1/2,1].
        y = 1.0 - (1.0 - x) * (1.0 - (2.0 * k - 1.0) * x);
    }
    return std::clamp(y, 0.0, 1.0);
}

double eval(const Params& p, double x) {
    return eval_branch(p, piece_of(x), x);
}

double eval_branch_derivative(const Params& p, PieceId piece, double x) {
    require_unit_interval(x, "x");
    const double k = p.coefficient(piece);
    return 2.0 * (1.0 - 2.0 * k) * x + 2.0 * k;
}

double eval_derivative(const Params& p, double x) {
    return eval_branch_derivative(p, piece_of(x), x);
}

SimplexPoint qso_step(const Params& p, SimplexPoint z) {
    return SimplexPoint(eval(p, z.x()));
}

}  // namespace qso
