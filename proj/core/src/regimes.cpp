#include "qso/regimes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qso {

const char* to_string(RegimeCase kind) noexcept {
    switch (kind) {
        case RegimeCase::Trivial: return "Trivial";
        case RegimeCase::UniformNontrivial: return "UniformNontrivial";
        case RegimeCase::OnlyA: return "OnlyA";
        case RegimeCase::OnlyB: return "OnlyB";
        case RegimeCase::OnlyC: return "OnlyC";
        case RegimeCase::ABnotC: return "ABnotC";
        case RegimeCase::ACnotB: return "ACnotB";
        case RegimeCase::BCnotA: return "BCnotA";
        case RegimeCase::AllThree: return "AllThree";
    }
    return "?";
}

const char* to_string(CoefSide side) noexcept {
    switch (side) {
        case CoefSide::Below: return "<1/2";
        case CoefSide::Half: return "=1/2";
        case CoefSide::Above: return ">1/2";
    }
    return "?";
}

CoefSide side_of(double coefficient) noexcept {
    if (coefficient == 0.5) return CoefSide::Half;
    return coefficient < 0.5 ? CoefSide::Below : CoefSide::Above;
}

Regime classify(const Params& p) noexcept {
    Regime r{RegimeCase::Trivial, side_of(p.a()), side_of(p.b()), side_of(p.c())};
    const bool da = r.a != CoefSide::Half;
    const bool db = r.b != CoefSide::Half;
    const bool dc = r.c != CoefSide::Half;

    if (p.a() == p.b() && p.b() == p.c()) {
        r.kind = da ? RegimeCase::UniformNontrivial : RegimeCase::Trivial;
        return r;
    }
    if (da && db && dc) {
        r.kind = RegimeCase::AllThree;
    } else if (da && db) {
        r.kind = RegimeCase::ABnotC;
    } else if (da && dc) {
        r.kind = RegimeCase::ACnotB;
    } else if (db && dc) {
        r.kind = RegimeCase::BCnotA;
    } else if (da) {
        r.kind = RegimeCase::OnlyA;
    } else if (db) {
        r.kind = RegimeCase::OnlyB;
    } else if (dc) {
        r.kind = RegimeCase::OnlyC;
    } else {
        r.kind = RegimeCase::Trivial;
    }
    return r;
}

IntervalSet fixed_point_set(const Params& p) {
    IntervalSet s;
    switch (classify(p).kind) {
        case RegimeCase::Trivial:
            s.add_interval(0.0, 1.0, true, true);
            break;
        case RegimeCase::UniformNontrivial:
        case RegimeCase::AllThree:
            s.add_point(0.0).add_point(1.0);
            break;
        case RegimeCase::OnlyA:
            s.add_point(0.0).add_interval(kOneThird, 1.0, false, true);
            break;
        case RegimeCase::OnlyB:
            s.add_interval(0.0, kOneThird, true, true)
                .add_interval(kTwoThirds, 1.0, true, true);
            break;
        case RegimeCase::OnlyC:
            s.add_interval(0.0, kTwoThirds, true, false).add_point(1.0);
            break;
        case RegimeCase::ABnotC:
            s.add_point(0.0).add_interval(kTwoThirds, 1.0, true, true);
            break;
        case RegimeCase::ACnotB:
            s.add_point(0.0)
                .add_interval(kOneThird, kTwoThirds, false, false)
                .add_point(1.0);
            break;
        case RegimeCase::BCnotA:
            s.add_interval(0.0, kOneThird, true, true).add_point(1.0);
            break;
    }
    return s;
}

const char* to_string(StabilityClass s) noexcept {
    switch (s) {
        case StabilityClass::Attracting: return "attracting";
        case StabilityClass::Repelling: return "repelling";
        case StabilityClass::Indifferent: return "indifferent";
    }
    return "?";
}

StabilityClass stability_of(const Params& p, double fixed_point,
                            std::optional<PieceId> side) {
    const double image = side ? eval_branch(p, *side, fixed_point) : eval(p, fixed_point);
    if (!(std::fabs(image - fixed_point) <= kFixTolerance)) {
        throw std::domain_error("stability_of: " + std::to_string(fixed_point) +
                                " is not a fixed point");
    }
    const double d = side ? eval_branch_derivative(p, *side, fixed_point)
                          : eval_derivative(p, fixed_point);
    const double mag = std::fabs(d);
    if (std::fabs(mag - 1.0) <= kIndifferentBand) return StabilityClass::Indifferent;
    return mag < 1.0 ? StabilityClass::Attracting : StabilityClass::Repelling;
}

}  // namespace qso
