#include "qso/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qso {

namespace {

constexpr double kBisectionWidth = 1e-13;
constexpr double kRootResidualTol = 1e-9;  // rejects sign changes across branch jumps
constexpr double kFixedPointTol = 1e-10;

double second_iterate_gap(const Params& p, double x) {
    return eval(p, eval(p, x)) - x;
}

struct SideSpec {
    PieceId first;    // piece holding x1 (the scanned piece)
    PieceId second;   // piece holding x2
};

SideSpec side_spec(CycleSide side) {
    if (side == CycleSide::Near13) return {PieceId::Left, PieceId::Middle};
    return {PieceId::Middle, PieceId::Right};
}

std::optional<TwoCycle> make_cycle(const Params& p, CycleSide side, double x1, double x2,
                                   double coef1, double coef2) {
    const SideSpec spec = side_spec(side);
    if (piece_of(x1) != spec.first || piece_of(x2) != spec.second) return std::nullopt;
    if (x1 == x2 || x1 <= 0.0 || x1 >= 1.0 || x2 <= 0.0 || x2 >= 1.0) return std::nullopt;

    TwoCycle c;
    c.x1 = x1;
    c.x2 = x2;
    c.a = coef1;
    c.b = coef2;
    c.side = side;
    c.multiplier = eval_branch_derivative(p, spec.first, x1) *
                   eval_branch_derivative(p, spec.second, x2);
    const auto [ra, rb] = params_from_orbit(x1, x2);
    c.valid = std::fabs(ra - coef1) <= kRoundTripTol && std::fabs(rb - coef2) <= kRoundTripTol;
    return c;
}

// Shared closed-form solver; the mirror case is the same algebra on the
// middle/right coefficient pair.
std::optional<TwoCycle> solve_closed_form(double coef1, double coef2, CycleSide side) {
    if (!(coef1 >= 0.0 && coef1 <= 1.0 && coef2 >= 0.0 && coef2 <= 1.0)) {
        throw std::domain_error("coefficients must lie in [0,1]");
    }
    const double t = (2.0 * coef1 - 1.0) * (2.0 * coef2 - 1.0);
    if (t >= 0.0) return std::nullopt;
    const double disc = t * (t - 4.0);
    const double root = std::sqrt(disc);
    const double head = (2.0 * coef1 - 1.0) * (2.0 * coef2 + 1.0);

    const Params p = side == CycleSide::Near13 ? Params(coef1, coef2, 0.5)
                                               : Params(0.5, coef1, coef2);
    const SideSpec spec = side_spec(side);
    for (double x2 : {(head - root) / (2.0 * t), (head + root) / (2.0 * t)}) {
        if (!(x2 > 0.0 && x2 < 1.0)) continue;
        if (piece_of(x2) != spec.second) continue;
        const double x1 = eval_branch(p, spec.second, x2);
        auto cycle = make_cycle(p, side, x1, x2, coef1, coef2);
        if (cycle) return cycle;
    }
    return std::nullopt;
}

}  // namespace

const char* to_string(CycleSide side) noexcept {
    return side == CycleSide::Near13 ? "Near13" : "Near23";
}

std::pair<double, double> params_from_orbit(double x1, double x2) {
    if (!(x1 > 0.0 && x1 < 1.0) || !(x2 > 0.0 && x2 < 1.0)) {
        throw std::domain_error("params_from_orbit: x1 and x2 must lie strictly in (0,1)");
    }
    if (x1 == x2) {
        throw std::domain_error("params_from_orbit: x1 == x2 is a fixed point, not a 2-cycle");
    }
    const double a = (x2 - x1 * x1) / (2.0 * x1 * (1.0 - x1));
    const double b = (x1 - x2 * x2) / (2.0 * x2 * (1.0 - x2));
    return {a, b};
}

bool validate_condition_pc(double x1, double x2) {
    static const double lower = 1.0 - std::sqrt(6.0) / 3.0;
    return lower < x1 && x1 < kOneThird && kOneThird < x2 && x2 < x1 * (2.0 - x1);
}

std::optional<TwoCycle> orbit_from_params(double a, double b) {
    return solve_closed_form(a, b, CycleSide::Near13);
}

std::optional<TwoCycle> orbit_from_params_mirror(double b, double c) {
    return solve_closed_form(b, c, CycleSide::Near23);
}

std::vector<TwoCycle> brute_force_two_cycles(const Params& p, CycleSide side,
                                             std::int64_t grid) {
    if (grid < 1000) throw std::invalid_argument("brute_force_two_cycles: grid must be >= 1000");
    const SideSpec spec = side_spec(side);

    // Node lattice over the scanned piece; the middle piece is open so its
    // nodes stay strictly inside.
    double lo, hi;
    std::vector<double> nodes(static_cast<std::size_t>(grid) + 1);
    if (side == CycleSide::Near13) {
        lo = 0.0;
        hi = kOneThird;
        for (std::int64_t i = 0; i <= grid; ++i) {
            nodes[static_cast<std::size_t>(i)] =
                lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid);
        }
    } else {
        lo = std::nextafter(kOneThird, 1.0);
        hi = std::nextafter(kTwoThirds, 0.0);
        for (std::int64_t i = 0; i <= grid; ++i) {
            double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid);
            nodes[static_cast<std::size_t>(i)] = std::clamp(x, lo, hi);
        }
    }

    const std::size_t n = nodes.size();
    std::vector<double> gap(n);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>({hw, 8, n});
    if (workers > 1) {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            pool.emplace_back([&, begin, end] {
                for (std::size_t i = begin; i < end; ++i) gap[i] = second_iterate_gap(p, nodes[i]);
            });
        }
        for (auto& th : pool) th.join();
    } else {
        for (std::size_t i = 0; i < n; ++i) gap[i] = second_iterate_gap(p, nodes[i]);
    }

    std::vector<double> roots;
    auto consider = [&](double r) {
        if (std::fabs(second_iterate_gap(p, r)) > kRootResidualTol) return;
        if (std::fabs(eval(p, r) - r) <= kFixedPointTol) return;
        roots.push_back(r);
    };
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (gap[i] == 0.0) consider(nodes[i]);
        if (gap[i] * gap[i + 1] < 0.0) {
            double a = nodes[i], b = nodes[i + 1];
            double fa = gap[i];
            while (b - a > kBisectionWidth) {
                const double m = a + (b - a) / 2.0;
                if (m == a || m == b) break;
                const double fm = second_iterate_gap(p, m);
                if (fm == 0.0) {
                    a = b = m;
                    break;
                }
                if ((fa < 0.0) == (fm < 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            consider(a + (b - a) / 2.0);
        }
    }
    if (!gap.empty() && gap.back() == 0.0) consider(nodes.back());

    std::sort(roots.begin(), roots.end());
    std::vector<TwoCycle> cycles;
    for (double r : roots) {
        if (!cycles.empty() && std::fabs(r - cycles.back().x1) <= 1e-9) continue;
        const double image = eval(p, r);
        const double coef1 = p.coefficient(spec.first);
        const double coef2 = p.coefficient(spec.second);
        auto cycle = make_cycle(p, side, r, image, coef1, coef2);
        if (cycle) cycles.push_back(*cycle);
    }
    return cycles;
}

}  // namespace qso
