#include "qso/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace qso {

namespace {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

IntervalSet IntervalSet::point(double v) {
    IntervalSet s;
    s.add_point(v);
    return s;
}

IntervalSet IntervalSet::interval(double lo, double hi, bool closed_lo, bool closed_hi) {
    IntervalSet s;
    s.add_interval(lo, hi, closed_lo, closed_hi);
    return s;
}

IntervalSet IntervalSet::closed(double lo, double hi) {
    return interval(lo, hi, true, true);
}

IntervalSet& IntervalSet::add_point(double v) {
    if (std::isnan(v)) throw std::invalid_argument("IntervalSet: NaN point");
    insert(Component{v, v, true, true});
    return *this;
}

IntervalSet& IntervalSet::add_interval(double lo, double hi, bool closed_lo, bool closed_hi) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
        throw std::invalid_argument("IntervalSet: invalid interval endpoints");
    }
    if (lo == hi) {
        if (!closed_lo || !closed_hi) {
            throw std::invalid_argument("IntervalSet: degenerate open interval");
        }
        return add_point(lo);
    }
    insert(Component{lo, hi, closed_lo, closed_hi});
    return *this;
}

void IntervalSet::insert(Component c) {
    auto pos = std::lower_bound(components_.begin(), components_.end(), c,
                                [](const Component& u, const Component& v) { return u.lo < v.lo; });
    // Disjointness against neighbours. Touching endpoints are fine as long as
    // at most one side is closed there.
    if (pos != components_.begin()) {
        const Component& prev = *(pos - 1);
        if (prev.hi > c.lo || (prev.hi == c.lo && prev.closed_hi && c.closed_lo)) {
            throw std::invalid_argument("IntervalSet: overlapping components");
        }
    }
    if (pos != components_.end()) {
        const Component& next = *pos;
        if (c.hi > next.lo || (c.hi == next.lo && c.closed_hi && next.closed_lo)) {
            throw std::invalid_argument("IntervalSet: overlapping components");
        }
    }
    components_.insert(pos, c);
}

bool IntervalSet::contains(double x) const noexcept {
    for (const Component& c : components_) {
        if (x < c.lo) return false;
        if (x > c.hi) continue;
        if (x == c.lo && !c.closed_lo) continue;
        if (x == c.hi && !c.closed_hi) continue;
        return true;
    }
    return false;
}

double IntervalSet::distance_to(double x) const noexcept {
    double best = std::numeric_limits<double>::infinity();
    for (const Component& c : components_) {
        double d;
        if (x < c.lo) {
            d = c.lo - x;
        } else if (x > c.hi) {
            d = x - c.hi;
        } else {
            d = 0.0;
        }
        best = std::min(best, d);
    }
    return best;
}

std::string IntervalSet::text() const {
    if (components_.empty()) return "∅";
    std::string out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const Component& c = components_[i];
        if (i > 0) out += " ∪ ";
        if (c.is_point()) {
            out += "{" + format_number(c.lo) + "}";
        } else {
            out += c.closed_lo ? "[" : "(";
            out += format_number(c.lo) + "," + format_number(c.hi);
            out += c.closed_hi ? "]" : ")";
        }
    }
    return out;
}

}  // namespace qso
