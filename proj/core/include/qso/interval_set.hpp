#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qso {

/// Finite union of pairwise disjoint components on [0,1], kept sorted:
/// isolated points and intervals with individually open or closed endpoints.
/// Degenerate intervals (lo == hi) are stored as points.
class IntervalSet {
public:
    struct Component {
        double lo;
        double hi;
        bool closed_lo;
        bool closed_hi;

        bool is_point() const noexcept { return lo == hi; }
        double length() const noexcept { return hi - lo; }
    };

    IntervalSet() = default;

    static IntervalSet point(double v);
    static IntervalSet interval(double lo, double hi, bool closed_lo, bool closed_hi);
    static IntervalSet closed(double lo, double hi);
    static IntervalSet whole() { return closed(0.0, 1.0); }

    IntervalSet& add_point(double v);
    IntervalSet& add_interval(double lo, double hi, bool closed_lo, bool closed_hi);

    bool contains(double x) const noexcept;

    /// Distance from x to the component hulls; 0 when x is inside or sits on
    /// an open endpoint (outside but at zero distance).
    double distance_to(double x) const noexcept;

    bool empty() const noexcept { return components_.empty(); }
    std::size_t size() const noexcept { return components_.size(); }
    const std::vector<Component>& components() const noexcept { return components_; }

    /// Canonical rendering, e.g. "{0} ∪ (0.333333,1]".
    std::string text() const;

private:
    void insert(Component c);

    std::vector<Component> components_;
};

}  // namespace qso
