#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "concord/rational.hpp"

namespace concord {

// Piecewise linear function on [0,2] with exact rational breakpoints.
//
// Canonical form: first breakpoint at t=0, last at t=2, strictly increasing
// t values, no collinear interior breakpoint. Equality is syntactic on the
// canonical form. Values are immutable after construction.
class PLFunction {
public:
    struct Point {
        Rational t;
        Rational value;
        bool operator==(const Point& o) const { return t == o.t && value == o.value; }
    };

    // The zero function.
    PLFunction();

    // slope*t + intercept on all of [0,2].
    static PLFunction line(const Rational& slope, const Rational& intercept);

    // Validates domain and monotone t values, then canonicalizes.
    static PLFunction from_points(std::vector<Point> points);

    const std::vector<Point>& breakpoints() const { return points_; }

    // Exact evaluation; OutOfDomain outside [0,2].
    Rational operator()(const Rational& t) const;

    bool operator==(const PLFunction& o) const { return points_ == o.points_; }
    bool operator!=(const PLFunction& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::vector<Point> points_;
    void canonicalize();
};

PLFunction plf_add(const PLFunction& f, const PLFunction& g);
PLFunction plf_negate(const PLFunction& f);

// Pointwise maximum with exact rational crossing breakpoints.
PLFunction plf_max(const std::vector<PLFunction>& fs);
PLFunction plf_max(const PLFunction& f, const PLFunction& g);

// Slope at an interior point t in (0,2); nullopt at a breakpoint, OutOfDomain
// for t outside the open interval.
std::optional<Rational> plf_slope_at(const PLFunction& f, const Rational& t);

// Slopes of all linear pieces meeting the open interval (a,b).
std::set<Rational> plf_slopes_on(const PLFunction& f, const Rational& a, const Rational& b);

}  // namespace concord
