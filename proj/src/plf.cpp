#include "concord/plf.hpp"

#include <algorithm>
#include <sstream>

namespace concord {

namespace {

const Rational kZero(0);
const Rational kTwo(2);

Rational interpolate(const PLFunction::Point& a, const PLFunction::Point& b, const Rational& t) {
    // a.t < t <= b.t
    return a.value + (b.value - a.value) * (t - a.t) / (b.t - a.t);
}

Rational segment_slope(const PLFunction::Point& a, const PLFunction::Point& b) {
    return (b.value - a.value) / (b.t - a.t);
}

}  // namespace

PLFunction::PLFunction() {
    points_ = {{kZero, kZero}, {kTwo, kZero}};
}

PLFunction PLFunction::line(const Rational& slope, const Rational& intercept) {
    PLFunction f;
    f.points_ = {{kZero, intercept}, {kTwo, intercept + slope * kTwo}};
    return f;
}

PLFunction PLFunction::from_points(std::vector<Point> points) {
    if (points.size() < 2) throw BadParameters("a PL function needs at least two breakpoints");
    if (points.front().t != kZero || points.back().t != kTwo)
        throw BadParameters("PL function must span exactly [0,2]");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i - 1].t < points[i].t))
            throw BadParameters("PL breakpoints must have strictly increasing t");
    PLFunction f;
    f.points_ = std::move(points);
    f.canonicalize();
    return f;
}

void PLFunction::canonicalize() {
    std::vector<Point> out;
    out.reserve(points_.size());
    for (const auto& p : points_) {
        while (out.size() >= 2) {
            const Point& a = out[out.size() - 2];
            const Point& b = out[out.size() - 1];
            // drop b when (a, b, p) are collinear
            if ((b.value - a.value) * (p.t - a.t) == (p.value - a.value) * (b.t - a.t))
                out.pop_back();
            else
                break;
        }
        out.push_back(p);
    }
    points_ = std::move(out);
}

Rational PLFunction::operator()(const Rational& t) const {
    if (t < kZero || t > kTwo)
        throw OutOfDomain("PL function evaluated outside [0,2] at " + concord::to_string(t));
    auto it = std::lower_bound(points_.begin(), points_.end(), t,
                               [](const Point& p, const Rational& x) { return p.t < x; });
    if (it != points_.end() && it->t == t) return it->value;
    return interpolate(*(it - 1), *it, t);
}

std::string PLFunction::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) os << ", ";
        os << "(" << concord::to_string(points_[i].t) << ", "
           << concord::to_string(points_[i].value) << ")";
    }
    os << "]";
    return os.str();
}

PLFunction plf_add(const PLFunction& f, const PLFunction& g) {
    std::vector<Rational> ts;
    for (const auto& p : f.breakpoints()) ts.push_back(p.t);
    for (const auto& p : g.breakpoints()) ts.push_back(p.t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<PLFunction::Point> pts;
    pts.reserve(ts.size());
    for (const auto& t : ts) pts.push_back({t, f(t) + g(t)});
    return PLFunction::from_points(std::move(pts));
}

PLFunction plf_negate(const PLFunction& f) {
    std::vector<PLFunction::Point> pts;
    pts.reserve(f.breakpoints().size());
    for (const auto& p : f.breakpoints()) pts.push_back({p.t, -p.value});
    return PLFunction::from_points(std::move(pts));
}

PLFunction plf_max(const PLFunction& f, const PLFunction& g) {
    std::vector<Rational> ts;
    for (const auto& p : f.breakpoints()) ts.push_back(p.t);
    for (const auto& p : g.breakpoints()) ts.push_back(p.t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    std::vector<PLFunction::Point> pts;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        const Rational &t1 = ts[i], &t2 = ts[i + 1];
        const Rational f1 = f(t1), f2 = f(t2), g1 = g(t1), g2 = g(t2);
        pts.push_back({t1, std::max(f1, g1)});
        // both are lines on [t1,t2]; insert their crossing when the leader changes
        const Rational d1 = f1 - g1, d2 = f2 - g2;
        if ((d1 < 0 && d2 > 0) || (d1 > 0 && d2 < 0)) {
            const Rational tc = t1 + (t2 - t1) * d1 / (d1 - d2);
            pts.push_back({tc, f(tc)});
        }
    }
    pts.push_back({ts.back(), std::max(f(ts.back()), g(ts.back()))});
    return PLFunction::from_points(std::move(pts));
}

PLFunction plf_max(const std::vector<PLFunction>& fs) {
    if (fs.empty()) throw BadParameters("plf_max of an empty list");
    PLFunction acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = plf_max(acc, fs[i]);
    return acc;
}

std::optional<Rational> plf_slope_at(const PLFunction& f, const Rational& t) {
    if (!(t > kZero) || !(t < kTwo))
        throw OutOfDomain("slope queried outside (0,2) at " + concord::to_string(t));
    const auto& pts = f.breakpoints();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].t == t) return std::nullopt;
        if (pts[i].t > t) return segment_slope(pts[i - 1], pts[i]);
    }
    return std::nullopt;  // unreachable: t < 2 = last breakpoint
}

std::set<Rational> plf_slopes_on(const PLFunction& f, const Rational& a, const Rational& b) {
    if (!(a < b)) throw BadParameters("empty slope interval");
    if (a < kZero || b > kTwo) throw OutOfDomain("slope interval outside [0,2]");
    std::set<Rational> slopes;
    const auto& pts = f.breakpoints();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        // piece (pts[i-1].t, pts[i].t) meets (a,b)?
        if (pts[i].t > a && pts[i - 1].t < b) slopes.insert(segment_slope(pts[i - 1], pts[i]));
    }
    return slopes;
}

}  // namespace concord
