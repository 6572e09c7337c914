#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ifsx {

double euclidean(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        double d = a.coords[i] - b.coords[i];
        s += d * d;
    }
    return std::sqrt(s);
}

bool lex_less(const Point& a, const Point& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                        b.coords.end());
}

CompactSet::CompactSet(std::vector<Point> points, std::size_t dim, double resolution)
    : dim_(dim), resolution_(resolution) {
    if (dim == 0) fail(ErrorCode::invalid_argument, "CompactSet: dimension must be positive");
    if (points.empty()) fail(ErrorCode::invalid_argument, "CompactSet: empty point list");
    if (resolution < 0) fail(ErrorCode::invalid_argument, "CompactSet: negative resolution");
    for (const auto& p : points) {
        if (p.dim() != dim)
            fail(ErrorCode::dimension_mismatch, "CompactSet: point dimension differs from set");
        for (double c : p.coords) {
            if (!std::isfinite(c))
                fail(ErrorCode::invalid_argument, "CompactSet: non-finite coordinate");
        }
    }
    std::sort(points.begin(), points.end(), lex_less);
    points_.reserve(points.size());
    for (auto& p : points) {
        if (!points_.empty() && euclidean(points_.back(), p) <= kPointTol) continue;
        points_.push_back(std::move(p));
    }
}

CompactSet CompactSet::from_reals(std::vector<double> xs, double resolution) {
    std::vector<Point> pts;
    pts.reserve(xs.size());
    for (double x : xs) pts.push_back(Point{{x}});
    return CompactSet(std::move(pts), 1, resolution);
}

double CompactSet::diameter() const {
    double best = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            best = std::max(best, euclidean(points_[i], points_[j]));
    return best;
}

void require_same_dim(const CompactSet& a, const CompactSet& b) {
    if (a.dim() != b.dim())
        fail(ErrorCode::dimension_mismatch, "sets have different ambient dimensions");
}

namespace {

// Directed distance sup_{a in A} d(a, B) for sorted 1-d clouds, O(|A|+|B|).
struct Directed {
    double dist;
    Point from;
    Point to;
};

Directed directed_1d(const std::vector<Point>& a, const std::vector<Point>& b) {
    Directed best{-1.0, {}, {}};
    std::size_t j = 0;
    for (const auto& p : a) {
        double x = p.coords[0];
        while (j + 1 < b.size() && b[j + 1].coords[0] <= x) ++j;
        double d = std::abs(x - b[j].coords[0]);
        Point nearest = b[j];
        if (j + 1 < b.size()) {
            double d2 = std::abs(b[j + 1].coords[0] - x);
            if (d2 < d) {
                d = d2;
                nearest = b[j + 1];
            }
        }
        if (d > best.dist) best = {d, p, nearest};
    }
    return best;
}

Directed directed_nd(const std::vector<Point>& a, const std::vector<Point>& b) {
    Directed best{-1.0, {}, {}};
    for (const auto& p : a) {
        double dmin = std::numeric_limits<double>::infinity();
        const Point* nearest = nullptr;
        for (const auto& q : b) {
            double d = euclidean(p, q);
            if (d < dmin) {
                dmin = d;
                nearest = &q;
                // Early exit: this point cannot raise the running sup.
                if (dmin <= best.dist) break;
            }
        }
        if (dmin > best.dist && nearest) best = {dmin, p, *nearest};
    }
    return best;
}

Directed directed(const CompactSet& a, const CompactSet& b) {
    if (a.dim() == 1) return directed_1d(a.points(), b.points());
    return directed_nd(a.points(), b.points());
}

}  // namespace

HausdorffReport hausdorff_distance(const CompactSet& a, const CompactSet& b) {
    require_same_dim(a, b);
    Directed ab = directed(a, b);
    Directed ba = directed(b, a);
    HausdorffReport r;
    r.distance = std::max(ab.dist, ba.dist);
    r.witness_ab = {ab.from, ab.to};
    r.witness_ba = {ba.from, ba.to};
    return r;
}

double distance_point_set(const Point& x, const CompactSet& a) {
    if (x.dim() != a.dim())
        fail(ErrorCode::dimension_mismatch, "point dimension differs from set");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : a.points()) best = std::min(best, euclidean(x, q));
    return best;
}

CompactSet set_union(const CompactSet& a, const CompactSet& b) {
    require_same_dim(a, b);
    std::vector<Point> pts = a.points();
    pts.insert(pts.end(), b.points().begin(), b.points().end());
    return CompactSet(std::move(pts), a.dim(), std::max(a.resolution(), b.resolution()));
}

CompactSet renet(const CompactSet& a, double r) {
    if (r <= 0) fail(ErrorCode::invalid_argument, "renet: radius must be positive");
    std::vector<Point> kept;
    if (a.dim() == 1) {
        // Sorted sweep: the nearest kept point is always the last one.
        for (const auto& p : a.points()) {
            if (kept.empty() || p.coords[0] - kept.back().coords[0] > r) kept.push_back(p);
        }
    } else {
        for (const auto& p : a.points()) {
            bool covered = false;
            for (const auto& q : kept) {
                if (euclidean(p, q) <= r) {
                    covered = true;
                    break;
                }
            }
            if (!covered) kept.push_back(p);
        }
    }
    return CompactSet(std::move(kept), a.dim(), a.resolution() + r);
}

IntervalUnion thicken(const CompactSet& a, double delta) {
    if (a.dim() != 1) fail(ErrorCode::dimension_mismatch, "thicken: requires dim = 1");
    if (delta <= 0) fail(ErrorCode::invalid_argument, "thicken: delta must be positive");
    std::vector<IntervalUnion::Interval> merged;
    for (const auto& p : a.points()) {  // ascending
        double lo = std::max(0.0, p.coords[0] - delta);
        double hi = std::min(1.0, p.coords[0] + delta);
        if (!merged.empty() && lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, hi);
        } else {
            merged.push_back({lo, hi});
        }
    }
    std::reverse(merged.begin(), merged.end());  // descending by lo
    return IntervalUnion{std::move(merged)};
}

}  // namespace ifsx
