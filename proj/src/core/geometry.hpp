#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ifsx {

/// Tolerance for point deduplication and domain clipping.
inline constexpr double kPointTol = 1e-12;

/// A point of R^d. Attractor machinery keeps coordinates inside [0,1]^d;
/// the geometry layer itself works on any finite coordinates so that probe
/// sequences whose images leave the cube can still be measured.
struct Point {
    std::vector<double> coords;

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }

    bool operator==(const Point&) const = default;
};

double euclidean(const Point& a, const Point& b);

/// Lexicographic order; used everywhere a deterministic sweep is needed.
bool lex_less(const Point& a, const Point& b);

/// Finite stand-in for a nonempty compact subset of [0,1]^d. Points are kept
/// sorted lexicographically and deduplicated at kPointTol. `resolution` is the
/// epsilon-net radius the cloud is intended to realize (0 = the set is exactly
/// this finite set).
class CompactSet {
public:
    CompactSet(std::vector<Point> points, std::size_t dim, double resolution = 0.0);

    static CompactSet from_reals(std::vector<double> xs, double resolution = 0.0);

    const std::vector<Point>& points() const { return points_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    double resolution() const { return resolution_; }

    double diameter() const;

    bool operator==(const CompactSet& other) const {
        return dim_ == other.dim_ && points_ == other.points_;
    }

private:
    std::vector<Point> points_;
    std::size_t dim_ = 0;
    double resolution_ = 0.0;
};

struct HausdorffReport {
    double distance = 0.0;
    /// Pair achieving sup_{a in A} d(a, B): the A-point and its nearest B-point.
    std::pair<Point, Point> witness_ab;
    /// Pair achieving sup_{b in B} d(b, A).
    std::pair<Point, Point> witness_ba;
};

/// Finite union of disjoint closed intervals of [0,1], sorted descending by lo.
struct IntervalUnion {
    struct Interval {
        double lo = 0.0;
        double hi = 0.0;
    };
    std::vector<Interval> intervals;
};

/// Exact Hausdorff distance between the finite clouds (1-d inputs use a
/// sorted-merge fast path, higher dimensions the double loop with early exit).
HausdorffReport hausdorff_distance(const CompactSet& a, const CompactSet& b);

double distance_point_set(const Point& x, const CompactSet& a);

CompactSet set_union(const CompactSet& a, const CompactSet& b);

/// Greedy deterministic r-net: sweep in lexicographic order, keep a point iff
/// it is farther than r from every point kept so far. The result is a subset
/// of `a` with d_H(a, result) <= r.
CompactSet renet(const CompactSet& a, double r);

/// Union of open balls B(x, delta) merged into maximal intervals, clipped to [0,1].
IntervalUnion thicken(const CompactSet& a, double delta);

void require_same_dim(const CompactSet& a, const CompactSet& b);

}  // namespace ifsx
