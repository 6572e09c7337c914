#include "maps.hpp"

#include <algorithm>
#include <cmath>

namespace ifsx {

namespace {

double pwl_max_slope(const PiecewiseLinearMap& m) {
    double best = 0.0;
    for (std::size_t i = 0; i + 1 < m.nodes.size(); ++i) {
        double dx = m.nodes[i + 1].first - m.nodes[i].first;
        double dy = m.nodes[i + 1].second - m.nodes[i].second;
        best = std::max(best, std::abs(dy / dx));
    }
    return best;
}

double pwl_eval(const PiecewiseLinearMap& m, double x) {
    const auto& n = m.nodes;
    if (x <= n.front().first) return n.front().second;
    if (x >= n.back().first) return n.back().second;
    auto it = std::upper_bound(n.begin(), n.end(), x,
                               [](double v, const auto& node) { return v < node.first; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    double t = (x - lo.first) / (hi.first - lo.first);
    return lo.second + t * (hi.second - lo.second);
}

void check_domain(const ContractiveMap& f, const Point& x) {
    if (x.dim() != f.dim())
        fail(ErrorCode::dimension_mismatch, "apply: point dimension differs from map");
    for (double c : x.coords) {
        if (!(c >= -kPointTol && c <= 1.0 + kPointTol))
            fail(ErrorCode::invalid_argument, "apply: point outside [0,1]^d");
    }
}

}  // namespace

ContractiveMap ContractiveMap::affine(double a, double b) {
    if (!(std::abs(a) < 1.0))
        fail(ErrorCode::invalid_argument, "affine map: |slope| must be < 1");
    return ContractiveMap(AffineMap{a, b}, MapKind::contraction, 1);
}

ContractiveMap ContractiveMap::constant(Point c) {
    std::size_t d = c.dim();
    if (d == 0) fail(ErrorCode::invalid_argument, "constant map: empty point");
    return ContractiveMap(ConstantMap{std::move(c)}, MapKind::contraction, d);
}

ContractiveMap ContractiveMap::piecewise_linear(std::vector<std::pair<double, double>> nodes,
                                                std::optional<MapKind> kind) {
    if (nodes.empty()) fail(ErrorCode::invalid_argument, "pwl map: no nodes");
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (!(nodes[i].first < nodes[i + 1].first))
            fail(ErrorCode::invalid_argument, "pwl map: duplicate node abscissa");
    }
    PiecewiseLinearMap m{std::move(nodes)};
    MapKind k = kind.value_or(pwl_max_slope(m) < 1.0 ? MapKind::contraction : MapKind::weak);
    if (k == MapKind::contraction && !(pwl_max_slope(m) < 1.0))
        fail(ErrorCode::invalid_argument, "pwl map: declared contraction but a segment slope is >= 1");
    return ContractiveMap(std::move(m), k, 1);
}

ContractiveMap ContractiveMap::logistic() {
    return ContractiveMap(LogisticMap{}, MapKind::weak, 1);
}

bool ContractiveMap::range_within_cube() const {
    return std::visit(
        [](const auto& m) -> bool {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, AffineMap>) {
                double lo = std::min(m.b, m.a + m.b);
                double hi = std::max(m.b, m.a + m.b);
                return lo >= -kPointTol && hi <= 1.0 + kPointTol;
            } else if constexpr (std::is_same_v<T, ConstantMap>) {
                for (double c : m.c.coords)
                    if (!(c >= -kPointTol && c <= 1.0 + kPointTol)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, PiecewiseLinearMap>) {
                for (const auto& [x, y] : m.nodes)
                    if (!(y >= -kPointTol && y <= 1.0 + kPointTol)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, LogisticMap>) {
                return true;
            } else {
                return m.inner->range_within_cube();
            }
        },
        v_);
}

Point apply(const ContractiveMap& f, const Point& x) {
    check_domain(f, x);
    return std::visit(
        [&](const auto& m) -> Point {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, AffineMap>) {
                return Point{{m.a * x.coords[0] + m.b}};
            } else if constexpr (std::is_same_v<T, ConstantMap>) {
                return m.c;
            } else if constexpr (std::is_same_v<T, PiecewiseLinearMap>) {
                return Point{{pwl_eval(m, x.coords[0])}};
            } else if constexpr (std::is_same_v<T, LogisticMap>) {
                double v = x.coords[0];
                return Point{{v - v * v}};
            } else {
                Point inner_out = apply(*m.inner, Point{{x.coords[0]}});
                Point out;
                out.coords.assign(m.target_dim, 0.0);
                out.coords[0] = inner_out.coords[0];
                return out;
            }
        },
        f.variant());
}

CompactSet image(const ContractiveMap& f, const CompactSet& a) {
    if (f.dim() != a.dim())
        fail(ErrorCode::dimension_mismatch, "image: set dimension differs from map");
    std::vector<Point> out;
    out.reserve(a.size());
    for (const auto& p : a.points()) out.push_back(apply(f, p));
    double scale = std::min(1.0, lipschitz_upper_bound(f).upper_bound);
    return CompactSet(std::move(out), a.dim(), a.resolution() * scale);
}

LipschitzCertificate lipschitz_upper_bound(const ContractiveMap& f) {
    LipschitzCertificate cert;
    cert.method = LipschitzCertificate::Method::analytic;
    cert.upper_bound = std::visit(
        [](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, AffineMap>) {
                return std::abs(m.a);
            } else if constexpr (std::is_same_v<T, ConstantMap>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, PiecewiseLinearMap>) {
                return pwl_max_slope(m);
            } else if constexpr (std::is_same_v<T, LogisticMap>) {
                return 1.0;  // sup of |1-(x+y)|, approached but never attained
            } else {
                return lipschitz_upper_bound(*m.inner).upper_bound;
            }
        },
        f.variant());
    return cert;
}

LipschitzCertificate empirical_lipschitz(const ContractiveMap& f, const CompactSet& s) {
    if (s.size() < 2)
        fail(ErrorCode::invalid_argument, "empirical_lipschitz: need at least two points");
    LipschitzCertificate cert;
    cert.method = LipschitzCertificate::Method::empirical;
    const auto& pts = s.points();
    std::vector<Point> images;
    images.reserve(pts.size());
    for (const auto& p : pts) images.push_back(apply(f, p));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double ratio = euclidean(images[i], images[j]) / euclidean(pts[i], pts[j]);
            if (ratio > cert.upper_bound) {
                cert.upper_bound = ratio;
                cert.attained_on = {pts[i], pts[j]};
            }
        }
    }
    return cert;
}

Point fixed_point(const ContractiveMap& f, double tol, std::size_t max_iter) {
    if (tol <= 0) fail(ErrorCode::invalid_argument, "fixed_point: tol must be positive");
    Point x;
    x.coords.assign(f.dim(), 0.5);
    double lip = lipschitz_upper_bound(f).upper_bound;
    bool contraction = f.declared_kind() == MapKind::contraction && lip < 1.0;
    double factor = contraction ? std::max(lip / (1.0 - lip), 1.0) : 1.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        Point next = apply(f, x);
        double step = euclidean(next, x);
        x = std::move(next);
        if (factor * step <= tol) return x;
    }
    throw FixedPointError("fixed_point: max_iter exhausted before reaching tolerance", x);
}

ContractiveMap extend_from_finite(const std::vector<double>& domain_points,
                                  const std::vector<double>& values) {
    if (domain_points.empty() || domain_points.size() != values.size())
        fail(ErrorCode::invalid_argument, "extend_from_finite: need matching nonempty lists");
    for (std::size_t i = 0; i + 1 < domain_points.size(); ++i) {
        if (!(domain_points[i] < domain_points[i + 1]))
            fail(ErrorCode::invalid_argument,
                 "extend_from_finite: domain points must be strictly increasing");
    }
    std::vector<std::pair<double, double>> nodes;
    nodes.reserve(domain_points.size());
    for (std::size_t i = 0; i < domain_points.size(); ++i)
        nodes.emplace_back(domain_points[i], values[i]);
    return ContractiveMap::piecewise_linear(std::move(nodes));
}

ContractiveMap embed(const ContractiveMap& f, std::size_t target_dim) {
    if (target_dim == 0) fail(ErrorCode::invalid_argument, "embed: dimension must be positive");
    if (f.dim() != 1) fail(ErrorCode::invalid_argument, "embed: inner map must be 1-d");
    EmbeddedMap m{std::make_shared<ContractiveMap>(f), target_dim};
    return ContractiveMap(ContractiveMap::Variant(std::move(m)), f.declared_kind(), target_dim);
}

}  // namespace ifsx
