#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "geometry.hpp"

namespace ifsx {

enum class MapKind { contraction, weak };

class ContractiveMap;

/// f(x) = a*x + b on [0,1], |a| < 1.
struct AffineMap {
    double a = 0.0;
    double b = 0.0;
};

struct ConstantMap {
    Point c;
};

/// Linear between sorted nodes, constant clamp outside the node hull (d=1).
struct PiecewiseLinearMap {
    std::vector<std::pair<double, double>> nodes;  // (x, y), strictly increasing x
};

/// f(x) = x - x^2 on [0,1]; a weak contraction that is not a contraction.
struct LogisticMap {};

/// g(x_1, ..., x_d) = (f(x_1), 0, ..., 0) for a 1-d map f.
struct EmbeddedMap {
    std::shared_ptr<const ContractiveMap> inner;
    std::size_t target_dim = 1;
};

struct LipschitzCertificate {
    enum class Method { analytic, empirical };
    double upper_bound = 0.0;
    std::optional<std::pair<Point, Point>> attained_on;
    Method method = Method::analytic;
};

class ContractiveMap {
public:
    using Variant = std::variant<AffineMap, ConstantMap, PiecewiseLinearMap, LogisticMap, EmbeddedMap>;

    static ContractiveMap affine(double a, double b);
    static ContractiveMap constant(Point c);
    static ContractiveMap piecewise_linear(std::vector<std::pair<double, double>> nodes,
                                           std::optional<MapKind> kind = std::nullopt);
    static ContractiveMap logistic();

    const Variant& variant() const { return v_; }
    MapKind declared_kind() const { return kind_; }
    std::size_t dim() const { return dim_; }

    /// True when the map provably sends [0,1]^d into itself.
    bool range_within_cube() const;

private:
    ContractiveMap(Variant v, MapKind kind, std::size_t dim)
        : v_(std::move(v)), kind_(kind), dim_(dim) {}
    friend ContractiveMap embed(const ContractiveMap&, std::size_t);

    Variant v_;
    MapKind kind_ = MapKind::contraction;
    std::size_t dim_ = 1;
};

Point apply(const ContractiveMap& f, const Point& x);

CompactSet image(const ContractiveMap& f, const CompactSet& a);

LipschitzCertificate lipschitz_upper_bound(const ContractiveMap& f);

/// Max over distinct pairs of S of d(f(x),f(y)) / d(x,y), with attaining pair.
LipschitzCertificate empirical_lipschitz(const ContractiveMap& f, const CompactSet& s);

/// Raised by fixed_point on max_iter exhaustion; carries the best iterate.
class FixedPointError : public Error {
public:
    FixedPointError(const std::string& what, Point best)
        : Error(ErrorCode::not_converged, what), best_iterate(std::move(best)) {}
    Point best_iterate;
};

/// Iteration from the cube center. Contractions certify d(p, p*) <= tol via the
/// Banach a-posteriori bound; weak maps use Cauchy stopping (step <= tol).
Point fixed_point(const ContractiveMap& f, double tol, std::size_t max_iter);

/// Linear interpolation through (domain[i], values[i]) with constant clamp
/// outside the hull; Lipschitz bound is the max prescribed slope.
ContractiveMap extend_from_finite(const std::vector<double>& domain_points,
                                  const std::vector<double>& values);

ContractiveMap embed(const ContractiveMap& f, std::size_t target_dim);

}  // namespace ifsx
