#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/maps.hpp"

using namespace ifsx;

namespace {
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace

TEST_CASE("logistic apply") {
    ContractiveMap f = ContractiveMap::logistic();
    CHECK(apply(f, Point{{0.0}}).coords[0] == 0.0);
    CHECK(apply(f, Point{{1.0}}).coords[0] == 0.0);
    CHECK(apply(f, Point{{0.5}}).coords[0] == 0.25);
    CHECK(f.declared_kind() == MapKind::weak);
    CHECK(f.range_within_cube());
}

TEST_CASE("affine apply and kind") {
    ContractiveMap f = ContractiveMap::affine(0.5, 0.25);
    CHECK(apply(f, Point{{0.5}}).coords[0] == 0.5);  // fixed point
    CHECK(apply(f, Point{{0.0}}).coords[0] == 0.25);
    CHECK(f.declared_kind() == MapKind::contraction);
    CHECK_THROWS_AS(ContractiveMap::affine(1.0, 0.0), Error);
    CHECK_THROWS_AS(ContractiveMap::affine(-1.5, 0.5), Error);
}

TEST_CASE("apply validates the input domain, not the output") {
    // f(x) = x/2 + 1: a contraction whose range leaves the unit cube. Needed
    // for continuity probes whose early terms overshoot the cube.
    ContractiveMap f = ContractiveMap::affine(0.5, 1.0);
    CHECK_FALSE(f.range_within_cube());
    CHECK(apply(f, Point{{1.0}}).coords[0] == doctest::Approx(1.5));
    CHECK_THROWS_AS(apply(f, Point{{1.5}}), Error);
    CHECK_THROWS_AS(apply(f, Point{{-0.2}}), Error);
}

TEST_CASE("piecewise linear apply with clamp") {
    ContractiveMap f = ContractiveMap::piecewise_linear({{0.2, 0.1}, {0.8, 0.4}});
    CHECK(apply(f, Point{{0.2}}).coords[0] == doctest::Approx(0.1));
    CHECK(apply(f, Point{{0.5}}).coords[0] == doctest::Approx(0.25));
    CHECK(apply(f, Point{{0.0}}).coords[0] == doctest::Approx(0.1));  // clamp below
    CHECK(apply(f, Point{{1.0}}).coords[0] == doctest::Approx(0.4));  // clamp above
    CHECK_THROWS_AS(ContractiveMap::piecewise_linear({{0.5, 0.1}, {0.5, 0.2}}), Error);
    CHECK_THROWS_AS(ContractiveMap::piecewise_linear({}), Error);
}

TEST_CASE("piecewise linear declared kind must match slopes") {
    // Slope 1 cannot be declared a contraction.
    CHECK_THROWS_AS(
        ContractiveMap::piecewise_linear({{0.0, 0.0}, {1.0, 1.0}}, MapKind::contraction), Error);
    ContractiveMap w = ContractiveMap::piecewise_linear({{0.0, 0.0}, {1.0, 1.0}}, MapKind::weak);
    CHECK(w.declared_kind() == MapKind::weak);
}

TEST_CASE("image of finite sets") {
    ContractiveMap f = ContractiveMap::logistic();
    CompactSet a = CompactSet::from_reals({0.0, 0.5, 1.0});
    CompactSet img = image(f, a);
    REQUIRE(img.size() == 2);  // 0 and 1 collide at 0
    CHECK(img.points()[0].coords[0] == 0.0);
    CHECK(img.points()[1].coords[0] == 0.25);
}

TEST_CASE("image scales resolution by min(1, L)") {
    ContractiveMap f = ContractiveMap::affine(0.5, 0.0);
    CompactSet a = CompactSet::from_reals({0.0, 1.0}, 0.01);
    CHECK(image(f, a).resolution() == doctest::Approx(0.005));
    ContractiveMap g = ContractiveMap::logistic();  // L bound is 1
    CHECK(image(g, a).resolution() == doctest::Approx(0.01));
}

TEST_CASE("analytic lipschitz bounds") {
    CHECK(lipschitz_upper_bound(ContractiveMap::affine(-0.7, 0.9)).upper_bound ==
          doctest::Approx(0.7));
    CHECK(lipschitz_upper_bound(ContractiveMap::logistic()).upper_bound == 1.0);
    ContractiveMap pwl =
        ContractiveMap::piecewise_linear({{0.0, 0.0}, {0.5, 0.25}, {1.0, 0.0}});
    CHECK(lipschitz_upper_bound(pwl).upper_bound == doctest::Approx(0.5));
    CHECK(lipschitz_upper_bound(ContractiveMap::constant(Point{{0.3}})).upper_bound == 0.0);
}

TEST_CASE("empirical lipschitz on finite sets") {
    ContractiveMap f = ContractiveMap::logistic();
    // |f(x)-f(y)| / |x-y| = |1-(x+y)|
    CompactSet a = CompactSet::from_reals({0.2, 0.3});
    CHECK(empirical_lipschitz(f, a).upper_bound == doctest::Approx(0.5).epsilon(1e-12));
    CompactSet b = CompactSet::from_reals({0.001, 0.002});
    CHECK(empirical_lipschitz(f, b).upper_bound == doctest::Approx(0.997).epsilon(1e-12));
    LipschitzCertificate c = empirical_lipschitz(f, b);
    CHECK(c.method == LipschitzCertificate::Method::empirical);
    REQUIRE(c.attained_on.has_value());
}

TEST_CASE("weak contraction identity |f(x)-f(y)| = |x-y| |1-(x+y)|") {
    ContractiveMap f = ContractiveMap::logistic();
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 10000; ++i) {
        double x = uniform01(rng), y = uniform01(rng);
        if (x == y) continue;
        double lhs = std::abs(apply(f, Point{{x}}).coords[0] - apply(f, Point{{y}}).coords[0]);
        double rhs = std::abs(x - y) * std::abs(1.0 - (x + y));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(lhs <= std::abs(x - y) * (1.0 + 1e-12));  // strictly weak on [0,1]
    }
}

TEST_CASE("logistic admits no global contraction constant") {
    // For any L < 1 the pair x = (1-L)/2, y = 0 has ratio 1 - x > L.
    ContractiveMap f = ContractiveMap::logistic();
    for (double L : {0.9, 0.99, 0.999}) {
        double x = (1.0 - L) / 2.0;
        double ratio = std::abs(apply(f, Point{{x}}).coords[0] - 0.0) / x;
        CHECK(ratio > L);
        CHECK(ratio < 1.0);
    }
}

TEST_CASE("empirical lipschitz never exceeds the analytic bound") {
    std::mt19937_64 rng(17);
    ContractiveMap maps[] = {ContractiveMap::logistic(), ContractiveMap::affine(0.8, 0.1),
                             ContractiveMap::piecewise_linear({{0.0, 0.1}, {1.0, 0.6}})};
    for (const auto& f : maps) {
        std::vector<double> xs;
        for (int i = 0; i < 40; ++i) xs.push_back(uniform01(rng));
        CompactSet s = CompactSet::from_reals(xs);
        CHECK(empirical_lipschitz(f, s).upper_bound <=
              lipschitz_upper_bound(f).upper_bound + 1e-12);
    }
}

TEST_CASE("fixed points") {
    CHECK(fixed_point(ContractiveMap::affine(0.5, 0.25), 1e-12, 1000).coords[0] ==
          doctest::Approx(0.5).epsilon(1e-10));
    CHECK(fixed_point(ContractiveMap::constant(Point{{0.3}}), 1e-12, 10).coords[0] == 0.3);
    // Logistic converges to 0, but only harmonically; accept a loose tol.
    Point p = fixed_point(ContractiveMap::logistic(), 1e-6, 2000000);
    CHECK(p.coords[0] >= 0.0);
    CHECK(p.coords[0] < 0.01);
}

TEST_CASE("fixed point error carries the best iterate") {
    try {
        fixed_point(ContractiveMap::logistic(), 1e-12, 5);
        FAIL("expected FixedPointError");
    } catch (const FixedPointError& e) {
        CHECK(e.code() == ErrorCode::not_converged);
        CHECK(e.best_iterate.coords[0] > 0.0);
        CHECK(e.best_iterate.coords[0] < 0.5);
    }
}

TEST_CASE("extend_from_finite interpolates the prescribed nodes") {
    ContractiveMap g = extend_from_finite({0.0, 0.5, 1.0}, {0.1, 0.3, 0.2});
    CHECK(apply(g, Point{{0.0}}).coords[0] == doctest::Approx(0.1));
    CHECK(apply(g, Point{{0.5}}).coords[0] == doctest::Approx(0.3));
    CHECK(apply(g, Point{{0.25}}).coords[0] == doctest::Approx(0.2));
    CHECK(lipschitz_upper_bound(g).upper_bound == doctest::Approx(0.4));
    CHECK_THROWS_AS(extend_from_finite({0.0, 0.0}, {0.1, 0.2}), Error);
    CHECK_THROWS_AS(extend_from_finite({0.0, 1.0}, {0.1}), Error);
}

TEST_CASE("embed lifts a 1-d map to higher dimension") {
    ContractiveMap e = embed(ContractiveMap::logistic(), 3);
    CHECK(e.dim() == 3);
    Point out = apply(e, Point{{0.5, 0.9, 0.9}});
    REQUIRE(out.coords.size() == 3);
    CHECK(out.coords[0] == doctest::Approx(0.25));
    CHECK(out.coords[1] == 0.0);
    CHECK(out.coords[2] == 0.0);
    CHECK(e.declared_kind() == MapKind::weak);
    CHECK_THROWS_AS(apply(e, Point{{0.5}}), Error);
}
