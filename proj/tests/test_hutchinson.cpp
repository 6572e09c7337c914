#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/hutchinson.hpp"

using namespace ifsx;

namespace {

FunctionSystem cantor_system() {
    return FunctionSystem({ContractiveMap::affine(1.0 / 3.0, 0.0),
                           ContractiveMap::affine(1.0 / 3.0, 2.0 / 3.0)},
                          1);
}

// Endpoints of the level-8 Cantor construction: an independent oracle built by
// repeated interval subdivision rather than map iteration.
CompactSet cantor_oracle(int levels) {
    std::vector<std::pair<double, double>> ivals = {{0.0, 1.0}};
    for (int l = 0; l < levels; ++l) {
        std::vector<std::pair<double, double>> next;
        for (auto [a, b] : ivals) {
            next.push_back({a / 3.0, b / 3.0});
            next.push_back({a / 3.0 + 2.0 / 3.0, b / 3.0 + 2.0 / 3.0});
        }
        ivals = std::move(next);
    }
    std::vector<double> pts;
    for (auto [a, b] : ivals) {
        pts.push_back(a);
        pts.push_back(b);
    }
    return CompactSet::from_reals(pts);
}

}  // namespace

TEST_CASE("function system validation") {
    CHECK_THROWS_AS(FunctionSystem({}, 1), Error);
    // Member leaving the cube is rejected.
    CHECK_THROWS_AS(FunctionSystem({ContractiveMap::affine(0.5, 0.9)}, 1), Error);
    // Dimension mismatch between members.
    CHECK_THROWS_AS(FunctionSystem({ContractiveMap::affine(0.5, 0.0),
                                    ContractiveMap::constant(Point{{0.1, 0.1}})},
                                   1),
                    Error);
    FunctionSystem weak({ContractiveMap::logistic(), ContractiveMap::constant(Point{{0.5}})}, 1);
    CHECK(weak.kind() == MapKind::weak);
    CHECK(weak.lipschitz_bound() == 1.0);
    FunctionSystem strict = cantor_system();
    CHECK(strict.kind() == MapKind::contraction);
    CHECK(strict.lipschitz_bound() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("step is the deduplicated union of member images") {
    FunctionSystem sys = cantor_system();
    CompactSet a = CompactSet::from_reals({0.0, 1.0});
    CompactSet s = step(sys, a);
    REQUIRE(s.size() == 4);
    CHECK(s.points()[0].coords[0] == doctest::Approx(0.0));
    CHECK(s.points()[1].coords[0] == doctest::Approx(1.0 / 3.0));
    CHECK(s.points()[2].coords[0] == doctest::Approx(2.0 / 3.0));
    CHECK(s.points()[3].coords[0] == doctest::Approx(1.0));
}

TEST_CASE("single-map attractor is the fixed point") {
    FunctionSystem sys({ContractiveMap::affine(0.5, 0.25)}, 1);
    AttractorResult r = attractor(sys, 1e-9, 100000, 1e-6);
    CHECK(r.converged);
    REQUIRE(r.attractor.size() == 1);
    CHECK(r.attractor.points()[0].coords[0] == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(r.residual <= 1e-8);
}

TEST_CASE("cantor attractor matches the subdivision oracle") {
    double tol = 1e-6, res = 1e-4;
    AttractorResult r = attractor(cantor_system(), tol, 1000000, res);
    CHECK(r.converged);
    CompactSet oracle = cantor_oracle(8);
    // Oracle endpoints are 3^-8 ~ 1.5e-4 apart inside each level-8 interval.
    double gap = std::pow(3.0, -8.0);
    double d = hausdorff_distance(r.attractor, oracle).distance;
    CHECK(d <= 2.0 * (res + tol) + gap);
    CHECK(r.residual <= tol + 2.0 * res);
}

TEST_CASE("dyadic system fills the interval (grid oracle)") {
    // {x/2, x/2 + 1/2} has attractor [0,1].
    FunctionSystem sys(
        {ContractiveMap::affine(0.5, 0.0), ContractiveMap::affine(0.5, 0.5)}, 1);
    double tol = 1e-6, res = 1e-4;
    AttractorResult r = attractor(sys, tol, 1000000, res);
    CHECK(r.converged);
    std::vector<double> grid;
    for (int i = 0; i <= 10000; ++i) grid.push_back(i / 10000.0);
    CompactSet oracle = CompactSet::from_reals(grid);
    CHECK(hausdorff_distance(r.attractor, oracle).distance <= 2.0 * (res + tol));
}

TEST_CASE("attractor is invariant up to the stop scale") {
    FunctionSystem sys = cantor_system();
    AttractorResult r = attractor(sys, 1e-6, 1000000, 1e-4);
    CHECK(r.converged);
    CHECK(verify_invariance(sys, r.attractor) == doctest::Approx(r.residual));
    CHECK(r.residual <= 1e-6 + 2e-4);
}

TEST_CASE("attractor is deterministic") {
    FunctionSystem sys = cantor_system();
    AttractorResult r1 = attractor(sys, 1e-6, 1000000, 1e-4);
    AttractorResult r2 = attractor(sys, 1e-6, 1000000, 1e-4);
    CHECK(r1.attractor == r2.attractor);
    CHECK(r1.iterations == r2.iterations);
    CHECK(r1.residual == r2.residual);
}

TEST_CASE("weak system attractor converges via the plateau rule") {
    FunctionSystem sys({ContractiveMap::logistic(), ContractiveMap::constant(Point{{0.5}})}, 1);
    AttractorResult r = attractor(sys, 1e-6, 200000, 1e-3);
    CHECK(r.converged);
    // Attractor contains the forward logistic orbit of 1/2 and its limit 0;
    // spot-check a few known members at re-netting scale.
    for (double x : {0.5, 0.25, 0.1875, 0.0}) {
        CHECK(distance_point_set(Point{{x}}, r.attractor) <= 5e-3);
    }
}

TEST_CASE("non-convergence is reported, not thrown") {
    FunctionSystem sys({ContractiveMap::logistic(), ContractiveMap::constant(Point{{0.5}})}, 1);
    AttractorResult r = attractor(sys, 1e-9, 10, 1e-5);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 10);
}

TEST_CASE("image continuity probe converges like 3/(2k)") {
    // s_k(x) = x/2 + 1/k applied to E_k = {1/k}: the image point is 3/(2k),
    // while the limit map x/2 on E = {0} gives {0}. Early terms (k = 1) leave
    // the cube, which the probe must tolerate.
    std::vector<ContractiveMap> maps;
    std::vector<CompactSet> sets;
    for (std::size_t k = 1; k <= 100; ++k) {
        maps.push_back(ContractiveMap::affine(0.5, 1.0 / static_cast<double>(k)));
        sets.push_back(CompactSet::from_reals({1.0 / static_cast<double>(k)}));
    }
    ContractiveMap limit = ContractiveMap::affine(0.5, 0.0);
    CompactSet e_limit = CompactSet::from_reals({0.0});
    auto probe = image_continuity_probe(maps, sets, limit, e_limit);
    REQUIRE(probe.size() == 100);
    for (std::size_t i = 0; i < probe.size(); ++i) {
        double k = static_cast<double>(i + 1);
        CHECK(std::abs(probe[i].second - 3.0 / (2.0 * k)) <= 1e-12);
        if (i > 0) CHECK(probe[i].second < probe[i - 1].second);
    }
    CHECK(probe[0].second == doctest::Approx(1.5));  // outside the cube, by design
}

TEST_CASE("probe rejects mismatched sequence lengths") {
    std::vector<ContractiveMap> maps = {ContractiveMap::affine(0.5, 0.0)};
    std::vector<CompactSet> sets;
    CHECK_THROWS_AS(image_continuity_probe(maps, sets, ContractiveMap::affine(0.5, 0.0),
                                            CompactSet::from_reals({0.0})),
                    Error);
}

TEST_CASE("step refines a dyadic grid by exactly one level") {
    // S(grid_8) under {x/2, x/2 + 1/2} is grid_16, which contains grid_8, so
    // the invariance defect of grid_8 is exactly one half-step, 1/16.
    std::vector<double> grid;
    for (int i = 0; i <= 8; ++i) grid.push_back(i / 8.0);
    FunctionSystem sys(
        {ContractiveMap::affine(0.5, 0.0), ContractiveMap::affine(0.5, 0.5)}, 1);
    CompactSet a = CompactSet::from_reals(grid);
    CompactSet s = step(sys, a);
    CHECK(s.size() == 17);
    CHECK(verify_invariance(sys, a) == doctest::Approx(1.0 / 16.0));
}
