#include "hutchinson.hpp"

#include <algorithm>
#include <cmath>

namespace ifsx {

FunctionSystem::FunctionSystem(std::vector<ContractiveMap> maps, std::size_t dim)
    : maps_(std::move(maps)), dim_(dim) {
    if (maps_.empty()) fail(ErrorCode::invalid_argument, "FunctionSystem: no maps");
    if (dim == 0) fail(ErrorCode::invalid_argument, "FunctionSystem: dimension must be positive");
    for (const auto& m : maps_) {
        if (m.dim() != dim)
            fail(ErrorCode::dimension_mismatch, "FunctionSystem: map dimension differs");
        if (!m.range_within_cube())
            fail(ErrorCode::invalid_argument, "FunctionSystem: member does not map the cube into itself");
        if (m.declared_kind() == MapKind::weak) kind_ = MapKind::weak;
    }
    if (kind_ == MapKind::contraction) {
        for (const auto& m : maps_) {
            if (!(lipschitz_upper_bound(m).upper_bound < 1.0))
                fail(ErrorCode::invalid_argument,
                     "FunctionSystem: contraction system member has Lipschitz bound >= 1");
        }
    }
}

double FunctionSystem::lipschitz_bound() const {
    double best = 0.0;
    for (const auto& m : maps_) best = std::max(best, lipschitz_upper_bound(m).upper_bound);
    return best;
}

CompactSet step(const FunctionSystem& sys, const CompactSet& a, double resolution) {
    if (sys.dim() != a.dim())
        fail(ErrorCode::dimension_mismatch, "step: set dimension differs from system");
    std::vector<Point> out;
    out.reserve(sys.maps().size() * a.size());
    for (const auto& m : sys.maps()) {
        for (const auto& p : a.points()) out.push_back(apply(m, p));
    }
    CompactSet result(std::move(out), a.dim(), a.resolution());
    if (resolution > 0) result = renet(result, resolution);
    return result;
}

AttractorResult attractor(const FunctionSystem& sys, double tol, std::size_t max_iter,
                          double resolution) {
    if (tol <= 0) fail(ErrorCode::invalid_argument, "attractor: tol must be positive");
    if (resolution <= 0) fail(ErrorCode::invalid_argument, "attractor: resolution must be positive");

    // Seed with member fixed points: for contractions each z_i lies in the attractor.
    std::vector<Point> seeds;
    for (const auto& m : sys.maps()) {
        try {
            seeds.push_back(fixed_point(m, tol, max_iter));
        } catch (const FixedPointError& e) {
            seeds.push_back(e.best_iterate);
        }
    }
    CompactSet current(std::move(seeds), sys.dim(), 0.0);

    double lip = sys.lipschitz_bound();
    bool certified = sys.kind() == MapKind::contraction && lip < 1.0;
    double step_factor = certified ? std::max(lip / (1.0 - lip), 1.0) : 1.0;
    double floor_tol = tol + 2.0 * resolution;
    constexpr std::size_t kSnapshotStride = 256;

    CompactSet snapshot = current;
    double last_step = 0.0;
    std::size_t t = 0;
    bool converged = false;
    bool floor_stop = false;
    while (t < max_iter) {
        CompactSet next = step(sys, current, resolution);
        last_step = hausdorff_distance(next, current).distance;
        current = std::move(next);
        ++t;
        if (step_factor * last_step <= tol) {
            converged = true;
            break;
        }
        if (t % kSnapshotStride == 0) {
            if (hausdorff_distance(current, snapshot).distance <= floor_tol) {
                converged = true;
                floor_stop = true;
                break;
            }
            snapshot = current;
        }
    }

    AttractorResult res{current, t, last_step, verify_invariance(sys, current), converged,
                        floor_stop};
    return res;
}

double verify_invariance(const FunctionSystem& sys, const CompactSet& a) {
    return hausdorff_distance(step(sys, a), a).distance;
}

std::vector<std::pair<std::size_t, double>> image_continuity_probe(
    const std::vector<ContractiveMap>& map_seq, const std::vector<CompactSet>& set_seq,
    const ContractiveMap& f_limit, const CompactSet& e_limit) {
    if (map_seq.size() != set_seq.size())
        fail(ErrorCode::invalid_argument, "image_continuity_probe: sequence lengths differ");
    CompactSet limit_image = image(f_limit, e_limit);
    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(map_seq.size());
    for (std::size_t k = 0; k < map_seq.size(); ++k) {
        CompactSet img = image(map_seq[k], set_seq[k]);
        out.emplace_back(k, hausdorff_distance(img, limit_image).distance);
    }
    return out;
}

}  // namespace ifsx
