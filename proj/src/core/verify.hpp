#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "witnesses.hpp"

namespace ifsx {

struct SearchParams {
    double tol = 1e-6;
    std::size_t max_iter = 100000;
    double resolution = 1e-3;  // coarse: trial attractors only need delta-scale accuracy
};

struct SearchReport {
    std::size_t trials = 0;
    std::size_t skipped = 0;  // non-converged trial attractors
    double best_distance = 0.0;
    std::size_t best_trial = 0;
    std::optional<FunctionSystem> best_system;
    double threshold = 0.0;
    bool violated = false;  // best_distance < threshold
    std::uint64_t seed = 0;
    std::vector<std::pair<std::size_t, double>> trace;  // optional per-trial distances
};

/// Randomized falsification probe: sample `trials` n-map contraction systems
/// (affine or small piecewise-linear, slopes in (-0.95, 0.95)), compute each
/// attractor, and record the minimum Hausdorff distance to the target set.
/// Bit-deterministic given the seed; trials derive independent generators from
/// (seed, index) and may run in parallel (IFSX_THREADS caps the pool, 0=auto).
SearchReport separation_search(const CompactSet& target, double delta, std::size_t n,
                               std::size_t trials, std::uint64_t seed,
                               const SearchParams& params = {}, bool keep_trace = false);

struct CoverageReport {
    std::size_t targets = 0;                // number of target components
    std::size_t capacity = 0;               // the proof's pigeonhole bound
    std::vector<std::size_t> per_map_hits;  // distinct targets each map's image meets
    std::vector<std::size_t> uncovered;     // 1-based target indices met by no image
    bool pass = false;                      // covered count <= capacity
};

/// Counts, per map, how many delta-balls around the top-block points of F the
/// map's image of F meets; the pigeonhole capacity is n^2 against k = n^2+1
/// targets. `sys` is the candidate n-map system under scrutiny.
CoverageReport coverage_audit_ladder(const LadderWitness& w, const FunctionSystem& sys);

/// Counting skeleton for the cascade: for each map, bounds the number of
/// group-`group` intervals its image can fully cover (earlier groups: one per
/// connected component; same group: at most one by the diameter argument;
/// later groups: zero by condition (1)); compares the total to k_group.
CoverageReport coverage_audit_intervals(const IntervalWitness& w, const FunctionSystem& sys,
                                        std::size_t group);

}  // namespace ifsx
