#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <thread>

namespace ifsx {

namespace {

/// Uniform double in [0,1) built from the top 53 bits of the generator so the
/// stream is identical across platforms and standard libraries.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

ContractiveMap sample_map(std::mt19937_64& rng) {
    if (uniform01(rng) < 0.5) {
        double a = 0.0;
        while (a == 0.0) a = uniform(rng, -0.95, 0.95);
        double lo = std::max(0.0, -a);
        double hi = std::min(1.0, 1.0 - a);
        double b = uniform(rng, lo, hi);
        return ContractiveMap::affine(a, b);
    }
    // Piecewise-linear with up to 4 nodes; successive values are proposed by a
    // random slope in (-0.95, 0.95) and clamped to [0,1], which can only
    // shrink the realized slope.
    std::size_t count = 2 + static_cast<std::size_t>(uniform01(rng) * 3.0);  // 2..4
    if (count > 4) count = 4;
    std::vector<double> xs{0.0, 1.0};
    while (xs.size() < count) {
        double x = uniform01(rng);
        bool fresh = true;
        for (double v : xs) fresh = fresh && std::abs(v - x) > 1e-3;
        if (fresh) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    std::vector<std::pair<double, double>> nodes;
    double y = uniform01(rng);
    nodes.emplace_back(xs[0], y);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        double slope = uniform(rng, -0.95, 0.95);
        y = std::clamp(y + slope * (xs[i] - xs[i - 1]), 0.0, 1.0);
        nodes.emplace_back(xs[i], y);
    }
    return ContractiveMap::piecewise_linear(std::move(nodes));
}

std::size_t thread_budget(std::size_t work) {
    std::size_t cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
    if (const char* env = std::getenv("IFSX_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) cap = static_cast<std::size_t>(v);
    }
    return std::max<std::size_t>(1, std::min(cap, work));
}

}  // namespace

SearchReport separation_search(const CompactSet& target, double delta, std::size_t n,
                               std::size_t trials, std::uint64_t seed, const SearchParams& params,
                               bool keep_trace) {
    if (!(delta > 0)) fail(ErrorCode::invalid_argument, "separation_search: delta must be > 0");
    if (n == 0) fail(ErrorCode::invalid_argument, "separation_search: n must be >= 1");
    if (target.dim() != 1)
        fail(ErrorCode::unsupported, "separation_search: only 1-d targets are supported");

    SearchReport report;
    report.trials = trials;
    report.threshold = delta;
    report.seed = seed;
    report.best_distance = std::numeric_limits<double>::infinity();

    struct Local {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_trial = 0;
        std::size_t skipped = 0;
        std::vector<std::pair<std::size_t, double>> trace;
    };
    std::size_t nthreads = thread_budget(trials == 0 ? 1 : trials);
    std::vector<Local> locals(nthreads);

    auto run_trial = [&](std::size_t t, Local& local) {
        std::mt19937_64 rng = trial_rng(seed, t);
        std::vector<ContractiveMap> maps;
        maps.reserve(n);
        for (std::size_t i = 0; i < n; ++i) maps.push_back(sample_map(rng));
        FunctionSystem sys(std::move(maps), 1);
        AttractorResult res = attractor(sys, params.tol, params.max_iter, params.resolution);
        if (!res.converged) {
            ++local.skipped;
            return;
        }
        double d = hausdorff_distance(res.attractor, target).distance;
        if (keep_trace) local.trace.emplace_back(t, d);
        if (d < local.best || (d == local.best && t < local.best_trial)) {
            local.best = d;
            local.best_trial = t;
        }
    };

    if (nthreads == 1) {
        for (std::size_t t = 0; t < trials; ++t) run_trial(t, locals[0]);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < nthreads; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t t = w; t < trials; t += nthreads) run_trial(t, locals[w]);
            });
        }
        for (auto& th : pool) th.join();
    }

    for (const auto& local : locals) {
        report.skipped += local.skipped;
        if (local.best < report.best_distance ||
            (local.best == report.best_distance && local.best_trial < report.best_trial)) {
            report.best_distance = local.best;
            report.best_trial = local.best_trial;
        }
        report.trace.insert(report.trace.end(), local.trace.begin(), local.trace.end());
    }
    std::sort(report.trace.begin(), report.trace.end());

    if (report.best_distance < std::numeric_limits<double>::infinity()) {
        // Rebuild the winning system deterministically from its trial index.
        std::mt19937_64 rng = trial_rng(seed, report.best_trial);
        std::vector<ContractiveMap> maps;
        for (std::size_t i = 0; i < n; ++i) maps.push_back(sample_map(rng));
        report.best_system.emplace(std::move(maps), 1);
    }
    report.violated = report.best_distance < report.threshold;
    return report;
}

CoverageReport coverage_audit_ladder(const LadderWitness& w, const FunctionSystem& sys) {
    if (sys.dim() != 1) fail(ErrorCode::dimension_mismatch, "coverage_audit_ladder: dim != 1");
    CoverageReport report;
    report.targets = w.k;
    std::size_t nmaps = sys.maps().size();
    report.capacity = nmaps * nmaps;

    // Targets: delta-balls around the top block's points y_{n+1,1..k}.
    double delta = to_double(w.delta);
    std::vector<double> centers;
    for (const auto& v : w.x[w.n]) centers.push_back(to_double(v));
    std::vector<double> f_pts;
    for (const auto& v : w.f_points) f_pts.push_back(to_double(v));

    std::vector<bool> covered(w.k, false);
    for (const auto& m : sys.maps()) {
        std::vector<bool> hit(w.k, false);
        for (double p : f_pts) {
            double img = apply(m, Point{{p}}).coords[0];
            for (std::size_t j = 0; j < w.k; ++j) {
                if (std::abs(img - centers[j]) <= delta) hit[j] = true;
            }
        }
        std::size_t hits = 0;
        for (std::size_t j = 0; j < w.k; ++j) {
            if (hit[j]) {
                ++hits;
                covered[j] = true;
            }
        }
        report.per_map_hits.push_back(hits);
    }
    std::size_t covered_count = 0;
    for (std::size_t j = 0; j < w.k; ++j) {
        if (covered[j])
            ++covered_count;
        else
            report.uncovered.push_back(j + 1);
    }
    report.pass = covered_count <= report.capacity;
    return report;
}

CoverageReport coverage_audit_intervals(const IntervalWitness& w, const FunctionSystem& sys,
                                        std::size_t group) {
    if (group == 0 || group > w.depth)
        fail(ErrorCode::invalid_argument, "coverage_audit_intervals: group out of range");
    CoverageReport report;
    report.targets = w.k_seq[group - 1];
    std::size_t nmaps = sys.maps().size();

    // Per-map bound: one full cover per earlier-group component, at most one
    // from the whole same group (any weak-contraction image of a group-`group`
    // interval has diameter < l_group and cannot contain a full target), zero
    // from later groups (their combined measure is below l_group).
    std::size_t earlier = 0;
    for (std::size_t i = 0; i + 1 < group; ++i) earlier += w.k_seq[i];
    report.capacity = nmaps * earlier + nmaps;

    Rational later_measure = 0;
    for (std::size_t m = group; m < w.depth; ++m)
        later_measure += Rational(w.k_seq[m]) * w.lengths[m];
    bool later_zero = later_measure < w.lengths[group - 1];

    for (const auto& m : sys.maps()) {
        double lip = lipschitz_upper_bound(m).upper_bound;
        // Same-group contribution is provably <= 1 only when the map cannot
        // stretch: lip <= 1 for weak contractions.
        std::size_t per_map = earlier + (lip <= 1.0 ? 1 : report.targets);
        report.per_map_hits.push_back(per_map);
    }

    std::size_t total = 0;
    for (std::size_t h : report.per_map_hits) total += h;
    bool pigeonhole = total < report.targets;
    if (pigeonhole) {
        // At least this many targets provably stay uncovered.
        for (std::size_t j = total + 1; j <= report.targets; ++j) report.uncovered.push_back(j);
    }
    report.pass = pigeonhole && later_zero && total <= report.capacity;
    return report;
}

}  // namespace ifsx
