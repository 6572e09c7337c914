#pragma once

#include <string>
#include <vector>

#include "hutchinson.hpp"
#include "rational.hpp"

namespace ifsx {

/// One audited side condition of a construction. Margins are exact-rational
/// slack converted to double; a failing entry is a build bug, never a
/// tolerance artifact.
struct AuditEntry {
    std::string condition;
    bool pass = false;
    double margin = 0.0;
    std::string note;
};

struct AuditReport {
    std::vector<AuditEntry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

/// Countable compact set X = {0} ∪ {x_n}: k_n points per annulus
/// (t_{n+1}, t_n] where t_1 = 1/2 and t_{n+1} = t_n - t_n^2. Generated by the
/// two-map system {g, h} with g(x_n) = x_{n+1}, g(0) = 0 and h ≡ x_1. The last
/// point is a sentinel: it is mapped to but has no prescribed g-value, and the
/// invariance audit quantifies over the truncation minus the sentinel.
struct PropPWitness {
    std::size_t depth = 0;
    std::vector<Rational> interval_tops;  // t_1 .. t_{depth+1}
    std::vector<std::size_t> counts;      // k_1 .. k_depth
    std::vector<Rational> x_points;       // x_1 > x_2 > ... (all > 0)
    FunctionSystem system;                // {g, h}
    AuditReport audit;
};

/// depth >= 2; point placement is infeasible beyond depth 3 under the fixed
/// gap ratio (the error names the offending annulus).
PropPWitness build_prop_p(std::size_t depth);

/// Finite set F of (n+1) blocks of k = n^2+1 points each, with its generating
/// system of n+1 piecewise-linear contractions and the separation radius
/// delta = (1/4) a_{n+1} (9/10)^{k-2} = (min pairwise gap)/4.
struct LadderWitness {
    std::size_t n = 0;
    std::size_t k = 0;                      // n^2 + 1
    std::vector<Rational> a;                // a_1 .. a_{n+1}
    std::vector<Rational> b;                // b_1 .. b_n
    std::vector<std::vector<Rational>> x;   // x[i][j] = x_{i+1,j+1}
    std::vector<Rational> f_points;         // all points, ascending
    Rational delta;
    FunctionSystem system;                  // f_1 .. f_{n+1}
    AuditReport audit;
};

LadderWitness build_ladder(std::size_t n);

/// Cascade of interval groups: group n holds k_n intervals of equal length
/// l_n, intra-group gaps l_n, inter-group gap l_{n+1}, anchored at
/// max I_1^1 = 1/2 with minimal endpoint 2^{-(depth+1)}.
struct IntervalWitness {
    struct Interval {
        std::size_t group = 0;  // 1-based
        std::size_t index = 0;  // 1-based within the group
        Rational lo;
        Rational hi;
    };

    std::size_t depth = 0;
    std::vector<std::size_t> k_seq;   // k_1 .. k_depth
    std::vector<Rational> lengths;    // l_1 .. l_depth
    Rational anchor;                  // max I_1^1
    Rational beta;                    // min endpoint of the truncation
    std::vector<Interval> intervals;  // descending by lo
    AuditReport audit;
};

IntervalWitness build_interval_witness(std::size_t depth);

/// k_1 = 1, k_n = n * (sum_{i<n} k_i) + 1 + n.
std::size_t k_sequence(std::size_t n);

/// y_1 = start, y_{i+1} = max{0, y_i - epsilon/(i+1)}; the list ends at the
/// first zero and i0 is its 1-based index.
std::pair<std::vector<double>, std::size_t> y_sequence(double start, double epsilon);

/// Finite epsilon-net of the truncated cascade set (interval endpoints plus a
/// uniform grid at `resolution`, and the accumulation point 0).
CompactSet interval_net(const IntervalWitness& w, double resolution);

/// Two-map contraction system whose attractor is epsilon-close to the
/// truncated cascade set: f1 shifts interval endpoints down one step and walks
/// the y-chain to 0; f2 is the decreasing affine map onto I_1^1.
struct EpsilonSystem {
    double epsilon = 0.0;
    std::size_t n_swallow = 0;
    double alpha = 0.0;  // top of the swallowed tail [0, alpha)
    std::vector<double> y_seq;
    std::size_t i0 = 0;
    FunctionSystem system;  // {f1, f2}
    AttractorResult attractor;
    AuditReport audit;
};

EpsilonSystem build_epsilon_system(const IntervalWitness& w, double epsilon, double tol,
                                   std::size_t max_iter, double resolution);

}  // namespace ifsx
