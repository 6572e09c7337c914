#pragma once

#include <vector>

#include "hutchinson.hpp"
#include "rational.hpp"

namespace ifsx {

/// First k rationals of (0,1) in Farey/denominator order:
/// 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ... (reduced fractions by increasing
/// denominator, then increasing numerator). Prefix-stable in k.
struct RationalEnumeration {
    std::vector<Rational> points;
    std::size_t level = 0;  // largest denominator reached
};

RationalEnumeration rational_enumeration(std::size_t k);

/// Piecewise-linear interpolation of a 1-d map at {0,1} plus the first k
/// enumerated rationals; agrees with f exactly at the nodes.
ContractiveMap polygonal_approximant(const ContractiveMap& f, std::size_t k);

/// Lipschitz certificate of a piecewise-linear map, required < 1. A bound
/// >= 1 signals a broken input (the interpolated map was not a weak
/// contraction) and raises an error.
LipschitzCertificate approximant_lipschitz(const ContractiveMap& g);

struct ApproximationStudy {
    struct Entry {
        std::size_t k = 0;
        double lipschitz_max = 0.0;  // max member approximant bound
        double hausdorff = 0.0;      // d_H(A_k, A_ref)
    };
    std::vector<Entry> entries;
    AttractorResult reference;
};

/// For each k in the schedule: interpolate every member, assemble the
/// contraction system, compute its attractor and record the distance to the
/// input system's attractor (computed once at tol/10).
ApproximationStudy approximation_study(const FunctionSystem& sys,
                                       const std::vector<std::size_t>& k_schedule, double tol,
                                       std::size_t max_iter, double resolution);

/// CSV with header `k,lipschitz_max,hausdorff`, 17 significant digits.
std::string study_to_csv(const ApproximationStudy& study);

}  // namespace ifsx
