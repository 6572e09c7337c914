#pragma once

#include <vector>

#include "maps.hpp"

namespace ifsx {

/// An ordered finite family {s_1, ..., s_k} of self-maps of [0,1]^d. The
/// system kind is the weakest kind among members.
class FunctionSystem {
public:
    FunctionSystem(std::vector<ContractiveMap> maps, std::size_t dim);

    const std::vector<ContractiveMap>& maps() const { return maps_; }
    std::size_t dim() const { return dim_; }
    MapKind kind() const { return kind_; }

    /// Max member Lipschitz upper bound.
    double lipschitz_bound() const;

private:
    std::vector<ContractiveMap> maps_;
    std::size_t dim_ = 1;
    MapKind kind_ = MapKind::contraction;
};

struct AttractorResult {
    CompactSet attractor;
    std::size_t iterations = 0;
    double final_step = 0.0;  // d_H between the last two iterates
    double residual = 0.0;    // d_H(S(A), A), computed without re-netting
    bool converged = false;
    /// True when the stop fired at the re-netting floor (successive iterates
    /// stopped moving at resolution scale) rather than at the step tolerance.
    bool resolution_limited = false;
};

/// One application of the set operator S(A) = union of member images,
/// deduplicated; optionally re-netted (resolution > 0).
CompactSet step(const FunctionSystem& sys, const CompactSet& a, double resolution = 0.0);

/// Deterministic set iteration A_{t+1} = renet(S(A_t), resolution) seeded with
/// the member fixed points. Stops when the step distance meets the (Banach
/// certified, for contraction systems) tolerance, or when iterates stop moving
/// beyond the re-netting floor tol + 2*resolution over a 256-iteration window.
AttractorResult attractor(const FunctionSystem& sys, double tol, std::size_t max_iter,
                          double resolution);

/// d_H(S(A), A); the caller compares against its tolerance.
double verify_invariance(const FunctionSystem& sys, const CompactSet& a);

/// Measures d_H(S_k[E_k], S[E]) for a sequence of maps converging to f_limit
/// and sets converging to e_limit.
std::vector<std::pair<std::size_t, double>> image_continuity_probe(
    const std::vector<ContractiveMap>& map_seq, const std::vector<CompactSet>& set_seq,
    const ContractiveMap& f_limit, const CompactSet& e_limit);

}  // namespace ifsx
