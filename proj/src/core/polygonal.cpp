#include "polygonal.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>

#include <boost/integer/common_factor.hpp>

namespace ifsx {

RationalEnumeration rational_enumeration(std::size_t k) {
    if (k == 0) fail(ErrorCode::invalid_argument, "rational_enumeration: k must be positive");
    RationalEnumeration out;
    out.points.reserve(k);
    for (unsigned long long q = 2; out.points.size() < k; ++q) {
        for (unsigned long long p = 1; p < q && out.points.size() < k; ++p) {
            if (boost::integer::gcd(p, q) != 1) continue;
            out.points.emplace_back(p, q);
            out.level = q;
        }
    }
    return out;
}

ContractiveMap polygonal_approximant(const ContractiveMap& f, std::size_t k) {
    if (f.dim() != 1)
        fail(ErrorCode::unsupported, "polygonal_approximant: only 1-d maps are supported");
    RationalEnumeration rs = rational_enumeration(k);
    std::vector<double> xs;
    xs.reserve(k + 2);
    xs.push_back(0.0);
    xs.push_back(1.0);
    for (const auto& r : rs.points) xs.push_back(to_double(r));
    std::sort(xs.begin(), xs.end());
    std::vector<double> ys;
    ys.reserve(xs.size());
    for (double x : xs) ys.push_back(apply(f, Point{{x}}).coords[0]);
    return extend_from_finite(xs, ys);
}

LipschitzCertificate approximant_lipschitz(const ContractiveMap& g) {
    if (!std::holds_alternative<PiecewiseLinearMap>(g.variant()))
        fail(ErrorCode::invalid_argument, "approximant_lipschitz: expects a piecewise-linear map");
    LipschitzCertificate cert = lipschitz_upper_bound(g);
    if (!(cert.upper_bound < 1.0))
        fail(ErrorCode::invalid_argument,
             "approximant_lipschitz: interpolant slope >= 1; input was not a weak contraction");
    return cert;
}

ApproximationStudy approximation_study(const FunctionSystem& sys,
                                       const std::vector<std::size_t>& k_schedule, double tol,
                                       std::size_t max_iter, double resolution) {
    if (sys.dim() != 1) fail(ErrorCode::unsupported, "approximation_study: requires dim = 1");
    if (k_schedule.empty())
        fail(ErrorCode::invalid_argument, "approximation_study: empty schedule");
    for (std::size_t i = 0; i + 1 < k_schedule.size(); ++i) {
        if (!(k_schedule[i] < k_schedule[i + 1]))
            fail(ErrorCode::invalid_argument, "approximation_study: schedule must be increasing");
    }

    // Tight reference so the study noise is dominated by the interpolation gap.
    ApproximationStudy study{{}, attractor(sys, tol / 10.0, max_iter, resolution)};
    if (!study.reference.converged)
        fail(ErrorCode::not_converged, "approximation_study: reference attractor did not converge");

    for (std::size_t k : k_schedule) {
        std::vector<ContractiveMap> approx;
        double lip_max = 0.0;
        for (const auto& m : sys.maps()) {
            // Constant members are already contractions and have no polygonal form.
            if (std::holds_alternative<ConstantMap>(m.variant())) {
                approx.push_back(m);
                continue;
            }
            ContractiveMap g = polygonal_approximant(m, k);
            lip_max = std::max(lip_max, approximant_lipschitz(g).upper_bound);
            approx.push_back(std::move(g));
        }
        FunctionSystem approx_sys(std::move(approx), 1);
        AttractorResult res = attractor(approx_sys, tol, max_iter, resolution);
        if (!res.converged)
            fail(ErrorCode::not_converged, "approximation_study: approximant attractor diverged");
        double d = hausdorff_distance(res.attractor, study.reference.attractor).distance;
        study.entries.push_back({k, lip_max, d});
    }
    return study;
}

std::string study_to_csv(const ApproximationStudy& study) {
    std::string out = "k,lipschitz_max,hausdorff\n";
    char buf[64];
    for (const auto& e : study.entries) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", e.k, e.lipschitz_max, e.hausdorff);
        out += buf;
    }
    return out;
}

}  // namespace ifsx
