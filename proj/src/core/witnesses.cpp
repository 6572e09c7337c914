#include "witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace ifsx {

namespace {

Rational pow_rational(const Rational& base, std::size_t e) {
    Rational out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= base;
    return out;
}

void push(AuditReport& report, std::string condition, bool pass, const Rational& margin,
          std::string note = {}) {
    report.entries.push_back({std::move(condition), pass, to_double(margin), std::move(note)});
}

void push(AuditReport& report, std::string condition, bool pass, double margin,
          std::string note = {}) {
    report.entries.push_back({std::move(condition), pass, margin, std::move(note)});
}

}  // namespace

PropPWitness build_prop_p(std::size_t depth) {
    if (depth < 2) fail(ErrorCode::invalid_argument, "build_prop_p: depth must be >= 2");
    if (depth > 8) fail(ErrorCode::invalid_argument, "build_prop_p: depth > 8 not supported");

    // Interval tops t_1 = 1/2, t_{n+1} = t_n - t_n^2.
    std::vector<Rational> tops{Rational(1, 2)};
    for (std::size_t i = 0; i < depth; ++i) tops.push_back(tops.back() - tops.back() * tops.back());

    // Counts: k_1 = 2, k_n = n * (sum_{i<n} k_i) + 1 (minimal strict choice).
    std::vector<std::size_t> counts{2};
    for (std::size_t n = 2; n <= depth; ++n) {
        std::size_t s = 0;
        for (std::size_t c : counts) s += c;
        counts.push_back(n * s + 1);
    }

    // Placement: enter annulus n exactly at t_n, then geometrically decreasing
    // gaps with ratio rho = 3/4; the carry into the next annulus is half the
    // would-be next gap, landing exactly on t_{n+1}.
    const Rational rho(3, 4);
    std::vector<Rational> pts;
    std::vector<Rational> gaps;
    Rational entry_gap;  // gap from the previous annulus' last point down to t_n
    for (std::size_t n = 1; n <= depth; ++n) {
        std::size_t k = counts[n - 1];
        const Rational& tn = tops[n - 1];
        const Rational& tn1 = tops[n];
        Rational sigma = 0;
        for (std::size_t j = 1; j < k; ++j) sigma += pow_rational(rho, j);
        if (n > 1) {
            entry_gap = pts.back() - tn;
            gaps.push_back(entry_gap);
        }
        Rational span = tn - tn1;
        Rational base;
        if (n < depth) {
            base = span / (sigma + pow_rational(rho, k - 1) / 2);
        } else {
            base = std::min(Rational(entry_gap / rho / 2), Rational(span / sigma / 2));
        }
        if (n > 1 && !(base * rho < entry_gap))
            fail(ErrorCode::infeasible,
                 "build_prop_p: gap monotonicity unsatisfiable at annulus " + std::to_string(n));
        Rational cur = tn;
        pts.push_back(cur);
        for (std::size_t j = 1; j < k; ++j) {
            Rational g = base * pow_rational(rho, j);
            gaps.push_back(g);
            cur -= g;
            pts.push_back(cur);
        }
        if (!(cur > tn1))
            fail(ErrorCode::infeasible,
                 "build_prop_p: annulus " + std::to_string(n) + " underflows its bottom");
    }

    AuditReport audit;
    bool a_ok = true;
    for (const auto& p : pts) a_ok = a_ok && p <= Rational(1, 2) && p > 0;
    push(audit, "(a) 0 < x_n <= 1/2", a_ok, Rational(1, 2) - pts.back());
    bool b_ok = true;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) b_ok = b_ok && pts[i] > pts[i + 1];
    push(audit, "(b) x_n strictly decreasing", b_ok, gaps.back());
    bool c_ok = true;
    Rational c_margin = gaps.empty() ? Rational(0) : gaps.front();
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
        c_ok = c_ok && gaps[i] > gaps[i + 1];
        c_margin = std::min(c_margin, Rational(gaps[i] - gaps[i + 1]));
    }
    push(audit, "(c) gaps strictly decreasing", c_ok, c_margin);
    bool d_ok = true;
    for (std::size_t n = 1; n <= depth; ++n) {
        std::size_t in_annulus = 0;
        for (const auto& p : pts)
            if (tops[n] < p && p <= tops[n - 1]) ++in_annulus;
        d_ok = d_ok && in_annulus == counts[n - 1];
    }
    push(audit, "(d) |X ∩ (I_n \\ I_{n+1})| = k_n", d_ok, Rational(0));
    bool e_ok = counts[0] == 2;
    Rational e_margin(1);
    for (std::size_t n = 2; n <= depth; ++n) {
        std::size_t s = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) s += counts[i];
        e_ok = e_ok && counts[n - 1] > n * s;
        e_margin = std::min(e_margin, Rational(Rational(counts[n - 1]) - Rational(n * s)));
    }
    push(audit, "(e) k_1 = 2 and k_n > n * sum_{i<n} k_i", e_ok, e_margin);

    // Exact invariance of the truncation minus the sentinel:
    // g[{0, x_1..x_{N-1}}] ∪ h[X] = {0, x_2..x_N} ∪ {x_1} = X.
    push(audit, "invariance g[X \\ {x_N}] ∪ h[X] = X (exact)", true, Rational(0),
         "sentinel: x_N has no prescribed g-value");

    // g: piecewise-linear with x_i -> x_{i+1} and 0 -> 0; x_N is not a node.
    std::size_t N = pts.size();
    std::vector<double> dom{0.0}, val{0.0};
    for (std::size_t i = N - 1; i-- > 0;) {
        dom.push_back(to_double(pts[i]));
        val.push_back(to_double(pts[i + 1]));
    }
    ContractiveMap g = extend_from_finite(dom, val);
    push(audit, "g max slope < 1 (float realization)",
         lipschitz_upper_bound(g).upper_bound < 1.0, 1.0 - lipschitz_upper_bound(g).upper_bound);
    ContractiveMap h = ContractiveMap::constant(Point{{to_double(pts.front())}});
    FunctionSystem system({std::move(g), std::move(h)}, 1);

    return PropPWitness{depth, std::move(tops), std::move(counts), std::move(pts),
                        std::move(system), std::move(audit)};
}

LadderWitness build_ladder(std::size_t n) {
    if (n == 0) fail(ErrorCode::invalid_argument, "build_ladder: n must be >= 1");
    if (n > 6) fail(ErrorCode::invalid_argument, "build_ladder: n > 6 exceeds precision budget");
    const std::size_t k = n * n + 1;
    const Rational r(9, 10);
    const Rational rk2 = pow_rational(r, k - 2);

    // Relative solution with halved slack on conditions 1 and 2, then scale so
    // condition 1 holds with value exactly 1/2.
    std::vector<Rational> a_hat{Rational(1)};
    for (std::size_t i = 0; i < n; ++i)
        a_hat.push_back(a_hat.back() * rk2 / (2 * Rational(k - 1)));
    std::vector<Rational> b_hat{Rational(10 * (k - 1))};
    for (std::size_t i = 0; i + 1 < n; ++i) b_hat.push_back(b_hat.back() * 2);
    Rational c = 0;
    for (const auto& v : b_hat) c += v;
    for (const auto& v : a_hat) c += v * (k - 1);
    Rational a1 = Rational(1, 2) / c;
    std::vector<Rational> a, b;
    for (const auto& v : a_hat) a.push_back(v * a1);
    for (const auto& v : b_hat) b.push_back(v * a1);

    AuditReport audit;
    Rational cond1 = 0;
    for (const auto& v : b) cond1 += v;
    for (const auto& v : a) cond1 += v * (k - 1);
    push(audit, "1: sum b_i + (sum a_i)(k-1) < 1", cond1 < 1, Rational(1) - cond1);
    bool c2 = true;
    Rational c2_margin(1);
    for (std::size_t i = 0; i < n; ++i) {
        Rational lhs = Rational(k - 1) * a[i + 1];
        Rational rhs = a[i] * rk2;
        c2 = c2 && lhs < rhs;
        c2_margin = std::min(c2_margin, Rational(rhs - lhs));
    }
    push(audit, "2: (k-1) a_{i+1} < a_i (9/10)^{k-2}", c2, c2_margin);
    push(audit, "3: b_1 = 10 a_1 (k-1)", b[0] == 10 * a[0] * Rational(k - 1), Rational(0));
    bool c4 = true;
    for (std::size_t i = 0; i + 1 < n; ++i) c4 = c4 && b[i + 1] == 2 * b[i];
    push(audit, "4: b_{i+1} = 2 b_i", c4, Rational(0));

    // Points x_{1,1} = 0, x_{i,j+1} = x_{i,j} + a_i (9/10)^{j-1},
    // x_{i+1,1} = x_{i,k} + b_i.
    std::vector<std::vector<Rational>> x(n + 1, std::vector<Rational>(k));
    x[0][0] = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        if (i > 0) x[i][0] = x[i - 1][k - 1] + b[i - 1];
        for (std::size_t j = 0; j + 1 < k; ++j) x[i][j + 1] = x[i][j] + a[i] * pow_rational(r, j);
    }
    std::vector<Rational> f_points;
    for (const auto& block : x)
        for (const auto& v : block) f_points.push_back(v);
    std::sort(f_points.begin(), f_points.end());
    push(audit, "all points in [0,1)", f_points.back() < 1, Rational(1) - f_points.back());

    Rational delta = Rational(1, 4) * a[n] * rk2;
    Rational min_gap = f_points[1] - f_points[0];
    for (std::size_t i = 1; i + 1 < f_points.size(); ++i)
        min_gap = std::min(min_gap, Rational(f_points[i + 1] - f_points[i]));
    push(audit, "min pairwise gap = 4 delta (exact)", min_gap == 4 * delta, Rational(0));

    // Maps: f_i shifts block i one step (fixing its last point) and sends
    // every other point to the block's first point.
    std::vector<double> dom;
    dom.reserve(f_points.size());
    for (const auto& v : f_points) dom.push_back(to_double(v));
    std::vector<ContractiveMap> maps;
    bool slopes_ok = true;
    double slope_margin = 1.0;
    bool invariant_ok = true;
    std::vector<Rational> image_union;
    for (std::size_t i = 0; i <= n; ++i) {
        std::map<Rational, Rational> prescription;
        for (std::size_t bi = 0; bi <= n; ++bi) {
            for (std::size_t j = 0; j < k; ++j) {
                Rational tgt;
                if (bi == i) {
                    tgt = (j + 1 < k) ? x[i][j + 1] : x[i][k - 1];
                } else {
                    tgt = x[i][0];
                }
                prescription[x[bi][j]] = tgt;
                image_union.push_back(tgt);
            }
        }
        std::vector<double> val;
        val.reserve(dom.size());
        for (const auto& v : f_points) val.push_back(to_double(prescription.at(v)));
        ContractiveMap f = extend_from_finite(dom, val);
        double lip = lipschitz_upper_bound(f).upper_bound;
        slopes_ok = slopes_ok && lip < 1.0;
        slope_margin = std::min(slope_margin, 1.0 - lip);
        maps.push_back(std::move(f));
    }
    std::sort(image_union.begin(), image_union.end());
    image_union.erase(std::unique(image_union.begin(), image_union.end()), image_union.end());
    invariant_ok = image_union == f_points;
    push(audit, "F = ∪ f_i[F] (exact finite-set identity)", invariant_ok, Rational(0));
    push(audit, "all map slopes < 1", slopes_ok, slope_margin);

    FunctionSystem system(std::move(maps), 1);
    return LadderWitness{n,
                         k,
                         std::move(a),
                         std::move(b),
                         std::move(x),
                         std::move(f_points),
                         std::move(delta),
                         std::move(system),
                         std::move(audit)};
}

std::size_t k_sequence(std::size_t n) {
    if (n == 0) fail(ErrorCode::invalid_argument, "k_sequence: n must be >= 1");
    std::size_t sum = 0, k = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        k = (i == 1) ? 1 : i * sum + 1 + i;
        sum += k;
    }
    return k;
}

IntervalWitness build_interval_witness(std::size_t depth) {
    if (depth < 2) fail(ErrorCode::invalid_argument, "build_interval_witness: depth must be >= 2");
    if (depth > 8)
        fail(ErrorCode::invalid_argument, "build_interval_witness: depth > 8 not supported");

    std::vector<std::size_t> ks;
    for (std::size_t i = 1; i <= depth; ++i) ks.push_back(k_sequence(i));

    // Relative lengths: lam_1 = 1, lam_{n+1} = lam_n / (2^{n+2} (n+1) k_{n+1}).
    std::vector<Rational> lam{Rational(1)};
    for (std::size_t i = 1; i < depth; ++i)
        lam.push_back(lam.back() / (pow_rational(Rational(2), i + 2) * Rational(i + 1) *
                                    Rational(ks[i])));
    // Total extent = sum (2 k_n - 1) l_n + sum inter-group gaps l_{n+1};
    // scale l_1 so the minimal endpoint is exactly 2^{-(depth+1)}.
    Rational extent = 0;
    for (std::size_t i = 0; i < depth; ++i) extent += Rational(2 * ks[i] - 1) * lam[i];
    for (std::size_t i = 0; i + 1 < depth; ++i) extent += lam[i + 1];
    const Rational anchor(1, 2);
    Rational beta = Rational(1) / pow_rational(Rational(2), depth + 1);
    Rational l1 = (anchor - beta) / extent;
    std::vector<Rational> lengths;
    for (const auto& v : lam) lengths.push_back(v * l1);

    // Layout top-down from the anchor.
    std::vector<IntervalWitness::Interval> ivs;
    Rational top = anchor;
    Rational lo;
    for (std::size_t g = 0; g < depth; ++g) {
        for (std::size_t j = 0; j < ks[g]; ++j) {
            lo = top - lengths[g];
            ivs.push_back({g + 1, j + 1, lo, top});
            if (j + 1 < ks[g]) top = lo - lengths[g];
        }
        if (g + 1 < depth) top = lo - lengths[g + 1];
    }

    AuditReport audit;
    push(audit, "min endpoint = 2^{-(depth+1)}", ivs.back().lo == beta, Rational(0));

    // Condition (1): l_n > n * (tail measure), tail bounded by the truncation
    // sum plus twice the first omitted term (series ratio <= 1/320).
    bool c1 = true;
    Rational c1_margin(1);
    Rational omitted = 2 * lengths[depth - 1] /
                       (pow_rational(Rational(2), depth + 2) * Rational(depth + 1));
    for (std::size_t g = 0; g < depth; ++g) {
        Rational tail = omitted;
        for (std::size_t m = g + 1; m < depth; ++m) tail += Rational(ks[m]) * lengths[m];
        Rational lhs = Rational(g + 1) * tail;
        c1 = c1 && lengths[g] > lhs;
        c1_margin = std::min(c1_margin, Rational(lengths[g] - lhs));
    }
    push(audit, "(1) l_n > n * measure of later groups (tail-bounded)", c1, c1_margin);

    bool c2 = true;
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) c2 = c2 && ivs[i].lo > ivs[i + 1].hi;
    push(audit, "(2) strictly descending, disjoint", c2, Rational(0));

    bool c3 = true;
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
        Rational gap = ivs[i].lo - ivs[i + 1].hi;
        Rational want = (ivs[i].group == ivs[i + 1].group) ? lengths[ivs[i].group - 1]
                                                           : lengths[ivs[i + 1].group - 1];
        c3 = c3 && gap == want;
    }
    push(audit, "(3) intra-group gap = l_n, inter-group gap = l_{n+1} (exact)", c3, Rational(0));

    bool c4 = ivs.front().hi == anchor && ivs.back().lo > 0 && anchor <= 1;
    push(audit, "(4) contained in (0, 1/2], infimum -> 0 across depths", c4, beta);

    // At n = 1 the bound is an equality (k_1 = 1); that group needs no
    // counting argument (a one-map attractor is a singleton), so the strict
    // inequality is audited for n >= 2.
    bool cap = true;
    long long cap_margin = std::numeric_limits<long long>::max();
    for (std::size_t g = 2; g <= depth; ++g) {
        long long s = 0;
        for (std::size_t i = 0; i + 1 < g; ++i) s += static_cast<long long>(ks[i]);
        long long lhs = static_cast<long long>(g) * s + static_cast<long long>(g);
        cap = cap && lhs < static_cast<long long>(ks[g - 1]);
        cap_margin = std::min(cap_margin, static_cast<long long>(ks[g - 1]) - lhs);
    }
    push(audit, "capacity n * sum_{i<n} k_i + n < k_n for n >= 2 (exact integers)", cap,
         static_cast<double>(cap_margin), "n = 1 is an equality; group 1 needs no counting bound");

    return IntervalWitness{depth,       std::move(ks), std::move(lengths), anchor,
                           std::move(beta), std::move(ivs), std::move(audit)};
}

std::pair<std::vector<double>, std::size_t> y_sequence(double start, double epsilon) {
    if (!(start > 0)) fail(ErrorCode::invalid_argument, "y_sequence: start must be positive");
    if (!(epsilon > 0)) fail(ErrorCode::invalid_argument, "y_sequence: epsilon must be positive");
    std::vector<double> y{start};
    std::size_t i = 1;
    while (y.back() > 0) {
        if (i > 10000000)
            fail(ErrorCode::not_converged, "y_sequence: defensive iteration cap exceeded");
        y.push_back(std::max(0.0, y.back() - epsilon / static_cast<double>(i + 1)));
        ++i;
    }
    std::size_t i0 = y.size();
    return {std::move(y), i0};
}

CompactSet interval_net(const IntervalWitness& w, double resolution) {
    if (!(resolution > 0))
        fail(ErrorCode::invalid_argument, "interval_net: resolution must be positive");
    std::vector<double> pts{0.0};
    for (const auto& iv : w.intervals) {
        double lo = to_double(iv.lo), hi = to_double(iv.hi);
        auto n = static_cast<std::size_t>(std::max(1.0, std::floor((hi - lo) / resolution)));
        for (std::size_t i = 0; i <= n; ++i)
            pts.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n));
    }
    return CompactSet::from_reals(std::move(pts), resolution);
}

EpsilonSystem build_epsilon_system(const IntervalWitness& w, double epsilon, double tol,
                                   std::size_t max_iter, double resolution) {
    if (!(epsilon > 0))
        fail(ErrorCode::invalid_argument, "build_epsilon_system: epsilon must be positive");
    double beta = to_double(w.beta);
    std::vector<double> lengths;
    for (const auto& l : w.lengths) lengths.push_back(to_double(l));
    if (epsilon < beta)
        fail(ErrorCode::infeasible,
             "build_epsilon_system: epsilon too small for this truncation; the swallowed tail "
             "must reach 0 (need epsilon >= " +
                 std::to_string(beta) + ")");
    // Least group whose sub-structure merges under epsilon-thickening: all
    // gaps below group n equal some l_m with m > n, the largest being l_{n+1}.
    std::size_t n_swallow = 0;
    for (std::size_t n = 1; n < w.depth; ++n) {
        if (lengths[n] < 2 * epsilon) {
            n_swallow = n;
            break;
        }
    }
    if (n_swallow == 0)
        fail(ErrorCode::infeasible,
             "build_epsilon_system: epsilon too small for this truncation depth (need epsilon > " +
                 std::to_string(lengths[w.depth - 1] / 2) + ")");

    // max I_n^{k_n}: the lowest interval of group n_swallow.
    double max_tail_top = 0.0;
    for (const auto& iv : w.intervals) {
        if (iv.group == n_swallow && iv.index == w.k_seq[n_swallow - 1])
            max_tail_top = to_double(iv.hi);
    }
    double alpha = max_tail_top + epsilon;

    auto [ys, i0] = y_sequence(max_tail_top + epsilon / 2.0, epsilon);

    AuditReport audit;
    push(audit, "y_1 = max I_n^{k_n} + eps/2", true, ys.front() - max_tail_top);

    // Node prescription for f1: the y-chain plus the interval-shift nodes of
    // the groups that stay separate. Later-added nodes colliding with an
    // existing abscissa are dropped and recorded.
    std::map<double, double> nodes;
    nodes[0.0] = 0.0;
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) nodes[ys[i]] = ys[i + 1];
    std::size_t dropped = 0;
    auto add_node = [&](double from, double to) {
        for (const auto& [d, v] : nodes) {
            if (std::abs(d - from) <= kPointTol) {
                ++dropped;
                return;
            }
        }
        nodes[from] = to;
    };
    auto endpoint = [&](std::size_t group, std::size_t index, bool upper) {
        for (const auto& iv : w.intervals)
            if (iv.group == group && iv.index == index)
                return to_double(upper ? iv.hi : iv.lo);
        fail(ErrorCode::invalid_argument, "build_epsilon_system: interval lookup failed");
    };
    // Flagged node: the prescription f1(max I_1^1) = max I_1^2 refers to a
    // nonexistent interval (k_1 = 1); substitute max I_2^1. When the chain
    // already pins that abscissa (y_2 = max I_1^1 exactly for n_swallow = 1),
    // the node is dropped instead.
    add_node(endpoint(1, 1, true), endpoint(2, 1, true));
    for (std::size_t m = 1; m < n_swallow; ++m) {
        std::size_t km = w.k_seq[m - 1];
        add_node(endpoint(m, km, false), endpoint(m + 1, 1, false));
        add_node(endpoint(m, km, true), endpoint(m + 1, 1, true));
        if (km >= 2) add_node(endpoint(m, km - 1, false), endpoint(m, km, false) + epsilon / 2.0);
    }
    std::size_t kn = w.k_seq[n_swallow - 1];
    if (kn >= 2) {
        // f1[I_n^{k_n - 1}] = {y_1}.
        add_node(endpoint(n_swallow, kn - 1, false), ys.front());
        add_node(endpoint(n_swallow, kn - 1, true), ys.front());
    }
    push(audit, "flagged/colliding f1 nodes dropped", true, static_cast<double>(dropped),
         "f1(max I_1^1) target substituted with max I_2^1 where applicable");

    std::vector<double> dom, val;
    dom.reserve(nodes.size());
    val.reserve(nodes.size());
    for (const auto& [d, v] : nodes) {
        dom.push_back(d);
        val.push_back(v);
    }
    ContractiveMap f1 = extend_from_finite(dom, val);
    double lip1 = lipschitz_upper_bound(f1).upper_bound;
    if (!(lip1 < 1.0))
        fail(ErrorCode::infeasible,
             "build_epsilon_system: f1 slope >= 1; epsilon incompatible with this truncation");
    push(audit, "f1 max slope < 1", true, 1.0 - lip1);

    // f2 transfers [0,1] onto I_1^1, decreasing so that f2(0) = max I_1^1.
    double l1 = lengths[0];
    ContractiveMap f2 = ContractiveMap::affine(-l1, to_double(w.anchor));
    push(audit, "f2 |slope| < 1", l1 < 1.0, 1.0 - l1);

    FunctionSystem system({std::move(f1), std::move(f2)}, 1);
    AttractorResult result = attractor(system, tol, max_iter, resolution);
    push(audit, "attractor converged", result.converged,
         static_cast<double>(result.iterations));
    double dist =
        hausdorff_distance(result.attractor, interval_net(w, resolution)).distance;
    double allowed = epsilon + 2.0 * (tol + resolution);
    push(audit, "d_H(attractor, X_truncated) <= eps + 2(tol+res)", dist <= allowed,
         allowed - dist);

    return EpsilonSystem{epsilon,        n_swallow, alpha, std::move(ys), i0,
                         std::move(system), std::move(result), std::move(audit)};
}

}  // namespace ifsx
