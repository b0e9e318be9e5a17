#include "mlp/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mlp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTol = 1e-9;

/// One penalized primal-dual call for fully specified (epsilon, L).
ApproxTour penalized_call(const MetricInstance& inst, double eps, double L) {
    const int n = inst.n;
    const double P = 2.0 * L / (eps * n);
    PctspInstance pc(inst, std::vector<double>(n, P));
    PctspSolution sol = gw_pctsp(pc);

    ApproxTour out;
    out.tour.steps = sol.cycle;
    if (sol.cycle.size() > 1) out.tour.steps.push_back(inst.start);  // close the cycle
    out.visited_count = static_cast<int>(sol.cycle.size());
    out.length = sol.length;
    out.phase_log.push_back({L, out.visited_count, out.length});
    return out;
}

ApproxTour full_tour_call(const MetricInstance& inst) {
    const Tour t = double_mst_tour(inst);
    ApproxTour out;
    out.tour.steps = t.order;
    out.tour.steps.push_back(inst.start);
    out.visited_count = inst.n;
    out.length = tsp_cycle_length(inst, t);
    out.phase_log.push_back({0.0, inst.n, out.length});
    return out;
}

}  // namespace

Tour double_mst_tour(const MetricInstance& inst) {
    const int n = inst.n;
    std::vector<int> parent(n, -1);
    std::vector<double> key(n, kInf);
    std::vector<char> in_mst(n, 0);
    key[inst.start] = 0.0;
    for (int it = 0; it < n; ++it) {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (!in_mst[v] && (u < 0 || key[v] < key[u])) u = v;
        in_mst[u] = 1;
        for (int v = 0; v < n; ++v)
            if (!in_mst[v] && inst.dist(u, v) < key[v]) {
                key[v] = inst.dist(u, v);
                parent[v] = u;
            }
    }
    std::vector<std::vector<int>> children(n);
    for (int v = 0; v < n; ++v)
        if (parent[v] >= 0) children[parent[v]].push_back(v);
    Tour t;
    t.order.reserve(n);
    std::vector<int> stack{inst.start};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        t.order.push_back(u);
        for (auto it = children[u].rbegin(); it != children[u].rend(); ++it) stack.push_back(*it);
    }
    return t;
}

ApproxTour tsp_approximator(const MetricInstance& inst, const ApproximatorCall& call) {
    if (!inst.metric_flag)
        throw std::invalid_argument("tsp_approximator: requires a verified metric");
    if (!call.epsilon && !call.L)
        throw std::invalid_argument("tsp_approximator: at least one of epsilon/L must be given");
    const int n = inst.n;
    if (n == 1) {
        ApproxTour out;
        out.tour.steps = {inst.start};
        out.visited_count = 1;
        return out;
    }

    if (call.epsilon && call.L) {
        if (*call.epsilon == 0.0) {
            ApproxTour out = full_tour_call(inst);
            out.guarantee_vacuous = false;
            return out;
        }
        ApproxTour out = penalized_call(inst, *call.epsilon, *call.L);
        out.guarantee_vacuous = call.vacuous();
        return out;
    }

    if (call.L) {
        // epsilon unknown: sweep epsilon*n = 1..n and keep the tour of length
        // at most beta*L that visits the most vertices.
        const double L = *call.L;
        std::optional<ApproxTour> best;
        ApproxTour last;
        for (int k = 1; k <= n; ++k) {
            ApproxTour cand = penalized_call(inst, static_cast<double>(k) / n, L);
            cand.phase_log.front().param = L;
            if (cand.length <= call.beta * L + kTol) {
                const bool better =
                    !best || cand.visited_count > best->visited_count ||
                    (cand.visited_count == best->visited_count && cand.length < best->length);
                if (better) best = cand;
            }
            last = std::move(cand);
        }
        return best ? *best : last;  // the k = n call always qualifies
    }

    // L unknown: doubling grid from the normalized unit distance; accept the
    // smallest L whose output meets both halves of the contract.
    const double eps = *call.epsilon;
    if (eps <= 0.0) throw std::invalid_argument("tsp_approximator: epsilon must be positive");
    const int target = std::max(1, static_cast<int>(std::ceil((1.0 - call.alpha * eps) * n - kTol)));
    const double cap = 4.0 * inst.sum_of_distances();
    for (double L = 1.0; L <= cap; L *= 2.0) {
        ApproxTour cand = penalized_call(inst, eps, L);
        if (cand.visited_count >= target && cand.length <= call.beta * L + kTol) {
            cand.guarantee_vacuous = call.vacuous();
            return cand;
        }
    }
    ApproxTour out = full_tour_call(inst);  // unreachable for sane inputs
    out.guarantee_vacuous = call.vacuous();
    return out;
}

namespace {

/// Shared phase-concatenation driver for the two MLT schemes.
ApproxTour run_phases(const MetricInstance& inst, bool doubling_scheme) {
    ApproxTour out;
    out.tour.steps = {inst.start};
    out.visited_count = 1;
    if (inst.n == 1) return out;

    auto [ninst, scale] = normalize(inst);
    const int n = ninst.n;
    std::vector<char> seen(n, 0);
    seen[inst.start] = 1;
    int covered = 1;

    const double cap = 4.0 * ninst.sum_of_distances();
    double L = 2.0;
    double eps = 0.5;
    while (true) {
        ApproximatorCall call;
        if (doubling_scheme)
            call.L = L;
        else
            call.epsilon = eps;
        ApproxTour phase;
        bool fallback = doubling_scheme ? L > cap : eps < 1.0 / (16.0 * n);
        if (fallback)
            phase = full_tour_call(ninst);
        else
            phase = tsp_approximator(ninst, call);

        int added = 0;
        for (std::size_t k = 1; k < phase.tour.steps.size(); ++k) {
            const int v = phase.tour.steps[k];
            out.tour.steps.push_back(v);
            if (!seen[v]) {
                seen[v] = 1;
                ++added;
            }
        }
        covered += added;
        out.phase_log.push_back({doubling_scheme ? L : eps, added, phase.length});
        if (covered == n || fallback) break;
        if (doubling_scheme)
            L *= 2.0;
        else
            eps /= 2.0;
    }
    out.visited_count = covered;
    out.length = walk_length(inst, out.tour);
    return out;
}

}  // namespace

ApproxTour mlt_approx_doubling(const MetricInstance& inst) {
    if (!inst.metric_flag)
        throw std::invalid_argument("mlt_approx_doubling: requires a verified metric");
    return run_phases(inst, /*doubling_scheme=*/true);
}

ApproxTour mlt_approx_epsilon(const MetricInstance& inst) {
    if (!inst.metric_flag)
        throw std::invalid_argument("mlt_approx_epsilon: requires a verified metric");
    return run_phases(inst, /*doubling_scheme=*/false);
}

TdtspApproxResult tdtsp_positive_linear(const MetricInstance& inst, const TdtspCoefficients& c) {
    if (c.orientation == TdtspOrientation::NegativeLinear)
        throw std::invalid_argument(
            "tdtsp_positive_linear: negative-linear costs are handled by "
            "greedy_negative_linear");
    if (c.a < 0.0 || c.b < 0.0)
        throw std::invalid_argument("tdtsp_positive_linear: coefficients must be nonnegative");
    if (c.a == 0.0 && c.b == 0.0)
        throw std::invalid_argument("tdtsp_positive_linear: coefficients must not both be zero");

    const ApproxTour walk = mlt_approx_doubling(inst);
    Tour tour = shortcut(inst, walk.tour);
    if (c.orientation == TdtspOrientation::ReversedLinear) {
        std::reverse(tour.order.begin(), tour.order.end());
        return {tour, tdtsp_cost(inst, tour, c)};
    }
    return {tour, tdtsp_cost(inst, tour, c)};
}

GreedyNegResult greedy_negative_linear(const MetricInstance& inst) {
    const int n = inst.n;
    GreedyNegResult res;
    res.tour.order.reserve(n);
    res.tour.order.push_back(inst.start);
    std::vector<char> seen(n, 0);
    seen[inst.start] = 1;
    int cur = inst.start;
    for (int step = 1; step < n; ++step) {
        int far = -1;
        for (int v = 0; v < n; ++v) {
            if (seen[v]) continue;
            if (far < 0 || inst.dist(cur, v) > inst.dist(cur, far)) far = v;
        }
        seen[far] = 1;
        res.tour.order.push_back(far);
        cur = far;
    }
    res.max_latency = total_latency(inst, res.tour);
    res.length = walk_length(inst, as_walk(res.tour));
    return res;
}

LineDoublingResult line_doubling(const LineInstance& l, SweepDirection first) {
    const MetricInstance metric = line_to_metric(l);
    const int n = l.n();
    LineDoublingResult res;
    res.walk.steps = {metric.start};

    std::vector<char> seen(n, 0);
    double value = 0.0;
    int remaining = n;
    double min_nonzero = kInf;
    for (int i = 0; i < n; ++i) {
        const double off = l.coords[i] - l.start;
        if (off == 0.0) {
            seen[i] = 1;
            --remaining;
            if (line_point_vertex(l, i) != metric.start)
                res.walk.steps.push_back(line_point_vertex(l, i));
        } else {
            min_nonzero = std::min(min_nonzero, std::abs(off));
        }
    }
    if (remaining == 0) {
        res.value = 0.0;
        return res;
    }

    // Points by side, ordered by increasing distance from the start.
    std::vector<std::pair<double, int>> rightp, leftp;  // (|offset|, index)
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        const double off = l.coords[i] - l.start;
        (off > 0 ? rightp : leftp).emplace_back(std::abs(off), i);
    }
    std::sort(rightp.begin(), rightp.end());
    std::sort(leftp.begin(), leftp.end());
    std::size_t ri = 0, li = 0;

    bool go_right;
    switch (first) {
        case SweepDirection::Right: go_right = true; break;
        case SweepDirection::Left: go_right = false; break;
        default: {
            const double nr = ri < rightp.size() ? rightp[ri].first : kInf;
            const double nl = li < leftp.size() ? leftp[li].first : kInf;
            go_right = nr <= nl;  // ties to the right
        }
    }

    double traveled = 0.0;
    double budget = min_nonzero;
    while (remaining > 0) {
        auto& pts = go_right ? rightp : leftp;
        auto& idx = go_right ? ri : li;
        const double ext = idx < pts.size() ? pts.back().first : 0.0;
        // Clip at the extreme remaining point; an exhausted side still gets
        // its full-budget excursion (the blind doubling schedule).
        const double reach = ext > 0.0 ? std::min(budget, ext) : budget;
        while (idx < pts.size() && pts[idx].first <= reach + 1e-12) {
            value += traveled + pts[idx].first;
            res.walk.steps.push_back(line_point_vertex(l, pts[idx].second));
            --remaining;
            ++idx;
        }
        if (remaining == 0) break;
        traveled += 2.0 * reach;
        if (res.walk.steps.back() != metric.start) res.walk.steps.push_back(metric.start);
        budget *= 2.0;
        go_right = !go_right;
    }
    res.value = value;
    return res;
}

}  // namespace mlp
