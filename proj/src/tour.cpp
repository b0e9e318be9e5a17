#include "mlp/tour.hpp"

#include <stdexcept>
#include <string>

namespace mlp {

void validate_tour(const MetricInstance& inst, const Tour& t) {
    if (t.order.size() != static_cast<std::size_t>(inst.n))
        throw std::invalid_argument("tour: expected " + std::to_string(inst.n) + " vertices, got " +
                                    std::to_string(t.order.size()));
    if (t.order.empty() || t.order.front() != inst.start)
        throw std::invalid_argument("tour: must begin at the start vertex");
    std::vector<char> seen(inst.n, 0);
    for (int v : t.order) {
        if (v < 0 || v >= inst.n) throw std::invalid_argument("tour: vertex out of range");
        if (seen[v]) throw std::invalid_argument("tour: vertex " + std::to_string(v) + " repeated");
        seen[v] = 1;
    }
}

void validate_walk(const MetricInstance& inst, const Walk& w, bool require_complete) {
    if (w.steps.empty()) throw std::invalid_argument("walk: empty");
    if (w.steps.front() != inst.start)
        throw std::invalid_argument("walk: must begin at the start vertex");
    std::vector<char> seen(inst.n, 0);
    for (int v : w.steps) {
        if (v < 0 || v >= inst.n) throw std::invalid_argument("walk: vertex out of range");
        seen[v] = 1;
    }
    if (require_complete)
        for (int v = 0; v < inst.n; ++v)
            if (!seen[v])
                throw std::invalid_argument("walk: vertex " + std::to_string(v) + " never visited");
}

std::vector<VertexLatency> latency_profile(const MetricInstance& inst, const Walk& w) {
    validate_walk(inst, w);
    std::vector<VertexLatency> out;
    out.reserve(inst.n);
    std::vector<char> seen(inst.n, 0);
    double traveled = 0.0;
    seen[w.steps.front()] = 1;
    out.push_back({w.steps.front(), 0.0});
    for (std::size_t k = 1; k < w.steps.size(); ++k) {
        traveled += inst.dist(w.steps[k - 1], w.steps[k]);
        if (!seen[w.steps[k]]) {
            seen[w.steps[k]] = 1;
            out.push_back({w.steps[k], traveled});
        }
    }
    return out;
}

double total_latency(const MetricInstance& inst, const Walk& w) {
    double s = 0.0;
    for (const VertexLatency& vl : latency_profile(inst, w)) s += vl.latency;
    return s;
}

double total_latency(const MetricInstance& inst, const Tour& t) {
    validate_tour(inst, t);
    return total_latency(inst, as_walk(t));
}

double walk_length(const MetricInstance& inst, const Walk& w) {
    validate_walk(inst, w, /*require_complete=*/false);
    double s = 0.0;
    for (std::size_t k = 1; k < w.steps.size(); ++k)
        s += inst.dist(w.steps[k - 1], w.steps[k]);
    return s;
}

double tsp_cycle_length(const MetricInstance& inst, const Tour& t) {
    validate_tour(inst, t);
    return walk_length(inst, as_walk(t)) + inst.dist(t.order.back(), inst.start);
}

double tdtsp_cost(const MetricInstance& inst, const Tour& t, const TdtspCoefficients& c) {
    // Any permutation is priced; only the latency functionals pin the start
    // (the reversed-linear orientation relaxes it).
    if (t.order.size() != static_cast<std::size_t>(inst.n))
        throw std::invalid_argument("tdtsp_cost: tour must visit every vertex exactly once");
    std::vector<char> seen(inst.n, 0);
    for (int v : t.order) {
        if (v < 0 || v >= inst.n || seen[v])
            throw std::invalid_argument("tdtsp_cost: tour is not a permutation");
        seen[v] = 1;
    }
    const int n = inst.n;
    double s = 0.0;
    for (int i = 1; i < n; ++i) {
        const double mult = c.orientation == TdtspOrientation::ReversedLinear
                                ? c.a * i + c.b
                                : c.a * (n - i) + c.b;
        s += mult * inst.dist(t.order[i - 1], t.order[i]);
    }
    return s;
}

Tour shortcut(const MetricInstance& inst, const Walk& w) {
    if (!inst.metric_flag)
        throw std::invalid_argument("shortcut: requires a verified metric (metric_flag unset)");
    validate_walk(inst, w);
    Tour t;
    t.order.reserve(inst.n);
    std::vector<char> seen(inst.n, 0);
    for (int v : w.steps) {
        if (!seen[v]) {
            seen[v] = 1;
            t.order.push_back(v);
        }
    }
    return t;
}

}  // namespace mlp
