#pragma once

#include <vector>

#include "mlp/generate.hpp"
#include "mlp/instance.hpp"
#include "mlp/tour.hpp"

namespace mlp::testing {

/// K_{1,k} star with unit edges, vertex 0 the hub.
inline TreeInstance unit_star(int leaves) {
    std::vector<TreeEdge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
    return TreeInstance(leaves + 1, std::move(edges), 0);
}

/// Path 0-1-2-... with the given edge weights, start at vertex 0.
inline TreeInstance path_tree(const std::vector<double>& weights) {
    std::vector<TreeEdge> edges;
    for (std::size_t i = 0; i < weights.size(); ++i)
        edges.push_back({static_cast<int>(i), static_cast<int>(i) + 1, weights[i]});
    return TreeInstance(static_cast<int>(weights.size()) + 1, std::move(edges), 0);
}

/// Complete graph with every distance 1.
inline MetricInstance uniform_metric(int n) {
    std::vector<double> d(static_cast<std::size_t>(n) * n, 1.0);
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i) * n + i] = 0.0;
    return MetricInstance(n, std::move(d), 0, /*metric_verified=*/true);
}

/// Random complete walk on a metric instance: random hops until everything
/// is seen, then any stragglers are appended directly.
inline Walk random_complete_walk(const MetricInstance& inst, Rng& rng) {
    Walk w;
    w.steps.push_back(inst.start);
    std::vector<char> seen(inst.n, 0);
    seen[inst.start] = 1;
    int covered = 1;
    int guard = 50 * inst.n * inst.n + 16;
    while (covered < inst.n && guard-- > 0) {
        const int v = rng.uniform_int(inst.n);
        if (v == w.steps.back()) continue;
        w.steps.push_back(v);
        if (!seen[v]) {
            seen[v] = 1;
            ++covered;
        }
    }
    for (int v = 0; v < inst.n; ++v)
        if (!seen[v]) w.steps.push_back(v);
    return w;
}

/// Random walk along tree edges from the start until all vertices are seen.
inline Walk random_tree_walk(const TreeInstance& t, Rng& rng) {
    const auto adj = t.adjacency();
    Walk w;
    w.steps.push_back(t.start);
    std::vector<char> seen(t.n, 0);
    seen[t.start] = 1;
    int covered = 1;
    int guard = 200 * t.n * t.n + 64;
    while (covered < t.n && guard-- > 0) {
        const auto& nb = adj[w.steps.back()];
        const int v = nb[rng.uniform_int(static_cast<int>(nb.size()))].first;
        w.steps.push_back(v);
        if (!seen[v]) {
            seen[v] = 1;
            ++covered;
        }
    }
    return w;
}

}  // namespace mlp::testing
