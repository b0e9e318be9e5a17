#pragma once

#include <cstdint>
#include <variant>

#include "mlp/instance.hpp"
#include "mlp/tour.hpp"

namespace mlp {

/// Hard cap on brute-force enumeration ((n-1)! permutations).
inline constexpr int kBruteForceMaxN = 11;

struct ExactResult {
    std::variant<Tour, Walk> route;
    double value = 0.0;
    std::int64_t nodes_explored = 0;

    const Tour& tour() const { return std::get<Tour>(route); }
    const Walk& walk() const { return std::get<Walk>(route); }
};

/// Globally minimal total latency over all permutation tours from start.
/// Ties broken by lexicographically smallest order. Prefix-sum pruning can
/// be disabled to cross-check that it never changes the result.
ExactResult brute_force_mlt(const MetricInstance& inst, bool prune = true);

/// Optimal closed-cycle length through all vertices.
double brute_force_tsp(const MetricInstance& inst);

/// Optimal time-dependent tour cost from start: minimized for the
/// positive-linear and reversed-linear orientations, maximized for
/// negative-linear.
ExactResult brute_force_tdtsp(const MetricInstance& inst, const TdtspCoefficients& c);

/// O(n^2) interval dynamic program for points on the line. The returned tour
/// is expressed in line_to_metric vertex ids.
ExactResult dp_line(const LineInstance& l);

/// O(n^2) dynamic program for trees of diameter <= 3 (central edge with
/// spokes; spokes at each hub are visited in ascending length order).
ExactResult dp_diameter3(const TreeInstance& t);

/// DFS walk from start (children in index order) on a unit tree; any DFS is
/// optimal, and the i-th distinct vertex has latency exactly 2i - depth(v)
/// with the start counted as the 0-th.
ExactResult dfs_unweighted_tree(const TreeInstance& t);

/// DFS walk with explicit child orders (children_order[v] lists v's children
/// in visit order, for the tree rooted at t.start). Trailing returns after
/// the last first-visit are trimmed.
Walk dfs_walk(const TreeInstance& t, const std::vector<std::vector<int>>& children_order);

/// Children of each vertex in index order, for the tree rooted at t.start.
std::vector<std::vector<int>> default_children_order(const TreeInstance& t);

/// Hop depth of every vertex from t.start.
std::vector<int> tree_depths(const TreeInstance& t);

}  // namespace mlp
