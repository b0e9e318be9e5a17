#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "mlp/instance.hpp"
#include "mlp/tour.hpp"

namespace mlp {

struct BinarizedNode {
    int original = -1;   // original vertex id, -1 for auxiliary nodes
    int weight = 0;      // 1 for original vertices, 0 for auxiliary
    int parent = -1;
    double parent_edge_w = 0.0;
    // Original edge carried by the parent edge, (-1,-1) for auxiliary edges.
    int orig_edge_u = -1;
    int orig_edge_v = -1;
    std::vector<int> children;  // at most 2
};

/// Rooted binary version of a weighted tree: high-degree vertices are
/// replaced by zero-weight, zero-length gadgets so every node has at most
/// two children. Total node weight equals the original vertex count and
/// contracting the zero-weight machinery recovers the original tree.
struct BinarizedTree {
    std::vector<BinarizedNode> nodes;  // nodes[0] is the root (= start vertex)
    int original_n = 0;
};

BinarizedTree binarize(const TreeInstance& t);

/// Per-cardinality optimal i-tree costs rooted at the start: cost(i) is the
/// minimal weight of a connected subtree containing the root and spanning i
/// original vertices. Witnesses are reconstructed on demand.
class KTreeTable {
  public:
    int n() const { return n_; }
    double cost(int i) const;
    /// Edges (as original-tree endpoint pairs) of a subtree achieving cost(i).
    std::vector<std::pair<int, int>> witness(int i) const;

  private:
    friend KTreeTable itree_dp(const TreeInstance& t);
    int n_ = 0;
    std::vector<double> cost_;  // cost_[i] for i in 1..n
    struct DpState;
    std::shared_ptr<const DpState> dp_;
};

/// Exact i-tree table via binarization and tree-knapsack DP; O(n^2).
KTreeTable itree_dp(const TreeInstance& t);

struct ItreePhase {
    double budget = 0.0;   // normalized cost budget 2^(j+1)
    int m = 0;             // most vertices spannable within the budget
    double walk_len = 0.0; // normalized length of this phase's walk segment
};

struct ItreeApproxResult {
    Walk walk;           // on tree vertices, starting at t.start
    double value = 0.0;  // total latency in original units
    double scale = 1.0;
    std::vector<ItreePhase> phases;
};

/// MLT approximation by traversing successively larger optimal i-trees with
/// doubling budgets, returning to the start between phases. Total latency is
/// at most 8x optimal (exact i-trees, c = 1). `factor` is the approximation
/// factor of the table provider; only the exact provider ships.
ItreeApproxResult mlt_from_itrees(const TreeInstance& t);
ItreeApproxResult mlt_from_itrees(const TreeInstance& t, const KTreeTable& table, double factor);

struct ItreeSumBounds {
    double lower = 0.0;  // sum of i-tree costs, i = 1..n
    double upper = 0.0;  // 8 * lower
    std::optional<double> opt;  // brute-force latency when n is small enough
};

ItreeSumBounds itree_sum_bounds(const TreeInstance& t);

}  // namespace mlp
