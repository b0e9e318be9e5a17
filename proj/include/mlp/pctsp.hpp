#pragma once

#include <vector>

#include "mlp/instance.hpp"
#include "mlp/tour.hpp"

namespace mlp {

/// Penalized metric instance; the tour is rooted at base.start and pays the
/// penalty of every vertex it skips.
struct PctspInstance {
    MetricInstance base;
    std::vector<double> penalties;  // pi_v >= 0; the root's entry is irrelevant

    PctspInstance() = default;
    PctspInstance(MetricInstance base, std::vector<double> penalties);

    int root() const { return base.start; }
};

struct PctspSolution {
    std::vector<int> cycle;     // distinct vertices beginning at the root
    std::vector<char> visited;  // mask over all vertices
    double length = 0.0;        // closed-cycle length of `cycle`
    double penalty_paid = 0.0;  // sum of penalties over unvisited vertices
    double cost = 0.0;          // length + penalty_paid
};

/// Builds a PctspSolution from a visit order (root first), recomputing all
/// derived fields.
PctspSolution make_pctsp_solution(const PctspInstance& inst, std::vector<int> cycle);

/// Exact minimum over all subsets containing the root and all cyclic orders;
/// lexicographic tie-break. Capped at n <= 9.
PctspSolution brute_force_pctsp(const PctspInstance& inst);

/// Goemans-Williamson primal-dual: moat growth with halved penalties,
/// dangling dead-set pruning, tree doubling and shortcutting. Cost is within
/// 2 - 1/(n-1) of optimal on metric instances.
PctspSolution gw_pctsp(const PctspInstance& inst);

}  // namespace mlp
