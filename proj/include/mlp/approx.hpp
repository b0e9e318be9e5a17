#pragma once

#include <optional>
#include <vector>

#include "mlp/instance.hpp"
#include "mlp/pctsp.hpp"
#include "mlp/tour.hpp"

namespace mlp {

/// Parameters of one TSP-approximator call. Exactly one of epsilon / L may
/// be absent; the missing one is swept internally. alpha*epsilon < 1 is
/// required for a nonvacuous guarantee.
struct ApproximatorCall {
    double alpha = 3.0;
    double beta = 6.0;
    std::optional<double> epsilon;
    std::optional<double> L;

    bool vacuous() const { return epsilon && alpha * *epsilon >= 1.0; }
};

struct PhaseRecord {
    double param = 0.0;      // the phase's L (doubling) or epsilon (halving)
    int new_vertices = 0;    // first visits contributed by this phase
    double length = 0.0;     // phase walk length, normalized units
};

struct ApproxTour {
    Walk tour;               // begins at start; phases return to start
    int visited_count = 0;   // distinct vertices in tour
    double length = 0.0;     // walk_length of tour in instance units
    std::vector<PhaseRecord> phase_log;
    bool guarantee_vacuous = false;
};

/// (3,6)-TSP-approximator built on gw_pctsp: with both (epsilon, L) given it
/// places the uniform penalty 2L/(epsilon*n) and runs the primal-dual solver;
/// whenever a tour of length L from start visits (1-epsilon)n vertices, the
/// output visits at least (1-3*epsilon)n with closed length at most 6L.
/// With one parameter absent the other is swept (epsilon*n over 1..n, or L
/// over a doubling grid).
ApproxTour tsp_approximator(const MetricInstance& inst, const ApproximatorCall& call);

/// Budget-doubling scheme: approximator calls for L = 2, 4, 8, ... on the
/// normalized instance, concatenated with returns to start. Total latency is
/// at most 144x optimal; the walk is also at most 24x the optimal TSP cycle.
ApproxTour mlt_approx_doubling(const MetricInstance& inst);

/// Epsilon-halving scheme: approximator calls for epsilon = 1/2, 1/4, ...
/// concatenated in construction order. Total latency at most 72x optimal.
ApproxTour mlt_approx_epsilon(const MetricInstance& inst);

struct TdtspApproxResult {
    Tour tour;
    double cost = 0.0;
};

/// Positive-linear TDTSP via the doubling MLT walk, shortcut to a
/// permutation; within 144x of optimal. The reversed-linear orientation
/// returns the reversed vertex sequence (its start constraint is relaxed).
TdtspApproxResult tdtsp_positive_linear(const MetricInstance& inst, const TdtspCoefficients& c);

struct GreedyNegResult {
    Tour tour;
    double max_latency = 0.0;  // total latency, to be maximized
    double length = 0.0;       // open-path length
};

/// Repeatedly moves to the farthest unvisited vertex (ties: smallest index).
GreedyNegResult greedy_negative_linear(const MetricInstance& inst);

enum class SweepDirection { Auto, Left, Right };

struct LineDoublingResult {
    Walk walk;           // first-visit walk with returns to start between excursions
    double value = 0.0;  // total latency of the simulated zigzag motion
};

/// Deterministic doubling search on the line: excursions with turning points
/// at 1, 2, 4, ... nearest-distance units, alternating sides, each excursion
/// clipped at the extreme remaining point on its side. `value` is measured
/// on the continuous zigzag; the returned walk is its first-visit shortcut.
LineDoublingResult line_doubling(const LineInstance& l,
                                 SweepDirection first = SweepDirection::Auto);

/// Closed tour from doubling a minimum spanning tree (Prim from start, DFS
/// preorder). Used as the hard-cap fallback phase.
Tour double_mst_tour(const MetricInstance& inst);

}  // namespace mlp
