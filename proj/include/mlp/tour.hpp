#pragma once

#include <vector>

#include "mlp/instance.hpp"

namespace mlp {

/// First-visit permutation: order[0] is the start vertex, every vertex
/// appears exactly once.
struct Tour {
    std::vector<int> order;
};

/// Vertex sequence with repeats permitted; complete walks cover every
/// vertex at least once.
struct Walk {
    std::vector<int> steps;

    Walk() = default;
    explicit Walk(std::vector<int> s) : steps(std::move(s)) {}
};

inline Walk as_walk(const Tour& t) { return Walk{t.order}; }

enum class TdtspOrientation {
    PositiveLinear,  // c(e,i) = (a*(n-i) + b) * d_e, minimized
    ReversedLinear,  // c(e,i) = (a*i + b) * d_e, minimized
    NegativeLinear,  // coefficients are magnitudes; the sum is maximized
};

struct TdtspCoefficients {
    double a = 0.0;
    double b = 0.0;
    TdtspOrientation orientation = TdtspOrientation::PositiveLinear;
};

struct VertexLatency {
    int vertex = 0;
    double latency = 0.0;
};

/// Validates that t.order is a permutation of 0..n-1 starting at inst.start.
void validate_tour(const MetricInstance& inst, const Tour& t);

/// Validates that w starts at inst.start; if require_complete, also that
/// every vertex occurs at least once.
void validate_walk(const MetricInstance& inst, const Walk& w, bool require_complete = true);

/// Cumulative distance along w up to each vertex's first occurrence,
/// in first-visit order. The start vertex has latency 0.
std::vector<VertexLatency> latency_profile(const MetricInstance& inst, const Walk& w);

double total_latency(const MetricInstance& inst, const Walk& w);
double total_latency(const MetricInstance& inst, const Tour& t);

/// Sum of consecutive step distances (no return edge).
double walk_length(const MetricInstance& inst, const Walk& w);

/// Closed-cycle length: consecutive distances plus d(last, start). This is
/// the opt(TSP) reference convention.
double tsp_cycle_length(const MetricInstance& inst, const Tour& t);

double tdtsp_cost(const MetricInstance& inst, const Tour& t, const TdtspCoefficients& c);

/// First-visit order of w. Requires metric_flag: under the triangle
/// inequality no vertex's latency increases.
Tour shortcut(const MetricInstance& inst, const Walk& w);

}  // namespace mlp
