#pragma once

#include <string>
#include <vector>

namespace mlp {

/// Symmetric distance matrix with a designated start vertex. Structured
/// instances (trees, lines) convert into this via metric_closure() and
/// line_to_metric(); it is the input every general solver takes.
struct MetricInstance {
    int n = 0;
    std::vector<double> d;  // row-major n*n
    int start = 0;
    bool metric_flag = false;  // triangle inequality verified

    MetricInstance() = default;
    MetricInstance(int n, std::vector<double> dist, int start, bool metric_verified = false);

    double dist(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
    void set_dist(int i, int j, double v) {
        d[static_cast<std::size_t>(i) * n + j] = v;
        d[static_cast<std::size_t>(j) * n + i] = v;
    }

    double diameter() const;          // max pairwise distance
    double sum_of_distances() const;  // sum over unordered pairs

    /// Checks d(i,k) <= d(i,j) + d(j,k) on all triples with 1e-9 absolute
    /// slack; sets metric_flag on success.
    bool verify_triangle();
};

struct TreeEdge {
    int u = 0;
    int v = 0;
    double w = 0.0;
};

/// Weighted tree instance. Exactly n-1 edges forming a connected acyclic
/// graph; all weights strictly positive.
struct TreeInstance {
    int n = 0;
    std::vector<TreeEdge> edges;
    int start = 0;
    bool unit_flag = false;  // true iff every weight equals 1

    TreeInstance() = default;
    TreeInstance(int n, std::vector<TreeEdge> edges, int start);

    double total_weight() const;
    /// adjacency[v] = list of (neighbor, weight)
    std::vector<std::vector<std::pair<int, double>>> adjacency() const;
};

/// Points on the real line plus a start coordinate. Duplicates allowed.
struct LineInstance {
    std::vector<double> coords;  // original input order
    double start = 0.0;

    LineInstance() = default;
    explicit LineInstance(std::vector<double> coords, double start = 0.0);

    int n() const { return static_cast<int>(coords.size()); }
    /// Point indices sorted by coordinate (stable for duplicates).
    std::vector<int> sorted_order() const;
};

/// Pairwise tree-path distances; metric_flag is set (tree metrics satisfy
/// the triangle inequality by construction).
MetricInstance metric_closure(const TreeInstance& t);

/// |x_i - x_j| distances. When the start coordinate is not among the points
/// it is appended as vertex 0 and the points become vertices 1..n; when some
/// point coincides with the start, the first such point serves as the start
/// vertex and no vertex is added.
MetricInstance line_to_metric(const LineInstance& l);

/// Vertex id of point i in line_to_metric(l).
int line_point_vertex(const LineInstance& l, int i);

struct NormalizeResult {
    MetricInstance instance;
    double scale = 1.0;  // divisor applied to every distance
};

/// Rescales so the distance from start to its nearest neighbor is 1.
/// Throws if n == 1 or some vertex sits at distance 0 from start.
NormalizeResult normalize(const MetricInstance& inst);

}  // namespace mlp
