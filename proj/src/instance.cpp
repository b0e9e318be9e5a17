#include "mlp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mlp {

namespace {

constexpr double kTriangleTol = 1e-9;

}  // namespace

MetricInstance::MetricInstance(int n_, std::vector<double> dist_, int start_, bool metric_verified)
    : n(n_), d(std::move(dist_)), start(start_), metric_flag(metric_verified) {
    if (n < 1) throw std::invalid_argument("MetricInstance: n must be >= 1");
    if (d.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("MetricInstance: matrix must be n*n");
    if (start < 0 || start >= n) throw std::invalid_argument("MetricInstance: start out of range");
    for (int i = 0; i < n; ++i) {
        if (dist(i, i) != 0.0)
            throw std::invalid_argument("MetricInstance: nonzero diagonal at " + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            const double v = dist(i, j);
            if (!(v >= 0.0) || !std::isfinite(v))
                throw std::invalid_argument("MetricInstance: negative or non-finite distance");
            if (v != dist(j, i))
                throw std::invalid_argument("MetricInstance: asymmetric at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
        }
    }
}

double MetricInstance::diameter() const {
    double m = 0.0;
    for (double v : d) m = std::max(m, v);
    return m;
}

double MetricInstance::sum_of_distances() const {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += dist(i, j);
    return s;
}

bool MetricInstance::verify_triangle() {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (dist(i, k) > dist(i, j) + dist(j, k) + kTriangleTol) return false;
    metric_flag = true;
    return true;
}

TreeInstance::TreeInstance(int n_, std::vector<TreeEdge> edges_, int start_)
    : n(n_), edges(std::move(edges_)), start(start_) {
    if (n < 1) throw std::invalid_argument("TreeInstance: n must be >= 1");
    if (start < 0 || start >= n) throw std::invalid_argument("TreeInstance: start out of range");
    if (edges.size() != static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("TreeInstance: a tree on n vertices has n-1 edges");
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const TreeEdge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("TreeInstance: edge endpoint out of range");
        if (!(e.w > 0.0) || !std::isfinite(e.w))
            throw std::invalid_argument("TreeInstance: edge weights must be strictly positive");
        int a = find(e.u), b = find(e.v);
        if (a == b) throw std::invalid_argument("TreeInstance: edges contain a cycle");
        parent[a] = b;
    }
    unit_flag = std::all_of(edges.begin(), edges.end(), [](const TreeEdge& e) { return e.w == 1.0; });
}

double TreeInstance::total_weight() const {
    double s = 0.0;
    for (const TreeEdge& e : edges) s += e.w;
    return s;
}

std::vector<std::vector<std::pair<int, double>>> TreeInstance::adjacency() const {
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const TreeEdge& e : edges) {
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

LineInstance::LineInstance(std::vector<double> coords_, double start_)
    : coords(std::move(coords_)), start(start_) {
    for (double c : coords)
        if (!std::isfinite(c)) throw std::invalid_argument("LineInstance: non-finite coordinate");
    if (!std::isfinite(start)) throw std::invalid_argument("LineInstance: non-finite start");
}

std::vector<int> LineInstance::sorted_order() const {
    std::vector<int> order(coords.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return coords[a] < coords[b]; });
    return order;
}

MetricInstance metric_closure(const TreeInstance& t) {
    const auto adj = t.adjacency();
    std::vector<double> d(static_cast<std::size_t>(t.n) * t.n, 0.0);
    // BFS from every vertex; paths in a tree are unique.
    std::vector<int> stack;
    std::vector<char> seen(t.n);
    for (int src = 0; src < t.n; ++src) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, src);
        seen[src] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, w] : adj[u]) {
                if (seen[v]) continue;
                seen[v] = 1;
                d[static_cast<std::size_t>(src) * t.n + v] =
                    d[static_cast<std::size_t>(src) * t.n + u] + w;
                stack.push_back(v);
            }
        }
    }
    // Path sums accumulate in opposite edge orders from the two endpoints and
    // can differ in the last ulp; mirror the upper triangle to keep d exact.
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 1; j < t.n; ++j)
            d[static_cast<std::size_t>(j) * t.n + i] = d[static_cast<std::size_t>(i) * t.n + j];
    return MetricInstance(t.n, std::move(d), t.start, /*metric_verified=*/true);
}

namespace {

int line_start_point(const LineInstance& l) {
    for (int i = 0; i < l.n(); ++i)
        if (l.coords[i] == l.start) return i;
    return -1;
}

}  // namespace

MetricInstance line_to_metric(const LineInstance& l) {
    const int sp = line_start_point(l);
    std::vector<double> pts;
    int start_vertex;
    if (sp < 0) {
        pts.reserve(l.coords.size() + 1);
        pts.push_back(l.start);
        pts.insert(pts.end(), l.coords.begin(), l.coords.end());
        start_vertex = 0;
    } else {
        pts = l.coords;
        start_vertex = sp;
    }
    const int n = static_cast<int>(pts.size());
    std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d[static_cast<std::size_t>(i) * n + j] = std::abs(pts[i] - pts[j]);
    return MetricInstance(n, std::move(d), start_vertex, /*metric_verified=*/true);
}

int line_point_vertex(const LineInstance& l, int i) {
    if (i < 0 || i >= l.n()) throw std::invalid_argument("line_point_vertex: index out of range");
    return line_start_point(l) < 0 ? i + 1 : i;
}

NormalizeResult normalize(const MetricInstance& inst) {
    if (inst.n < 2) throw std::invalid_argument("normalize: requires n >= 2");
    double scale = std::numeric_limits<double>::infinity();
    for (int v = 0; v < inst.n; ++v)
        if (v != inst.start) scale = std::min(scale, inst.dist(inst.start, v));
    if (scale <= 0.0)
        throw std::invalid_argument("normalize: a vertex coincides with the start (distance 0)");
    MetricInstance out = inst;
    for (double& v : out.d) v /= scale;
    return {std::move(out), scale};
}

}  // namespace mlp
