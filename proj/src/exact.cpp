#include "mlp/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mlp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_brute_cap(int n) {
    if (n > kBruteForceMaxN)
        throw std::invalid_argument("brute force capped at n <= " +
                                    std::to_string(kBruteForceMaxN) + ", got n = " +
                                    std::to_string(n));
}

struct MltSearch {
    const MetricInstance& inst;
    bool prune;
    std::vector<int> order;
    std::vector<int> best_order;
    std::vector<char> visited;
    double best = kInf;
    std::int64_t nodes = 0;

    explicit MltSearch(const MetricInstance& m, bool p)
        : inst(m), prune(p), visited(m.n, 0) {}

    void run() {
        order.reserve(inst.n);
        order.push_back(inst.start);
        visited[inst.start] = 1;
        recurse(1, 0.0, 0.0);
    }

    void recurse(int placed, double walk_len, double lat_sum) {
        ++nodes;
        const int n = inst.n;
        if (placed == n) {
            if (lat_sum < best) {
                best = lat_sum;
                best_order = order;
            }
            return;
        }
        const int cur = order.back();
        if (prune && best < kInf) {
            // Every unvisited vertex still waits at least until the next hop,
            // so lat_sum + r*(walk_len + min_out) lower-bounds the completion.
            double min_out = kInf;
            for (int v = 0; v < n; ++v)
                if (!visited[v]) min_out = std::min(min_out, inst.dist(cur, v));
            const double bound = lat_sum + (n - placed) * (walk_len + min_out);
            if (bound > best) return;
        }
        for (int v = 0; v < n; ++v) {
            if (visited[v]) continue;
            const double nl = walk_len + inst.dist(cur, v);
            visited[v] = 1;
            order.push_back(v);
            recurse(placed + 1, nl, lat_sum + nl);
            order.pop_back();
            visited[v] = 0;
        }
    }
};

}  // namespace

ExactResult brute_force_mlt(const MetricInstance& inst, bool prune) {
    check_brute_cap(inst.n);
    if (inst.n == 1) return {Tour{{inst.start}}, 0.0, 1};
    MltSearch s(inst, prune);
    s.run();
    return {Tour{std::move(s.best_order)}, s.best, s.nodes};
}

namespace {

struct TspSearch {
    const MetricInstance& inst;
    std::vector<int> order;
    std::vector<char> visited;
    double best = kInf;

    explicit TspSearch(const MetricInstance& m) : inst(m), visited(m.n, 0) {}

    void recurse(int placed, double len) {
        const int n = inst.n;
        if (len > best) return;  // distances are nonnegative
        if (placed == n) {
            best = std::min(best, len + inst.dist(order.back(), inst.start));
            return;
        }
        const int cur = order.back();
        for (int v = 0; v < n; ++v) {
            if (visited[v]) continue;
            visited[v] = 1;
            order.push_back(v);
            recurse(placed + 1, len + inst.dist(cur, v));
            order.pop_back();
            visited[v] = 0;
        }
    }
};

}  // namespace

double brute_force_tsp(const MetricInstance& inst) {
    check_brute_cap(inst.n);
    if (inst.n == 1) return 0.0;
    TspSearch s(inst);
    s.order.push_back(inst.start);
    s.visited[inst.start] = 1;
    s.recurse(1, 0.0);
    return s.best;
}

namespace {

struct TdtspSearch {
    const MetricInstance& inst;
    std::vector<double> mult;        // mult[i] = multiplier of the i-th edge
    std::vector<double> mult_suffix; // sum of mult[i..n-1]
    bool maximize;
    double dmax;
    std::vector<int> order;
    std::vector<int> best_order;
    std::vector<char> visited;
    double best;
    std::int64_t nodes = 0;

    TdtspSearch(const MetricInstance& m, const TdtspCoefficients& c)
        : inst(m), mult(m.n, 0.0), mult_suffix(m.n + 1, 0.0), visited(m.n, 0) {
        maximize = c.orientation == TdtspOrientation::NegativeLinear;
        for (int i = 1; i < m.n; ++i)
            mult[i] = c.orientation == TdtspOrientation::ReversedLinear ? c.a * i + c.b
                                                                        : c.a * (m.n - i) + c.b;
        for (int i = m.n - 1; i >= 1; --i) mult_suffix[i] = mult_suffix[i + 1] + mult[i];
        dmax = m.diameter();
        best = maximize ? -kInf : kInf;
    }

    void recurse(int placed, double cost) {
        ++nodes;
        const int n = inst.n;
        if (placed == n) {
            if (maximize ? cost > best : cost < best) {
                best = cost;
                best_order = order;
            }
            return;
        }
        if (best != kInf && best != -kInf) {
            if (!maximize && cost > best) return;
            if (maximize && cost + mult_suffix[placed] * dmax < best) return;
        }
        const int cur = order.back();
        for (int v = 0; v < n; ++v) {
            if (visited[v]) continue;
            visited[v] = 1;
            order.push_back(v);
            recurse(placed + 1, cost + mult[placed] * inst.dist(cur, v));
            order.pop_back();
            visited[v] = 0;
        }
    }
};

}  // namespace

ExactResult brute_force_tdtsp(const MetricInstance& inst, const TdtspCoefficients& c) {
    check_brute_cap(inst.n);
    if (inst.n == 1) return {Tour{{inst.start}}, 0.0, 1};
    TdtspSearch s(inst, c);
    s.order.push_back(inst.start);
    s.visited[inst.start] = 1;
    s.recurse(1, 0.0);
    return {Tour{std::move(s.best_order)}, s.best, s.nodes};
}

// ---------------------------------------------------------------------------
// Line DP.
//
// A partial tour covers an interval of the sorted points containing the
// start; the state is (interval, which end we stand at). Extending to the
// adjacent uncovered point on either side moves distance d while r points
// are still uncovered, adding r*d in cost-to-go form.
// ---------------------------------------------------------------------------

ExactResult dp_line(const LineInstance& l) {
    const int n = l.n();
    if (n == 0) {
        const MetricInstance m = line_to_metric(l);
        return {Tour{{m.start}}, 0.0, 0};
    }
    const std::vector<int> order = l.sorted_order();
    std::vector<double> xs(n);
    for (int k = 0; k < n; ++k) xs[k] = l.coords[order[k]];
    const double s = l.start;

    // Points coinciding with the start are pre-visited at latency 0.
    int eqlo = n, eqhi = -1;
    for (int k = 0; k < n; ++k)
        if (xs[k] == s) {
            eqlo = std::min(eqlo, k);
            eqhi = std::max(eqhi, k);
        }
    const bool has_eq = eqhi >= 0;
    const int len0 = has_eq ? eqhi - eqlo + 1 : 1;

    std::int64_t nodes = 0;
    // choice[(i, len, side)]: 0 = extend left, 1 = extend right.
    std::vector<char> choice(static_cast<std::size_t>(n) * n * 2, 0);
    auto choice_at = [&](int i, int len, int side) -> char& {
        return choice[(static_cast<std::size_t>(len - 1) * n + i) * 2 + side];
    };

    std::vector<double> cur(static_cast<std::size_t>(n) * 2, 0.0);
    std::vector<double> next(static_cast<std::size_t>(n) * 2, 0.0);
    // cur holds f for intervals of length `len`, next for length `len + 1`.
    for (int len = n - 1; len >= len0; --len) {
        for (int i = 0; i + len - 1 < n; ++i) {
            const int j = i + len - 1;
            const int r = i + (n - 1 - j);
            for (int side = 0; side < 2; ++side) {
                ++nodes;
                const double pos = side == 0 ? xs[i] : xs[j];
                double best = kInf;
                char ch = 0;
                if (i > 0) {
                    best = r * (pos - xs[i - 1]) + next[static_cast<std::size_t>(i - 1) * 2 + 0];
                    ch = 0;
                }
                if (j < n - 1) {
                    const double cr =
                        r * (xs[j + 1] - pos) + next[static_cast<std::size_t>(i) * 2 + 1];
                    if (cr < best) {
                        best = cr;
                        ch = 1;
                    }
                }
                cur[static_cast<std::size_t>(i) * 2 + side] = best;
                choice_at(i, len, side) = ch;
            }
        }
        std::swap(cur, next);
    }
    // next now holds f for intervals of length len0 (or is all zero when
    // len0 == n, matching the empty cost-to-go of the full interval).

    auto f0 = [&](int i, int side) { return next[static_cast<std::size_t>(i) * 2 + side]; };

    double value = 0.0;
    int ri, rj, rside;  // reconstruction state
    Tour tour;
    tour.order.reserve(n + 1);
    if (has_eq) {
        // Metric start vertex: the first original index whose coordinate
        // equals the start (line_to_metric adds no extra vertex here).
        int start_orig = -1;
        for (int i = 0; i < n; ++i)
            if (l.coords[i] == s) {
                start_orig = i;
                break;
            }
        tour.order.push_back(start_orig);
        std::vector<int> others;
        for (int k = eqlo; k <= eqhi; ++k)
            if (order[k] != start_orig) others.push_back(order[k]);
        std::sort(others.begin(), others.end());
        for (int o : others) tour.order.push_back(line_point_vertex(l, o));
        value = f0(eqlo, 0);
        ri = eqlo;
        rj = eqhi;
        rside = 0;
    } else {
        tour.order.push_back(0);  // appended start vertex
        int lo = 0;
        while (lo < n && xs[lo] < s) ++lo;
        double bl = kInf, br = kInf;
        if (lo > 0) bl = n * (s - xs[lo - 1]) + f0(lo - 1, 0);
        if (lo < n) br = n * (xs[lo] - s) + f0(lo, 1);
        if (bl <= br) {
            value = bl;
            ri = rj = lo - 1;
            rside = 0;
        } else {
            value = br;
            ri = rj = lo;
            rside = 1;
        }
        tour.order.push_back(line_point_vertex(l, order[ri]));
    }
    while (rj - ri + 1 < n) {
        const int len = rj - ri + 1;
        if (choice_at(ri, len, rside) == 0) {
            --ri;
            rside = 0;
        } else {
            ++rj;
            rside = 1;
        }
        tour.order.push_back(line_point_vertex(l, order[rside == 0 ? ri : rj]));
    }
    return {std::move(tour), value, nodes};
}

// ---------------------------------------------------------------------------
// Diameter-3 tree DP.
// ---------------------------------------------------------------------------

namespace {

struct Diam3Shape {
    int hub0 = -1;   // hub on the start side (DP anchor)
    int hub1 = -1;   // far hub
    double w = 0.0;  // central edge weight
    std::vector<std::pair<double, int>> spokes0, spokes1;  // (length, vertex), ascending
    int leaf_start = -1;  // set when the start is a spoke of hub0
    double leaf_len = 0.0;
};

int bfs_farthest(const std::vector<std::vector<std::pair<int, double>>>& adj, int src,
                 std::vector<int>& hops) {
    hops.assign(adj.size(), -1);
    hops[src] = 0;
    std::vector<int> queue{src};
    int far = src;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const int u = queue[h];
        if (hops[u] > hops[far]) far = u;
        for (auto [v, w] : adj[u])
            if (hops[v] < 0) {
                hops[v] = hops[u] + 1;
                queue.push_back(v);
            }
    }
    return far;
}

Diam3Shape decompose_diameter3(const TreeInstance& t) {
    const auto adj = t.adjacency();
    std::vector<int> hops;
    const int u = bfs_farthest(adj, 0, hops);
    const int v = bfs_farthest(adj, u, hops);
    const int diam = hops[v];
    if (diam > 3) throw std::invalid_argument("dp_diameter3: tree has diameter > 3");

    Diam3Shape shape;
    int hl = -1, hr = -1;
    if (t.n == 1) {
        shape.hub0 = 0;
        return shape;
    }
    if (diam <= 1) {  // single edge
        hl = t.edges[0].u;
        hr = t.edges[0].v;
    } else if (diam == 2) {  // star: the center is adjacent to everyone
        int center = -1;
        for (int x = 0; x < t.n; ++x)
            if (static_cast<int>(adj[x].size()) == t.n - 1) center = x;
        if (center < 0) throw std::invalid_argument("dp_diameter3: malformed diameter-2 tree");
        hl = center;
        hr = adj[center].front().first;  // smallest-index leaf becomes the far hub
    } else {  // diam == 3: walk the u..v path, take its two middle vertices
        std::vector<int> parent(t.n, -1), hops_u;
        bfs_farthest(adj, u, hops_u);
        // Recover path by greedy descent from v toward u.
        std::vector<int> path{v};
        int cur = v;
        while (cur != u) {
            for (auto [w2, wt] : adj[cur])
                if (hops_u[w2] == hops_u[cur] - 1) {
                    cur = w2;
                    break;
                }
            path.push_back(cur);
        }
        hl = path[1];
        hr = path[2];
    }
    double cw = 0.0;
    for (const TreeEdge& e : t.edges)
        if ((e.u == hl && e.v == hr) || (e.u == hr && e.v == hl)) cw = e.w;
    if (cw == 0.0) throw std::invalid_argument("dp_diameter3: hubs are not adjacent");

    std::vector<std::pair<double, int>> sl, sr;
    for (const TreeEdge& e : t.edges) {
        if ((e.u == hl && e.v == hr) || (e.u == hr && e.v == hl)) continue;
        const int hub = (e.u == hl || e.u == hr) ? e.u : e.v;
        const int leaf = hub == e.u ? e.v : e.u;
        if (hub == hl)
            sl.emplace_back(e.w, leaf);
        else if (hub == hr)
            sr.emplace_back(e.w, leaf);
        else
            throw std::invalid_argument("dp_diameter3: vertex not attached to a hub");
    }

    // Orient so hub0 carries the start (hub start) or the start leaf.
    bool start_on_left;
    if (t.start == hl)
        start_on_left = true;
    else if (t.start == hr)
        start_on_left = false;
    else {
        start_on_left = std::any_of(sl.begin(), sl.end(),
                                    [&](const auto& p) { return p.second == t.start; });
    }
    if (!start_on_left) {
        std::swap(hl, hr);
        std::swap(sl, sr);
    }
    shape.hub0 = hl;
    shape.hub1 = hr;
    shape.w = cw;
    if (t.start != hl) {
        auto it = std::find_if(sl.begin(), sl.end(),
                               [&](const auto& p) { return p.second == t.start; });
        shape.leaf_start = t.start;
        shape.leaf_len = it->first;
        sl.erase(it);
    }
    std::sort(sl.begin(), sl.end());
    std::sort(sr.begin(), sr.end());
    shape.spokes0 = std::move(sl);
    shape.spokes1 = std::move(sr);
    return shape;
}

struct Diam3Dp {
    const Diam3Shape& sh;
    int a, b;
    std::vector<double> memo;
    std::vector<char> act;  // 0: spoke here, 1: cross+spoke, 2: bare cross (claims far hub)
    std::int64_t nodes = 0;

    explicit Diam3Dp(const Diam3Shape& s)
        : sh(s),
          a(static_cast<int>(s.spokes0.size())),
          b(static_cast<int>(s.spokes1.size())),
          memo(static_cast<std::size_t>(a + 1) * (b + 1) * 2 * 2,
               std::numeric_limits<double>::quiet_NaN()),
          act(memo.size(), -1) {}

    std::size_t id(int k0, int k1, int side, int farv) const {
        return ((static_cast<std::size_t>(k0) * (b + 1) + k1) * 2 + side) * 2 + farv;
    }

    int remaining(int k0, int k1, int farv) const { return (a - k0) + (b - k1) + (farv ? 0 : 1); }

    double solve(int k0, int k1, int side, int farv) {
        const int r = remaining(k0, k1, farv);
        if (r == 0) return 0.0;
        double& m = memo[id(k0, k1, side, farv)];
        if (!std::isnan(m)) return m;
        ++nodes;
        double best = kInf;
        char best_act = -1;
        // Visit the next (shortest unvisited) spoke at the current hub.
        if (side == 0 ? k0 < a : k1 < b) {
            const double len = side == 0 ? sh.spokes0[k0].first : sh.spokes1[k1].first;
            const double c = (2.0 * r - 1.0) * len +
                             solve(k0 + (side == 0), k1 + (side == 1), side, farv);
            if (c < best) {
                best = c;
                best_act = 0;
            }
        }
        // Cross and visit the next spoke on the other hub.
        const int oside = 1 - side;
        if (oside == 0 ? k0 < a : k1 < b) {
            const int nfarv = oside == 1 ? 1 : farv;
            const int r2 = remaining(k0, k1, nfarv);
            const double len = oside == 0 ? sh.spokes0[k0].first : sh.spokes1[k1].first;
            const double c = r * sh.w + (2.0 * r2 - 1.0) * len +
                             solve(k0 + (oside == 0), k1 + (oside == 1), oside, nfarv);
            if (c < best) {
                best = c;
                best_act = 1;
            }
        }
        // Bare crossing is only useful when it claims the far hub.
        if (side == 0 && farv == 0) {
            const double c = r * sh.w + solve(k0, k1, 1, 1);
            if (c < best) {
                best = c;
                best_act = 2;
            }
        }
        m = best;
        act[id(k0, k1, side, farv)] = best_act;
        return m;
    }

    void reconstruct(std::vector<int>& order) {
        int k0 = 0, k1 = 0, side = 0, farv = 0;
        while (remaining(k0, k1, farv) > 0) {
            switch (act[id(k0, k1, side, farv)]) {
                case 0:
                    order.push_back(side == 0 ? sh.spokes0[k0].second : sh.spokes1[k1].second);
                    (side == 0 ? k0 : k1) += 1;
                    break;
                case 1: {
                    const int oside = 1 - side;
                    if (oside == 1 && farv == 0) {
                        order.push_back(sh.hub1);
                        farv = 1;
                    }
                    order.push_back(oside == 0 ? sh.spokes0[k0].second : sh.spokes1[k1].second);
                    (oside == 0 ? k0 : k1) += 1;
                    side = oside;
                    break;
                }
                case 2:
                    order.push_back(sh.hub1);
                    side = 1;
                    farv = 1;
                    break;
                default:
                    throw std::logic_error("dp_diameter3: reconstruction failed");
            }
        }
    }
};

}  // namespace

ExactResult dp_diameter3(const TreeInstance& t) {
    if (t.n == 1) return {Tour{{t.start}}, 0.0, 0};
    const Diam3Shape shape = decompose_diameter3(t);
    Diam3Dp dp(shape);

    Tour tour;
    tour.order.push_back(t.start);
    double value = dp.solve(0, 0, 0, 0);
    if (shape.leaf_start >= 0) {
        // The first move leaf -> hub is forced; all other n-1 vertices wait.
        value += (t.n - 1) * shape.leaf_len;
        tour.order.push_back(shape.hub0);
    }
    dp.reconstruct(tour.order);
    return {std::move(tour), value, dp.nodes};
}

// ---------------------------------------------------------------------------
// DFS on unweighted trees.
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> default_children_order(const TreeInstance& t) {
    const auto adj = t.adjacency();
    std::vector<std::vector<int>> children(t.n);
    std::vector<int> parent(t.n, -2);
    std::vector<int> stack{t.start};
    parent[t.start] = -1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (auto [v, w] : adj[u]) {
            if (parent[v] != -2) continue;
            parent[v] = u;
            children[u].push_back(v);
            stack.push_back(v);
        }
    }
    for (auto& c : children) std::sort(c.begin(), c.end());
    return children;
}

Walk dfs_walk(const TreeInstance& t, const std::vector<std::vector<int>>& children_order) {
    Walk w;
    w.steps.reserve(2 * t.n);
    // Explicit stack of (vertex, next-child index) to avoid deep recursion.
    std::vector<std::pair<int, std::size_t>> stack;
    stack.emplace_back(t.start, 0);
    w.steps.push_back(t.start);
    while (!stack.empty()) {
        auto& [u, ci] = stack.back();
        if (ci < children_order[u].size()) {
            const int c = children_order[u][ci++];
            w.steps.push_back(c);
            stack.emplace_back(c, 0);
        } else {
            stack.pop_back();
            if (!stack.empty()) w.steps.push_back(stack.back().first);
        }
    }
    // Trim the trailing returns after the last first visit.
    std::vector<char> seen(t.n, 0);
    std::size_t last_new = 0;
    for (std::size_t k = 0; k < w.steps.size(); ++k)
        if (!seen[w.steps[k]]) {
            seen[w.steps[k]] = 1;
            last_new = k;
        }
    w.steps.resize(last_new + 1);
    return w;
}

std::vector<int> tree_depths(const TreeInstance& t) {
    const auto adj = t.adjacency();
    std::vector<int> depth(t.n, -1);
    depth[t.start] = 0;
    std::vector<int> queue{t.start};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const int u = queue[h];
        for (auto [v, w] : adj[u])
            if (depth[v] < 0) {
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            }
    }
    return depth;
}

ExactResult dfs_unweighted_tree(const TreeInstance& t) {
    if (!t.unit_flag)
        throw std::invalid_argument(
            "dfs_unweighted_tree: requires unit edge lengths (DFS optimality fails on weighted "
            "trees)");
    Walk w = dfs_walk(t, default_children_order(t));
    // Each step is one unit edge; latency of a first visit is its step index.
    double value = 0.0;
    std::vector<char> seen(t.n, 0);
    for (std::size_t k = 0; k < w.steps.size(); ++k)
        if (!seen[w.steps[k]]) {
            seen[w.steps[k]] = 1;
            value += static_cast<double>(k);
        }
    return {std::move(w), value, t.n};
}

}  // namespace mlp
