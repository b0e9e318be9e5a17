#include "mlp/ktree.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mlp/exact.hpp"

namespace mlp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

BinarizedTree binarize(const TreeInstance& t) {
    const auto adj = t.adjacency();
    BinarizedTree bt;
    bt.original_n = t.n;
    bt.nodes.reserve(2 * static_cast<std::size_t>(t.n));

    // children[v] in the original tree rooted at start, ascending ids.
    std::vector<std::vector<std::pair<int, double>>> children(t.n);
    {
        std::vector<char> seen(t.n, 0);
        std::vector<int> stack{t.start};
        seen[t.start] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (auto [v, w] : adj[u]) {
                if (seen[v]) continue;
                seen[v] = 1;
                children[u].emplace_back(v, w);
                stack.push_back(v);
            }
        }
    }

    auto new_node = [&](int original, int weight, int parent, double pw, int eu, int ev) {
        BinarizedNode nd;
        nd.original = original;
        nd.weight = weight;
        nd.parent = parent;
        nd.parent_edge_w = pw;
        nd.orig_edge_u = eu;
        nd.orig_edge_v = ev;
        bt.nodes.push_back(std::move(nd));
        const int id = static_cast<int>(bt.nodes.size()) - 1;
        if (parent >= 0) bt.nodes[parent].children.push_back(id);
        return id;
    };

    // Iterative preorder: (original vertex, binarized parent id).
    std::vector<std::pair<int, int>> work;
    const int root = new_node(t.start, 1, -1, 0.0, -1, -1);
    work.emplace_back(t.start, root);
    while (!work.empty()) {
        auto [u, bu] = work.back();
        work.pop_back();
        const auto& ch = children[u];
        // Attachment points: the original node itself, then a caterpillar of
        // zero-weight auxiliaries once more than two children must hang off.
        int attach = bu;
        for (std::size_t k = 0; k < ch.size(); ++k) {
            const std::size_t remaining = ch.size() - k;
            if (remaining >= 2 && bt.nodes[attach].children.size() == 1)
                attach = new_node(-1, 0, attach, 0.0, -1, -1);
            const auto [c, w] = ch[k];
            const int bc = new_node(c, 1, attach, w, u, c);
            work.emplace_back(c, bc);
        }
    }
    return bt;
}

struct KTreeTable::DpState {
    BinarizedTree bt;
    std::vector<int> subtree_weight;          // per binarized node
    std::vector<std::vector<double>> f;       // f[u][w], w in 0..subtree_weight[u]
    std::vector<std::vector<int>> first_split;  // weight routed into the first child
};

double KTreeTable::cost(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("KTreeTable::cost: i out of 1..n");
    return cost_[i];
}

std::vector<std::pair<int, int>> KTreeTable::witness(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("KTreeTable::witness: i out of 1..n");
    const DpState& st = *dp_;
    std::vector<std::pair<int, int>> edges;
    // Walk the stored splits, collecting original edges of included children.
    std::vector<std::pair<int, int>> work{{0, i}};  // (binarized node, weight)
    while (!work.empty()) {
        auto [u, w] = work.back();
        work.pop_back();
        const BinarizedNode& nd = st.bt.nodes[u];
        int rem = w - nd.weight;
        for (std::size_t k = 0; k < nd.children.size(); ++k) {
            const int c = nd.children[k];
            const int wc = k == 0 ? st.first_split[u][w] : rem;
            if (k == 0) rem -= wc;
            if (wc == 0) continue;
            const BinarizedNode& cn = st.bt.nodes[c];
            if (cn.orig_edge_u >= 0)
                edges.emplace_back(std::min(cn.orig_edge_u, cn.orig_edge_v),
                                   std::max(cn.orig_edge_u, cn.orig_edge_v));
            work.emplace_back(c, wc);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

KTreeTable itree_dp(const TreeInstance& t) {
    auto st = std::make_shared<KTreeTable::DpState>();
    st->bt = binarize(t);
    const auto& nodes = st->bt.nodes;
    const int bn = static_cast<int>(nodes.size());
    st->subtree_weight.assign(bn, 0);
    st->f.resize(bn);
    st->first_split.resize(bn);

    // Post-order over the binarized tree (children have larger ids than their
    // parent by construction order? Not guaranteed; do an explicit ordering).
    std::vector<int> post;
    post.reserve(bn);
    {
        std::vector<int> stack{0};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            post.push_back(u);
            for (int c : nodes[u].children) stack.push_back(c);
        }
        std::reverse(post.begin(), post.end());
    }

    for (int u : post) {
        const BinarizedNode& nd = nodes[u];
        int sw = nd.weight;
        for (int c : nd.children) sw += st->subtree_weight[c];
        st->subtree_weight[u] = sw;

        auto& fu = st->f[u];
        auto& su = st->first_split[u];
        fu.assign(sw + 1, kInf);
        su.assign(sw + 1, 0);

        // g(c, x): cost of routing weight x into child c; x = 0 excludes it.
        auto child_cost = [&](int c, int x) -> double {
            if (x == 0) return 0.0;
            const double fc = st->f[c][x];
            return fc == kInf ? kInf : nodes[c].parent_edge_w + fc;
        };

        if (nd.children.empty()) {
            fu[nd.weight] = 0.0;
        } else if (nd.children.size() == 1) {
            const int c0 = nd.children[0];
            for (int w1 = 0; w1 <= st->subtree_weight[c0]; ++w1) {
                const double v = child_cost(c0, w1);
                if (v < fu[nd.weight + w1]) {
                    fu[nd.weight + w1] = v;
                    su[nd.weight + w1] = w1;
                }
            }
        } else {
            const int c0 = nd.children[0], c1 = nd.children[1];
            for (int w1 = 0; w1 <= st->subtree_weight[c0]; ++w1) {
                const double v1 = child_cost(c0, w1);
                if (v1 == kInf) continue;
                for (int w2 = 0; w2 <= st->subtree_weight[c1]; ++w2) {
                    const double v = v1 + child_cost(c1, w2);
                    const int w = nd.weight + w1 + w2;
                    if (v < fu[w]) {
                        fu[w] = v;
                        su[w] = w1;
                    }
                }
            }
        }
    }

    KTreeTable table;
    table.n_ = t.n;
    table.cost_.assign(t.n + 1, 0.0);
    for (int i = 1; i <= t.n; ++i) {
        table.cost_[i] = st->f[0][i];
        assert(table.cost_[i] < kInf);
    }
    table.dp_ = std::move(st);
    return table;
}

namespace {

/// Closed DFS walk over a witness edge set from the start vertex; when
/// `open`, trailing returns after the last first visit are dropped.
/// Returns the traversed length alongside the steps.
std::pair<std::vector<int>, double> traverse_witness(
    const TreeInstance& t, const std::vector<std::pair<int, int>>& edges, bool open) {
    std::vector<std::vector<std::pair<int, double>>> adj(t.n);
    for (auto [u, v] : edges) {
        double w = 0.0;
        for (const TreeEdge& e : t.edges)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) w = e.w;
        adj[u].emplace_back(v, w);
        adj[v].emplace_back(u, w);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());

    std::vector<int> steps{t.start};
    double len = 0.0;
    std::vector<char> seen(t.n, 0);
    seen[t.start] = 1;
    struct Frame {
        int v;
        double up_w;
        std::size_t next = 0;
    };
    std::vector<Frame> stack{{t.start, 0.0}};
    while (!stack.empty()) {
        Frame& fr = stack.back();
        bool descended = false;
        while (fr.next < adj[fr.v].size()) {
            auto [c, w] = adj[fr.v][fr.next++];
            if (seen[c]) continue;
            seen[c] = 1;
            steps.push_back(c);
            len += w;
            stack.push_back({c, w});
            descended = true;
            break;
        }
        if (descended) continue;
        const double up = fr.up_w;
        const int parent_exists = stack.size() > 1;
        stack.pop_back();
        if (parent_exists) {
            steps.push_back(stack.back().v);
            len += up;
        }
    }
    if (open) {
        std::fill(seen.begin(), seen.end(), 0);
        std::size_t last_new = 0;
        double prefix = 0.0, len_at_last = 0.0;
        for (std::size_t k = 0; k < steps.size(); ++k) {
            if (k > 0) {
                double w = 0.0;
                for (auto [c, ww] : adj[steps[k - 1]])
                    if (c == steps[k]) w = ww;
                prefix += w;
            }
            if (!seen[steps[k]]) {
                seen[steps[k]] = 1;
                last_new = k;
                len_at_last = prefix;
            }
        }
        steps.resize(last_new + 1);
        len = len_at_last;
    }
    return {std::move(steps), len};
}

}  // namespace

ItreeApproxResult mlt_from_itrees(const TreeInstance& t, const KTreeTable& table, double factor) {
    ItreeApproxResult res;
    res.walk.steps.push_back(t.start);
    if (t.n == 1) return res;

    const MetricInstance closure = metric_closure(t);
    double scale = kInf;
    for (int v = 0; v < t.n; ++v)
        if (v != t.start) scale = std::min(scale, closure.dist(t.start, v));
    res.scale = scale;

    double budget = 2.0 * factor;  // phase j gets factor * 2^(j+1), j from 0
    [[maybe_unused]] int prev_m = 0;
    while (true) {
        int m = 1;
        for (int i = 1; i <= t.n; ++i)
            if (table.cost(i) / scale <= budget + 1e-12) m = i;
        assert(m >= prev_m);
        prev_m = m;
        const bool final_phase = m == t.n;
        auto [steps, len] = traverse_witness(t, table.witness(m), /*open=*/final_phase);
        res.walk.steps.insert(res.walk.steps.end(), steps.begin() + 1, steps.end());
        res.phases.push_back({budget, m, len / scale});
        if (final_phase) break;
        budget *= 2.0;
    }
    res.value = total_latency(closure, res.walk);
    return res;
}

ItreeApproxResult mlt_from_itrees(const TreeInstance& t) {
    if (t.n == 1) {
        ItreeApproxResult res;
        res.walk.steps.push_back(t.start);
        return res;
    }
    return mlt_from_itrees(t, itree_dp(t), 1.0);
}

ItreeSumBounds itree_sum_bounds(const TreeInstance& t) {
    const KTreeTable table = itree_dp(t);
    ItreeSumBounds b;
    for (int i = 1; i <= t.n; ++i) b.lower += table.cost(i);
    b.upper = 8.0 * b.lower;
    if (t.n <= 9) b.opt = brute_force_mlt(metric_closure(t)).value;
    return b;
}

}  // namespace mlp
