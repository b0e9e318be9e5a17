#include "mlp/pctsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mlp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEventTol = 1e-9;  // simultaneous-event merge tolerance

}  // namespace

PctspInstance::PctspInstance(MetricInstance base_, std::vector<double> penalties_)
    : base(std::move(base_)), penalties(std::move(penalties_)) {
    if (penalties.size() != static_cast<std::size_t>(base.n))
        throw std::invalid_argument("PctspInstance: one penalty per vertex required");
    for (double p : penalties)
        if (!(p >= 0.0) || !std::isfinite(p))
            throw std::invalid_argument("PctspInstance: penalties must be nonnegative");
}

PctspSolution make_pctsp_solution(const PctspInstance& inst, std::vector<int> cycle) {
    const int n = inst.base.n;
    if (cycle.empty() || cycle.front() != inst.root())
        throw std::invalid_argument("pctsp solution: cycle must begin at the root");
    PctspSolution s;
    s.visited.assign(n, 0);
    for (int v : cycle) {
        if (v < 0 || v >= n || s.visited[v])
            throw std::invalid_argument("pctsp solution: cycle must list distinct vertices");
        s.visited[v] = 1;
    }
    for (std::size_t k = 1; k < cycle.size(); ++k)
        s.length += inst.base.dist(cycle[k - 1], cycle[k]);
    if (cycle.size() > 1) s.length += inst.base.dist(cycle.back(), cycle.front());
    for (int v = 0; v < n; ++v)
        if (!s.visited[v]) s.penalty_paid += inst.penalties[v];
    s.cost = s.length + s.penalty_paid;
    s.cycle = std::move(cycle);
    return s;
}

PctspSolution brute_force_pctsp(const PctspInstance& inst) {
    const int n = inst.base.n;
    if (n > 9) throw std::invalid_argument("brute_force_pctsp capped at n <= 9");
    const int root = inst.root();

    std::vector<int> others;
    for (int v = 0; v < n; ++v)
        if (v != root) others.push_back(v);
    const int m = static_cast<int>(others.size());

    PctspSolution best;
    double best_cost = kInf;
    // Subsets in ascending bitmask order, permutations lexicographically;
    // keeping the first strict improvement yields the lexicographic optimum.
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> members;
        for (int k = 0; k < m; ++k)
            if (mask & (1 << k)) members.push_back(others[k]);
        std::sort(members.begin(), members.end());
        do {
            std::vector<int> cycle{root};
            cycle.insert(cycle.end(), members.begin(), members.end());
            PctspSolution s = make_pctsp_solution(inst, std::move(cycle));
            if (s.cost < best_cost) {
                best_cost = s.cost;
                best = std::move(s);
            }
        } while (std::next_permutation(members.begin(), members.end()));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Primal-dual moat growth.
// ---------------------------------------------------------------------------

namespace {

struct MoatState {
    int n;
    int root;
    std::vector<int> parent;         // union-find
    std::vector<char> active;        // per representative
    std::vector<double> potential;   // remaining (halved) penalty per representative
    std::vector<double> moat;        // per vertex: sum of duals of sets containing it
    std::vector<std::pair<int, int>> forest;
    std::vector<std::vector<int>> dead_sets;

    explicit MoatState(int n_, int root_) : n(n_), root(root_), parent(n), moat(n, 0.0) {
        std::iota(parent.begin(), parent.end(), 0);
        active.assign(n, 0);
        potential.assign(n, 0.0);
    }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    std::vector<int> members_of(int rep) {
        std::vector<int> ms;
        for (int v = 0; v < n; ++v)
            if (find(v) == rep) ms.push_back(v);
        return ms;
    }
};

}  // namespace

PctspSolution gw_pctsp(const PctspInstance& inst) {
    const int n = inst.base.n;
    if (!inst.base.metric_flag)
        throw std::invalid_argument("gw_pctsp: requires a verified metric (metric_flag unset)");
    if (n == 1) return make_pctsp_solution(inst, {inst.root()});

    MoatState st(n, inst.root());
    for (int v = 0; v < n; ++v) {
        if (v == st.root) continue;
        st.active[v] = 1;
        st.potential[v] = inst.penalties[v] / 2.0;  // tree cost doubles into a cycle
    }

    while (true) {
        // Next edge event: smallest (time, u, v).
        double edge_dt = kInf;
        int eu = -1, ev = -1;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const int cu = st.find(u), cv = st.find(v);
                if (cu == cv) continue;
                const int rate = st.active[cu] + st.active[cv];
                if (rate == 0) continue;
                const double slack = std::max(0.0, inst.base.dist(u, v) - st.moat[u] - st.moat[v]);
                const double dt = slack / rate;
                if (dt < edge_dt) {
                    edge_dt = dt;
                    eu = u;
                    ev = v;
                }
            }
        }
        // Next deactivation event; scanning vertices in ascending order makes
        // the smallest member vertex break ties between components.
        double deact_dt = kInf;
        int drep = -1;
        for (int v = 0; v < n; ++v) {
            const int c = st.find(v);
            if (!st.active[c]) continue;
            if (st.potential[c] < deact_dt) {
                deact_dt = st.potential[c];
                drep = c;
            }
        }
        if (edge_dt == kInf && deact_dt == kInf) break;

        const bool do_merge = edge_dt <= deact_dt + kEventTol;
        const double dt = do_merge ? edge_dt : deact_dt;

        for (int v = 0; v < n; ++v)
            if (st.active[st.find(v)]) st.moat[v] += dt;
        for (int v = 0; v < n; ++v)
            if (st.parent[v] == v && st.active[v]) st.potential[v] = std::max(0.0, st.potential[v] - dt);

        if (do_merge) {
            const int cu = st.find(eu), cv = st.find(ev);
            st.forest.emplace_back(eu, ev);
            st.parent[cu] = cv;
            st.potential[cv] += st.potential[cu];
            st.active[cv] = st.find(st.root) != cv;
        } else {
            st.active[drep] = 0;
            st.dead_sets.push_back(st.members_of(drep));
        }
    }

    // Tree containing the root.
    std::vector<std::vector<int>> fadj(n);
    for (auto [u, v] : st.forest) {
        fadj[u].push_back(v);
        fadj[v].push_back(u);
    }
    std::vector<char> in_tree(n, 0);
    {
        std::vector<int> stack{st.root};
        in_tree[st.root] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : fadj[u])
                if (!in_tree[v]) {
                    in_tree[v] = 1;
                    stack.push_back(v);
                }
        }
    }

    // GW pruning: repeatedly drop a deactivated set that dangles off the tree
    // by a single edge, newest sets first (the dead-set family is laminar).
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = static_cast<int>(st.dead_sets.size()) - 1; i >= 0; --i) {
            const auto& dset = st.dead_sets[i];
            bool inside = true;
            for (int v : dset)
                if (!in_tree[v]) inside = false;
            if (!inside) continue;
            std::vector<char> in_d(n, 0);
            for (int v : dset) in_d[v] = 1;
            if (in_d[st.root]) continue;
            int crossing = 0;
            for (auto [u, v] : st.forest)
                if (in_tree[u] && in_tree[v] && in_d[u] != in_d[v]) ++crossing;
            if (crossing != 1) continue;
            for (int v : dset) in_tree[v] = 0;
            changed = true;
        }
    }

    // DFS the pruned tree from the root, shortcut to a cycle.
    std::vector<int> cycle;
    {
        std::vector<std::vector<int>> tadj(n);
        for (auto [u, v] : st.forest)
            if (in_tree[u] && in_tree[v]) {
                tadj[u].push_back(v);
                tadj[v].push_back(u);
            }
        for (auto& nb : tadj) std::sort(nb.begin(), nb.end());
        std::vector<char> seen(n, 0);
        std::vector<int> stack{st.root};
        seen[st.root] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            cycle.push_back(u);
            for (auto it = tadj[u].rbegin(); it != tadj[u].rend(); ++it)
                if (!seen[*it]) {
                    seen[*it] = 1;
                    stack.push_back(*it);
                }
        }
    }
    return make_pctsp_solution(inst, std::move(cycle));
}

}  // namespace mlp
