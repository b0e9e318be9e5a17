#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "helpers.hpp"
#include "mlp/exact.hpp"
#include "mlp/generate.hpp"
#include "mlp/ktree.hpp"
#include "oracles.hpp"

using namespace mlp;
using namespace mlp::testing;

namespace {

/// Contract zero-weight nodes of a binarized tree back onto original ids and
/// collect the (u, v, w) edge multiset.
std::multiset<std::tuple<int, int, double>> contracted_edges(const BinarizedTree& bt) {
    const int bn = static_cast<int>(bt.nodes.size());
    // original id owning each binarized node, walking aux chains upward
    std::vector<int> owner(bn, -1);
    for (int u = 0; u < bn; ++u) {
        int x = u;
        while (x >= 0 && bt.nodes[x].original < 0) x = bt.nodes[x].parent;
        owner[u] = x >= 0 ? bt.nodes[x].original : -1;
    }
    std::multiset<std::tuple<int, int, double>> edges;
    for (int u = 1; u < bn; ++u) {
        const BinarizedNode& nd = bt.nodes[u];
        if (nd.original < 0) continue;  // aux node, zero-weight edge contracts away
        const int pu = owner[nd.parent];
        edges.insert({std::min(pu, nd.original), std::max(pu, nd.original), nd.parent_edge_w});
    }
    return edges;
}

}  // namespace

TEST_CASE("binarize") {
    SUBCASE("path passes through with no auxiliaries") {
        const BinarizedTree bt = binarize(path_tree({1.0, 2.0, 0.5}));
        CHECK(bt.nodes.size() == 4);
        int total_weight = 0;
        for (const auto& nd : bt.nodes) {
            total_weight += nd.weight;
            CHECK(nd.children.size() <= 2);
        }
        CHECK(total_weight == 4);
    }
    SUBCASE("star with 4 leaves grows a zero-weight gadget") {
        const BinarizedTree bt = binarize(unit_star(4));
        CHECK(bt.nodes.size() > 5);  // auxiliaries added
        CHECK(bt.nodes[0].weight == 1);
        CHECK(bt.nodes[0].original == 0);
        int aux = 0;
        for (const auto& nd : bt.nodes) {
            CHECK(nd.children.size() <= 2);
            if (nd.original < 0) {
                ++aux;
                CHECK(nd.weight == 0);
                CHECK(nd.parent_edge_w == 0.0);
            }
        }
        CHECK(aux == 2);
    }
    SUBCASE("contraction recovers the original tree") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const TreeInstance t = gen_tree(2 + static_cast<int>(seed % 9), seed);
            const BinarizedTree bt = binarize(t);
            int total_weight = 0;
            for (const auto& nd : bt.nodes) {
                total_weight += nd.weight;
                CHECK(nd.children.size() <= 2);
            }
            CHECK(total_weight == t.n);
            std::multiset<std::tuple<int, int, double>> want;
            for (const TreeEdge& e : t.edges)
                want.insert({std::min(e.u, e.v), std::max(e.u, e.v), e.w});
            CHECK(contracted_edges(bt) == want);
        }
    }
}

TEST_CASE("itree_dp") {
    SUBCASE("two-edge path: costs 0, 1, 3") {
        const KTreeTable table = itree_dp(path_tree({1.0, 2.0}));
        CHECK(table.cost(1) == doctest::Approx(0.0));
        CHECK(table.cost(2) == doctest::Approx(1.0));
        CHECK(table.cost(3) == doctest::Approx(3.0));
    }
    SUBCASE("cost(n) is the whole tree") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const TreeInstance t = gen_tree(3 + static_cast<int>(seed % 8), seed);
            const KTreeTable table = itree_dp(t);
            CHECK(table.cost(t.n) == doctest::Approx(t.total_weight()).epsilon(1e-9));
        }
    }
    SUBCASE("equals subset enumeration, costs nondecreasing, witnesses consistent") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            TreeInstance t = gen_tree(2 + static_cast<int>(seed % 11), seed * 3 + 1);
            t.start = static_cast<int>(seed) % t.n;
            const KTreeTable table = itree_dp(t);
            const std::vector<double> want = itree_table_oracle(t);
            std::map<std::pair<int, int>, double> wmap;
            for (const TreeEdge& e : t.edges)
                wmap[{std::min(e.u, e.v), std::max(e.u, e.v)}] = e.w;
            for (int i = 1; i <= t.n; ++i) {
                CHECK(std::abs(table.cost(i) - want[i]) <= 1e-9);
                if (i > 1) CHECK(table.cost(i) >= table.cost(i - 1) - 1e-12);
                // witness spans i vertices, contains the root, sums to cost(i)
                const auto edges = table.witness(i);
                CHECK(static_cast<int>(edges.size()) == i - 1);
                double sum = 0.0;
                std::set<int> verts{t.start};
                for (auto [u, v] : edges) {
                    sum += wmap.at({u, v});
                    verts.insert(u);
                    verts.insert(v);
                }
                CHECK(static_cast<int>(verts.size()) == i);
                CHECK(sum == doctest::Approx(table.cost(i)).epsilon(1e-9));
                // connectivity: witness edges reach every witness vertex from start
                std::map<int, std::vector<int>> adj;
                for (auto [u, v] : edges) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
                std::set<int> reach{t.start};
                std::vector<int> stack{t.start};
                while (!stack.empty()) {
                    const int u = stack.back();
                    stack.pop_back();
                    for (int v : adj[u])
                        if (reach.insert(v).second) stack.push_back(v);
                }
                CHECK(reach == verts);
            }
        }
    }
}

TEST_CASE("mlt_from_itrees") {
    SUBCASE("two-edge path walks p,a,p,a,b for total 6") {
        const TreeInstance t = path_tree({1.0, 2.0});
        const ItreeApproxResult r = mlt_from_itrees(t);
        CHECK(r.walk.steps == std::vector<int>{0, 1, 0, 1, 2});
        CHECK(r.value == doctest::Approx(6.0));
        REQUIRE(r.phases.size() == 2);
        CHECK(r.phases[0].m == 2);
        CHECK(r.phases[1].m == 3);
        const double opt = brute_force_mlt(metric_closure(t)).value;
        CHECK(opt == doctest::Approx(4.0));
        CHECK(r.value / opt <= 8.0);
    }
    SUBCASE("n=2 is a single phase at ratio 1") {
        const TreeInstance t = path_tree({3.0});
        const ItreeApproxResult r = mlt_from_itrees(t);
        CHECK(r.value == doctest::Approx(3.0));
        CHECK(r.phases.size() == 1);
    }
    SUBCASE("ratio <= 8, phases within budget, m monotone") {
        for (std::uint64_t seed = 0; seed < 80; ++seed) {
            TreeInstance t = gen_tree(2 + static_cast<int>(seed % 8), seed * 7 + 3);
            t.start = static_cast<int>(seed) % t.n;
            const ItreeApproxResult r = mlt_from_itrees(t);
            const double opt = brute_force_mlt(metric_closure(t)).value;
            if (opt > 0.0) CHECK(r.value / opt <= 8.0 + 1e-9);
            const KTreeTable table = itree_dp(t);
            for (std::size_t j = 0; j < r.phases.size(); ++j) {
                const ItreePhase& ph = r.phases[j];
                if (j > 0) CHECK(ph.m >= r.phases[j - 1].m);
                // a DFS walk never traverses a witness edge more than twice
                CHECK(ph.walk_len <= 2.0 * table.cost(ph.m) / r.scale + 1e-9);
            }
            // walk really is complete and consistent with the claimed value
            const MetricInstance closure = metric_closure(t);
            CHECK(total_latency(closure, r.walk) == doctest::Approx(r.value).epsilon(1e-9));
        }
    }
}

TEST_CASE("itree_sum_bounds") {
    SUBCASE("two-edge path: lower bound 4 is tight") {
        const ItreeSumBounds b = itree_sum_bounds(path_tree({1.0, 2.0}));
        CHECK(b.lower == doctest::Approx(4.0));
        CHECK(b.upper == doctest::Approx(32.0));
        REQUIRE(b.opt.has_value());
        CHECK(*b.opt == doctest::Approx(4.0));
    }
    SUBCASE("single edge") {
        const ItreeSumBounds b = itree_sum_bounds(path_tree({2.5}));
        CHECK(b.lower == doctest::Approx(2.5));
        REQUIRE(b.opt.has_value());
        CHECK(*b.opt == doctest::Approx(2.5));
    }
    SUBCASE("sandwich inequality on random trees") {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            TreeInstance t = gen_tree(2 + static_cast<int>(seed % 8), seed * 11 + 5);
            t.start = static_cast<int>(seed) % t.n;
            const ItreeSumBounds b = itree_sum_bounds(t);
            REQUIRE(b.opt.has_value());
            CHECK(b.lower <= *b.opt + 1e-9);
            CHECK(*b.opt <= b.upper + 1e-9);
        }
    }
}
