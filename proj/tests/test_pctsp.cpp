#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "helpers.hpp"
#include "mlp/exact.hpp"
#include "mlp/generate.hpp"
#include "mlp/pctsp.hpp"

using namespace mlp;
using namespace mlp::testing;

namespace {

PctspInstance two_vertex(double d, double pi) {
    MetricInstance m(2, {0.0, d, d, 0.0}, 0, true);
    return PctspInstance(std::move(m), {0.0, pi});
}

PctspInstance random_pctsp(int n, std::uint64_t seed) {
    MetricInstance m = gen_metric(n, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<double> pi(n, 0.0);
    for (int v = 0; v < n; ++v)
        if (v != m.start) pi[v] = rng.uniform(0.0, 1.5);
    return PctspInstance(std::move(m), std::move(pi));
}

double gw_bound(int n) { return n >= 2 ? 2.0 - 1.0 / (n - 1) : 1.0; }

}  // namespace

TEST_CASE("brute_force_pctsp") {
    SUBCASE("visit when the penalty beats the detour") {
        const PctspSolution s = brute_force_pctsp(two_vertex(1.0, 3.0));
        CHECK(s.cost == doctest::Approx(2.0));
        CHECK(s.cycle == std::vector<int>{0, 1});
        CHECK(s.penalty_paid == 0.0);
    }
    SUBCASE("skip when the penalty is cheap") {
        const PctspSolution s = brute_force_pctsp(two_vertex(1.0, 1.0));
        CHECK(s.cost == doctest::Approx(1.0));
        CHECK(s.cycle == std::vector<int>{0});
        CHECK(s.penalty_paid == doctest::Approx(1.0));
    }
    SUBCASE("huge penalties force the full TSP cycle") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            MetricInstance m = gen_metric(6, seed);
            const double tsp = brute_force_tsp(m);
            PctspInstance inst(m, std::vector<double>(6, 1e6));
            const PctspSolution s = brute_force_pctsp(inst);
            CHECK(s.penalty_paid == 0.0);
            CHECK(s.cost == doctest::Approx(tsp).epsilon(1e-9));
        }
    }
    SUBCASE("cap enforced") {
        PctspInstance inst(gen_metric(10, 1), std::vector<double>(10, 1.0));
        CHECK_THROWS_AS(brute_force_pctsp(inst), std::invalid_argument);
    }
}

TEST_CASE("gw_pctsp") {
    SUBCASE("n=2 is exact (the bound is 1)") {
        for (double d : {0.5, 1.0, 2.0})
            for (double pi : {0.1, 1.0, 1.99, 2.0, 2.01, 10.0}) {
                const PctspInstance inst = two_vertex(d, pi);
                const double got = gw_pctsp(inst).cost;
                const double want = brute_force_pctsp(inst).cost;
                CHECK(got == doctest::Approx(want).epsilon(1e-9));
            }
    }
    SUBCASE("all-zero penalties: stay home") {
        PctspInstance inst(gen_metric(7, 5), std::vector<double>(7, 0.0));
        const PctspSolution s = gw_pctsp(inst);
        CHECK(s.cycle == std::vector<int>{0});
        CHECK(s.cost == doctest::Approx(0.0));
    }
    SUBCASE("solution invariants and determinism") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const PctspInstance inst = random_pctsp(4 + static_cast<int>(seed % 5), seed);
            const PctspSolution s = gw_pctsp(inst);
            CHECK(s.visited[inst.root()]);
            CHECK(s.cycle.front() == inst.root());
            CHECK(s.cost == doctest::Approx(s.length + s.penalty_paid).epsilon(1e-9));
            double pen = 0.0;
            for (int v = 0; v < inst.base.n; ++v)
                if (!s.visited[v]) pen += inst.penalties[v];
            CHECK(s.penalty_paid == doctest::Approx(pen).epsilon(1e-9));
            const PctspSolution again = gw_pctsp(inst);
            CHECK(again.cycle == s.cycle);
            CHECK(again.cost == s.cost);
        }
    }
    SUBCASE("within 2 - 1/(n-1) of the optimum") {
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            const int n = 3 + static_cast<int>(seed % 6);
            const PctspInstance inst = random_pctsp(n, seed * 13 + 7);
            const double got = gw_pctsp(inst).cost;
            const double opt = brute_force_pctsp(inst).cost;
            if (opt > 1e-12)
                CHECK(got / opt <= gw_bound(n) + 1e-9);
            else
                CHECK(got <= 1e-9);
        }
    }
    SUBCASE("requires a verified metric") {
        MetricInstance m(2, {0.0, 1.0, 1.0, 0.0}, 0, false);
        PctspInstance inst(std::move(m), {0.0, 1.0});
        CHECK_THROWS_AS(gw_pctsp(inst), std::invalid_argument);
    }
    SUBCASE("single vertex") {
        PctspInstance inst(MetricInstance(1, {0.0}, 0, true), {5.0});
        CHECK(gw_pctsp(inst).cost == 0.0);
        CHECK(brute_force_pctsp(inst).cost == 0.0);
    }
}

TEST_CASE("monotone penalty response of the exact optimum") {
    // Scaling every penalty up never shrinks the brute-force visit set.
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);
        const PctspInstance base = random_pctsp(n, seed * 5 + 3);
        int prev_visited = 0;
        for (double factor : {1.0, 1.5, 2.0, 4.0}) {
            PctspInstance scaled = base;
            for (double& p : scaled.penalties) p *= factor;
            const PctspSolution s = brute_force_pctsp(scaled);
            int visited = 0;
            for (char v : s.visited) visited += v != 0;
            CHECK(visited >= prev_visited);
            prev_visited = visited;
        }
    }
}
