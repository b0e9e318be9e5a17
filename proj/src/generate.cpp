#include "mlp/generate.hpp"

#include <cmath>
#include <stdexcept>

namespace mlp {

MetricInstance gen_metric(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_metric: n must be >= 1");
    Rng rng(seed);
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = rng.uniform();
        ys[i] = rng.uniform();
    }
    std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = std::hypot(xs[i] - xs[j], ys[i] - ys[j]);
            d[static_cast<std::size_t>(i) * n + j] = v;
            d[static_cast<std::size_t>(j) * n + i] = v;
        }
    return MetricInstance(n, std::move(d), /*start=*/0, /*metric_verified=*/true);
}

TreeInstance gen_tree(int n, std::uint64_t seed, bool unit) {
    if (n < 1) throw std::invalid_argument("gen_tree: n must be >= 1");
    Rng rng(seed);
    std::vector<TreeEdge> edges;
    edges.reserve(n - 1);
    for (int v = 1; v < n; ++v) {
        const int u = rng.uniform_int(v);
        const double w = unit ? 1.0 : rng.uniform(0.1, 10.0);
        edges.push_back({u, v, w});
    }
    return TreeInstance(n, std::move(edges), /*start=*/0);
}

LineInstance gen_line(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_line: n must be >= 1");
    Rng rng(seed);
    std::vector<double> coords(n);
    for (double& c : coords) c = rng.uniform(-10.0, 10.0);
    return LineInstance(std::move(coords), /*start=*/0.0);
}

TreeInstance gen_diameter3(int kl, int kr, std::uint64_t seed) {
    if (kl < 0 || kr < 0) throw std::invalid_argument("gen_diameter3: spoke counts must be >= 0");
    Rng rng(seed);
    const int n = 2 + kl + kr;
    std::vector<TreeEdge> edges;
    edges.reserve(n - 1);
    edges.push_back({0, 1, rng.uniform(0.1, 10.0)});
    for (int i = 0; i < kl; ++i) edges.push_back({0, 2 + i, rng.uniform(0.1, 10.0)});
    for (int i = 0; i < kr; ++i) edges.push_back({1, 2 + kl + i, rng.uniform(0.1, 10.0)});
    return TreeInstance(n, std::move(edges), /*start=*/0);
}

}  // namespace mlp
