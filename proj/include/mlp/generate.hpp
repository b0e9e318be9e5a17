#pragma once

#include <cstdint>
#include <random>

#include "mlp/instance.hpp"

namespace mlp {

/// Deterministic random source. mt19937_64 output is pinned by the standard;
/// the real/int mappings below avoid std::uniform_*_distribution, whose
/// results vary across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform in [0, n).
    int uniform_int(int n) { return static_cast<int>(uniform() * n); }

    std::uint64_t next_u64() { return eng_(); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[uniform_int(i + 1)]);
    }

  private:
    std::mt19937_64 eng_;
};

/// Random points in the unit square with Euclidean distances; start = 0.
/// Triangle inequality holds by construction, so metric_flag is set.
MetricInstance gen_metric(int n, std::uint64_t seed);

/// Random spanning tree with weights in [0.1, 10] (all 1 when unit); start = 0.
TreeInstance gen_tree(int n, std::uint64_t seed, bool unit = false);

/// n random points in [-10, 10]; start coordinate 0.
LineInstance gen_line(int n, std::uint64_t seed);

/// Central edge with kl spokes on one hub and kr on the other; weights in
/// [0.1, 10]; vertices: 0 = left hub, 1 = right hub; start = 0.
TreeInstance gen_diameter3(int kl, int kr, std::uint64_t seed);

}  // namespace mlp
