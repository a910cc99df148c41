#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sampeng/embedding.hpp"
#include "sampeng/graph.hpp"

namespace sampeng {

/// Portable seeded generator. std::mt19937_64's output sequence is fixed by
/// the standard; floating conversions are done here rather than through
/// std::uniform_real_distribution, whose algorithm is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on the open interval (0, 1); zero is rejected.
    double uniform_open01() {
        for (;;) {
            const double u = uniform01();
            if (u > 0.0) return u;
        }
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 engine_;
};

/// Offset applied to a realisation seed to get an independent stream for the node signal.
inline constexpr std::uint64_t kSignalSeedOffset = 0x9E3779B97F4A7C15ULL;

struct LogisticConfig {
    double rho = 3.9;
    std::size_t n_samples = 2000;
    double x0 = 0.5;
    std::size_t burn_in = 1000;
};

/// Iterates x_{t+1} = rho x_t (1 - x_t) from x0, drops the first burn_in
/// iterates and returns the next n_samples. Throws InputError unless
/// 0 < rho <= 4 and 0 < x0 < 1.
std::vector<double> logistic_series(const LogisticConfig& config);

/// Path over n >= 2 nodes: arcs i -> i+1, or symmetric consecutive edges when undirected.
Graph path_graph(std::size_t n, bool directed);

struct ERConfig {
    std::size_t n_nodes = 2700;
    /// Target mean out-degree K; the arc probability is K / (n_nodes - 1).
    double target_out_degree = 5.0;
    std::uint64_t seed = 1;

    double p() const { return n_nodes > 1 ? target_out_degree / static_cast<double>(n_nodes - 1) : 0.0; }
};

/// Binary directed Erdős–Rényi graph: every ordered pair (i, j), i != j, is an
/// arc independently with probability p. One uniform is drawn per ordered
/// pair in row-major order, so graphs from the same seed are nested in p.
Graph er_digraph(const ERConfig& config);

/// n independent uniform draws in [lo, hi]. Throws InputError unless lo < hi.
GraphSignal uniform_signal(std::size_t n, double lo, double hi, std::uint64_t seed);

}  // namespace sampeng
