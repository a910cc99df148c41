#include "sampeng/synthetic.hpp"

#include <string>

#include "sampeng/error.hpp"

namespace sampeng {

std::vector<double> logistic_series(const LogisticConfig& config) {
    if (!(config.rho > 0.0 && config.rho <= 4.0)) throw InputError("logistic map requires 0 < rho <= 4");
    if (!(config.x0 > 0.0 && config.x0 < 1.0)) throw InputError("logistic map requires 0 < x0 < 1");
    double x = config.x0;
    for (std::size_t t = 0; t < config.burn_in; ++t) x = config.rho * x * (1.0 - x);
    std::vector<double> out(config.n_samples);
    for (double& v : out) {
        x = config.rho * x * (1.0 - x);
        v = x;
    }
    return out;
}

Graph path_graph(std::size_t n, bool directed) {
    if (n < 2) throw InputError("path graph needs at least 2 nodes");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1), 1.0});
    return Graph::from_edges(n, directed, edges);
}

Graph er_digraph(const ERConfig& config) {
    const std::size_t n = config.n_nodes;
    if (n == 0) throw InputError("ER graph needs at least 1 node");
    const double p = config.p();
    if (!(p >= 0.0 && p <= 1.0))
        throw InputError("target out-degree " + std::to_string(config.target_out_degree) +
                         " gives arc probability outside [0, 1]");
    Rng rng(config.seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(config.target_out_degree * static_cast<double>(n) * 1.1) + 16);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (rng.uniform01() < p) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), 1.0});
        }
    }
    return Graph::from_edges(n, true, edges);
}

GraphSignal uniform_signal(std::size_t n, double lo, double hi, std::uint64_t seed) {
    if (!(lo < hi)) throw InputError("uniform signal requires lo < hi");
    Rng rng(seed);
    std::vector<double> values(n);
    for (double& v : values) v = rng.uniform(lo, hi);
    return GraphSignal(std::move(values));
}

}  // namespace sampeng
