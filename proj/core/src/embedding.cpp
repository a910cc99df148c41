#include "sampeng/embedding.hpp"

#include <cmath>
#include <string>

#include "parallel_for.hpp"
#include "sampeng/error.hpp"

namespace sampeng {

GraphSignal::GraphSignal(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw InputError("signal value at node " + std::to_string(i) + " is not finite");
    }
}

double hop_mean(const HopStructure& hops, const GraphSignal& signal, std::size_t node, std::size_t hop) {
    if (signal.size() != hops.n_nodes())
        throw InputError("signal length " + std::to_string(signal.size()) + " does not match " +
                         std::to_string(hops.n_nodes()) + " nodes");
    if (node >= hops.n_nodes()) throw PreconditionError("node " + std::to_string(node) + " out of range");
    if (hop == 0) return signal[node];
    if (hop > hops.max_hop())
        throw PreconditionError("hop " + std::to_string(hop) + " exceeds max_hop " + std::to_string(hops.max_hop()));
    const double degree = hops.hop_degree(hop, node);
    if (!(degree > 0.0))
        throw PreconditionError("node " + std::to_string(node) + " has no walks of length " + std::to_string(hop));
    return hops.power(hop).row_mean(node, signal.values(), degree);
}

EmbeddingSet::EmbeddingSet(std::size_t m, std::vector<NodeId> node_ids, std::vector<double> patterns_m1)
    : m_(m), node_ids_(std::move(node_ids)), patterns_m1_(std::move(patterns_m1)) {
    if (m_ == 0) throw PreconditionError("pattern length m must be at least 1");
    if (patterns_m1_.size() != node_ids_.size() * (m_ + 1))
        throw PreconditionError("pattern matrix size does not match node count");
    patterns_m_.resize(node_ids_.size() * m_);
    for (std::size_t k = 0; k < node_ids_.size(); ++k) {
        for (std::size_t c = 0; c < m_; ++c) patterns_m_[k * m_ + c] = patterns_m1_[k * (m_ + 1) + c];
    }
}

EmbeddingSet build_embeddings(const HopStructure& hops, const GraphSignal& signal, std::size_t m) {
    if (signal.size() != hops.n_nodes())
        throw InputError("signal length " + std::to_string(signal.size()) + " does not match " +
                         std::to_string(hops.n_nodes()) + " nodes");
    std::vector<NodeId> nodes = valid_node_set(hops, m);
    if (nodes.empty()) throw NoValidPatterns();

    const std::size_t width = m + 1;
    std::vector<double> patterns(nodes.size() * width);
    const auto x = signal.values();
    detail::parallel_for(nodes.size(), [&](std::size_t k) {
        const std::size_t node = nodes[k];
        double* row = patterns.data() + k * width;
        row[0] = x[node];
        for (std::size_t hop = 1; hop <= m; ++hop)
            row[hop] = hops.power(hop).row_mean(node, x, hops.hop_degree(hop, node));
    });
    return EmbeddingSet(m, std::move(nodes), std::move(patterns));
}

}  // namespace sampeng
