#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sampeng/graph.hpp"
#include "sampeng/hop_structure.hpp"

namespace sampeng {

/// Real values attached to the nodes of a graph. All values are finite.
class GraphSignal {
public:
    GraphSignal() = default;
    /// Throws InputError if any value is NaN or infinite.
    explicit GraphSignal(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    bool operator==(const GraphSignal&) const = default;

private:
    std::vector<double> values_;
};

/// Walk-weighted mean of the signal over the L-neighbourhood of `node`:
/// the node's own value for L = 0, otherwise
/// (1 / deg^L(node)) * sum_j (A^L)_{node,j} x_j.
///
/// Throws PreconditionError when L > max_hop or when deg^L(node) is zero.
double hop_mean(const HopStructure& hops, const GraphSignal& signal, std::size_t node, std::size_t hop);

/// Pattern matrices for the valid node set, one row per node in ascending id order.
///
/// Row k of the m-patterns is [x̄^0, ..., x̄^{m-1}] and row k of the
/// (m+1)-patterns is [x̄^0, ..., x̄^m] for node node_ids[k].
class EmbeddingSet {
public:
    EmbeddingSet(std::size_t m, std::vector<NodeId> node_ids, std::vector<double> patterns_m1);

    std::size_t m() const noexcept { return m_; }
    std::size_t n_valid() const noexcept { return node_ids_.size(); }
    std::span<const NodeId> node_ids() const noexcept { return node_ids_; }

    std::span<const double> pattern_m(std::size_t k) const { return {patterns_m_.data() + k * m_, m_}; }
    std::span<const double> pattern_m1(std::size_t k) const {
        return {patterns_m1_.data() + k * (m_ + 1), m_ + 1};
    }

    /// Row-major storage, n_valid x m and n_valid x (m+1).
    std::span<const double> patterns_m() const noexcept { return patterns_m_; }
    std::span<const double> patterns_m1() const noexcept { return patterns_m1_; }

private:
    std::size_t m_;
    std::vector<NodeId> node_ids_;
    std::vector<double> patterns_m_;
    std::vector<double> patterns_m1_;
};

/// Builds the m- and (m+1)-patterns for every node of the valid set.
///
/// Requires 1 <= m <= hops.max_hop() and a signal aligned with the graph.
/// Throws NoValidPatterns when the valid node set is empty.
EmbeddingSet build_embeddings(const HopStructure& hops, const GraphSignal& signal, std::size_t m);

}  // namespace sampeng
