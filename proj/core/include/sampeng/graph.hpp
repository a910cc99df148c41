#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sampeng {

using NodeId = std::uint32_t;

/// One stored entry of a sparse row.
struct Entry {
    NodeId col;
    double value;

    bool operator==(const Entry&) const = default;
};

/// Compressed sparse row matrix of doubles. Columns are strictly ascending
/// within each row and no explicit zeros are stored.
class CsrMatrix {
public:
    CsrMatrix() = default;
    CsrMatrix(std::size_t rows, std::size_t cols);

    /// Build from per-row entry lists; each list must already be sorted by column.
    static CsrMatrix from_rows(std::size_t cols, const std::vector<std::vector<Entry>>& rows);

    std::size_t rows() const noexcept { return row_ptr_.empty() ? 0 : row_ptr_.size() - 1; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nnz() const noexcept { return entries_.size(); }

    std::span<const Entry> row(std::size_t i) const {
        return {entries_.data() + row_ptr_[i], row_ptr_[i + 1] - row_ptr_[i]};
    }

    /// Value at (i, j), zero when structurally absent. O(log row length).
    double at(std::size_t i, std::size_t j) const;

    bool operator==(const CsrMatrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<Entry> entries_;
};

/// Weighted edge used when constructing a Graph.
struct Edge {
    NodeId src;
    NodeId dst;
    double weight = 1.0;
};

/// A graph with a sparse, non-negative (weighted) adjacency matrix.
///
/// Row i of the adjacency holds the out-edges of node i. Undirected graphs are
/// stored symmetrically. Self-loops are allowed and behave like any other edge.
class Graph {
public:
    /// Validates and assembles the adjacency.
    ///
    /// For undirected graphs each edge {u, v} is inserted in both directions.
    /// Throws InputError on out-of-range ids, non-positive or non-finite
    /// weights and duplicate edges.
    static Graph from_edges(std::size_t n_nodes, bool directed, std::span<const Edge> edges);

    std::size_t n_nodes() const noexcept { return adjacency_.rows(); }
    bool directed() const noexcept { return directed_; }
    const CsrMatrix& adjacency() const noexcept { return adjacency_; }
    std::size_t n_arcs() const noexcept { return adjacency_.nnz(); }

    /// Edges as they would be written to an edge list: every arc for directed
    /// graphs, one arc per {u, v} with u <= v for undirected graphs.
    std::vector<Edge> edges() const;

    /// Relabel so that node i becomes node perm[i].
    Graph permuted(std::span<const NodeId> perm) const;

    bool operator==(const Graph&) const = default;

private:
    Graph(bool directed, CsrMatrix adjacency) : directed_(directed), adjacency_(std::move(adjacency)) {}

    bool directed_ = true;
    CsrMatrix adjacency_;
};

}  // namespace sampeng
