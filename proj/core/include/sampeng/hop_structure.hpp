#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "sampeng/graph.hpp"

namespace sampeng {

/// Row-major dense n x n matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// One adjacency power A^L. Stored sparse or dense depending on its density;
/// every accessor visits non-zeros in ascending column order, so results do
/// not depend on the representation.
class PowerMatrix {
public:
    explicit PowerMatrix(CsrMatrix m) : storage_(std::move(m)) {}
    explicit PowerMatrix(DenseMatrix m) : storage_(std::move(m)) {}

    bool is_dense() const noexcept { return std::holds_alternative<DenseMatrix>(storage_); }
    std::size_t rows() const noexcept;
    std::size_t nnz() const noexcept { return nnz_; }
    double at(std::size_t i, std::size_t j) const;

    /// Calls f(col, value) for every non-zero of row i, ascending by column.
    template <class F>
    void for_each_in_row(std::size_t i, F&& f) const {
        if (const auto* sparse = std::get_if<CsrMatrix>(&storage_)) {
            for (const Entry& e : sparse->row(i)) f(static_cast<std::size_t>(e.col), e.value);
        } else {
            const auto dense_row = std::get<DenseMatrix>(storage_).row(i);
            for (std::size_t j = 0; j < dense_row.size(); ++j)
                if (dense_row[j] != 0.0) f(j, dense_row[j]);
        }
    }

    /// Sum over the non-zeros of row i of value * x[col].
    double row_dot(std::size_t i, std::span<const double> x) const;
    double row_sum(std::size_t i) const;
    /// row_dot(i, x) / row_total, evaluated relative to a value in the row.
    double row_mean(std::size_t i, std::span<const double> x, double row_total) const;

private:
    friend class HopStructure;
    std::variant<CsrMatrix, DenseMatrix> storage_;
    std::size_t nnz_ = 0;
};

struct HopOptions {
    /// A power whose fraction of non-zeros exceeds this is stored densely.
    double dense_threshold = 0.25;
};

/// Adjacency powers A^1 ... A^max_hop of a graph and the per-node L-hop
/// degrees deg^L(i) = sum_j (A^L)_ij.
///
/// Entry (i, j) of A^L is the number of walks of exactly L edges from i to j
/// (revisits allowed), or the sum of products of edge weights along those
/// walks for weighted graphs. Immutable after construction.
class HopStructure {
public:
    /// Computes A^L = A^{L-1} A by row-wise sparse products with a fixed
    /// summation order. Throws NumericalOverflow if any walk weight becomes
    /// non-finite and PreconditionError if max_hop is zero.
    HopStructure(const Graph& graph, std::size_t max_hop, HopOptions options = {});

    std::size_t n_nodes() const noexcept { return n_nodes_; }
    std::size_t max_hop() const noexcept { return powers_.size(); }

    /// A^L for 1 <= L <= max_hop.
    const PowerMatrix& power(std::size_t hop) const;

    /// deg^L(i) for 1 <= L <= max_hop.
    double hop_degree(std::size_t hop, std::size_t node) const;
    std::span<const double> hop_degrees(std::size_t hop) const;

private:
    std::size_t n_nodes_ = 0;
    std::vector<PowerMatrix> powers_;
    std::vector<std::vector<double>> degrees_;
};

/// Convenience wrapper matching the operation name used throughout the docs.
inline HopStructure build_hop_structure(const Graph& graph, std::size_t max_hop, HopOptions options = {}) {
    return HopStructure(graph, max_hop, options);
}

/// Nodes with deg^L(i) > 0 for every L = 1..m, ascending. Both the m- and the
/// (m+1)-patterns are gated by this one set. Requires m <= hops.max_hop().
std::vector<NodeId> valid_node_set(const HopStructure& hops, std::size_t m);

}  // namespace sampeng
