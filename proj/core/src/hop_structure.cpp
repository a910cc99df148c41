#include "sampeng/hop_structure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parallel_for.hpp"
#include "sampeng/error.hpp"

namespace sampeng {

std::size_t PowerMatrix::rows() const noexcept {
    return std::visit([](const auto& m) { return m.rows(); }, storage_);
}

double PowerMatrix::at(std::size_t i, std::size_t j) const {
    return std::visit([&](const auto& m) { return m.at(i, j); }, storage_);
}

double PowerMatrix::row_dot(std::size_t i, std::span<const double> x) const {
    double acc = 0.0;
    for_each_in_row(i, [&](std::size_t j, double v) { acc += v * x[j]; });
    return acc;
}

double PowerMatrix::row_mean(std::size_t i, std::span<const double> x, double row_total) const {
    // Shifted by the value at the row's first non-zero column: a neighbourhood
    // with one endpoint or a constant signal yields that value exactly.
    double ref = 0.0;
    bool first = true;
    double acc = 0.0;
    for_each_in_row(i, [&](std::size_t j, double v) {
        if (first) {
            ref = x[j];
            first = false;
        }
        acc += v * (x[j] - ref);
    });
    return ref + acc / row_total;
}

double PowerMatrix::row_sum(std::size_t i) const {
    double acc = 0.0;
    for_each_in_row(i, [&](std::size_t, double v) { acc += v; });
    return acc;
}

namespace {

struct RowBuffer {
    std::vector<double> acc;
    std::vector<NodeId> touched;
    std::vector<char> seen;
};

// Row i of prev * adjacency. Contributions are accumulated in ascending order
// of the intermediate node and then of the adjacency column, so each entry's
// summation order is fixed regardless of storage or threading.
std::vector<Entry> multiply_row(const PowerMatrix& prev, const CsrMatrix& adjacency, std::size_t i, RowBuffer& buf) {
    buf.touched.clear();
    prev.for_each_in_row(i, [&](std::size_t k, double v) {
        for (const Entry& e : adjacency.row(k)) {
            if (!buf.seen[e.col]) {
                buf.seen[e.col] = 1;
                buf.touched.push_back(e.col);
            }
            buf.acc[e.col] += v * e.value;
        }
    });
    std::vector<Entry> row;
    row.reserve(buf.touched.size());
    const std::size_t n = buf.acc.size();
    if (buf.touched.size() * 16 > n) {
        // Dense-ish row: a linear sweep is cheaper than sorting.
        for (std::size_t j = 0; j < n; ++j) {
            if (!buf.seen[j]) continue;
            if (buf.acc[j] != 0.0) row.push_back({static_cast<NodeId>(j), buf.acc[j]});
            buf.acc[j] = 0.0;
            buf.seen[j] = 0;
        }
        return row;
    }
    std::sort(buf.touched.begin(), buf.touched.end());
    for (NodeId j : buf.touched) {
        if (buf.acc[j] != 0.0) row.push_back({j, buf.acc[j]});
        buf.acc[j] = 0.0;
        buf.seen[j] = 0;
    }
    return row;
}

PowerMatrix assemble(std::size_t n, std::vector<std::vector<Entry>>&& rows, std::size_t nnz, double dense_threshold) {
    const double density = static_cast<double>(nnz) / (static_cast<double>(n) * static_cast<double>(n));
    if (density > dense_threshold) {
        DenseMatrix dense(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            auto out = dense.row(i);
            for (const Entry& e : rows[i]) out[e.col] = e.value;
        }
        return PowerMatrix(std::move(dense));
    }
    return PowerMatrix(CsrMatrix::from_rows(n, rows));
}

}  // namespace

HopStructure::HopStructure(const Graph& graph, std::size_t max_hop, HopOptions options)
    : n_nodes_(graph.n_nodes()) {
    if (max_hop == 0) throw PreconditionError("max_hop must be at least 1");
    const std::size_t n = n_nodes_;
    const CsrMatrix& adjacency = graph.adjacency();

    powers_.reserve(max_hop);
    {
        std::vector<std::vector<Entry>> rows(n);
        for (std::size_t i = 0; i < n; ++i) rows[i].assign(adjacency.row(i).begin(), adjacency.row(i).end());
        auto first = assemble(n, std::move(rows), adjacency.nnz(), options.dense_threshold);
        first.nnz_ = adjacency.nnz();
        powers_.push_back(std::move(first));
    }

    for (std::size_t hop = 2; hop <= max_hop; ++hop) {
        const PowerMatrix& prev = powers_.back();
        std::vector<std::vector<Entry>> rows(n);
        std::vector<char> row_ok(n, 1);
        detail::parallel_for(n, [&](std::size_t i) {
            thread_local RowBuffer buf;
            if (buf.acc.size() != n) {
                buf.acc.assign(n, 0.0);
                buf.seen.assign(n, 0);
            }
            rows[i] = multiply_row(prev, adjacency, i, buf);
            for (const Entry& e : rows[i])
                if (!std::isfinite(e.value)) row_ok[i] = 0;
        });
        std::size_t nnz = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!row_ok[i]) throw NumericalOverflow(hop, i);
            nnz += rows[i].size();
        }
        auto power = assemble(n, std::move(rows), nnz, options.dense_threshold);
        power.nnz_ = nnz;
        powers_.push_back(std::move(power));
    }

    degrees_.resize(max_hop);
    for (std::size_t hop = 1; hop <= max_hop; ++hop) {
        auto& deg = degrees_[hop - 1];
        deg.assign(n, 0.0);
        const PowerMatrix& power = powers_[hop - 1];
        for (std::size_t i = 0; i < n; ++i) {
            deg[i] = power.row_sum(i);
            if (!std::isfinite(deg[i])) throw NumericalOverflow(hop, i);
        }
    }
}

const PowerMatrix& HopStructure::power(std::size_t hop) const {
    if (hop == 0 || hop > powers_.size())
        throw PreconditionError("hop " + std::to_string(hop) + " outside 1.." + std::to_string(powers_.size()));
    return powers_[hop - 1];
}

double HopStructure::hop_degree(std::size_t hop, std::size_t node) const { return hop_degrees(hop)[node]; }

std::span<const double> HopStructure::hop_degrees(std::size_t hop) const {
    if (hop == 0 || hop > degrees_.size())
        throw PreconditionError("hop " + std::to_string(hop) + " outside 1.." + std::to_string(degrees_.size()));
    return degrees_[hop - 1];
}

std::vector<NodeId> valid_node_set(const HopStructure& hops, std::size_t m) {
    if (m == 0 || m > hops.max_hop())
        throw PreconditionError("pattern length m=" + std::to_string(m) + " exceeds hop structure max_hop=" +
                                std::to_string(hops.max_hop()));
    std::vector<NodeId> out;
    for (std::size_t i = 0; i < hops.n_nodes(); ++i) {
        bool ok = true;
        for (std::size_t hop = 1; hop <= m && ok; ++hop) ok = hops.hop_degree(hop, i) > 0.0;
        if (ok) out.push_back(static_cast<NodeId>(i));
    }
    return out;
}

}  // namespace sampeng
