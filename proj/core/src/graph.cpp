#include "sampeng/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sampeng/error.hpp"

namespace sampeng {

CsrMatrix::CsrMatrix(std::size_t rows, std::size_t cols) : cols_(cols), row_ptr_(rows + 1, 0) {}

CsrMatrix CsrMatrix::from_rows(std::size_t cols, const std::vector<std::vector<Entry>>& rows) {
    CsrMatrix m(rows.size(), cols);
    std::size_t total = 0;
    for (const auto& r : rows) total += r.size();
    m.entries_.reserve(total);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        m.entries_.insert(m.entries_.end(), rows[i].begin(), rows[i].end());
        m.row_ptr_[i + 1] = m.entries_.size();
    }
    return m;
}

double CsrMatrix::at(std::size_t i, std::size_t j) const {
    const auto r = row(i);
    const auto it = std::lower_bound(r.begin(), r.end(), j,
                                     [](const Entry& e, std::size_t col) { return e.col < col; });
    return (it != r.end() && it->col == j) ? it->value : 0.0;
}

Graph Graph::from_edges(std::size_t n_nodes, bool directed, std::span<const Edge> edges) {
    if (n_nodes == 0) throw InputError("graph must have at least one node");
    if (n_nodes > std::numeric_limits<NodeId>::max()) throw InputError("graph too large");

    std::vector<std::vector<Entry>> rows(n_nodes);
    for (const Edge& e : edges) {
        if (e.src >= n_nodes || e.dst >= n_nodes)
            throw InputError("edge (" + std::to_string(e.src) + ", " + std::to_string(e.dst) +
                             ") has a node id out of range for " + std::to_string(n_nodes) + " nodes");
        if (!std::isfinite(e.weight) || e.weight <= 0.0)
            throw InputError("edge (" + std::to_string(e.src) + ", " + std::to_string(e.dst) +
                             ") has non-positive or non-finite weight");
        rows[e.src].push_back({e.dst, e.weight});
        if (!directed && e.src != e.dst) rows[e.dst].push_back({e.src, e.weight});
    }
    for (std::size_t i = 0; i < n_nodes; ++i) {
        auto& r = rows[i];
        std::stable_sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
        const auto dup = std::adjacent_find(r.begin(), r.end(),
                                            [](const Entry& a, const Entry& b) { return a.col == b.col; });
        if (dup != r.end())
            throw InputError("duplicate edge (" + std::to_string(i) + ", " + std::to_string(dup->col) + ")");
    }
    return Graph(directed, CsrMatrix::from_rows(n_nodes, rows));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(adjacency_.nnz());
    for (std::size_t i = 0; i < n_nodes(); ++i) {
        for (const Entry& e : adjacency_.row(i)) {
            if (!directed_ && e.col < i) continue;
            out.push_back({static_cast<NodeId>(i), e.col, e.value});
        }
    }
    return out;
}

Graph Graph::permuted(std::span<const NodeId> perm) const {
    const std::size_t n = n_nodes();
    if (perm.size() != n) throw InputError("permutation size does not match node count");
    std::vector<std::vector<Entry>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const Entry& e : adjacency_.row(i)) rows[perm[i]].push_back({perm[e.col], e.value});
    }
    for (auto& r : rows)
        std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    return Graph(directed_, CsrMatrix::from_rows(n, rows));
}

}  // namespace sampeng
