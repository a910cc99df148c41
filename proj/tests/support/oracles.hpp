#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's hop, embedding or matching code.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "sampeng/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix dense_adjacency(const sampeng::Graph& g) {
    const std::size_t n = g.n_nodes();
    Matrix a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = g.adjacency().at(i, j);
    return a;
}

/// Sum over every walk of exactly `length` edges from i to j of the product of
/// its edge weights, found by recursive edge traversal.
inline Matrix walk_weights(const sampeng::Graph& g, std::size_t length) {
    const Matrix a = dense_adjacency(g);
    const std::size_t n = a.size();
    Matrix out(n, std::vector<double>(n, 0.0));
    std::function<void(std::size_t, std::size_t, std::size_t, double)> walk =
        [&](std::size_t origin, std::size_t at, std::size_t left, double weight) {
            if (left == 0) {
                out[origin][at] += weight;
                return;
            }
            for (std::size_t next = 0; next < n; ++next)
                if (a[at][next] != 0.0) walk(origin, next, left - 1, weight * a[at][next]);
        };
    for (std::size_t i = 0; i < n; ++i) walk(i, i, length, 1.0);
    return out;
}

inline std::vector<double> row_sums(const Matrix& m) {
    std::vector<double> out;
    for (const auto& row : m) {
        double s = 0.0;
        for (double v : row) s += v;
        out.push_back(s);
    }
    return out;
}

/// Walk-multiplicity weighted mean of the signal at the endpoints of all
/// length-L walks from `node`.
inline double walk_mean(const sampeng::Graph& g, const std::vector<double>& x, std::size_t node, std::size_t length) {
    if (length == 0) return x[node];
    const Matrix w = walk_weights(g, length);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        num += w[node][j] * x[j];
        den += w[node][j];
    }
    return num / den;
}

inline double sd(const std::vector<double>& x) {
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(x.size()));
}

inline bool within(const std::vector<double>& u, const std::vector<double>& v, std::size_t len, double eps) {
    for (std::size_t k = 0; k < len; ++k)
        if (std::abs(u[k] - v[k]) > eps) return false;
    return true;
}

struct PairCounts {
    std::uint64_t b = 0;  // ordered pairs matching on the first m components
    std::uint64_t a = 0;  // ordered pairs matching on all m + 1 components
};

/// Naive ordered double loop over (m+1)-long pattern rows.
inline PairCounts naive_counts(const std::vector<std::vector<double>>& rows, std::size_t m, double eps) {
    PairCounts c;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (i == j) continue;
            if (within(rows[i], rows[j], m, eps)) ++c.b;
            if (within(rows[i], rows[j], m + 1, eps)) ++c.a;
        }
    }
    return c;
}

/// Classical sample entropy, N - m templates for both lengths. NaN when undefined.
inline double naive_sampen(const std::vector<double>& x, std::size_t m, double r) {
    const double eps = r * sd(x);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i + m < x.size(); ++i) rows.emplace_back(x.begin() + i, x.begin() + i + m + 1);
    const PairCounts c = naive_counts(rows, m, eps);
    if (c.a == 0 || c.b == 0) return std::nan("");
    return -std::log(static_cast<double>(c.a) / static_cast<double>(c.b));
}

/// Period-2 orbit of the logistic map found by Newton's method on f(f(x)) - x.
inline std::pair<double, double> logistic_period2(double rho) {
    auto f = [rho](double x) { return rho * x * (1.0 - x); };
    auto df = [rho](double x) { return rho * (1.0 - 2.0 * x); };
    double x = 0.45;
    for (int it = 0; it < 100; ++it) {
        const double g = f(f(x)) - x;
        const double dg = df(f(x)) * df(x) - 1.0;
        x -= g / dg;
    }
    const double y = f(x);
    return x < y ? std::pair{x, y} : std::pair{y, x};
}

/// Small random graph for property tests, independent of the library generator.
inline sampeng::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p, bool directed, bool weighted,
                                   bool self_loops = false) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_real_distribution<double> w(0.25, 2.0);
    std::vector<sampeng::Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = directed ? 0 : i; j < n; ++j) {
            if (i == j && !self_loops) continue;
            if (u(rng) < p)
                edges.push_back({static_cast<sampeng::NodeId>(i), static_cast<sampeng::NodeId>(j),
                                 weighted ? w(rng) : 1.0});
        }
    }
    return sampeng::Graph::from_edges(n, directed, edges);
}

}  // namespace oracle
