#include "sampeng/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "parallel_for.hpp"
#include "sampeng/error.hpp"

namespace sampeng {

double population_sd(std::span<const double> values) {
    if (values.empty()) throw InputError("standard deviation of an empty signal");
    const double n = static_cast<double>(values.size());
    // Shifted by the first value so a constant signal has SD exactly 0.
    const double ref = values.front();
    double shift = 0.0;
    for (double v : values) shift += v - ref;
    const double mean = ref + shift / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / n);
}

SampEnParams SampEnParams::from_signal(std::span<const double> signal, std::size_t m, double r) {
    if (m == 0) throw InputError("pattern length m must be at least 1");
    if (!(r > 0.0) || !std::isfinite(r)) throw InputError("tolerance r must be positive and finite");
    return {m, r, r * population_sd(signal)};
}

double chebyshev(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size())
        throw InputError("chebyshev: length mismatch (" + std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()) + ")");
    if (u.empty()) throw InputError("chebyshev: empty vectors");
    double d = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) d = std::max(d, std::fabs(u[k] - v[k]));
    return d;
}

namespace {

struct NodeCounts {
    std::uint64_t b = 0;
    std::uint64_t a = 0;
};

// Compares pattern rows i and j of the (m+1)-matrix. An (m+1)-match requires
// an m-match plus a close last component.
inline void compare(const double* pi, const double* pj, std::size_t m, double eps, NodeCounts& c) {
    for (std::size_t k = 0; k < m; ++k)
        if (std::fabs(pi[k] - pj[k]) > eps) return;
    ++c.b;
    if (std::fabs(pi[m] - pj[m]) <= eps) ++c.a;
}

std::vector<NodeCounts> scan_pairwise(const EmbeddingSet& emb, double eps) {
    const std::size_t n = emb.n_valid();
    const std::size_t m = emb.m();
    const std::size_t width = m + 1;
    const double* data = emb.patterns_m1().data();
    std::vector<NodeCounts> counts(n);
    detail::parallel_for(n, [&](std::size_t i) {
        NodeCounts c;
        const double* pi = data + i * width;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) compare(pi, data + j * width, m, eps, c);
        }
        counts[i] = c;
    });
    return counts;
}

std::vector<NodeCounts> scan_sorted_window(const EmbeddingSet& emb, double eps) {
    const std::size_t n = emb.n_valid();
    const std::size_t m = emb.m();
    const std::size_t width = m + 1;
    const double* data = emb.patterns_m1().data();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return data[a * width] < data[b * width]; });
    std::vector<double> key(n);
    for (std::size_t s = 0; s < n; ++s) key[s] = data[order[s] * width];

    // Floating-point subtraction is monotone, so once key[t] - key[s] exceeds
    // eps it does so for every later t; the window test agrees exactly with
    // the first-component test of the pairwise scan.
    std::vector<NodeCounts> counts(n);
    detail::parallel_for(n, [&](std::size_t s) {
        NodeCounts c;
        const std::size_t i = order[s];
        const double* pi = data + i * width;
        for (std::size_t t = s + 1; t < n && key[t] - key[s] <= eps; ++t)
            compare(pi, data + order[t] * width, m, eps, c);
        for (std::size_t t = s; t-- > 0 && key[s] - key[t] <= eps;)
            compare(pi, data + order[t] * width, m, eps, c);
        counts[i] = c;
    });
    return counts;
}

}  // namespace

MatchCounts match_counts(const EmbeddingSet& emb, const SampEnParams& params, MatchOptions options) {
    if (emb.m() != params.m)
        throw PreconditionError("embedding pattern length " + std::to_string(emb.m()) +
                                " does not match parameter m=" + std::to_string(params.m));
    const std::size_t n = emb.n_valid();
    if (n < 2) throw InsufficientPatterns(n);

    const auto per_node = options.kernel == MatchKernel::sorted_window ? scan_sorted_window(emb, params.epsilon)
                                                                       : scan_pairwise(emb, params.epsilon);
    MatchCounts out;
    out.n_valid = n;
    for (const NodeCounts& c : per_node) {
        out.b_pairs += c.b;
        out.a_pairs += c.a;
    }
    const double others = static_cast<double>(n - 1);
    const double pairs = static_cast<double>(n) * others;
    out.b_total = static_cast<double>(out.b_pairs) / pairs;
    out.a_total = static_cast<double>(out.a_pairs) / pairs;
    if (options.per_node) {
        out.per_node_b.resize(n);
        out.per_node_a.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            out.per_node_b[i] = static_cast<double>(per_node[i].b) / others;
            out.per_node_a[i] = static_cast<double>(per_node[i].a) / others;
        }
    }
    return out;
}

std::string_view to_string(Undefined reason) {
    switch (reason) {
        case Undefined::none: return "none";
        case Undefined::no_m_matches: return "no_m_matches";
        case Undefined::no_m1_matches: return "no_m1_matches";
    }
    return "unknown";
}

EntropyResult entropy_from_counts(MatchCounts counts, const SampEnParams& params) {
    EntropyResult result;
    result.params = params;
    if (counts.b_pairs == 0) {
        result.undefined = Undefined::no_m_matches;
    } else if (counts.a_pairs == 0) {
        result.undefined = Undefined::no_m1_matches;
    } else {
        // Ratio of integer pair counts; equals a_total / b_total without the
        // rounding of the two normalisations. Adding 0.0 turns -0 into +0.
        result.value = -std::log(static_cast<double>(counts.a_pairs) / static_cast<double>(counts.b_pairs)) + 0.0;
    }
    result.counts = std::move(counts);
    return result;
}

EntropyResult sampen_graph(const Graph& graph, const GraphSignal& signal, std::size_t m, double r,
                           const SampEnOptions& options) {
    if (signal.size() != graph.n_nodes())
        throw InputError("signal length " + std::to_string(signal.size()) + " does not match " +
                         std::to_string(graph.n_nodes()) + " nodes");
    const SampEnParams params = SampEnParams::from_signal(signal.values(), m, r);
    const HopStructure hops(graph, m, options.hops);
    const EmbeddingSet emb = build_embeddings(hops, signal, m);
    return entropy_from_counts(match_counts(emb, params, options.matching), params);
}

EntropyResult classical_sampen(std::span<const double> series, std::size_t m, double r) {
    const SampEnParams params = SampEnParams::from_signal(series, m, r);
    const std::size_t n = series.size();
    if (n < m + 2)
        throw InputError("series of length " + std::to_string(n) + " too short for m=" + std::to_string(m) +
                         " (need at least " + std::to_string(m + 2) + ")");
    const std::size_t templates = n - m;
    const double eps = params.epsilon;

    std::uint64_t b = 0;
    std::uint64_t a = 0;
    for (std::size_t i = 0; i + 1 < templates; ++i) {
        for (std::size_t j = i + 1; j < templates; ++j) {
            std::size_t k = 0;
            while (k < m && std::fabs(series[i + k] - series[j + k]) <= eps) ++k;
            if (k < m) continue;
            ++b;
            if (std::fabs(series[i + m] - series[j + m]) <= eps) ++a;
        }
    }

    MatchCounts counts;
    counts.n_valid = templates;
    counts.b_pairs = 2 * b;
    counts.a_pairs = 2 * a;
    const double pairs = static_cast<double>(templates) * static_cast<double>(templates - 1);
    counts.b_total = static_cast<double>(counts.b_pairs) / pairs;
    counts.a_total = static_cast<double>(counts.a_pairs) / pairs;
    return entropy_from_counts(std::move(counts), params);
}

}  // namespace sampeng
