#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sampeng/embedding.hpp"
#include "sampeng/graph.hpp"
#include "sampeng/hop_structure.hpp"

namespace sampeng {

/// Population standard deviation (normalised by N).
double population_sd(std::span<const double> values);

/// Pattern length m, tolerance factor r and the derived threshold epsilon = r * SD.
struct SampEnParams {
    std::size_t m = 2;
    double r = 0.2;
    double epsilon = 0.0;

    /// Validates m >= 1 and r > 0 and derives epsilon from the population SD of
    /// all signal values.
    static SampEnParams from_signal(std::span<const double> signal, std::size_t m, double r);
};

/// Maximum absolute componentwise difference. Throws InputError on length mismatch or empty input.
double chebyshev(std::span<const double> u, std::span<const double> v);

/// Pair counts behind B^m(r) and A^m(r).
///
/// `b_pairs` / `a_pairs` count ordered pairs (i, j), i != j, whose m- or
/// (m+1)-patterns lie within epsilon; b_total = b_pairs / (n(n-1)) is the
/// mean over i of B_i(r) and likewise for a_total.
struct MatchCounts {
    double b_total = 0.0;
    double a_total = 0.0;
    std::size_t n_valid = 0;
    std::uint64_t b_pairs = 0;
    std::uint64_t a_pairs = 0;
    /// Per-node B_i(r) and A_i(r), filled only when requested.
    std::vector<double> per_node_b;
    std::vector<double> per_node_a;
};

enum class MatchKernel {
    /// Direct O(n^2 m) scan of every ordered pair.
    pairwise_scan,
    /// Sort on the first component and scan only the epsilon-window around
    /// each pattern. Produces counts identical to pairwise_scan.
    sorted_window,
};

struct MatchOptions {
    MatchKernel kernel = MatchKernel::pairwise_scan;
    bool per_node = false;
};

/// Counts Chebyshev matches (distance <= epsilon, self-matches excluded) among
/// the m-patterns and among the (m+1)-patterns over the same node set.
/// Throws InsufficientPatterns when fewer than two patterns exist and
/// PreconditionError when emb.m() != params.m.
MatchCounts match_counts(const EmbeddingSet& emb, const SampEnParams& params, MatchOptions options = {});

enum class Undefined : std::uint8_t {
    none,
    no_m_matches,
    no_m1_matches,
};

std::string_view to_string(Undefined reason);

struct EntropyResult {
    /// -ln(A/B) when both are non-zero.
    std::optional<double> value;
    Undefined undefined = Undefined::none;
    MatchCounts counts;
    SampEnParams params;

    bool defined() const noexcept { return value.has_value(); }
};

/// -ln(a/b) from raw pair counts, or the reason it is undefined.
EntropyResult entropy_from_counts(MatchCounts counts, const SampEnParams& params);

struct SampEnOptions {
    HopOptions hops;
    MatchOptions matching;
};

/// Sample entropy of a graph signal: hop structure up to m, valid node set,
/// embeddings, matching, then -ln(A^m / B^m).
///
/// Throws InputError for misaligned inputs or bad parameters, NoValidPatterns
/// and InsufficientPatterns when matching is impossible. Zero match counts are
/// reported through EntropyResult::undefined rather than thrown.
EntropyResult sampen_graph(const Graph& graph, const GraphSignal& signal, std::size_t m, double r,
                           const SampEnOptions& options = {});

/// Classical sample entropy with delay 1 and Chebyshev distance.
///
/// Uses N - m templates for both lengths m and m + 1, which makes it coincide
/// with sampen_graph on a directed path. Requires N >= m + 2.
EntropyResult classical_sampen(std::span<const double> series, std::size_t m, double r);

}  // namespace sampeng
