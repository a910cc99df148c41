#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sampeng/embedding.hpp"
#include "sampeng/entropy.hpp"
#include "sampeng/graph.hpp"

namespace sampeng {

// Edge list format:
//
//   nodes <N> directed|undirected
//   <src> <dst> [weight]
//   ...
//
// Ids are 0-based. Lines whose first non-blank character is '#' and blank
// lines are ignored. The weight defaults to 1 and must be positive. A
// repeated edge is an error (for undirected graphs {u,v} and {v,u} are the
// same edge) rather than being accumulated.

Graph parse_edge_list(std::istream& in, const std::string& source = "<stream>");
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(const Graph& graph, std::ostream& out);
void write_edge_list(const Graph& graph, const std::filesystem::path& path);

// Signal format: one value per line, line k holds node k's value.

GraphSignal parse_signal(std::istream& in, std::size_t n_nodes, const std::string& source = "<stream>");
GraphSignal read_signal(const std::filesystem::path& path, std::size_t n_nodes);
void write_signal(const GraphSignal& signal, std::ostream& out);
void write_signal(const GraphSignal& signal, const std::filesystem::path& path);

enum class Experiment { logistic, er, custom };
enum class RowKind { raw, summary };

std::string_view to_string(Experiment e);
std::string_view to_string(RowKind k);

/// Entropy cell of a CSV row: a finite value or an undefined tag such as "no_m_matches".
struct EntropyCell {
    std::optional<double> value;
    std::string undefined_reason;

    static EntropyCell from(const EntropyResult& result);
    std::string render() const;
};

/// One experiment outcome, or an aggregate over realisations when row_kind is summary.
struct SweepRecord {
    Experiment experiment = Experiment::custom;
    std::size_t n_nodes = 0;
    std::size_t m = 0;
    double r = 0.0;
    std::string param_name;
    double param_value = 0.0;
    /// Empty for summary rows.
    std::optional<std::uint64_t> seed;
    EntropyCell entropy;
    double b_total = 0.0;
    double a_total = 0.0;
    std::size_t n_valid = 0;
    /// Wall-clock time of the entropy computation; empty when timing is disabled.
    std::optional<double> runtime_ms;
    RowKind row_kind = RowKind::raw;
    /// Which estimator produced the row: classical, directed_path, undirected_path or graph.
    std::string variant;
    /// Summary rows only: sample SD of the defined entropies and how many were defined.
    std::optional<double> entropy_std;
    std::optional<std::size_t> n_runs;
};

/// Header line, without trailing newline.
std::string sweep_csv_header();
std::string render_sweep_row(const SweepRecord& record);

/// Writes the header and one line per record. Throws InputError if records is
/// empty and Error on I/O failure.
void write_sweep_csv(std::span<const SweepRecord> records, std::ostream& out);
void write_sweep_csv(std::span<const SweepRecord> records, const std::filesystem::path& path);

}  // namespace sampeng
