#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sampeng/entropy.hpp"
#include "sampeng/io.hpp"

namespace sampeng {

struct SweepOptions {
    /// Worker threads for independent realisations; 0 means all available cores.
    std::size_t threads = 0;
    double dense_threshold = 0.25;
    /// When false, runtime_ms is left empty so output is byte-reproducible.
    bool record_timing = true;
};

struct LogisticSweepConfig {
    double rho_min = 2.8;
    double rho_max = 4.0;
    double rho_step = 0.005;
    std::size_t n_samples = 2000;
    std::size_t burn_in = 1000;
    std::size_t n_seeds = 20;
    std::uint64_t seed = 1;
    std::size_t m = 2;
    double r = 0.2;
};

/// rho_min, rho_min + step, ... up to rho_max (inclusive within half a step).
std::vector<double> rho_grid(double rho_min, double rho_max, double rho_step);

/// For every rho and seed s = seed .. seed + n_seeds - 1: draws x0 uniformly
/// from (0, 1) with Rng(s), builds the logistic series and records classical
/// SampEn plus SampEn on the directed and undirected paths. Raw rows are
/// ordered by (rho, seed, variant) and followed by one summary row per
/// (rho, variant).
std::vector<SweepRecord> run_logistic_sweep(const LogisticSweepConfig& config, const SweepOptions& options = {});

struct ErSweepConfig {
    std::size_t n_nodes = 2700;
    std::vector<double> k_values{3, 4, 5, 6, 7, 8, 9, 10, 12};
    std::vector<std::size_t> m_values{1, 2, 3};
    double r = 0.2;
    std::size_t n_realisations = 20;
    std::uint64_t seed = 1;
    double signal_lo = 0.01;
    double signal_hi = 0.10;
};

/// For every (K, m, realisation k): graph seed = seed + k, signal seed =
/// seed + k + kSignalSeedOffset, so realisation k shares its graph across m
/// and its signal across K. Rows are grouped by (K, m): the raw rows in seed
/// order, then one summary row.
std::vector<SweepRecord> run_er_sweep(const ErSweepConfig& config, const SweepOptions& options = {});

/// Single entropy computation wrapped as a record (experiment custom).
SweepRecord compute_record(const Graph& graph, const GraphSignal& signal, std::size_t m, double r,
                           const SweepOptions& options = {});

/// Mean and sample SD of the defined entropies in `raw`, with b/a totals,
/// n_valid and runtime averaged over all rows. Copies identifying fields from
/// the first row.
SweepRecord summarize(std::span<const SweepRecord> raw);

}  // namespace sampeng
