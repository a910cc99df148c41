#include "sampeng/sweep.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "parallel_for.hpp"
#include "sampeng/error.hpp"
#include "sampeng/synthetic.hpp"

namespace sampeng {

namespace {

using Clock = std::chrono::steady_clock;

// Runs `compute` (which returns an EntropyResult) and fills the entropy,
// count and timing fields of `rec`. A node set too small for matching is
// recorded as undefined instead of aborting the sweep.
template <class Compute>
void evaluate_into(SweepRecord& rec, bool record_timing, Compute&& compute) {
    const auto start = Clock::now();
    try {
        const EntropyResult result = compute();
        rec.entropy = EntropyCell::from(result);
        rec.b_total = result.counts.b_total;
        rec.a_total = result.counts.a_total;
        rec.n_valid = result.counts.n_valid;
    } catch (const NoValidPatterns&) {
        rec.entropy = {std::nullopt, "no_valid_patterns"};
        rec.n_valid = 0;
    } catch (const InsufficientPatterns& e) {
        rec.entropy = {std::nullopt, "insufficient_patterns"};
        rec.n_valid = e.n_valid();
    }
    if (record_timing) rec.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

SampEnOptions entropy_options(const SweepOptions& options) {
    SampEnOptions opts;
    opts.hops.dense_threshold = options.dense_threshold;
    return opts;
}

void check_common(std::size_t m, double r, std::size_t runs, const char* what) {
    if (m == 0) throw InputError("pattern length m must be at least 1");
    if (!(r > 0.0) || !std::isfinite(r)) throw InputError("tolerance r must be positive and finite");
    if (runs == 0) throw InputError(std::string(what) + " must be at least 1");
}

}  // namespace

std::vector<double> rho_grid(double rho_min, double rho_max, double rho_step) {
    if (!(rho_min > 0.0) || !(rho_max <= 4.0) || !(rho_min <= rho_max))
        throw InputError("rho range must satisfy 0 < rho_min <= rho_max <= 4");
    if (!(rho_step > 0.0)) throw InputError("rho step must be positive");
    const auto steps = static_cast<std::size_t>(std::floor((rho_max - rho_min) / rho_step + 0.5));
    std::vector<double> grid;
    grid.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) grid.push_back(std::min(rho_min + static_cast<double>(k) * rho_step, 4.0));
    return grid;
}

SweepRecord summarize(std::span<const SweepRecord> raw) {
    if (raw.empty()) throw PreconditionError("cannot summarise zero records");
    SweepRecord s = raw.front();
    s.row_kind = RowKind::summary;
    s.seed.reset();

    std::vector<double> defined;
    double b = 0.0;
    double a = 0.0;
    double n_valid = 0.0;
    double runtime = 0.0;
    bool timed = true;
    for (const SweepRecord& rec : raw) {
        if (rec.entropy.value) defined.push_back(*rec.entropy.value);
        b += rec.b_total;
        a += rec.a_total;
        n_valid += static_cast<double>(rec.n_valid);
        if (rec.runtime_ms) {
            runtime += *rec.runtime_ms;
        } else {
            timed = false;
        }
    }
    const double count = static_cast<double>(raw.size());
    s.b_total = b / count;
    s.a_total = a / count;
    s.n_valid = static_cast<std::size_t>(std::llround(n_valid / count));
    s.runtime_ms = timed ? std::optional<double>(runtime / count) : std::nullopt;
    s.n_runs = defined.size();

    if (defined.empty()) {
        s.entropy = {std::nullopt, "no_defined_runs"};
        s.entropy_std.reset();
        return s;
    }
    double mean = 0.0;
    for (double v : defined) mean += v;
    mean /= static_cast<double>(defined.size());
    double ss = 0.0;
    for (double v : defined) ss += (v - mean) * (v - mean);
    s.entropy = {mean, {}};
    s.entropy_std = defined.size() > 1 ? std::sqrt(ss / static_cast<double>(defined.size() - 1)) : 0.0;
    return s;
}

std::vector<SweepRecord> run_logistic_sweep(const LogisticSweepConfig& config, const SweepOptions& options) {
    check_common(config.m, config.r, config.n_seeds, "number of seeds");
    if (config.n_samples < config.m + 2) throw InputError("series too short for the requested m");
    const std::vector<double> rhos = rho_grid(config.rho_min, config.rho_max, config.rho_step);
    const SampEnOptions opts = entropy_options(options);

    static constexpr const char* kVariants[] = {"classical", "directed_path", "undirected_path"};
    constexpr std::size_t kPerTask = 3;
    const std::size_t n_tasks = rhos.size() * config.n_seeds;
    std::vector<SweepRecord> raw(n_tasks * kPerTask);

    // Paths depend only on the series length.
    const Graph directed = path_graph(config.n_samples, true);
    const Graph undirected = path_graph(config.n_samples, false);

    detail::parallel_for(
        n_tasks,
        [&](std::size_t task) {
            const double rho = rhos[task / config.n_seeds];
            const std::uint64_t seed = config.seed + task % config.n_seeds;
            Rng rng(seed);
            LogisticConfig lc{rho, config.n_samples, rng.uniform_open01(), config.burn_in};
            const std::vector<double> series = logistic_series(lc);
            const GraphSignal signal(series);

            for (std::size_t v = 0; v < kPerTask; ++v) {
                SweepRecord& rec = raw[task * kPerTask + v];
                rec.experiment = Experiment::logistic;
                rec.n_nodes = config.n_samples;
                rec.m = config.m;
                rec.r = config.r;
                rec.param_name = "rho";
                rec.param_value = rho;
                rec.seed = seed;
                rec.variant = kVariants[v];
                evaluate_into(rec, options.record_timing, [&] {
                    switch (v) {
                        case 0: return classical_sampen(series, config.m, config.r);
                        case 1: return sampen_graph(directed, signal, config.m, config.r, opts);
                        default: return sampen_graph(undirected, signal, config.m, config.r, opts);
                    }
                });
            }
        },
        options.threads);

    std::vector<SweepRecord> out;
    out.reserve(raw.size() + rhos.size() * kPerTask);
    std::vector<SweepRecord> group;
    for (std::size_t ri = 0; ri < rhos.size(); ++ri) {
        const std::size_t first = ri * config.n_seeds * kPerTask;
        const std::size_t last = first + config.n_seeds * kPerTask;
        out.insert(out.end(), raw.begin() + static_cast<std::ptrdiff_t>(first),
                   raw.begin() + static_cast<std::ptrdiff_t>(last));
        for (std::size_t v = 0; v < kPerTask; ++v) {
            group.clear();
            for (std::size_t idx = first + v; idx < last; idx += kPerTask) group.push_back(raw[idx]);
            out.push_back(summarize(group));
        }
    }
    return out;
}

std::vector<SweepRecord> run_er_sweep(const ErSweepConfig& config, const SweepOptions& options) {
    if (config.m_values.empty()) throw InputError("m list must not be empty");
    if (config.k_values.empty()) throw InputError("K list must not be empty");
    check_common(config.m_values.front(), config.r, config.n_realisations, "number of realisations");
    if (config.n_nodes < 2) throw InputError("ER sweep needs at least 2 nodes");
    for (double k : config.k_values) {
        if (!(k > 0.0) || !(k <= static_cast<double>(config.n_nodes - 1)))
            throw InputError("every K must satisfy 0 < K <= N - 1 (got " + std::to_string(k) + ")");
    }
    for (std::size_t m : config.m_values) {
        if (m == 0) throw InputError("every m must be at least 1");
    }
    const SampEnOptions opts = entropy_options(options);

    const std::size_t n_k = config.k_values.size();
    const std::size_t n_m = config.m_values.size();
    const std::size_t n_real = config.n_realisations;
    std::vector<SweepRecord> raw(n_k * n_m * n_real);

    detail::parallel_for(
        raw.size(),
        [&](std::size_t task) {
            const std::size_t ki = task / (n_m * n_real);
            const std::size_t mi = (task / n_real) % n_m;
            const std::size_t real = task % n_real;
            const double k = config.k_values[ki];
            const std::size_t m = config.m_values[mi];
            const std::uint64_t seed = config.seed + real;

            const Graph graph = er_digraph({config.n_nodes, k, seed});
            const GraphSignal signal =
                uniform_signal(config.n_nodes, config.signal_lo, config.signal_hi, seed + kSignalSeedOffset);

            SweepRecord& rec = raw[task];
            rec.experiment = Experiment::er;
            rec.n_nodes = config.n_nodes;
            rec.m = m;
            rec.r = config.r;
            rec.param_name = "K";
            rec.param_value = k;
            rec.seed = seed;
            rec.variant = "graph";
            evaluate_into(rec, options.record_timing,
                          [&] { return sampen_graph(graph, signal, m, config.r, opts); });
        },
        options.threads);

    std::vector<SweepRecord> out;
    out.reserve(raw.size() + n_k * n_m);
    for (std::size_t g = 0; g < n_k * n_m; ++g) {
        const auto first = raw.begin() + static_cast<std::ptrdiff_t>(g * n_real);
        const auto last = first + static_cast<std::ptrdiff_t>(n_real);
        out.insert(out.end(), first, last);
        out.push_back(summarize(std::span<const SweepRecord>(&*first, n_real)));
    }
    return out;
}

SweepRecord compute_record(const Graph& graph, const GraphSignal& signal, std::size_t m, double r,
                           const SweepOptions& options) {
    SweepRecord rec;
    rec.experiment = Experiment::custom;
    rec.n_nodes = graph.n_nodes();
    rec.m = m;
    rec.r = r;
    rec.variant = "graph";
    const SampEnOptions opts = entropy_options(options);
    const auto start = Clock::now();
    const EntropyResult result = sampen_graph(graph, signal, m, r, opts);
    if (options.record_timing)
        rec.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    rec.entropy = EntropyCell::from(result);
    rec.b_total = result.counts.b_total;
    rec.a_total = result.counts.a_total;
    rec.n_valid = result.counts.n_valid;
    return rec;
}

}  // namespace sampeng
