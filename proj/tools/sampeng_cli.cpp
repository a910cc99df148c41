// sampeng: sample entropy of graph signals from the command line.
//
//   sampeng compute --graph g.txt --signal x.txt -m 2 -r 0.2
//   sampeng logistic-sweep --out logistic.csv
//   sampeng er-sweep --out er.csv
//   sampeng generate er --n 300 --k 5 --seed 7 --out g.txt

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sampeng/sampeng.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kUndefinedEntropy = 2,
    kInternalError = 3,
    kInsufficientPatterns = 4,
};

struct Common {
    std::size_t threads = 0;
    double dense_threshold = 0.25;
    bool no_timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)")->capture_default_str();
    cmd->add_option("--dense-threshold", c.dense_threshold,
                    "Density above which adjacency powers are stored densely")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_flag("--no-timing", c.no_timing, "Leave runtime_ms empty so the CSV is byte-reproducible");
}

sampeng::SweepOptions sweep_options(const Common& c) {
    sampeng::set_default_threads(c.threads);
    return {c.threads, c.dense_threshold, !c.no_timing};
}

void write_csv(const std::vector<sampeng::SweepRecord>& records, const std::string& out) {
    if (out.empty() || out == "-") {
        sampeng::write_sweep_csv(records, std::cout);
    } else {
        sampeng::write_sweep_csv(records, std::filesystem::path(out));
    }
}

struct ComputeArgs {
    std::string graph;
    std::string signal;
    std::size_t m = 2;
    double r = 0.2;
    std::string csv;
};

int run_compute(const ComputeArgs& args, const Common& common) {
    const auto graph = sampeng::read_edge_list(args.graph);
    const auto signal = sampeng::read_signal(args.signal, graph.n_nodes());
    const auto rec = sampeng::compute_record(graph, signal, args.m, args.r, sweep_options(common));

    std::cout << "entropy: " << rec.entropy.render() << '\n'
              << "b_total: " << rec.b_total << '\n'
              << "a_total: " << rec.a_total << '\n'
              << "n_valid: " << rec.n_valid << '\n';
    if (rec.runtime_ms) std::cout << "runtime_ms: " << *rec.runtime_ms << '\n';
    if (!args.csv.empty()) write_csv({rec}, args.csv);
    return rec.entropy.value ? kOk : kUndefinedEntropy;
}

struct GenerateArgs {
    std::size_t n = 100;
    bool undirected = false;
    double k = 5.0;
    std::uint64_t seed = 1;
    double rho = 3.9;
    double x0 = 0.5;
    std::size_t burn_in = 1000;
    double lo = 0.01;
    double hi = 0.10;
    std::string out;
};

void emit(const std::string& out, auto&& write) {
    if (out.empty() || out == "-") {
        write(std::cout);
    } else {
        std::ofstream file(out, std::ios::binary);
        if (!file) throw sampeng::InputError("cannot open " + out + " for writing");
        write(file);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sample entropy for graph signals"};
    app.require_subcommand(1);

    Common common;

    ComputeArgs compute;
    auto* cmd_compute = app.add_subcommand("compute", "Entropy of one graph signal read from files");
    cmd_compute->add_option("--graph", compute.graph, "Edge-list file")->required();
    cmd_compute->add_option("--signal", compute.signal, "Signal file, one value per line")->required();
    cmd_compute->add_option("-m", compute.m, "Pattern length")->check(CLI::PositiveNumber)->capture_default_str();
    cmd_compute->add_option("-r", compute.r, "Tolerance factor")->check(CLI::PositiveNumber)->capture_default_str();
    cmd_compute->add_option("--csv", compute.csv, "Also write the result as a one-row CSV");
    add_common(cmd_compute, common);

    sampeng::LogisticSweepConfig logistic;
    std::string logistic_out;
    auto* cmd_logistic = app.add_subcommand("logistic-sweep", "Logistic map: classical vs directed/undirected path");
    cmd_logistic->add_option("--rho-min", logistic.rho_min)->capture_default_str();
    cmd_logistic->add_option("--rho-max", logistic.rho_max)->capture_default_str();
    cmd_logistic->add_option("--rho-step", logistic.rho_step)->capture_default_str();
    cmd_logistic->add_option("--n-samples", logistic.n_samples)->capture_default_str();
    cmd_logistic->add_option("--burn-in", logistic.burn_in)->capture_default_str();
    cmd_logistic->add_option("--n-seeds", logistic.n_seeds)->capture_default_str();
    cmd_logistic->add_option("--seed", logistic.seed, "First seed; seed s draws x0 for run s")->capture_default_str();
    cmd_logistic->add_option("-m", logistic.m)->check(CLI::PositiveNumber)->capture_default_str();
    cmd_logistic->add_option("-r", logistic.r)->check(CLI::PositiveNumber)->capture_default_str();
    cmd_logistic->add_option("--out", logistic_out, "Output CSV (default stdout)");
    add_common(cmd_logistic, common);

    sampeng::ErSweepConfig er;
    std::string er_out;
    auto* cmd_er = app.add_subcommand("er-sweep", "Directed Erdős–Rényi graphs with uniform node signals");
    cmd_er->add_option("--n-nodes", er.n_nodes)->capture_default_str();
    cmd_er->add_option("--k-list", er.k_values, "Target mean out-degrees")->delimiter(',')->capture_default_str();
    cmd_er->add_option("--m-list", er.m_values, "Pattern lengths")->delimiter(',')->capture_default_str();
    cmd_er->add_option("-r", er.r)->check(CLI::PositiveNumber)->capture_default_str();
    cmd_er->add_option("--realisations", er.n_realisations)->capture_default_str();
    cmd_er->add_option("--seed", er.seed, "Base seed; realisation k uses seed + k")->capture_default_str();
    cmd_er->add_option("--out", er_out, "Output CSV (default stdout)");
    add_common(cmd_er, common);

    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "Write synthetic graphs or signals in the input formats");
    cmd_gen->require_subcommand(1);
    auto* gen_path = cmd_gen->add_subcommand("path", "Path graph");
    gen_path->add_option("--n", gen.n)->required();
    gen_path->add_flag("--undirected", gen.undirected);
    auto* gen_er = cmd_gen->add_subcommand("er", "Directed Erdős–Rényi graph");
    gen_er->add_option("--n", gen.n)->required();
    gen_er->add_option("--k", gen.k, "Target mean out-degree")->required();
    gen_er->add_option("--seed", gen.seed)->capture_default_str();
    auto* gen_logistic = cmd_gen->add_subcommand("logistic", "Logistic-map series, one value per line");
    gen_logistic->add_option("--n", gen.n)->required();
    gen_logistic->add_option("--rho", gen.rho)->capture_default_str();
    gen_logistic->add_option("--x0", gen.x0)->capture_default_str();
    gen_logistic->add_option("--burn-in", gen.burn_in)->capture_default_str();
    auto* gen_uniform = cmd_gen->add_subcommand("uniform", "Uniform random signal");
    gen_uniform->add_option("--n", gen.n)->required();
    gen_uniform->add_option("--lo", gen.lo)->capture_default_str();
    gen_uniform->add_option("--hi", gen.hi)->capture_default_str();
    gen_uniform->add_option("--seed", gen.seed)->capture_default_str();
    for (auto* sub : {gen_path, gen_er, gen_logistic, gen_uniform})
        sub->add_option("--out", gen.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*cmd_compute) return run_compute(compute, common);
        if (*cmd_logistic) {
            write_csv(sampeng::run_logistic_sweep(logistic, sweep_options(common)), logistic_out);
            return kOk;
        }
        if (*cmd_er) {
            write_csv(sampeng::run_er_sweep(er, sweep_options(common)), er_out);
            return kOk;
        }
        if (*gen_path) {
            const auto g = sampeng::path_graph(gen.n, !gen.undirected);
            emit(gen.out, [&](std::ostream& os) { sampeng::write_edge_list(g, os); });
        } else if (*gen_er) {
            const auto g = sampeng::er_digraph({gen.n, gen.k, gen.seed});
            emit(gen.out, [&](std::ostream& os) { sampeng::write_edge_list(g, os); });
        } else if (*gen_logistic) {
            const sampeng::GraphSignal s(sampeng::logistic_series({gen.rho, gen.n, gen.x0, gen.burn_in}));
            emit(gen.out, [&](std::ostream& os) { sampeng::write_signal(s, os); });
        } else if (*gen_uniform) {
            const auto s = sampeng::uniform_signal(gen.n, gen.lo, gen.hi, gen.seed);
            emit(gen.out, [&](std::ostream& os) { sampeng::write_signal(s, os); });
        }
        return kOk;
    } catch (const sampeng::NoValidPatterns& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInsufficientPatterns;
    } catch (const sampeng::InsufficientPatterns& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInsufficientPatterns;
    } catch (const sampeng::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}
