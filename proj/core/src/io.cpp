#include "sampeng/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_set>

#include "sampeng/error.hpp"

namespace sampeng {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

template <class T>
bool parse_number(std::string_view token, T& out) {
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
    throw InputError(source + ": " + what + ", line " + std::to_string(line));
}

std::string format_g(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    return in;
}

void check_written(std::ostream& out, const std::string& what) {
    out.flush();
    if (!out) throw Error("I/O failure while writing " + what);
}

}  // namespace

Graph parse_edge_list(std::istream& in, const std::string& source) {
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::size_t> n_nodes;
    bool directed = true;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto tokens = split_ws(line);

        if (!n_nodes) {
            std::size_t n = 0;
            if (tokens.size() != 3 || tokens[0] != "nodes" || !parse_number(tokens[1], n) ||
                (tokens[2] != "directed" && tokens[2] != "undirected"))
                fail(source, line_no, "expected directive 'nodes <N> directed|undirected'");
            if (n == 0) fail(source, line_no, "node count must be positive");
            if (n > std::numeric_limits<NodeId>::max()) fail(source, line_no, "node count too large");
            n_nodes = n;
            directed = tokens[2] == "directed";
            continue;
        }

        if (tokens.size() != 2 && tokens.size() != 3) fail(source, line_no, "malformed edge line");
        std::uint64_t src = 0;
        std::uint64_t dst = 0;
        double weight = 1.0;
        if (!parse_number(tokens[0], src) || !parse_number(tokens[1], dst))
            fail(source, line_no, "malformed node id");
        if (tokens.size() == 3 && !parse_number(tokens[2], weight)) fail(source, line_no, "malformed weight");
        if (src >= *n_nodes || dst >= *n_nodes) fail(source, line_no, "node id out of range");
        if (!std::isfinite(weight) || weight <= 0.0) fail(source, line_no, "weight must be positive and finite");

        std::uint64_t a = src;
        std::uint64_t b = dst;
        if (!directed && a > b) std::swap(a, b);
        if (!seen.insert((a << 32) | b).second) fail(source, line_no, "duplicate edge");
        edges.push_back({static_cast<NodeId>(src), static_cast<NodeId>(dst), weight});
    }
    if (in.bad()) throw InputError(source + ": read error");
    if (!n_nodes) throw InputError(source + ": missing 'nodes <N> directed|undirected' directive");
    return Graph::from_edges(*n_nodes, directed, edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
    auto in = open_in(path);
    return parse_edge_list(in, path.string());
}

void write_edge_list(const Graph& graph, std::ostream& out) {
    out << "nodes " << graph.n_nodes() << (graph.directed() ? " directed" : " undirected") << '\n';
    for (const Edge& e : graph.edges()) {
        out << e.src << ' ' << e.dst;
        if (e.weight != 1.0) out << ' ' << format_g(e.weight, 17);
        out << '\n';
    }
}

void write_edge_list(const Graph& graph, const std::filesystem::path& path) {
    auto out = open_out(path);
    write_edge_list(graph, out);
    check_written(out, path.string());
}

GraphSignal parse_signal(std::istream& in, std::size_t n_nodes, const std::string& source) {
    std::vector<double> values;
    values.reserve(n_nodes);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        double v = 0.0;
        if (!parse_number(line, v)) fail(source, line_no, "cannot parse value '" + std::string(line) + "'");
        if (!std::isfinite(v)) fail(source, line_no, "non-finite value");
        values.push_back(v);
    }
    if (in.bad()) throw InputError(source + ": read error");
    if (values.size() != n_nodes)
        throw InputError(source + ": expected " + std::to_string(n_nodes) + " values, found " +
                         std::to_string(values.size()));
    return GraphSignal(std::move(values));
}

GraphSignal read_signal(const std::filesystem::path& path, std::size_t n_nodes) {
    auto in = open_in(path);
    return parse_signal(in, n_nodes, path.string());
}

void write_signal(const GraphSignal& signal, std::ostream& out) {
    for (double v : signal.values()) out << format_g(v, 17) << '\n';
}

void write_signal(const GraphSignal& signal, const std::filesystem::path& path) {
    auto out = open_out(path);
    write_signal(signal, out);
    check_written(out, path.string());
}

std::string_view to_string(Experiment e) {
    switch (e) {
        case Experiment::logistic: return "logistic";
        case Experiment::er: return "er";
        case Experiment::custom: return "custom";
    }
    return "custom";
}

std::string_view to_string(RowKind k) { return k == RowKind::summary ? "summary" : "raw"; }

EntropyCell EntropyCell::from(const EntropyResult& result) {
    EntropyCell cell;
    if (result.value) {
        cell.value = *result.value;
    } else {
        cell.undefined_reason = std::string(to_string(result.undefined));
    }
    return cell;
}

std::string EntropyCell::render() const {
    if (value) return format_g(*value, 12);
    return "undefined:" + undefined_reason;
}

std::string sweep_csv_header() {
    return "experiment,N,m,r,param_name,param_value,seed,entropy,b_total,a_total,n_valid,runtime_ms,"
           "row_kind,variant,entropy_std,n_runs";
}

std::string render_sweep_row(const SweepRecord& rec) {
    std::ostringstream row;
    row << to_string(rec.experiment) << ',' << rec.n_nodes << ',' << rec.m << ',' << format_g(rec.r, 12) << ','
        << rec.param_name << ',' << format_g(rec.param_value, 12) << ',';
    if (rec.seed) row << *rec.seed;
    row << ',' << rec.entropy.render() << ',' << format_g(rec.b_total, 12) << ',' << format_g(rec.a_total, 12) << ','
        << rec.n_valid << ',';
    if (rec.runtime_ms) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", *rec.runtime_ms);
        row << buf;
    }
    row << ',' << to_string(rec.row_kind) << ',' << rec.variant << ',';
    if (rec.entropy_std) row << format_g(*rec.entropy_std, 12);
    row << ',';
    if (rec.n_runs) row << *rec.n_runs;
    return row.str();
}

void write_sweep_csv(std::span<const SweepRecord> records, std::ostream& out) {
    if (records.empty()) throw InputError("no records to write");
    out << sweep_csv_header() << '\n';
    for (const SweepRecord& rec : records) out << render_sweep_row(rec) << '\n';
}

void write_sweep_csv(std::span<const SweepRecord> records, const std::filesystem::path& path) {
    if (records.empty()) throw InputError("no records to write");
    auto out = open_out(path);
    write_sweep_csv(records, out);
    check_written(out, path.string());
}

}  // namespace sampeng
