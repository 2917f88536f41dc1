#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qwrank/compare.hpp"
#include "qwrank/errors.hpp"
#include "qwrank/generators.hpp"
#include "qwrank/graph_io.hpp"
#include "qwrank/rank.hpp"
#include "qwrank/report_io.hpp"

namespace {

constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

struct GeneratorSpec {
    std::string family;
    std::uint32_t branching = 2;
    std::uint32_t generations = 5;
    std::uint32_t n = 32;
    std::uint32_t m = 1;
    double prob = 0.2;
    std::uint64_t seed = 1;
};

qwrank::DirectedGraph build_generated(const GeneratorSpec& spec) {
    if (spec.family == "tree") return qwrank::gen_tree(spec.branching, spec.generations);
    if (spec.family == "scale-free") return qwrank::gen_scale_free(spec.n, spec.m, spec.seed);
    if (spec.family == "gnc") return qwrank::gen_gnc(spec.n, spec.seed);
    if (spec.family == "cycle") return qwrank::gen_cycle(spec.n);
    if (spec.family == "random") return qwrank::gen_random_digraph(spec.n, spec.prob, spec.seed);
    throw qwrank::ParseError("unknown family '" + spec.family + "'");
}

struct QuantumFlags {
    std::uint32_t steps = 500;
    std::string initial = "superposition";
    std::string shift_basis = "adjacency";
    std::string convention = "teleport";
    double p = 0.85;
};

qwrank::GoogleConvention parse_convention(const std::string& name) {
    if (name == "teleport") return qwrank::GoogleConvention::teleport_p;
    if (name == "damping") return qwrank::GoogleConvention::damping_p;
    throw qwrank::ParseError("unknown convention '" + name + "'");
}

qwrank::RankOptions rank_options(const QuantumFlags& flags) {
    qwrank::RankOptions options;
    options.steps = flags.steps;
    if (flags.initial == "superposition")
        options.initial = qwrank::InitialState::coin_superposition;
    else if (flags.initial == "down")
        options.initial = qwrank::InitialState::down_sector;
    else
        throw qwrank::ParseError("unknown initial state '" + flags.initial + "'");
    if (flags.shift_basis == "adjacency")
        options.walk.shift_basis = qwrank::ShiftBasis::adjacency;
    else if (flags.shift_basis == "google")
        options.walk.shift_basis = qwrank::ShiftBasis::google;
    else
        throw qwrank::ParseError("unknown shift basis '" + flags.shift_basis + "'");
    options.walk.google_p = flags.p;
    options.walk.google_convention = parse_convention(flags.convention);
    return options;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw qwrank::ParseError("cannot write '" + path + "'");
    out << text;
    if (!out.flush()) throw qwrank::ParseError("write failed for '" + path + "'");
}

void add_quantum_flags(CLI::App* cmd, QuantumFlags& flags) {
    cmd->add_option("--steps,-T", flags.steps, "Walk steps (default 500)");
    cmd->add_option("--initial", flags.initial,
                    "Initial state: superposition (equal over both coin sectors) or down")
        ->check(CLI::IsMember({"superposition", "down"}));
    cmd->add_option("--shift-basis", flags.shift_basis,
                    "Matrix the scattering unitary is built from: adjacency or google")
        ->check(CLI::IsMember({"adjacency", "google"}));
    cmd->add_option("--convention", flags.convention,
                    "Google-matrix convention: teleport (links weighted 1-p) or damping "
                    "(links weighted p)")
        ->check(CLI::IsMember({"teleport", "damping"}));
    cmd->add_option("--p", flags.p, "Google-matrix parameter (default 0.85)")
        ->check(CLI::Range(0.0, 1.0));
}

struct SourceFlags {
    std::vector<std::string> inputs;
    GeneratorSpec spec;
    bool has_family = false;
};

void add_source_flags(CLI::App* cmd, SourceFlags& source) {
    cmd->add_option("--input,-i", source.inputs, "Edge-list file(s) to read");
    auto* family = cmd->add_option("--family", source.spec.family,
                                   "Generate the graph instead of reading a file: "
                                   "tree, scale-free, gnc, cycle, random");
    family->check(CLI::IsMember({"tree", "scale-free", "gnc", "cycle", "random"}));
    cmd->add_option("--branching", source.spec.branching, "Tree branching factor");
    cmd->add_option("--generations", source.spec.generations, "Tree generations below the root");
    cmd->add_option("--n", source.spec.n, "Node count for scale-free/gnc/cycle/random");
    cmd->add_option("--m", source.spec.m, "Out-edges per new scale-free node");
    cmd->add_option("--prob", source.spec.prob, "Edge probability for random digraphs");
    cmd->add_option("--seed", source.spec.seed, "Generator seed");
    cmd->callback([family, &source] { source.has_family = !family->empty(); });
}

qwrank::DirectedGraph resolve_single_source(const SourceFlags& source) {
    if (source.has_family == !source.inputs.empty())
        throw qwrank::ParseError("need exactly one graph source: --input or --family");
    if (source.has_family) return build_generated(source.spec);
    if (source.inputs.size() != 1)
        throw qwrank::ParseError("this command takes exactly one --input file");
    return qwrank::read_edge_list_file(source.inputs[0]);
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

/// Runs `work(i)` for i in [0, count) on up to `jobs` threads. Exceptions are
/// captured and rethrown on the caller thread.
void run_jobs(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& work) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    const std::size_t workers = std::min(jobs, count);
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    work(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

int run(int argc, char** argv) {
    CLI::App app{"Quantum-walk node ranking for directed weighted networks"};
    app.require_subcommand(1);

    // ---- generate ----
    GeneratorSpec gen_spec;
    std::string gen_output;
    auto* gen = app.add_subcommand("generate", "Generate a network family edge list");
    gen->add_option("family", gen_spec.family, "tree | scale-free | gnc | cycle | random")
        ->required()
        ->check(CLI::IsMember({"tree", "scale-free", "gnc", "cycle", "random"}));
    gen->add_option("--branching", gen_spec.branching, "Tree branching factor (>= 2)");
    gen->add_option("--generations", gen_spec.generations, "Tree generations below the root");
    gen->add_option("--n", gen_spec.n, "Node count");
    gen->add_option("--m", gen_spec.m, "Out-edges per new scale-free node");
    gen->add_option("--prob", gen_spec.prob, "Edge probability for random digraphs");
    gen->add_option("--seed", gen_spec.seed, "Generator seed");
    gen->add_option("--output,-o", gen_output, "Output file (default stdout)");

    // ---- rank ----
    SourceFlags rank_source;
    QuantumFlags rank_quantum;
    bool rank_classical = false;
    std::string rank_format = "csv", rank_output, rank_output_dir;
    std::size_t rank_jobs = 1;
    auto* rank = app.add_subcommand(
        "rank", "Quantum-walk ranks (CSV columns: node,quantum_mean,quantum_variance[,classical])");
    add_source_flags(rank, rank_source);
    add_quantum_flags(rank, rank_quantum);
    rank->add_flag("--classical", rank_classical, "Append the classical PageRank column");
    rank->add_option("--format", rank_format)->check(CLI::IsMember({"csv", "json"}));
    rank->add_option("--output,-o", rank_output, "Output file (default stdout)");
    rank->add_option("--output-dir", rank_output_dir, "Directory for batch outputs");
    rank->add_option("--jobs", rank_jobs, "Parallel workers for multiple --input files")
        ->check(CLI::PositiveNumber);

    // ---- compare ----
    SourceFlags cmp_source;
    QuantumFlags cmp_quantum;
    std::string cmp_format = "csv", cmp_output;
    auto* cmp = app.add_subcommand(
        "compare",
        "Classical vs quantum report (CSV columns: node,classical,quantum_mean,quantum_variance)");
    add_source_flags(cmp, cmp_source);
    add_quantum_flags(cmp, cmp_quantum);
    cmp->add_option("--format", cmp_format)->check(CLI::IsMember({"csv", "json"}));
    cmp->add_option("--output,-o", cmp_output, "Output file (default stdout)");

    // ---- convergence ----
    SourceFlags conv_source;
    QuantumFlags conv_quantum;
    std::uint32_t conv_window = 50;
    std::string conv_format = "csv", conv_output;
    auto* conv = app.add_subcommand(
        "convergence",
        "Running-mean rank series (CSV columns: step,node_0..node_k) and stabilization step");
    add_source_flags(conv, conv_source);
    add_quantum_flags(conv, conv_quantum);
    conv->add_option("--window,-W", conv_window, "Stability window (default 50)");
    conv->add_option("--format", conv_format)->check(CLI::IsMember({"csv", "json"}));
    conv->add_option("--output,-o", conv_output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            const qwrank::DirectedGraph g = build_generated(gen_spec);
            std::ostringstream text;
            qwrank::write_edge_list(text, g);
            write_output(gen_output, text.str());
            std::cerr << g.node_count() << " nodes, " << g.edges().size() << " edges\n";
        } else if (rank->parsed()) {
            const qwrank::RankOptions options = rank_options(rank_quantum);
            const qwrank::GoogleConvention convention = parse_convention(rank_quantum.convention);
            auto rank_one = [&](const qwrank::DirectedGraph& g) {
                const qwrank::QuantumRankResult q = qwrank::quantum_rank(g, options);
                std::optional<Eigen::VectorXd> classical;
                if (rank_classical)
                    classical = qwrank::pagerank(g, rank_quantum.p, convention).ranks;
                return rank_format == "csv" ? qwrank::rank_table_csv(q, classical)
                                            : qwrank::rank_table_json(q, classical);
            };
            if (rank_source.inputs.size() > 1) {
                if (rank_source.has_family)
                    throw qwrank::ParseError("need exactly one graph source: --input or --family");
                if (rank_output_dir.empty())
                    throw qwrank::ParseError("multiple inputs need --output-dir");
                std::filesystem::create_directories(rank_output_dir);
                run_jobs(rank_source.inputs.size(), rank_jobs, [&](std::size_t i) {
                    const auto& path = rank_source.inputs[i];
                    const qwrank::DirectedGraph g = qwrank::read_edge_list_file(path);
                    const std::string ext = rank_format == "csv" ? ".rank.csv" : ".rank.json";
                    write_output((std::filesystem::path(rank_output_dir) /
                                  (stem_of(path) + ext)).string(),
                                 rank_one(g));
                });
            } else {
                write_output(rank_output, rank_one(resolve_single_source(rank_source)));
            }
        } else if (cmp->parsed()) {
            const qwrank::DirectedGraph g = resolve_single_source(cmp_source);
            const qwrank::QuantumRankResult q = qwrank::quantum_rank(g, rank_options(cmp_quantum));
            const qwrank::PageRankResult c =
                qwrank::pagerank(g, cmp_quantum.p, parse_convention(cmp_quantum.convention));
            const qwrank::ComparisonReport report = qwrank::compare(c, q);
            write_output(cmp_output, cmp_format == "csv" ? qwrank::comparison_csv(report)
                                                         : qwrank::comparison_json(report));
        } else if (conv->parsed()) {
            const qwrank::DirectedGraph g = resolve_single_source(conv_source);
            const qwrank::ConvergenceProfile profile = qwrank::convergence_profile(
                g, conv_quantum.steps, conv_window, rank_options(conv_quantum));
            write_output(conv_output, conv_format == "csv" ? qwrank::convergence_csv(profile)
                                                           : qwrank::convergence_json(profile));
        }
    } catch (const qwrank::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qwrank::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
