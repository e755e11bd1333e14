// packmeasure: seed selection and Independent Cascade benchmarking on
// undirected graphs. Subcommands: stats, seeds, simulate, steps, generate,
// bench.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "packmeasure/bench.hpp"
#include "packmeasure/diffusion.hpp"
#include "packmeasure/graph.hpp"
#include "packmeasure/heuristics.hpp"
#include "packmeasure/json_io.hpp"
#include "packmeasure/synthgen.hpp"

namespace pm = packmeasure;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

pm::Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return pm::load_edge_list(in);
}

struct SeedArgs {
    std::string method = "mdh";
    std::size_t k = 10;
    std::optional<unsigned> d;
    std::uint64_t rng_seed = 0;
    bool no_refine = false;
};

void add_seed_options(CLI::App& cmd, SeedArgs& args) {
    cmd.add_option("--method", args.method, "random | mdh | dih | mdh-pack | dih-pack")
        ->default_str("mdh");
    cmd.add_option("--k", args.k, "seed set size")->required();
    cmd.add_option("--d", args.d, "packing distance (pack methods)");
    cmd.add_option("--rng-seed", args.rng_seed, "seed for the random method");
    cmd.add_flag("--no-refine", args.no_refine, "pack methods: keep raw packing members as seeds");
}

pm::SeedSet make_seeds(const pm::Graph& g, const SeedArgs& args) {
    pm::SeedMethod method = pm::seed_method_from_string(args.method);
    bool pack = method == pm::SeedMethod::mdh_pack || method == pm::SeedMethod::dih_pack;
    if (pack && !args.d) throw std::runtime_error("--d is required for pack methods");
    switch (method) {
        case pm::SeedMethod::random: return pm::random_seeds(g, args.k, args.rng_seed);
        case pm::SeedMethod::mdh: return pm::mdh_seeds(g, args.k);
        case pm::SeedMethod::dih: return pm::dih_seeds(g, args.k);
        case pm::SeedMethod::mdh_pack:
            return pm::pack_and_measure_seeds(g, args.k, *args.d, pm::Measure::degree,
                                              !args.no_refine);
        case pm::SeedMethod::dih_pack:
            return pm::pack_and_measure_seeds(g, args.k, *args.d,
                                              pm::Measure::diminishing_influence, !args.no_refine);
    }
    throw std::runtime_error("unknown method");
}

void print_stats(const pm::Graph& g) {
    std::map<std::size_t, std::size_t> hist;
    std::size_t max_deg = 0;
    for (pm::VertexId v = 0; v < g.vertex_count(); ++v) {
        std::size_t deg = g.degree(v);
        ++hist[deg];
        max_deg = std::max(max_deg, deg);
    }
    std::cout << "vertices: " << g.vertex_count() << "\n";
    std::cout << "edges: " << g.edge_count() << "\n";
    std::cout << "max degree: " << max_deg << "\n";
    std::cout << "degree histogram (degree: count):\n";
    for (auto [deg, count] : hist) std::cout << "  " << deg << ": " << count << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pack-and-measure influence maximization toolkit"};
    app.require_subcommand(1);

    // stats
    std::string stats_file;
    CLI::App* stats = app.add_subcommand("stats", "print n, m and a degree histogram");
    stats->add_option("graph", stats_file, "edge-list file")->required();

    // seeds
    SeedArgs seed_args;
    std::string seeds_file;
    CLI::App* seeds = app.add_subcommand("seeds", "select a seed set, print it as JSON");
    add_seed_options(*seeds, seed_args);
    seeds->add_option("graph", seeds_file, "edge-list file")->required();

    // simulate
    SeedArgs sim_seed_args;
    std::string sim_file;
    double sim_p = 0.01;
    std::size_t sim_iters = 1000;
    std::uint64_t sim_master = 0;
    CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo spread estimate, JSON output");
    add_seed_options(*simulate, sim_seed_args);
    simulate->add_option("--p", sim_p, "activation probability")->required();
    simulate->add_option("--iterations", sim_iters, "Monte-Carlo iterations");
    simulate->add_option("--master-seed", sim_master, "master RNG seed");
    simulate->add_option("graph", sim_file, "edge-list file")->required();

    // steps
    SeedArgs steps_seed_args;
    std::string steps_file;
    CLI::App* steps = app.add_subcommand("steps", "rounds to cover the graph at p=1");
    add_seed_options(*steps, steps_seed_args);
    steps->add_option("graph", steps_file, "edge-list file")->required();

    // generate
    std::vector<std::size_t> gen_cliques;
    std::size_t gen_path_internal = 0;
    std::uint64_t gen_rng_seed = 0;
    bool gen_paper4 = false;
    std::string gen_out;
    CLI::App* generate = app.add_subcommand("generate", "write a clique-ring synthetic graph");
    generate->add_option("--cliques", gen_cliques, "clique sizes (>=3 values)")->delimiter(',');
    generate->add_option("--path-internal", gen_path_internal, "internal vertices per connecting path");
    generate->add_option("--rng-seed", gen_rng_seed, "seed for port-vertex choice");
    generate->add_flag("--paper4", gen_paper4, "use the built-in 4-clique benchmark spec");
    generate->add_option("-o,--output", gen_out, "output edge-list path")->required();

    // bench
    std::string bench_config;
    CLI::App* bench = app.add_subcommand("bench", "run an experiment sweep from a JSON config");
    bench->add_option("--config", bench_config, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*stats) {
            print_stats(load_graph_file(stats_file));
        } else if (*seeds) {
            pm::Graph g = load_graph_file(seeds_file);
            std::cout << pm::to_json(g, make_seeds(g, seed_args)).dump(2) << "\n";
        } else if (*simulate) {
            pm::Graph g = load_graph_file(sim_file);
            pm::SeedSet s = make_seeds(g, sim_seed_args);
            pm::SpreadEstimate est = pm::estimate_spread(g, s.members, sim_p, sim_iters, sim_master);
            std::cout << pm::to_json(est).dump(2) << "\n";
        } else if (*steps) {
            pm::Graph g = load_graph_file(steps_file);
            pm::SeedSet s = make_seeds(g, steps_seed_args);
            pm::CoverageResult cov = pm::coverage_steps(g, s.members);
            nlohmann::json j{{"coverage_steps", cov.steps}, {"unreachable", cov.unreachable}};
            std::cout << j.dump(2) << "\n";
        } else if (*generate) {
            pm::SyntheticSpec spec =
                gen_paper4 ? pm::paper4_spec()
                           : pm::SyntheticSpec{gen_cliques, gen_path_internal, gen_rng_seed};
            pm::Graph g = pm::generate_scattered_cliques(spec);
            std::ofstream out(gen_out);
            if (!out) throw std::runtime_error("cannot open '" + gen_out + "' for writing");
            out << "# clique-ring synthetic graph: " << g.vertex_count() << " vertices, "
                << g.edge_count() << " edges\n";
            g.write_edge_list(out);
            std::cerr << "wrote " << g.vertex_count() << " vertices / " << g.edge_count()
                      << " edges to " << gen_out << "\n";
        } else if (*bench) {
            pm::ExperimentConfig cfg = pm::load_config(bench_config);
            std::vector<pm::ReportRow> rows = pm::run_experiment(cfg);
            if (!cfg.csv_out.empty()) {
                std::ofstream out(cfg.csv_out);
                pm::write_csv(out, rows);
            } else {
                pm::write_csv(std::cout, rows);
            }
            if (!cfg.json_out.empty()) {
                std::ofstream out(cfg.json_out);
                out << pm::report_to_json(rows).dump(2) << "\n";
            }
            if (!cfg.timing_out.empty()) {
                std::ofstream out(cfg.timing_out);
                pm::write_timing(out, rows);
            }
        }
    } catch (const pm::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
