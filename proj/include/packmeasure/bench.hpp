#pragma once

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "packmeasure/diffusion.hpp"
#include "packmeasure/graph.hpp"
#include "packmeasure/heuristics.hpp"
#include "packmeasure/json_io.hpp"
#include "packmeasure/synthgen.hpp"

namespace packmeasure {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MethodSpec {
    SeedMethod method;
    std::optional<unsigned> d;  // required for pack variants
};

struct ExperimentConfig {
    std::variant<std::string, SyntheticSpec> dataset;  // edge-list path or generator spec
    std::vector<MethodSpec> methods;
    std::vector<std::size_t> k_values;
    double p = 0.01;
    std::size_t iterations = 1000;
    std::uint64_t master_seed = 0;
    std::string csv_out;
    std::string json_out;
    std::string timing_out;  // wall times live here, outside the byte-stable reports

    void validate() const {
        if (methods.empty()) throw ConfigError("methods must be non-empty");
        if (k_values.empty()) throw ConfigError("k_values must be non-empty");
        for (std::size_t i = 1; i < k_values.size(); ++i)
            if (k_values[i] <= k_values[i - 1]) throw ConfigError("k_values must be ascending");
        if (iterations < 1) throw ConfigError("iterations must be >= 1");
        if (p < 0.0 || p > 1.0) throw ConfigError("p must be in [0,1]");
        for (const MethodSpec& m : methods) {
            bool pack = m.method == SeedMethod::mdh_pack || m.method == SeedMethod::dih_pack;
            if (pack && !m.d) throw ConfigError("pack method requires d");
        }
    }
};

struct ReportRow {
    std::string method;
    std::size_t k = 0;
    std::optional<unsigned> d;
    double p = 0.0;
    long long rounded_activated = 0;
    double mean_rounds = 0.0;
    std::size_t coverage_steps = 0;
    double wall_time = 0.0;  // seconds; excluded from the CSV/JSON reports
};

inline SeedSet build_seeds(const Graph& g, const MethodSpec& m, std::size_t k,
                           std::uint64_t master_seed) {
    switch (m.method) {
        case SeedMethod::random: return random_seeds(g, k, derive_stream_seed(master_seed, k));
        case SeedMethod::mdh: return mdh_seeds(g, k);
        case SeedMethod::dih: return dih_seeds(g, k);
        case SeedMethod::mdh_pack: return pack_and_measure_seeds(g, k, *m.d, Measure::degree);
        case SeedMethod::dih_pack:
            return pack_and_measure_seeds(g, k, *m.d, Measure::diminishing_influence);
    }
    throw ConfigError("unknown method");
}

inline Graph load_dataset(const ExperimentConfig& cfg) {
    if (const auto* path = std::get_if<std::string>(&cfg.dataset)) {
        std::ifstream in(*path);
        if (!in) throw ConfigError("cannot open dataset '" + *path + "'");
        return load_edge_list(in);
    }
    return generate_scattered_cliques(std::get<SyntheticSpec>(cfg.dataset));
}

// One row per (method, k), methods outer, k inner; fully deterministic given
// master_seed whatever the worker count.
inline std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    Graph g = load_dataset(cfg);
    std::vector<ReportRow> rows;
    for (const MethodSpec& m : cfg.methods) {
        for (std::size_t k : cfg.k_values) {
            auto t0 = std::chrono::steady_clock::now();
            SeedSet seeds = build_seeds(g, m, k, cfg.master_seed);
            SpreadEstimate est = estimate_spread(g, seeds.members, cfg.p, cfg.iterations, cfg.master_seed);
            CoverageResult cov = coverage_steps(g, seeds.members);
            auto t1 = std::chrono::steady_clock::now();
            rows.push_back(ReportRow{to_string(m.method), k, m.d, cfg.p, est.rounded_activated,
                                     est.mean_rounds, cov.steps,
                                     std::chrono::duration<double>(t1 - t0).count()});
        }
    }
    return rows;
}

inline std::string format_double(double v, int precision = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

inline std::string format_probability(double p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", p);
    return buf;
}

inline void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << "method,k,d,p,rounded_activated,mean_rounds,coverage_steps\n";
    for (const ReportRow& r : rows) {
        out << r.method << ',' << r.k << ',';
        if (r.d) out << *r.d;
        out << ',' << format_probability(r.p) << ',' << r.rounded_activated << ','
            << format_double(r.mean_rounds) << ',' << r.coverage_steps << '\n';
    }
}

inline nlohmann::json report_to_json(const std::vector<ReportRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ReportRow& r : rows) {
        nlohmann::json j{{"method", r.method},
                         {"k", r.k},
                         {"p", r.p},
                         {"rounded_activated", r.rounded_activated},
                         {"mean_rounds", r.mean_rounds},
                         {"coverage_steps", r.coverage_steps}};
        if (r.d) j["d"] = *r.d;
        arr.push_back(j);
    }
    return nlohmann::json{{"rows", arr}};
}

inline void write_timing(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << "method,k,wall_time_s\n";
    for (const ReportRow& r : rows)
        out << r.method << ',' << r.k << ',' << format_double(r.wall_time) << '\n';
}

inline SyntheticSpec synthetic_spec_from_json(const nlohmann::json& j) {
    if (j.is_string() && j.get<std::string>() == "paper4") return paper4_spec();
    SyntheticSpec spec;
    spec.clique_sizes = j.at("cliques").get<std::vector<std::size_t>>();
    spec.path_internal_vertices = j.value("path_internal", std::size_t{0});
    spec.rng_seed = j.value("rng_seed", std::uint64_t{0});
    return spec;
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    try {
        const auto& ds = j.at("dataset");
        if (ds.is_string()) {
            cfg.dataset = ds.get<std::string>();
        } else if (ds.is_object() && ds.contains("synthetic")) {
            cfg.dataset = synthetic_spec_from_json(ds.at("synthetic"));
        } else {
            throw ConfigError("dataset must be a path or {\"synthetic\": ...}");
        }
        for (const auto& mj : j.at("methods")) {
            MethodSpec m;
            m.method = seed_method_from_string(mj.at("method").get<std::string>());
            if (mj.contains("d")) m.d = mj.at("d").get<unsigned>();
            cfg.methods.push_back(m);
        }
        cfg.k_values = j.at("k_values").get<std::vector<std::size_t>>();
        cfg.p = j.at("p").get<double>();
        cfg.iterations = j.at("iterations").get<std::size_t>();
        cfg.master_seed = j.value("master_seed", std::uint64_t{0});
        if (j.contains("outputs")) {
            const auto& o = j.at("outputs");
            cfg.csv_out = o.value("csv", "");
            cfg.json_out = o.value("json", "");
            cfg.timing_out = o.value("timing", "");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
    return config_from_json(j);
}

}  // namespace packmeasure
