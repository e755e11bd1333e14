#pragma once

#include <json.hpp>

#include "packmeasure/diffusion.hpp"
#include "packmeasure/graph.hpp"
#include "packmeasure/heuristics.hpp"
#include "packmeasure/packing.hpp"

namespace packmeasure {

// JSON views use raw labels, not internal indices, so dumps survive
// re-indexing of the input file.

inline nlohmann::json to_json(const Graph& g, const Packing& p) {
    nlohmann::json labels = nlohmann::json::array();
    for (VertexId v : p.members) labels.push_back(g.label_of(v));
    return {{"d", p.d}, {"members", labels}};
}

inline nlohmann::json to_json(const Graph& g, const SeedSet& s) {
    nlohmann::json j;
    j["method"] = to_string(s.method);
    j["k"] = s.k;
    if (s.d) j["d"] = *s.d;
    nlohmann::json labels = nlohmann::json::array();
    for (VertexId v : s.members) labels.push_back(g.label_of(v));
    j["seeds"] = labels;
    nlohmann::json flags = nlohmann::json::array();
    if (s.truncated) flags.push_back("truncated");
    if (s.degraded) flags.push_back("degraded");
    j["flags"] = flags;
    return j;
}

inline nlohmann::json to_json(const SpreadEstimate& e) {
    return {{"mean_activated", e.mean_activated},
            {"mean_rounds", e.mean_rounds},
            {"iterations", e.iterations},
            {"master_seed", e.master_seed},
            {"rounded_activated", e.rounded_activated}};
}

inline nlohmann::json to_json(const Graph& g, const DiffusionOutcome& o) {
    nlohmann::json active = nlohmann::json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (o.activated_set[v]) active.push_back(g.label_of(v));
    return {{"activated", o.activated}, {"rounds", o.rounds}, {"activated_set", active}};
}

}  // namespace packmeasure
