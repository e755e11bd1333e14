#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace packmeasure {

using VertexId = std::uint32_t;
using Label = std::int64_t;

inline constexpr VertexId kUnreachable = std::numeric_limits<VertexId>::max();

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyGraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable undirected simple graph. Vertices carry internal indices
// 0..n-1 assigned in first-appearance order of the raw labels; all
// deterministic tie-breaking elsewhere uses the internal index.
class Graph {
public:
    Graph() = default;

    // Builds from internal-index edge pairs; self-loops dropped, duplicates
    // and reversed duplicates collapsed. labels maps index -> raw label.
    static Graph from_edges(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges,
                            std::vector<Label> labels = {}) {
        Graph g;
        g.adj_.assign(n, {});
        for (auto [u, v] : edges) {
            if (u == v) continue;
            if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        g.m_ = 0;
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            g.m_ += nb.size();
        }
        g.m_ /= 2;
        if (labels.empty()) {
            g.labels_.resize(n);
            for (std::size_t i = 0; i < n; ++i) g.labels_[i] = static_cast<Label>(i);
        } else {
            if (labels.size() != n) throw std::invalid_argument("label count mismatch");
            g.labels_ = std::move(labels);
        }
        for (std::size_t i = 0; i < n; ++i) g.index_of_.emplace(g.labels_[i], static_cast<VertexId>(i));
        return g;
    }

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return m_; }

    std::size_t degree(VertexId v) const {
        check_vertex(v);
        return adj_[v].size();
    }

    std::span<const VertexId> neighbors(VertexId v) const {
        check_vertex(v);
        return adj_[v];
    }

    Label label_of(VertexId v) const {
        check_vertex(v);
        return labels_[v];
    }

    VertexId index_of(Label raw) const {
        auto it = index_of_.find(raw);
        if (it == index_of_.end()) throw std::out_of_range("unknown vertex label");
        return it->second;
    }

    bool has_label(Label raw) const { return index_of_.count(raw) != 0; }

    void check_vertex(VertexId v) const {
        if (v >= adj_.size()) throw std::out_of_range("vertex index out of range");
    }

    // Canonical sorted edge list (raw labels, u-index < v-index per line).
    void write_edge_list(std::ostream& out) const {
        for (VertexId u = 0; u < adj_.size(); ++u)
            for (VertexId v : adj_[u])
                if (u < v) out << labels_[u] << ' ' << labels_[v] << '\n';
    }

private:
    std::vector<std::vector<VertexId>> adj_;
    std::vector<Label> labels_;
    std::unordered_map<Label, VertexId> index_of_;
    std::size_t m_ = 0;
};

// SNAP-compatible edge-list loader: '#' lines are comments, each data line
// holds two whitespace-separated integer labels. Both arc directions merge
// into one undirected edge.
inline Graph load_edge_list(std::istream& in) {
    std::vector<Label> labels;
    std::unordered_map<Label, VertexId> index_of;
    auto intern = [&](Label raw) -> VertexId {
        auto [it, fresh] = index_of.emplace(raw, static_cast<VertexId>(labels.size()));
        if (fresh) labels.push_back(raw);
        return it->second;
    };

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        Label a, b;
        if (!(ls >> a >> b)) {
            throw ParseError("line " + std::to_string(lineno) + ": expected two integer labels");
        }
        std::string trailing;
        if (ls >> trailing) {
            throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + trailing + "'");
        }
        VertexId ia = intern(a);  // sequenced: first appearance wins the lower index
        VertexId ib = intern(b);
        edges.emplace_back(ia, ib);
    }
    if (edges.empty()) throw EmptyGraphError("edge list contains no edges");
    std::size_t n = labels.size();
    return Graph::from_edges(n, std::move(edges), std::move(labels));
}

struct DistanceField {
    VertexId source;
    std::vector<VertexId> dist;  // kUnreachable marks unreachable vertices
};

inline DistanceField bfs_distances(const Graph& g, VertexId source) {
    g.check_vertex(source);
    DistanceField field{source, std::vector<VertexId>(g.vertex_count(), kUnreachable)};
    field.dist[source] = 0;
    std::queue<VertexId> q;
    q.push(source);
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        VertexId du = field.dist[u];
        for (VertexId w : g.neighbors(u)) {
            if (field.dist[w] == kUnreachable) {
                field.dist[w] = du + 1;
                q.push(w);
            }
        }
    }
    return field;
}

// Hop distance to the nearest of several sources.
inline std::vector<VertexId> multi_source_distances(const Graph& g, std::span<const VertexId> sources) {
    std::vector<VertexId> dist(g.vertex_count(), kUnreachable);
    std::queue<VertexId> q;
    for (VertexId s : sources) {
        g.check_vertex(s);
        if (dist[s] == kUnreachable) {
            dist[s] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

// Sizes of the distance shells [|N_1(v)|, |N_2(v)|, ...] out to the
// eccentricity of v within its component.
inline std::vector<std::size_t> shell_sizes(const Graph& g, VertexId v) {
    DistanceField field = bfs_distances(g, v);
    std::vector<std::size_t> shells;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        VertexId d = field.dist[u];
        if (d == kUnreachable || d == 0) continue;
        if (d > shells.size()) shells.resize(d, 0);
        ++shells[d - 1];
    }
    return shells;
}

}  // namespace packmeasure
