#include "streamnd/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace streamnd {

std::string_view to_string(ConnectivityMode mode) {
    switch (mode) {
    case ConnectivityMode::Edge:
        return "ec";
    case ConnectivityMode::Vertex:
        return "vc";
    case ConnectivityMode::Element:
        return "elc";
    }
    return "?";
}

ConnectivityMode parse_connectivity_mode(std::string_view text) {
    if (text == "ec" || text == "edge")
        return ConnectivityMode::Edge;
    if (text == "vc" || text == "vertex")
        return ConnectivityMode::Vertex;
    if (text == "elc" || text == "element")
        return ConnectivityMode::Element;
    throw std::invalid_argument("unknown connectivity mode '" + std::string(text) + "'");
}

Graph::Graph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("negative vertex count");
    reliable_.assign(static_cast<std::size_t>(n_), 1);
}

void Graph::require_vertex(int v) const {
    if (!contains_vertex(v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n_) + ")");
}

std::size_t Graph::add_edge(int u, int v, Weight w) {
    require_vertex(u);
    require_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (w < 0)
        throw std::invalid_argument("negative edge weight");
    edges_.push_back({u, v, w});
    return edges_.size() - 1;
}

bool Graph::reliable(int v) const {
    require_vertex(v);
    return reliable_[static_cast<std::size_t>(v)] != 0;
}

void Graph::set_reliable(int v, bool value) {
    require_vertex(v);
    reliable_[static_cast<std::size_t>(v)] = value ? 1 : 0;
}

bool Graph::all_reliable() const {
    return std::all_of(reliable_.begin(), reliable_.end(), [](char c) { return c != 0; });
}

Weight Graph::total_weight() const {
    Weight total = 0;
    for (const auto &e : edges_)
        total += e.w;
    return total;
}

Weight Graph::weight_of(std::span<const std::size_t> edge_ids) const {
    Weight total = 0;
    for (auto id : edge_ids)
        total += edges_.at(id).w;
    return total;
}

Graph Graph::with_edges(std::span<const std::size_t> edge_ids) const {
    Graph out(n_);
    out.reliable_ = reliable_;
    out.edges_.reserve(edge_ids.size());
    for (auto id : edge_ids)
        out.edges_.push_back(edges_.at(id));
    return out;
}

AdjacencyList Graph::adjacency() const {
    AdjacencyList adj(static_cast<std::size_t>(n_));
    for (std::size_t id = 0; id < edges_.size(); ++id) {
        const auto &e = edges_[id];
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, id});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, id});
    }
    return adj;
}

RequirementMap::Pair RequirementMap::key(int u, int v) {
    if (u == v)
        throw std::invalid_argument("requirement on identical vertices " + std::to_string(u));
    return u < v ? Pair{u, v} : Pair{v, u};
}

void RequirementMap::set(int u, int v, int r) {
    if (u < 0 || v < 0)
        throw std::invalid_argument("negative vertex id in requirement");
    if (r < 0)
        throw std::invalid_argument("negative connectivity requirement");
    auto k = key(u, v);
    if (r == 0)
        entries_.erase(k);
    else
        entries_[k] = r;
    k_ = 0;
    for (const auto &[pair, value] : entries_)
        k_ = std::max(k_, value);
}

int RequirementMap::get(int u, int v) const {
    auto it = entries_.find(key(u, v));
    return it == entries_.end() ? 0 : it->second;
}

RequirementMap RequirementMap::uniform(int n, int k) {
    RequirementMap req;
    if (k <= 0)
        return req;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            req.entries_[{u, v}] = k;
    req.k_ = req.entries_.empty() ? 0 : k;
    return req;
}

RequirementMap RequirementMap::uniform_reliable(const Graph &g, int k) {
    RequirementMap req;
    if (k <= 0)
        return req;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!g.reliable(u))
            continue;
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.reliable(v))
                req.entries_[{u, v}] = k;
    }
    req.k_ = req.entries_.empty() ? 0 : k;
    return req;
}

void RequirementMap::validate(const Graph &g, ConnectivityMode mode) const {
    const int n = g.vertex_count();
    for (const auto &[pair, r] : entries_) {
        const auto [u, v] = pair;
        if (!g.contains_vertex(u) || !g.contains_vertex(v))
            throw std::invalid_argument("requirement references vertex outside the graph");
        if (mode != ConnectivityMode::Edge && r > n - 1)
            throw std::invalid_argument("requirement " + std::to_string(r) + " exceeds n-1");
        if (mode == ConnectivityMode::Element && (!g.reliable(u) || !g.reliable(v)))
            throw std::invalid_argument("element-connectivity requirement on non-reliable vertex");
    }
}

int biset_cut_value(const Graph &g, const Biset &biset) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> in_inner(n, 0), in_outer(n, 0);
    for (int v : biset.outer) {
        if (!g.contains_vertex(v))
            throw std::invalid_argument("biset vertex out of range");
        in_outer[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : biset.inner) {
        if (!g.contains_vertex(v) || !in_outer[static_cast<std::size_t>(v)])
            throw std::invalid_argument("biset inner set must be contained in the outer set");
        in_inner[static_cast<std::size_t>(v)] = 1;
    }
    int value = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (in_outer[v] && !in_inner[v])
            ++value;
    for (const auto &e : g.edges()) {
        const auto a = static_cast<std::size_t>(e.u);
        const auto b = static_cast<std::size_t>(e.v);
        if ((in_inner[a] && !in_outer[b]) || (in_inner[b] && !in_outer[a]))
            ++value;
    }
    return value;
}

} // namespace streamnd
