#include "streamnd/hop_graph.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <stdexcept>

namespace streamnd {

namespace {

bool masked(const std::vector<char> &mask, std::size_t i) { return i < mask.size() && mask[i]; }

} // namespace

HopGraph::HopGraph(int vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("negative vertex count");
    adj_.resize(static_cast<std::size_t>(vertex_count));
}

std::size_t HopGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    const std::size_t id = ends_.size();
    ends_.push_back({u, v});
    adj_[u].push_back({v, id});
    if (u != v)
        adj_[v].push_back({u, id});
    return id;
}

std::optional<HopGraph::Path> HopGraph::short_path(int u, int v, int max_hops, const std::vector<char> &blocked_vertices,
                                                   const std::vector<char> &blocked_edges) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("vertex out of range");
    const std::size_t n = adj_.size();
    std::vector<int> dist(n, -1);
    std::vector<std::size_t> via(n, kNoEdge);
    std::deque<int> queue{u};
    dist[u] = 0;
    while (!queue.empty() && dist[v] < 0) {
        const int x = queue.front();
        queue.pop_front();
        if (dist[x] >= max_hops)
            continue;
        for (const auto &inc : adj_[x]) {
            const int y = inc.to;
            if (dist[y] >= 0 || masked(blocked_edges, inc.edge))
                continue;
            if (y != v && masked(blocked_vertices, static_cast<std::size_t>(y)))
                continue;
            dist[y] = dist[x] + 1;
            via[y] = inc.edge;
            queue.push_back(y);
        }
    }
    if (u == v)
        return Path{{u}, {}};
    if (dist[v] < 0)
        return std::nullopt;
    Path p;
    for (int x = v; x != u;) {
        p.vertices.push_back(x);
        p.edges.push_back(via[x]);
        const auto [a, b] = ends_[via[x]];
        x = a == x ? b : a;
    }
    p.vertices.push_back(u);
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

int HopGraph::hop_distance(int u, int v, const std::vector<char> &blocked_vertices,
                           const std::vector<char> &blocked_edges) const {
    auto p = short_path(u, v, INT_MAX, blocked_vertices, blocked_edges);
    return p ? static_cast<int>(p->edges.size()) : -1;
}

} // namespace streamnd
