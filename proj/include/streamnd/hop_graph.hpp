#ifndef STREAMND_HOP_GRAPH_HPP_
#define STREAMND_HOP_GRAPH_HPP_

#include <optional>
#include <vector>

#include "streamnd/graph.hpp"

namespace streamnd {

/// Unweighted growing multigraph used for hop-distance queries inside one
/// weight bucket.
class HopGraph {
  public:
    explicit HopGraph(int vertex_count = 0);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const noexcept { return ends_.size(); }
    std::size_t add_edge(int u, int v);
    std::pair<int, int> ends(std::size_t id) const { return ends_.at(id); }
    const std::vector<Incidence> &neighbors(int v) const { return adj_.at(v); }

    struct Path {
        std::vector<int> vertices; // u ... v
        std::vector<std::size_t> edges;
    };

    /// Shortest u-v path with at most `max_hops` edges that avoids the blocked
    /// vertices and edges (either mask may be empty). Endpoints are never
    /// treated as blocked.
    std::optional<Path> short_path(int u, int v, int max_hops, const std::vector<char> &blocked_vertices = {},
                                   const std::vector<char> &blocked_edges = {}) const;

    /// Hop distance, or -1 when unreachable within the masks.
    int hop_distance(int u, int v, const std::vector<char> &blocked_vertices = {},
                     const std::vector<char> &blocked_edges = {}) const;

  private:
    std::vector<std::vector<Incidence>> adj_;
    std::vector<std::pair<int, int>> ends_;
};

} // namespace streamnd

#endif // STREAMND_HOP_GRAPH_HPP_
