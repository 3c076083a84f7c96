#ifndef STREAMND_GRAPH_HPP_
#define STREAMND_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace streamnd {

using Weight = std::int64_t;

inline constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

struct Edge {
    int u = 0;
    int v = 0;
    Weight w = 1;
};

struct Incidence {
    int to;
    std::size_t edge;
};

using AdjacencyList = std::vector<std::vector<Incidence>>;

enum class ConnectivityMode { Edge, Vertex, Element };

std::string_view to_string(ConnectivityMode mode);
/// Accepts "ec"/"edge", "vc"/"vertex", "elc"/"element".
ConnectivityMode parse_connectivity_mode(std::string_view text);

/// Undirected multigraph on vertices [0, n) with nonnegative integer weights.
/// Self-loops are rejected; parallel edges are kept. Every vertex carries a
/// reliability flag (used by element connectivity), true by default.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge> &edges() const noexcept { return edges_; }
    const Edge &edge(std::size_t id) const { return edges_.at(id); }

    /// Returns the id of the new edge.
    std::size_t add_edge(int u, int v, Weight w = 1);

    bool reliable(int v) const;
    void set_reliable(int v, bool value);
    bool all_reliable() const;

    Weight total_weight() const;
    Weight weight_of(std::span<const std::size_t> edge_ids) const;

    /// Same vertex set and reliability flags, only the listed edges (renumbered
    /// in the order given).
    Graph with_edges(std::span<const std::size_t> edge_ids) const;

    AdjacencyList adjacency() const;

    bool contains_vertex(int v) const noexcept { return v >= 0 && v < n_; }

  private:
    void require_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<char> reliable_;
};

/// Symmetric table r(uv) over unordered vertex pairs. Zero entries are not stored.
class RequirementMap {
  public:
    using Pair = std::pair<int, int>;

    void set(int u, int v, int r);
    int get(int u, int v) const;
    int max_requirement() const noexcept { return k_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// r(uv) = k for every pair of vertices in [0, n).
    static RequirementMap uniform(int n, int k);
    /// r(uv) = k for every pair of reliable vertices of g.
    static RequirementMap uniform_reliable(const class Graph &g, int k);

    /// Throws std::invalid_argument when an entry references a vertex outside g,
    /// exceeds n-1 in vertex/element mode, or (element mode) touches a
    /// non-reliable vertex.
    void validate(const Graph &g, ConnectivityMode mode) const;

  private:
    static Pair key(int u, int v);

    std::map<Pair, int> entries_;
    int k_ = 0;
};

/// Nested vertex sets S ⊆ S⁺.
struct Biset {
    std::vector<int> inner;
    std::vector<int> outer;
};

/// |δ(Ŝ)| + |S⁺ \ S|: edges from S to V \ S⁺ plus the boundary vertices.
int biset_cut_value(const Graph &g, const Biset &biset);

} // namespace streamnd

#endif // STREAMND_GRAPH_HPP_
