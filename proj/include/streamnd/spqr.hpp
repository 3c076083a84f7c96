#ifndef STREAMND_SPQR_HPP_
#define STREAMND_SPQR_HPP_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "streamnd/graph.hpp"

namespace streamnd {

enum class SpqrKind { S, P, R };

char to_char(SpqrKind kind);

/// Skeleton edge. Real edges carry the input edge id, virtual edges a
/// virtual id shared by exactly the two skeletons they glue.
struct SkeletonEdge {
    int u = 0;
    int v = 0;
    bool is_virtual = false;
    std::size_t id = 0;
};

struct SeparationPair {
    int a;
    int b;
    std::vector<std::vector<std::size_t>> classes; // indices into the edge list
};

/// Some separation pair of a 2-connected multigraph given by its edge list,
/// with its separation classes (one per component of G - {a, b}, plus the
/// class of a-b edges when present), or nullopt when there is none. Pairs are
/// tried in lexicographic order.
std::optional<SeparationPair> find_separation_pair(const std::vector<SkeletonEdge> &edges);

struct SplitResult {
    std::vector<SkeletonEdge> first;  // chosen classes + the new virtual edge
    std::vector<SkeletonEdge> second; // remaining classes + the new virtual edge
    std::size_t virtual_id;
};

/// Splits at `pair`, putting the classes listed in `chosen` on the first side.
/// Each side must keep at least 2 of the original edges.
SplitResult split(const std::vector<SkeletonEdge> &edges, const SeparationPair &pair,
                  const std::vector<std::size_t> &chosen, std::size_t virtual_id);

struct SpqrNode {
    SpqrKind kind;
    std::vector<int> vertices; // sorted
    std::vector<SkeletonEdge> edges;
    int parent = -1;           // -1 at the root
    std::size_t parent_virtual = 0; // virtual id shared with the parent
    std::vector<int> children;
    int depth = 0;
};

struct SpqrTreeEdge {
    int a;
    int b;
    std::size_t virtual_id;
    int u; // endpoints of the associated virtual edge
    int v;
};

/// SPQR tree of a 2-connected graph, rooted at the node holding the real
/// edge with the lowest id.
class SpqrTree {
  public:
    const Graph &graph() const noexcept { return graph_; }
    const std::vector<SpqrNode> &nodes() const noexcept { return nodes_; }
    const SpqrNode &node(int x) const { return nodes_.at(x); }
    int node_count() const noexcept { return static_cast<int>(nodes_.size()); }
    const std::vector<SpqrTreeEdge> &tree_edges() const noexcept { return tree_edges_; }
    int root() const noexcept { return root_; }

    /// Node containing u closest to the root.
    int h(int u) const { return h_.at(u); }
    /// Node containing u furthest from the root (lowest id on ties).
    int l(int u) const { return l_.at(u); }

    bool node_has_vertex(int x, int u) const;
    /// True iff y lies in the subtree rooted at x.
    bool in_subtree(int y, int x) const;
    /// True iff some node of the subtree rooted at x contains u.
    bool subtree_has_vertex(int x, int u) const;
    int lca(int x, int y) const;
    /// The node across the given virtual edge from x.
    int peer(int x, std::size_t virtual_id) const;

    std::size_t total_skeleton_edges() const;

    /// One line per node: "id kind vertices | real-edges | virtual-edges(peer-id)".
    std::string debug_string() const;
    /// Relabeling-invariant encoding of the tree shape and node kinds/sizes.
    std::string canonical_form() const;

    /// Merges all skeletons along their virtual edges, returning the real
    /// edges reached (as input edge ids, sorted).
    std::vector<std::size_t> reassemble() const;

    /// Throws ContractViolation describing the first broken structural
    /// property (node shapes, edge conservation, adjacency rules, size bound,
    /// connected vertex copies).
    void check_invariants() const;

  private:
    friend SpqrTree build_spqr(const Graph &g);

    Graph graph_;
    std::vector<SpqrNode> nodes_;
    std::vector<SpqrTreeEdge> tree_edges_;
    int root_ = 0;
    std::vector<int> h_, l_;
    std::vector<int> tin_, tout_;
};

/// Recursive-split construction followed by merging adjacent S-S and P-P
/// pairs until none remain. Throws std::invalid_argument unless g is
/// 2-vertex-connected with n >= 3.
SpqrTree build_spqr(const Graph &g);

/// All 2-vertex cuts {a, b} (a < b) read off the tree: P-node vertex sets,
/// virtual edges on R-R and R-S tree edges, non-adjacent S-cycle pairs.
std::set<std::pair<int, int>> enumerate_two_cuts(const SpqrTree &tree);

/// Cycle order of an S-node skeleton starting at `start`, heading first to
/// `next` (which must be adjacent to start on the cycle).
std::vector<int> cycle_order(const SpqrNode &node, int start, int next);

} // namespace streamnd

#endif // STREAMND_SPQR_HPP_
