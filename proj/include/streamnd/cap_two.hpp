#ifndef STREAMND_CAP_TWO_HPP_
#define STREAMND_CAP_TWO_HPP_

#include <map>
#include <vector>

#include "streamnd/cap_one.hpp"
#include "streamnd/link.hpp"
#include "streamnd/spqr.hpp"
#include "streamnd/stream.hpp"
#include "streamnd/streaming_mst.hpp"

namespace streamnd {

/// Greedy edge-minimal 2-connected spanning subgraph: edges are dropped from
/// the highest id down whenever 2-connectivity survives. Returns kept ids.
std::vector<std::size_t> edge_minimal_two_connected(const Graph &g);

/// Positions of one S-node cycle. With the cycle read as mu_0 ... mu_k, where
/// {mu_k, mu_0} is the parent virtual edge (or the anchor edge at the root),
/// position 0 is the dummy of that edge, mu_i sits at 2i + 1 and the dummy of
/// a virtual edge (mu_i, mu_{i+1}) at 2i + 2. Vertices off the cycle map to
/// the dummy of the virtual edge whose subtree holds them, or to position 0
/// when they lie outside the node's subtree.
struct CycleLayout {
    std::vector<int> order;         // mu_0 ... mu_k
    std::vector<int> position;      // per graph vertex
    std::vector<char> is_dummy;     // per position
    std::vector<char> used;         // per position: occupied by a vertex or dummy
    int dummy_count = 0;
};

/// Stored-link counts by structure, next to the quantities that bound them.
struct SpaceAccount {
    std::size_t stored = 0;        // distinct links over all structures
    std::size_t dictionary = 0;    // distinct links in the per-node dictionaries
    std::size_t p_forests = 0;     // links in the P-node spanning forests
    std::size_t cycle_tables = 0;  // distinct links in the S-node Min/Max tables
    std::size_t buckets = 0;
    std::size_t tree_nodes = 0;
    std::size_t tree_edges = 0;
    std::size_t skeleton_edges = 0;   // over all nodes
    std::size_t s_skeleton_edges = 0; // over S-nodes
    /// stored <= dictionary + p_forests + cycle_tables, each part within its
    /// own bound, and buckets * (nodes + 2 tree edges + 4 S-node skeleton
    /// edges) <= 7 * buckets * skeleton edges.
    bool chain_holds() const;
};

/// Streaming 2-to-3 vertex-connectivity augmentation over a 2-connected base.
///
/// The base is reduced to an edge-minimal 2-connected subgraph (the other
/// base edges become weight-0 links streamed first) and indexed by its SPQR
/// tree. The state keeps, per tree node x and bucket, the link at a vertex u
/// with h(u) = x whose other end reaches closest to the root; per P-node a
/// streaming MST over its child subtrees; and per S-node and cycle position
/// the links reaching the lowest and highest other position. Buckets use
/// eps/6 so the stored links contain a (7 + eps)-approximate augmentation.
class CapTwo {
  public:
    CapTwo(const Graph &base, double eps, Weight max_weight);

    void process_link(const WeightedEdge &link);
    void consume(EdgeStream &stream);

    const Graph &base() const noexcept { return base_; }
    const Graph &minimal_base() const noexcept { return minimal_; }
    const SpqrTree &tree() const noexcept { return tree_; }
    const BucketScheme &scheme() const noexcept { return scheme_; }
    const std::vector<Link> &base_links() const noexcept { return base_links_; }
    /// Layout of an S-node (throws for other kinds).
    const CycleLayout &layout(int x) const;

    std::vector<Link> stored_links() const;
    /// L_x(j), if set.
    std::optional<Link> dictionary_entry(int x, int bucket) const;
    /// Min or Max entry of S-node x at a cycle position, if set.
    std::optional<Link> cycle_link(int x, bool minimum, int position, int bucket) const;
    /// Links currently held by the spanning forest of P-node x.
    std::vector<Link> forest_links(int x) const;
    /// 7 * (bucket count) * (sum of skeleton edge counts).
    std::size_t space_bound() const;
    SpaceAccount space_account() const;

    /// Minimum-weight subset of the stored links making base + links
    /// 3-vertex-connected. Throws InfeasibleError if none exists.
    CapResult finalize(std::size_t guard = kDefaultSolverGuard) const;

    /// Builds a solution inside the stored links from a feasible augmentation
    /// `opt` of the base (streamed links only), picking dictionary, cycle
    /// Min/Max and P-node MST links per optimal link.
    std::vector<Link> sol_from_opt(const std::vector<Link> &opt) const;

  private:
    struct TreeEntry {
        Link link;
        int reach_depth;
    };
    struct CycleEntry {
        Link link;
        int other_position;
    };
    struct CycleTables {
        std::vector<std::map<int, CycleEntry>> min, max; // per position: bucket -> entry
    };

    void process(const Link &link);
    int reach_depth(int u, int v) const;
    // Child index of P-node x whose subtree holds u off the poles, or -1.
    int supernode(int x, int u) const;
    const CycleEntry &cycle_entry(int x, bool minimum, int position, int bucket) const;

    Graph base_;
    BucketScheme scheme_;
    Graph minimal_;
    SpqrTree tree_;
    std::vector<Link> base_links_;
    std::vector<std::map<int, TreeEntry>> best_;       // per tree node
    std::map<int, StreamingMst> p_mst_;               // per P-node
    std::map<int, std::map<std::size_t, Link>> p_links_;
    std::map<int, CycleLayout> layouts_;              // per S-node
    std::map<int, CycleTables> cycles_;
    std::size_t next_tag_ = 0;
};

} // namespace streamnd

#endif // STREAMND_CAP_TWO_HPP_
