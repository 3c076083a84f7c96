#ifndef STREAMND_CAP_ONE_HPP_
#define STREAMND_CAP_ONE_HPP_

#include <map>
#include <optional>
#include <vector>

#include "streamnd/exact_solver.hpp"
#include "streamnd/link.hpp"
#include "streamnd/rooted_tree.hpp"
#include "streamnd/stream.hpp"
#include "streamnd/streaming_mst.hpp"

namespace streamnd {

struct CapResult {
    std::vector<Link> stored;   // everything the stream phase retained
    std::vector<Link> solution; // streamed links chosen (demoted base edges omitted)
    Weight weight = 0;
};

/// Streaming 1-to-2 vertex-connectivity augmentation over a connected base.
///
/// The base is replaced by a BFS spanning tree rooted at 0; its other edges
/// are fed first as weight-0 links. Per vertex u and weight bucket j the
/// state keeps the link at u whose LCA is closest to the root, and per vertex
/// x a streaming MST over the child subtrees of x, fed by the links whose LCA
/// is x. Buckets use eps/2 so the stored links contain a (3 + eps)-approximate
/// augmentation.
class CapOne {
  public:
    CapOne(const Graph &base, double eps, Weight max_weight);

    void process_link(const WeightedEdge &link);
    void consume(EdgeStream &stream);

    const Graph &base() const noexcept { return base_; }
    const Graph &tree_graph() const noexcept { return tree_graph_; }
    const RootedTree &tree() const noexcept { return tree_; }
    const BucketScheme &scheme() const noexcept { return scheme_; }
    double eps() const noexcept { return eps_; }
    const std::vector<Link> &base_links() const noexcept { return base_links_; }

    std::vector<Link> stored_links() const;
    /// L_u(j), if set.
    std::optional<Link> dictionary_entry(int u, int bucket) const;
    /// Links currently held by the child-subtree spanning forest of x.
    std::vector<Link> forest_links(int x) const;
    /// n * (bucket count) + 2(n - 1).
    std::size_t space_bound() const;

    /// Minimum-weight subset of the stored streamed links making base + links
    /// 2-vertex-connected. Throws InfeasibleError if none exists.
    CapResult finalize(std::size_t guard = kDefaultSolverGuard) const;

    /// Builds a solution inside the stored links from a feasible augmentation
    /// `opt` of the base (streamed links only): the per-bucket dictionary
    /// entries at both ends of every opt link, plus for each vertex x the
    /// minimum spanning forest of its stored child-subtree links after merging
    /// the children that opt connects to the outside of x's subtree.
    std::vector<Link> sol_from_opt(const std::vector<Link> &opt) const;

  private:
    struct Entry {
        Link link;
        int lca_depth;
    };

    void process(const Link &link);

    Graph base_;
    double eps_;
    BucketScheme scheme_;
    Graph tree_graph_;
    RootedTree tree_;
    std::vector<Link> base_links_;
    std::vector<std::map<int, Entry>> best_;
    std::vector<StreamingMst> child_mst_;
    std::vector<std::map<std::size_t, Link>> mst_links_;
    std::size_t next_tag_ = 0;
};

} // namespace streamnd

#endif // STREAMND_CAP_ONE_HPP_
