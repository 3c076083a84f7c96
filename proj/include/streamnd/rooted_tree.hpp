#ifndef STREAMND_ROOTED_TREE_HPP_
#define STREAMND_ROOTED_TREE_HPP_

#include <vector>

#include "streamnd/graph.hpp"

namespace streamnd {

/// A spanning tree hung from a root. The root is its own parent.
class RootedTree {
  public:
    /// `tree_edges` must form a spanning tree of g (n - 1 edges, connected).
    RootedTree(const Graph &g, const std::vector<std::size_t> &tree_edges, int root = 0);

    int vertex_count() const noexcept { return static_cast<int>(parent_.size()); }
    int root() const noexcept { return root_; }
    int parent(int v) const { return parent_.at(v); }
    int depth(int v) const { return depth_.at(v); }
    const std::vector<int> &children(int v) const { return children_.at(v); }

    /// True iff a lies on the path from v to the root (a == v included).
    bool is_ancestor(int a, int v) const;
    /// Walks both vertices up, deeper one first.
    int lca(int u, int v) const;
    /// Position in children(x) of the child whose subtree holds v; v must be a
    /// proper descendant of x.
    int child_index_toward(int x, int v) const;

  private:
    int root_;
    std::vector<int> parent_;
    std::vector<int> depth_;
    std::vector<std::vector<int>> children_;
    std::vector<int> tin_, tout_;
};

/// BFS spanning tree of a connected graph (edge ids, lowest ids preferred).
/// Throws std::invalid_argument when g is disconnected.
std::vector<std::size_t> bfs_spanning_tree(const Graph &g, int root = 0);

} // namespace streamnd

#endif // STREAMND_ROOTED_TREE_HPP_
