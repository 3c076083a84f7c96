#include "streamnd/rooted_tree.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

namespace streamnd {

RootedTree::RootedTree(const Graph &g, const std::vector<std::size_t> &tree_edges, int root) : root_(root) {
    const int n = g.vertex_count();
    if (!g.contains_vertex(root))
        throw std::invalid_argument("root out of range");
    if (static_cast<int>(tree_edges.size()) != n - 1)
        throw std::invalid_argument("a spanning tree needs n - 1 edges");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (std::size_t id : tree_edges) {
        const auto &e = g.edge(id);
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    parent_.assign(static_cast<std::size_t>(n), -1);
    depth_.assign(static_cast<std::size_t>(n), 0);
    children_.assign(static_cast<std::size_t>(n), {});
    parent_[root] = root;
    std::deque<int> queue{root};
    int reached = 1;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int y : adj[x]) {
            if (parent_[y] != -1)
                continue;
            parent_[y] = x;
            depth_[y] = depth_[x] + 1;
            children_[x].push_back(y);
            queue.push_back(y);
            ++reached;
        }
    }
    if (reached != n)
        throw std::invalid_argument("tree edges do not span the graph");

    tin_.assign(static_cast<std::size_t>(n), 0);
    tout_.assign(static_cast<std::size_t>(n), 0);
    int clock = 0;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    tin_[root] = clock++;
    while (!stack.empty()) {
        auto &[x, next] = stack.back();
        if (next < children_[x].size()) {
            const int y = children_[x][next++];
            tin_[y] = clock++;
            stack.push_back({y, 0});
        } else {
            tout_[x] = clock++;
            stack.pop_back();
        }
    }
}

bool RootedTree::is_ancestor(int a, int v) const { return tin_.at(a) <= tin_.at(v) && tout_.at(v) <= tout_.at(a); }

int RootedTree::lca(int u, int v) const {
    while (depth_.at(u) > depth_.at(v))
        u = parent_[u];
    while (depth_.at(v) > depth_.at(u))
        v = parent_[v];
    while (u != v) {
        u = parent_[u];
        v = parent_[v];
    }
    return u;
}

int RootedTree::child_index_toward(int x, int v) const {
    if (x == v || !is_ancestor(x, v))
        throw std::invalid_argument("vertex is not a proper descendant");
    while (parent_[v] != x)
        v = parent_[v];
    const auto &c = children_[x];
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] == v)
            return static_cast<int>(i);
    throw std::logic_error("child list out of sync");
}

std::vector<std::size_t> bfs_spanning_tree(const Graph &g, int root) {
    const auto adj = g.adjacency();
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::size_t> out;
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (const auto &inc : adj[x]) {
            if (seen[inc.to])
                continue;
            seen[inc.to] = 1;
            out.push_back(inc.edge);
            queue.push_back(inc.to);
        }
    }
    if (static_cast<int>(out.size()) != g.vertex_count() - 1)
        throw std::invalid_argument("graph is disconnected");
    return out;
}

} // namespace streamnd
