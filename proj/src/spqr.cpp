#include "streamnd/spqr.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "streamnd/connectivity.hpp"
#include "streamnd/errors.hpp"

namespace streamnd {

char to_char(SpqrKind kind) {
    switch (kind) {
    case SpqrKind::S:
        return 'S';
    case SpqrKind::P:
        return 'P';
    case SpqrKind::R:
        return 'R';
    }
    return '?';
}

namespace {

std::vector<int> vertices_of(const std::vector<SkeletonEdge> &edges) {
    std::vector<int> vs;
    for (const auto &e : edges) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

int index_in(const std::vector<int> &sorted, int v) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

// Skeleton as a Graph on the compacted vertex ids 0..|V|-1.
Graph compact_graph(const std::vector<SkeletonEdge> &edges, const std::vector<int> &vs) {
    Graph g(static_cast<int>(vs.size()));
    for (const auto &e : edges)
        g.add_edge(index_in(vs, e.u), index_in(vs, e.v));
    return g;
}

struct Dsu {
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(std::size_t a, std::size_t b) { parent[find(b)] = find(a); }
    std::vector<std::size_t> parent;
};

bool biconnected_multigraph(const std::vector<SkeletonEdge> &edges) {
    const auto vs = vertices_of(edges);
    if (vs.size() < 2)
        return false;
    if (vs.size() == 2)
        return edges.size() >= 2;
    const Graph g = compact_graph(edges, vs);
    std::vector<char> none(vs.size(), 0);
    if (components_without(g, none).second != 1)
        return false;
    for (std::size_t x = 0; x < vs.size(); ++x) {
        std::vector<char> removed(vs.size(), 0);
        removed[x] = 1;
        if (components_without(g, removed).second != 1)
            return false;
    }
    return true;
}

bool simple_cycle(const std::vector<SkeletonEdge> &edges, const std::vector<int> &vs) {
    if (vs.size() < 3 || edges.size() != vs.size())
        return false;
    std::vector<int> degree(vs.size(), 0);
    for (const auto &e : edges) {
        ++degree[index_in(vs, e.u)];
        ++degree[index_in(vs, e.v)];
    }
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 2; }))
        return false;
    const Graph g = compact_graph(edges, vs);
    return components_without(g, std::vector<char>(vs.size(), 0)).second == 1;
}

std::optional<SeparationPair> separation_pair_unchecked(const std::vector<SkeletonEdge> &edges) {
    const auto vs = vertices_of(edges);
    const std::size_t n = vs.size();
    for (std::size_t ia = 0; ia < n; ++ia) {
        for (std::size_t ib = ia + 1; ib < n; ++ib) {
            const int a = vs[ia], b = vs[ib];
            Dsu dsu(n);
            std::vector<std::size_t> between;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                const auto &e = edges[i];
                const bool ta = e.u == a || e.u == b, tb = e.v == a || e.v == b;
                if (ta && tb)
                    between.push_back(i);
                else if (!ta && !tb)
                    dsu.unite(static_cast<std::size_t>(index_in(vs, e.u)), static_cast<std::size_t>(index_in(vs, e.v)));
            }
            // component representative -> class position, ordered by smallest vertex
            std::map<std::size_t, std::size_t> comp;
            for (std::size_t x = 0; x < n; ++x)
                if (x != ia && x != ib && !comp.count(dsu.find(x)))
                    comp.emplace(dsu.find(x), comp.size());
            if (comp.size() >= 2) {
                SeparationPair sp{a, b, std::vector<std::vector<std::size_t>>(comp.size())};
                for (std::size_t i = 0; i < edges.size(); ++i) {
                    const auto &e = edges[i];
                    const int inner = (e.u == a || e.u == b) ? e.v : e.u;
                    if (inner == a || inner == b)
                        continue;
                    sp.classes[comp.at(dsu.find(static_cast<std::size_t>(index_in(vs, inner))))].push_back(i);
                }
                if (!between.empty())
                    sp.classes.push_back(between);
                return sp;
            }
            if (between.size() >= 2 && n > 2) {
                std::vector<std::size_t> rest;
                for (std::size_t i = 0; i < edges.size(); ++i)
                    if (std::find(between.begin(), between.end(), i) == between.end())
                        rest.push_back(i);
                return SeparationPair{a, b, {between, rest}};
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<SeparationPair> find_separation_pair(const std::vector<SkeletonEdge> &edges) {
    if (!biconnected_multigraph(edges))
        throw std::invalid_argument("graph is not 2-connected");
    return separation_pair_unchecked(edges);
}

SplitResult split(const std::vector<SkeletonEdge> &edges, const SeparationPair &pair,
                  const std::vector<std::size_t> &chosen, std::size_t virtual_id) {
    std::vector<char> side(edges.size(), 0);
    for (std::size_t c : chosen) {
        if (c >= pair.classes.size())
            throw std::invalid_argument("class index out of range");
        for (std::size_t i : pair.classes[c])
            side[i] = 1;
    }
    SplitResult out{{}, {}, virtual_id};
    for (std::size_t i = 0; i < edges.size(); ++i)
        (side[i] ? out.first : out.second).push_back(edges[i]);
    if (out.first.size() < 2 || out.second.size() < 2)
        throw std::invalid_argument("each side of a split needs at least two edges");
    const SkeletonEdge ve{pair.a, pair.b, true, virtual_id};
    out.first.push_back(ve);
    out.second.push_back(ve);
    return out;
}

std::vector<int> cycle_order(const SpqrNode &node, int start, int next) {
    std::map<int, std::vector<int>> adj;
    for (const auto &e : node.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    const auto &first = adj.at(start);
    if (std::find(first.begin(), first.end(), next) == first.end())
        throw std::invalid_argument("cycle_order: vertices are not adjacent");
    std::vector<int> order{start};
    int prev = start, cur = next;
    while (cur != start) {
        order.push_back(cur);
        const auto &nb = adj.at(cur);
        const int step = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = step;
        if (order.size() > node.vertices.size())
            throw ContractViolation("S-node skeleton is not a cycle");
    }
    return order;
}

SpqrTree build_spqr(const Graph &g) {
    if (g.vertex_count() < 3 || !is_k_connected(g, 2, ConnectivityMode::Vertex))
        throw std::invalid_argument("SPQR tree needs a 2-connected graph with at least 3 vertices");

    std::vector<SkeletonEdge> all;
    for (std::size_t id = 0; id < g.edge_count(); ++id)
        all.push_back({g.edge(id).u, g.edge(id).v, false, id});

    struct Part {
        SpqrKind kind;
        std::vector<SkeletonEdge> edges;
        bool alive = true;
    };
    std::vector<Part> parts;
    std::deque<std::vector<SkeletonEdge>> pending{all};
    std::size_t next_virtual = 0;
    while (!pending.empty()) {
        auto edges = std::move(pending.front());
        pending.pop_front();
        const auto vs = vertices_of(edges);
        if (vs.size() == 2) {
            parts.push_back({SpqrKind::P, std::move(edges)});
            continue;
        }
        if (simple_cycle(edges, vs)) {
            parts.push_back({SpqrKind::S, std::move(edges)});
            continue;
        }
        auto sp = separation_pair_unchecked(edges);
        if (!sp) {
            parts.push_back({SpqrKind::R, std::move(edges)});
            continue;
        }
        std::size_t pick = sp->classes.size();
        for (std::size_t c = 0; c < sp->classes.size(); ++c)
            if (sp->classes[c].size() >= 2 && (pick == sp->classes.size() ||
                                               sp->classes[c].size() < sp->classes[pick].size()))
                pick = c;
        auto parts_of = split(edges, *sp, {pick}, next_virtual++);
        pending.push_back(std::move(parts_of.first));
        pending.push_back(std::move(parts_of.second));
    }

    // Merge adjacent S-S and P-P pairs until none remain.
    auto holders = [&](std::size_t vid) {
        std::vector<std::size_t> out;
        for (std::size_t x = 0; x < parts.size(); ++x)
            if (parts[x].alive)
                for (const auto &e : parts[x].edges)
                    if (e.is_virtual && e.id == vid)
                        out.push_back(x);
        return out;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t vid = 0; vid < next_virtual && !changed; ++vid) {
            const auto hold = holders(vid);
            if (hold.size() != 2)
                continue;
            Part &x = parts[hold[0]];
            Part &y = parts[hold[1]];
            if (x.kind != y.kind || x.kind == SpqrKind::R)
                continue;
            std::vector<SkeletonEdge> merged;
            for (const Part *p : {&x, &y})
                for (const auto &e : p->edges)
                    if (!(e.is_virtual && e.id == vid))
                        merged.push_back(e);
            x.edges = std::move(merged);
            y.alive = false;
            changed = true;
        }
    }

    SpqrTree tree;
    tree.graph_ = g;
    for (auto &p : parts) {
        if (!p.alive)
            continue;
        SpqrNode node;
        node.kind = p.kind;
        node.vertices = vertices_of(p.edges);
        node.edges = std::move(p.edges);
        tree.nodes_.push_back(std::move(node));
    }

    std::map<std::size_t, std::vector<int>> by_virtual;
    for (int x = 0; x < tree.node_count(); ++x)
        for (const auto &e : tree.nodes_[x].edges)
            if (e.is_virtual)
                by_virtual[e.id].push_back(x);
    for (const auto &[vid, hold] : by_virtual) {
        if (hold.size() != 2)
            throw ContractViolation("virtual edge not shared by exactly two skeletons");
        const auto &ve = *std::find_if(tree.nodes_[hold[0]].edges.begin(), tree.nodes_[hold[0]].edges.end(),
                                       [vid = vid](const SkeletonEdge &e) { return e.is_virtual && e.id == vid; });
        tree.tree_edges_.push_back({hold[0], hold[1], vid, ve.u, ve.v});
    }

    for (int x = 0; x < tree.node_count(); ++x)
        for (const auto &e : tree.nodes_[x].edges)
            if (!e.is_virtual && e.id == 0)
                tree.root_ = x;

    std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(tree.node_count()));
    for (const auto &te : tree.tree_edges_) {
        adj[te.a].push_back({te.b, te.virtual_id});
        adj[te.b].push_back({te.a, te.virtual_id});
    }
    for (auto &list : adj)
        std::sort(list.begin(), list.end());
    std::vector<char> seen(static_cast<std::size_t>(tree.node_count()), 0);
    std::deque<int> queue{tree.root_};
    seen[tree.root_] = 1;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (auto [y, vid] : adj[x]) {
            if (seen[y])
                continue;
            seen[y] = 1;
            tree.nodes_[y].parent = x;
            tree.nodes_[y].parent_virtual = vid;
            tree.nodes_[y].depth = tree.nodes_[x].depth + 1;
            tree.nodes_[x].children.push_back(y);
            queue.push_back(y);
        }
    }

    tree.tin_.assign(seen.size(), 0);
    tree.tout_.assign(seen.size(), 0);
    int clock = 0;
    std::function<void(int)> walk = [&](int x) {
        tree.tin_[x] = clock++;
        for (int y : tree.nodes_[x].children)
            walk(y);
        tree.tout_[x] = clock++;
    };
    walk(tree.root_);

    const int n = g.vertex_count();
    tree.h_.assign(static_cast<std::size_t>(n), -1);
    tree.l_.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < tree.node_count(); ++x) {
        const int d = tree.nodes_[x].depth;
        for (int u : tree.nodes_[x].vertices) {
            if (tree.h_[u] < 0 || d < tree.nodes_[tree.h_[u]].depth)
                tree.h_[u] = x;
            if (tree.l_[u] < 0 || d > tree.nodes_[tree.l_[u]].depth)
                tree.l_[u] = x;
        }
    }
    return tree;
}

bool SpqrTree::node_has_vertex(int x, int u) const {
    const auto &vs = nodes_.at(x).vertices;
    return std::binary_search(vs.begin(), vs.end(), u);
}

bool SpqrTree::in_subtree(int y, int x) const { return tin_.at(x) <= tin_.at(y) && tout_.at(y) <= tout_.at(x); }

bool SpqrTree::subtree_has_vertex(int x, int u) const { return in_subtree(h_.at(u), x) || node_has_vertex(x, u); }

int SpqrTree::lca(int x, int y) const {
    while (nodes_.at(x).depth > nodes_.at(y).depth)
        x = nodes_[x].parent;
    while (nodes_.at(y).depth > nodes_.at(x).depth)
        y = nodes_[y].parent;
    while (x != y) {
        x = nodes_[x].parent;
        y = nodes_[y].parent;
    }
    return x;
}

int SpqrTree::peer(int x, std::size_t virtual_id) const {
    for (const auto &te : tree_edges_)
        if (te.virtual_id == virtual_id) {
            if (te.a == x)
                return te.b;
            if (te.b == x)
                return te.a;
        }
    throw std::invalid_argument("node does not hold that virtual edge");
}

std::size_t SpqrTree::total_skeleton_edges() const {
    std::size_t total = 0;
    for (const auto &node : nodes_)
        total += node.edges.size();
    return total;
}

std::string SpqrTree::debug_string() const {
    std::ostringstream out;
    for (int x = 0; x < node_count(); ++x) {
        const auto &node = nodes_[x];
        out << x << ' ' << to_char(node.kind);
        for (int v : node.vertices)
            out << ' ' << v;
        out << " |";
        for (const auto &e : node.edges)
            if (!e.is_virtual)
                out << ' ' << e.u << '-' << e.v;
        out << " |";
        for (const auto &e : node.edges)
            if (e.is_virtual)
                out << ' ' << e.u << '-' << e.v << '(' << peer(x, e.id) << ')';
        out << '\n';
    }
    return out.str();
}

std::string SpqrTree::canonical_form() const {
    std::vector<std::vector<int>> adj(nodes_.size());
    for (const auto &te : tree_edges_) {
        adj[te.a].push_back(te.b);
        adj[te.b].push_back(te.a);
    }
    std::function<std::string(int, int)> encode = [&](int x, int from) {
        const auto &node = nodes_[x];
        std::size_t real = 0;
        for (const auto &e : node.edges)
            real += e.is_virtual ? 0 : 1;
        std::vector<std::string> kids;
        for (int y : adj[x])
            if (y != from)
                kids.push_back(encode(y, x));
        std::sort(kids.begin(), kids.end());
        std::string s = std::string(1, to_char(node.kind)) + std::to_string(node.vertices.size()) + "." +
                        std::to_string(real) + "(";
        for (const auto &k : kids)
            s += k;
        return s + ")";
    };
    std::string best;
    for (int x = 0; x < node_count(); ++x) {
        auto s = encode(x, -1);
        if (best.empty() || s < best)
            best = std::move(s);
    }
    return best;
}

std::vector<std::size_t> SpqrTree::reassemble() const {
    std::vector<char> merged(nodes_.size(), 0);
    std::vector<SkeletonEdge> current = nodes_.at(root_).edges;
    merged[root_] = 1;
    std::vector<int> owner(current.size(), root_);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < current.size(); ++i) {
            if (!current[i].is_virtual)
                continue;
            const std::size_t vid = current[i].id;
            const int other = peer(owner[i], vid);
            if (merged[other])
                throw ContractViolation("virtual edge leads back into merged part");
            merged[other] = 1;
            current.erase(current.begin() + static_cast<std::ptrdiff_t>(i));
            owner.erase(owner.begin() + static_cast<std::ptrdiff_t>(i));
            for (const auto &e : nodes_[other].edges)
                if (!(e.is_virtual && e.id == vid)) {
                    current.push_back(e);
                    owner.push_back(other);
                }
            changed = true;
            break;
        }
    }
    if (std::find(merged.begin(), merged.end(), 0) != merged.end())
        throw ContractViolation("some skeletons are unreachable from the root");
    std::vector<std::size_t> ids;
    for (const auto &e : current) {
        const auto &orig = graph_.edge(e.id);
        if (std::minmax(orig.u, orig.v) != std::minmax(e.u, e.v))
            throw ContractViolation("reassembled edge has wrong endpoints");
        ids.push_back(e.id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

void SpqrTree::check_invariants() const {
    auto fail = [](const std::string &what) { throw ContractViolation("SPQR tree: " + what); };
    std::vector<int> real_seen(graph_.edge_count(), 0);
    for (int x = 0; x < node_count(); ++x) {
        const auto &node = nodes_[x];
        const std::string where = "node " + std::to_string(x) + ": ";
        switch (node.kind) {
        case SpqrKind::P:
            if (node.vertices.size() != 2 || node.edges.size() < 3)
                fail(where + "P-node must be a dipole with at least 3 edges");
            break;
        case SpqrKind::S:
            if (!simple_cycle(node.edges, node.vertices))
                fail(where + "S-node must be a simple cycle");
            break;
        case SpqrKind::R:
            if (node.vertices.size() < 4 ||
                !is_k_connected(compact_graph(node.edges, node.vertices), 3, ConnectivityMode::Vertex))
                fail(where + "R-node must be 3-connected with at least 4 vertices");
            break;
        }
        for (const auto &e : node.edges)
            if (!e.is_virtual)
                ++real_seen.at(e.id);
    }
    if (std::any_of(real_seen.begin(), real_seen.end(), [](int c) { return c != 1; }))
        fail("a real edge does not appear exactly once");
    if (tree_edges_.size() + 1 != nodes_.size())
        fail("tree edge count is not node count - 1");
    for (int x = 0; x < node_count(); ++x)
        if (x != root_ && nodes_[x].parent < 0)
            fail("tree is disconnected");
    for (const auto &te : tree_edges_) {
        const auto ka = nodes_[te.a].kind, kb = nodes_[te.b].kind;
        if (ka == kb && ka != SpqrKind::R)
            fail("adjacent nodes of the same S/P kind");
    }
    if (graph_.edge_count() >= 3 && total_skeleton_edges() > 3 * graph_.edge_count() - 6)
        fail("skeleton edges exceed 3|E| - 6");
    for (int u = 0; u < graph_.vertex_count(); ++u) {
        // every node holding u must hang below h(u) through nodes holding u
        for (int x = 0; x < node_count(); ++x) {
            if (!node_has_vertex(x, u))
                continue;
            for (int y = x; y != h_[u]; y = nodes_[y].parent)
                if (y == root_ || !node_has_vertex(y, u))
                    fail("copies of vertex " + std::to_string(u) + " are not connected");
        }
    }
    const auto ids = reassemble();
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] != i)
            fail("reassembly does not reproduce the edge set");
    if (ids.size() != graph_.edge_count())
        fail("reassembly does not reproduce the edge set");
}

std::set<std::pair<int, int>> enumerate_two_cuts(const SpqrTree &tree) {
    std::set<std::pair<int, int>> cuts;
    auto add = [&](int a, int b) { cuts.insert(std::minmax(a, b)); };
    for (const auto &node : tree.nodes()) {
        if (node.kind == SpqrKind::P)
            add(node.vertices[0], node.vertices[1]);
        if (node.kind == SpqrKind::S) {
            const auto order = cycle_order(node, node.edges[0].u, node.edges[0].v);
            const std::size_t k = order.size();
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 2; j < k; ++j)
                    if (!(i == 0 && j == k - 1))
                        add(order[i], order[j]);
        }
    }
    for (const auto &te : tree.tree_edges()) {
        const auto ka = tree.node(te.a).kind, kb = tree.node(te.b).kind;
        if ((ka == SpqrKind::R && kb != SpqrKind::P) || (kb == SpqrKind::R && ka != SpqrKind::P))
            add(te.u, te.v);
    }
    return cuts;
}

} // namespace streamnd
