#include "streamnd/cap_two.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "streamnd/connectivity.hpp"
#include "streamnd/errors.hpp"

namespace streamnd {

std::vector<std::size_t> edge_minimal_two_connected(const Graph &g) {
    if (!is_k_connected(g, 2, ConnectivityMode::Vertex))
        throw std::invalid_argument("base graph is not 2-connected");
    std::vector<char> keep(g.edge_count(), 1);
    auto kept_ids = [&] {
        std::vector<std::size_t> ids;
        for (std::size_t id = 0; id < keep.size(); ++id)
            if (keep[id])
                ids.push_back(id);
        return ids;
    };
    for (std::size_t id = g.edge_count(); id-- > 0;) {
        keep[id] = 0;
        if (!is_k_connected(g.with_edges(kept_ids()), 2, ConnectivityMode::Vertex))
            keep[id] = 1;
    }
    return kept_ids();
}

namespace {

struct Dsu {
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
    std::vector<int> parent;
};

std::vector<int> neighbors_on_cycle(const SpqrNode &node, int v) {
    std::vector<int> out;
    for (const auto &e : node.edges) {
        if (e.u == v)
            out.push_back(e.v);
        else if (e.v == v)
            out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const SkeletonEdge &edge_between(const SpqrNode &node, int a, int b) {
    for (const auto &e : node.edges)
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a))
            return e;
    throw ContractViolation("S-node cycle is missing an edge");
}

CycleLayout make_layout(const SpqrTree &tree, int x) {
    const auto &node = tree.node(x);
    int first = -1, last = -1;
    if (node.parent >= 0) {
        const auto &pe = *std::find_if(node.edges.begin(), node.edges.end(), [&](const SkeletonEdge &e) {
            return e.is_virtual && e.id == node.parent_virtual;
        });
        first = std::min(pe.u, pe.v);
        last = std::max(pe.u, pe.v);
    } else {
        const SkeletonEdge *anchor = nullptr;
        for (const auto &e : node.edges)
            if (e.is_virtual && (!anchor || e.id < anchor->id))
                anchor = &e;
        if (anchor) {
            first = std::min(anchor->u, anchor->v);
            last = std::max(anchor->u, anchor->v);
        } else {
            first = node.vertices.front();
            last = neighbors_on_cycle(node, first).back();
        }
    }
    const auto nb = neighbors_on_cycle(node, first);
    const int next = nb[0] == last ? nb[1] : nb[0];

    CycleLayout layout;
    layout.order = cycle_order(node, first, next);
    const std::size_t k1 = layout.order.size();
    const std::size_t slots = 2 * k1;
    layout.is_dummy.assign(slots, 0);
    layout.used.assign(slots, 0);
    std::map<std::size_t, int> dummy_of; // virtual id -> position
    for (std::size_t i = 0; i < k1; ++i) {
        layout.used[2 * i + 1] = 1;
        const int a = layout.order[i], b = layout.order[(i + 1) % k1];
        const auto &e = edge_between(node, a, b);
        if (!e.is_virtual)
            continue;
        const int pos = i + 1 == k1 ? 0 : static_cast<int>(2 * i + 2);
        layout.is_dummy[pos] = 1;
        layout.used[pos] = 1;
        dummy_of[e.id] = pos;
        ++layout.dummy_count;
    }

    const int n = tree.graph().vertex_count();
    layout.position.assign(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        const auto it = std::find(layout.order.begin(), layout.order.end(), u);
        if (it != layout.order.end()) {
            layout.position[u] = static_cast<int>(2 * (it - layout.order.begin()) + 1);
            continue;
        }
        int pos = 0;
        for (int c : node.children)
            if (tree.subtree_has_vertex(c, u)) {
                pos = dummy_of.at(tree.node(c).parent_virtual);
                break;
            }
        layout.position[u] = pos;
    }
    return layout;
}

} // namespace

CapTwo::CapTwo(const Graph &base, double eps, Weight max_weight)
    : base_(base), scheme_(eps / 6, std::max<Weight>(max_weight, 0)),
      minimal_(base.with_edges(edge_minimal_two_connected(base))), tree_(build_spqr(minimal_)) {
    if (base.vertex_count() < 4)
        throw std::invalid_argument("augmentation to 3-connectivity needs at least 4 vertices");
    best_.resize(static_cast<std::size_t>(tree_.node_count()));
    for (int x = 0; x < tree_.node_count(); ++x) {
        const auto &node = tree_.node(x);
        if (node.kind == SpqrKind::P) {
            p_mst_.emplace(x, StreamingMst(static_cast<int>(node.children.size())));
            p_links_[x];
        } else if (node.kind == SpqrKind::S) {
            auto layout = make_layout(tree_, x);
            CycleTables tables;
            tables.min.resize(layout.used.size());
            tables.max.resize(layout.used.size());
            layouts_.emplace(x, std::move(layout));
            cycles_.emplace(x, std::move(tables));
        }
    }

    const auto kept = edge_minimal_two_connected(base);
    std::vector<char> in_minimal(base.edge_count(), 0);
    for (std::size_t id : kept)
        in_minimal[id] = 1;
    for (std::size_t id = 0; id < base.edge_count(); ++id) {
        if (in_minimal[id])
            continue;
        const Link l{base.edge(id).u, base.edge(id).v, 0, id, true};
        base_links_.push_back(l);
        process(l);
    }
}

const CycleLayout &CapTwo::layout(int x) const {
    auto it = layouts_.find(x);
    if (it == layouts_.end())
        throw std::invalid_argument("node is not an S-node");
    return it->second;
}

void CapTwo::process_link(const WeightedEdge &link) {
    if (!base_.contains_vertex(link.u) || !base_.contains_vertex(link.v))
        throw std::invalid_argument("link endpoint out of range");
    if (link.u == link.v)
        return;
    process(stream_link(link));
}

void CapTwo::consume(EdgeStream &stream) {
    while (auto e = stream.next())
        process_link(*e);
}

int CapTwo::reach_depth(int u, int v) const { return tree_.node(tree_.lca(tree_.h(u), tree_.l(v))).depth; }

int CapTwo::supernode(int x, int u) const {
    if (tree_.node_has_vertex(x, u))
        return -1;
    const auto &kids = tree_.node(x).children;
    for (std::size_t c = 0; c < kids.size(); ++c)
        if (tree_.subtree_has_vertex(kids[c], u))
            return static_cast<int>(c);
    return -1;
}

void CapTwo::process(const Link &link) {
    const int j = scheme_.bucket_of(link.w);
    for (auto [a, b] : {std::pair{link.u, link.v}, std::pair{link.v, link.u}}) {
        auto &table = best_[tree_.h(a)];
        const int d = reach_depth(a, b);
        auto it = table.find(j);
        if (it == table.end())
            table.emplace(j, TreeEntry{link, d});
        else if (d < it->second.reach_depth)
            it->second = TreeEntry{link, d};
    }
    for (auto &[x, mst] : p_mst_) {
        const int a = supernode(x, link.u), b = supernode(x, link.v);
        if (a < 0 || b < 0 || a == b)
            continue;
        const std::size_t tag = next_tag_++;
        p_links_[x].emplace(tag, link);
        if (auto evicted = mst.insert(a, b, link.w, tag))
            p_links_[x].erase(evicted->tag);
    }
    for (auto &[x, tables] : cycles_) {
        const auto &pos = layouts_.at(x).position;
        const int pu = pos[link.u], pv = pos[link.v];
        if (pu == pv)
            continue;
        for (auto [p, q] : {std::pair{pu, pv}, std::pair{pv, pu}}) {
            auto &lo = tables.min[p];
            auto it = lo.find(j);
            if (it == lo.end())
                lo.emplace(j, CycleEntry{link, q});
            else if (q < it->second.other_position)
                it->second = CycleEntry{link, q};
            auto &hi = tables.max[p];
            it = hi.find(j);
            if (it == hi.end())
                hi.emplace(j, CycleEntry{link, q});
            else if (q > it->second.other_position)
                it->second = CycleEntry{link, q};
        }
    }
}

std::vector<Link> CapTwo::stored_links() const {
    std::vector<Link> all;
    for (const auto &table : best_)
        for (const auto &[j, entry] : table)
            all.push_back(entry.link);
    for (const auto &[x, links] : p_links_)
        for (const auto &[tag, link] : links)
            all.push_back(link);
    for (const auto &[x, tables] : cycles_)
        for (const auto *side : {&tables.min, &tables.max})
            for (const auto &per_position : *side)
                for (const auto &[j, entry] : per_position)
                    all.push_back(entry.link);
    return unique_links(std::move(all));
}

std::optional<Link> CapTwo::dictionary_entry(int x, int bucket) const {
    const auto &table = best_.at(static_cast<std::size_t>(x));
    auto it = table.find(bucket);
    if (it == table.end())
        return std::nullopt;
    return it->second.link;
}

std::optional<Link> CapTwo::cycle_link(int x, bool minimum, int position, int bucket) const {
    auto tables = cycles_.find(x);
    if (tables == cycles_.end())
        throw std::invalid_argument("not an S-node");
    const auto &side = minimum ? tables->second.min : tables->second.max;
    const auto &per_position = side.at(static_cast<std::size_t>(position));
    auto it = per_position.find(bucket);
    if (it == per_position.end())
        return std::nullopt;
    return it->second.link;
}

std::vector<Link> CapTwo::forest_links(int x) const {
    std::vector<Link> out;
    auto it = p_links_.find(x);
    if (it == p_links_.end())
        throw std::invalid_argument("not a P-node");
    for (const auto &[tag, link] : it->second)
        out.push_back(link);
    return out;
}

std::size_t CapTwo::space_bound() const {
    return 7 * static_cast<std::size_t>(scheme_.bucket_count()) * tree_.total_skeleton_edges();
}

SpaceAccount CapTwo::space_account() const {
    SpaceAccount a;
    std::vector<Link> dictionary, cycle;
    for (const auto &table : best_)
        for (const auto &[j, entry] : table)
            dictionary.push_back(entry.link);
    for (const auto &[x, links] : p_links_)
        a.p_forests += links.size();
    for (const auto &[x, tables] : cycles_)
        for (const auto *side : {&tables.min, &tables.max})
            for (const auto &per_position : *side)
                for (const auto &[j, entry] : per_position)
                    cycle.push_back(entry.link);
    a.stored = stored_links().size();
    a.dictionary = unique_links(std::move(dictionary)).size();
    a.cycle_tables = unique_links(std::move(cycle)).size();
    a.buckets = static_cast<std::size_t>(scheme_.bucket_count());
    a.tree_nodes = static_cast<std::size_t>(tree_.node_count());
    a.tree_edges = tree_.tree_edges().size();
    a.skeleton_edges = tree_.total_skeleton_edges();
    for (const auto &node : tree_.nodes())
        if (node.kind == SpqrKind::S)
            a.s_skeleton_edges += node.edges.size();
    return a;
}

bool SpaceAccount::chain_holds() const {
    return stored <= dictionary + p_forests + cycle_tables && dictionary <= tree_nodes * buckets &&
           p_forests <= 2 * tree_edges && cycle_tables <= 4 * buckets * s_skeleton_edges &&
           dictionary + p_forests + cycle_tables <= buckets * (tree_nodes + 2 * tree_edges + 4 * s_skeleton_edges) &&
           buckets * (tree_nodes + 2 * tree_edges + 4 * s_skeleton_edges) <= 7 * buckets * skeleton_edges;
}

CapResult CapTwo::finalize(std::size_t guard) const {
    CapResult result;
    result.stored = stored_links();
    std::vector<Link> streamed;
    for (const auto &l : result.stored)
        if (!l.from_base)
            streamed.push_back(l);
    const auto candidates = as_edges(streamed);
    const auto solution = exact_augment(base_, candidates, RequirementMap::uniform(base_.vertex_count(), 3),
                                        ConnectivityMode::Vertex, guard);
    for (std::size_t i : solution.chosen)
        result.solution.push_back(streamed[i]);
    result.weight = weight_of(result.solution);
    return result;
}

const CapTwo::CycleEntry &CapTwo::cycle_entry(int x, bool minimum, int position, int bucket) const {
    const auto &tables = cycles_.at(x);
    const auto &side = minimum ? tables.min : tables.max;
    auto it = side.at(static_cast<std::size_t>(position)).find(bucket);
    if (it == side[position].end())
        throw ContractViolation("cycle table entry missing for a position an optimal link occupies");
    return it->second;
}

std::vector<Link> CapTwo::sol_from_opt(const std::vector<Link> &opt) const {
    std::vector<Link> full = opt;
    full.insert(full.end(), base_links_.begin(), base_links_.end());

    std::vector<Link> sol;
    for (const auto &e : full) {
        const int j = scheme_.bucket_of(e.w);
        for (int end : {e.u, e.v}) {
            const auto &table = best_[tree_.h(end)];
            auto it = table.find(j);
            if (it == table.end())
                throw ContractViolation("tree dictionary entry missing for an optimal link");
            sol.push_back(it->second.link);
        }
        const int x = tree_.lca(tree_.l(e.u), tree_.l(e.v));
        if (tree_.node(x).kind == SpqrKind::S) {
            const auto &pos = layouts_.at(x).position;
            const int pu = pos[e.u], pv = pos[e.v];
            if (pu < pv) {
                sol.push_back(cycle_entry(x, true, pv, j).link);
                sol.push_back(cycle_entry(x, false, pu, j).link);
            } else if (pv < pu) {
                sol.push_back(cycle_entry(x, true, pu, j).link);
                sol.push_back(cycle_entry(x, false, pv, j).link);
            }
        }
        for (const auto &[y, layout] : layouts_) {
            const auto &node = tree_.node(y);
            if (node.parent < 0)
                continue;
            const auto &pe = *std::find_if(node.edges.begin(), node.edges.end(), [&](const SkeletonEdge &s) {
                return s.is_virtual && s.id == node.parent_virtual;
            });
            for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                if (!tree_.node_has_vertex(y, a) || a == pe.u || a == pe.v)
                    continue;
                if (tree_.in_subtree(tree_.l(b), y))
                    continue;
                sol.push_back(cycle_entry(y, true, layout.position[a], j).link);
            }
        }
    }

    for (const auto &[x, mst] : p_mst_) {
        const auto &kids = tree_.node(x).children;
        std::vector<char> good(kids.size(), 0);
        for (const auto &e : full)
            for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                if (tree_.in_subtree(tree_.l(b), x))
                    continue;
                for (std::size_t c = 0; c < kids.size(); ++c)
                    if (tree_.in_subtree(tree_.h(a), kids[c]))
                        good[c] = 1;
            }
        Dsu dsu(static_cast<int>(kids.size()));
        int first_good = -1;
        for (std::size_t c = 0; c < kids.size(); ++c) {
            if (!good[c])
                continue;
            if (first_good < 0)
                first_good = static_cast<int>(c);
            else
                dsu.unite(first_good, static_cast<int>(c));
        }
        auto links = mst.links();
        std::sort(links.begin(), links.end(),
                  [](const MstLink &a, const MstLink &b) { return std::tie(a.w, a.seq) < std::tie(b.w, b.seq); });
        for (const auto &l : links)
            if (dsu.unite(l.a, l.b))
                sol.push_back(p_links_.at(x).at(l.tag));
    }
    return unique_links(std::move(sol));
}

} // namespace streamnd
