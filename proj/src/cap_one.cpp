#include "streamnd/cap_one.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "streamnd/errors.hpp"

namespace streamnd {

namespace {

Graph tree_of(const Graph &base, const std::vector<std::size_t> &ids) { return base.with_edges(ids); }

std::vector<std::size_t> iota_ids(std::size_t n) {
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

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

} // namespace

CapOne::CapOne(const Graph &base, double eps, Weight max_weight)
    : base_(base), eps_(eps), scheme_(eps / 2, std::max<Weight>(max_weight, 0)),
      tree_graph_(tree_of(base, bfs_spanning_tree(base, 0))),
      tree_(tree_graph_, iota_ids(tree_graph_.edge_count()), 0) {
    if (base.vertex_count() < 3)
        throw std::invalid_argument("augmentation to 2-connectivity needs at least 3 vertices");
    const int n = base.vertex_count();
    best_.resize(static_cast<std::size_t>(n));
    mst_links_.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        child_mst_.emplace_back(static_cast<int>(tree_.children(x).size()));

    const auto tree_ids = bfs_spanning_tree(base, 0);
    std::vector<char> in_tree(base.edge_count(), 0);
    for (std::size_t id : tree_ids)
        in_tree[id] = 1;
    for (std::size_t id = 0; id < base.edge_count(); ++id) {
        if (in_tree[id])
            continue;
        const Link l{base.edge(id).u, base.edge(id).v, 0, id, true};
        base_links_.push_back(l);
        process(l);
    }
}

void CapOne::process_link(const WeightedEdge &link) {
    if (!base_.contains_vertex(link.u) || !base_.contains_vertex(link.v))
        throw std::invalid_argument("link endpoint out of range");
    if (link.u == link.v)
        return;
    process(stream_link(link));
}

void CapOne::consume(EdgeStream &stream) {
    while (auto e = stream.next())
        process_link(*e);
}

void CapOne::process(const Link &link) {
    const int j = scheme_.bucket_of(link.w);
    const int x = tree_.lca(link.u, link.v);
    const int d = tree_.depth(x);
    for (int end : {link.u, link.v}) {
        auto it = best_[end].find(j);
        if (it == best_[end].end())
            best_[end].emplace(j, Entry{link, d});
        else if (d < it->second.lca_depth)
            it->second = Entry{link, d};
    }
    if (link.u == x || link.v == x)
        return;
    const int a = tree_.child_index_toward(x, link.u);
    const int b = tree_.child_index_toward(x, link.v);
    const std::size_t tag = next_tag_++;
    mst_links_[x].emplace(tag, link);
    if (auto evicted = child_mst_[x].insert(a, b, link.w, tag))
        mst_links_[x].erase(evicted->tag);
}

std::vector<Link> CapOne::stored_links() const {
    std::vector<Link> all;
    for (const auto &table : best_)
        for (const auto &[j, entry] : table)
            all.push_back(entry.link);
    for (const auto &table : mst_links_)
        for (const auto &[tag, link] : table)
            all.push_back(link);
    return unique_links(std::move(all));
}

std::optional<Link> CapOne::dictionary_entry(int u, int bucket) const {
    const auto &table = best_.at(static_cast<std::size_t>(u));
    auto it = table.find(bucket);
    if (it == table.end())
        return std::nullopt;
    return it->second.link;
}

std::vector<Link> CapOne::forest_links(int x) const {
    std::vector<Link> out;
    for (const auto &[tag, link] : mst_links_.at(static_cast<std::size_t>(x)))
        out.push_back(link);
    return out;
}

std::size_t CapOne::space_bound() const {
    const auto n = static_cast<std::size_t>(base_.vertex_count());
    return n * static_cast<std::size_t>(scheme_.bucket_count()) + 2 * (n - 1);
}

CapResult CapOne::finalize(std::size_t guard) const {
    CapResult result;
    result.stored = stored_links();
    std::vector<Link> streamed;
    for (const auto &l : result.stored)
        if (!l.from_base)
            streamed.push_back(l);
    const auto candidates = as_edges(streamed);
    const auto solution = exact_augment(base_, candidates, RequirementMap::uniform(base_.vertex_count(), 2),
                                        ConnectivityMode::Vertex, guard);
    for (std::size_t i : solution.chosen)
        result.solution.push_back(streamed[i]);
    result.weight = weight_of(result.solution);
    return result;
}

std::vector<Link> CapOne::sol_from_opt(const std::vector<Link> &opt) const {
    std::vector<Link> full = opt;
    full.insert(full.end(), base_links_.begin(), base_links_.end());

    std::vector<Link> sol;
    for (const auto &e : full) {
        const int j = scheme_.bucket_of(e.w);
        for (int end : {e.u, e.v}) {
            auto it = best_[end].find(j);
            if (it == best_[end].end())
                throw ContractViolation("no stored link at a vertex for a bucket an optimal link occupies");
            sol.push_back(it->second.link);
        }
    }

    const int n = base_.vertex_count();
    for (int x = 0; x < n; ++x) {
        const auto &kids = tree_.children(x);
        if (kids.empty())
            continue;
        // a child is good when opt links its subtree to the outside of x's subtree
        std::vector<char> good(kids.size(), 0);
        for (const auto &e : full) {
            for (auto [in, out] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                if (in == x || !tree_.is_ancestor(x, in) || tree_.is_ancestor(x, out))
                    continue;
                good[tree_.child_index_toward(x, in)] = 1;
            }
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
        auto tree_links = child_mst_[x].links();
        std::sort(tree_links.begin(), tree_links.end(),
                  [](const MstLink &a, const MstLink &b) { return std::tie(a.w, a.seq) < std::tie(b.w, b.seq); });
        for (const auto &l : tree_links)
            if (dsu.unite(l.a, l.b))
                sol.push_back(mst_links_[x].at(l.tag));
    }
    return unique_links(std::move(sol));
}

} // namespace streamnd
