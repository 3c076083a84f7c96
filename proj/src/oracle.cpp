#include "streamnd/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "streamnd/connectivity.hpp"
#include "streamnd/errors.hpp"

namespace streamnd {

namespace {

bool connected_after(const Graph &g, const std::vector<char> &removed) {
    const int n = g.vertex_count();
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            ++alive;
            if (start < 0)
                start = v;
        }
    if (alive <= 1)
        return true;
    const auto adj = g.adjacency();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (const auto &inc : adj[x])
            if (!removed[inc.to] && !seen[inc.to]) {
                seen[inc.to] = 1;
                ++reached;
                stack.push_back(inc.to);
            }
    }
    return reached == alive;
}

bool uniform_over_all_pairs(const RequirementMap &req, int n) {
    const auto pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    if (req.size() != pairs || req.empty())
        return false;
    return std::all_of(req.begin(), req.end(), [&](const auto &entry) { return entry.second == req.max_requirement(); });
}

} // namespace

bool survives_vertex_faults(const Graph &g, int k) {
    const int n = g.vertex_count();
    if (k <= 0)
        return true;
    if (n < k + 1)
        return false;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::function<bool(int, int)> rec = [&](int from, int left) {
        if (!connected_after(g, removed))
            return false;
        if (left == 0)
            return true;
        for (int v = from; v < n; ++v) {
            removed[v] = 1;
            const bool ok = rec(v + 1, left - 1);
            removed[v] = 0;
            if (!ok)
                return false;
        }
        return true;
    };
    return rec(0, k - 1);
}

Solution brute_optimal(const Graph &base, std::span<const WeightedEdge> links, const RequirementMap &req,
                       ConnectivityMode mode, std::size_t guard) {
    req.validate(base, mode);
    std::vector<std::size_t> free_links, paid;
    for (std::size_t i = 0; i < links.size(); ++i)
        (links[i].w == 0 ? free_links : paid).push_back(i);
    if (paid.size() > guard)
        throw ResourceError("oracle guard exceeded: " + std::to_string(paid.size()) + " positive-weight links > " +
                            std::to_string(guard));

    const bool uniform_vertex = mode == ConnectivityMode::Vertex && uniform_over_all_pairs(req, base.vertex_count());
    auto feasible = [&](const std::vector<char> &take) {
        Graph g = base;
        for (std::size_t i = 0; i < links.size(); ++i)
            if (take[i])
                g.add_edge(links[i].u, links[i].v, links[i].w);
        if (uniform_vertex)
            return survives_vertex_faults(g, req.max_requirement());
        return check_feasible(g, req, mode);
    };

    std::vector<char> take(links.size(), 0);
    for (std::size_t i : free_links)
        take[i] = 1;
    {
        auto all = take;
        for (std::size_t i : paid)
            all[i] = 1;
        if (!feasible(all))
            throw InfeasibleError("no subset of the links meets the requirements");
    }

    Weight best = 0;
    for (std::size_t i : paid)
        best += links[i].w;
    best += 1; // strictly above any subset, so the first feasible leaf is recorded
    std::vector<char> best_take;
    std::function<void(std::size_t, Weight)> rec = [&](std::size_t depth, Weight weight) {
        if (weight >= best)
            return;
        // optimistic completion: everything not yet excluded
        auto optimistic = take;
        for (std::size_t d = depth; d < paid.size(); ++d)
            optimistic[paid[d]] = 1;
        if (!feasible(optimistic))
            return;
        if (depth == paid.size()) {
            best = weight;
            best_take = take;
            return;
        }
        const std::size_t i = paid[depth];
        take[i] = 1;
        rec(depth + 1, weight + links[i].w);
        take[i] = 0;
        rec(depth + 1, weight);
    };
    rec(0, 0);

    Solution s;
    for (std::size_t i = 0; i < links.size(); ++i)
        if (best_take[i])
            s.chosen.push_back(i);
    s.weight = best;
    return s;
}

int brute_pair_connectivity(const Graph &g, int u, int v, ConnectivityMode mode) {
    if (u == v || !g.contains_vertex(u) || !g.contains_vertex(v))
        throw std::invalid_argument("need two distinct vertices");
    const auto adj = g.adjacency();
    struct Path {
        std::vector<int> interior;
        std::vector<std::size_t> edges;
    };
    std::vector<Path> paths;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    Path cur;
    std::function<void(int)> walk = [&](int x) {
        for (const auto &inc : adj[x]) {
            if (on_path[inc.to])
                continue;
            cur.edges.push_back(inc.edge);
            if (inc.to == v) {
                paths.push_back(cur);
            } else {
                on_path[inc.to] = 1;
                cur.interior.push_back(inc.to);
                walk(inc.to);
                cur.interior.pop_back();
                on_path[inc.to] = 0;
            }
            cur.edges.pop_back();
        }
    };
    on_path[u] = 1;
    walk(u);
    std::stable_sort(paths.begin(), paths.end(),
                     [](const Path &a, const Path &b) { return a.edges.size() < b.edges.size(); });

    // group paths by their first edge: every path leaves u through one edge
    std::vector<std::size_t> first_edges;
    for (const auto &inc : adj[u])
        first_edges.push_back(inc.edge);
    std::vector<std::vector<std::size_t>> by_first(first_edges.size());
    for (std::size_t p = 0; p < paths.size(); ++p)
        for (std::size_t i = 0; i < first_edges.size(); ++i)
            if (paths[p].edges.front() == first_edges[i])
                by_first[i].push_back(p);

    auto blocks_vertex = [&](int x) {
        return mode == ConnectivityMode::Vertex || (mode == ConnectivityMode::Element && !g.reliable(x));
    };
    std::vector<char> used_edge(g.edge_count(), 0);
    std::vector<char> used_vertex(static_cast<std::size_t>(g.vertex_count()), 0);
    int best = 0;
    int upper = static_cast<int>(first_edges.size());
    {
        int dv = 0;
        for (const auto &inc : adj[v])
            dv += inc.to != v ? 1 : 0;
        upper = std::min(upper, dv);
    }
    std::function<void(std::size_t, int)> pack = [&](std::size_t i, int count) {
        best = std::max(best, count);
        if (best >= upper || i == first_edges.size() ||
            count + static_cast<int>(first_edges.size() - i) <= best)
            return;
        for (std::size_t p : by_first[i]) {
            const auto &path = paths[p];
            bool ok = std::none_of(path.edges.begin(), path.edges.end(), [&](std::size_t e) { return used_edge[e]; });
            ok = ok && std::none_of(path.interior.begin(), path.interior.end(),
                                    [&](int x) { return blocks_vertex(x) && used_vertex[x]; });
            if (!ok)
                continue;
            for (std::size_t e : path.edges)
                used_edge[e] = 1;
            for (int x : path.interior)
                ++used_vertex[x];
            pack(i + 1, count + 1);
            for (std::size_t e : path.edges)
                used_edge[e] = 0;
            for (int x : path.interior)
                --used_vertex[x];
            if (best >= upper)
                return;
        }
        pack(i + 1, count);
    };
    pack(0, 0);
    return best;
}

Weight kruskal_weight(int n, std::span<const WeightedEdge> edges) {
    std::vector<WeightedEdge> sorted(edges.begin(), edges.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) { return a.w < b.w; });
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    Weight total = 0;
    for (const auto &e : sorted) {
        const int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            total += e.w;
        }
    }
    return total;
}

std::set<std::pair<int, int>> brute_two_cuts(const Graph &g) {
    std::set<std::pair<int, int>> cuts;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<char> removed(static_cast<std::size_t>(n), 0);
            removed[a] = removed[b] = 1;
            if (!connected_after(g, removed))
                cuts.insert({a, b});
        }
    return cuts;
}

int brute_biset_connectivity(const Graph &g, int u, int v) {
    const int n = g.vertex_count();
    std::vector<int> others;
    for (int x = 0; x < n; ++x)
        if (x != u && x != v)
            others.push_back(x);
    // side: 0 = inner S, 1 = boundary S+ \ S, 2 = outside S+
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    side[u] = 0;
    side[v] = 2;
    int best = -1;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == others.size()) {
            int value = 0;
            for (int x = 0; x < n; ++x)
                value += side[x] == 1 ? 1 : 0;
            for (const auto &e : g.edges())
                if ((side[e.u] == 0 && side[e.v] == 2) || (side[e.u] == 2 && side[e.v] == 0))
                    ++value;
            if (best < 0 || value < best)
                best = value;
            return;
        }
        for (int s = 0; s < 3; ++s) {
            side[others[i]] = s;
            rec(i + 1);
        }
    };
    rec(0);
    return best;
}

std::string_view to_string(Family family) {
    switch (family) {
    case Family::Tree:
        return "tree";
    case Family::TwoConnected:
        return "two-connected";
    case Family::Gnp:
        return "gnp";
    case Family::CyclePlusChords:
        return "cycle-plus-chords";
    }
    return "?";
}

std::vector<WeightedEdge> random_links(int n, int count, Weight min_weight, Weight max_weight, Rng &rng) {
    if (n < 2 && count > 0)
        throw std::invalid_argument("links need at least two vertices");
    std::vector<WeightedEdge> links;
    for (int i = 0; i < count; ++i) {
        const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        if (b >= a)
            ++b;
        links.push_back({a, b, rng.between(min_weight, max_weight), static_cast<std::size_t>(i)});
    }
    return links;
}

Instance generate(const InstanceGenerator &gen) {
    if (gen.n < 1)
        throw std::invalid_argument("generator needs n >= 1");
    if (gen.min_weight < 0 || gen.max_weight < gen.min_weight)
        throw std::invalid_argument("bad weight range");
    if ((gen.family == Family::TwoConnected || gen.family == Family::CyclePlusChords) && gen.n < 3)
        throw std::invalid_argument("cycles need n >= 3");
    Rng rng(mix_seed(gen.seed, static_cast<std::uint64_t>(gen.family)));
    const int n = gen.n;
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);

    for (int attempt = 0; attempt < 100; ++attempt) {
        rng.shuffle(label);
        Graph g(n);
        auto weight = [&] { return rng.between(gen.min_weight, gen.max_weight); };
        switch (gen.family) {
        case Family::Tree:
            for (int i = 1; i < n; ++i)
                g.add_edge(label[i], label[rng.below(static_cast<std::uint64_t>(i))], weight());
            break;
        case Family::Gnp:
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (rng.chance(gen.density))
                        g.add_edge(label[a], label[b], weight());
            break;
        case Family::TwoConnected:
        case Family::CyclePlusChords:
            for (int i = 0; i < n; ++i)
                g.add_edge(label[i], label[(i + 1) % n], weight());
            for (int a = 0; a < n; ++a)
                for (int b = a + 2; b < n; ++b)
                    if (!(a == 0 && b == n - 1) && rng.chance(gen.density))
                        g.add_edge(label[a], label[b], weight());
            break;
        }
        if (gen.family == Family::TwoConnected && !is_k_connected(g, 2, ConnectivityMode::Vertex))
            continue;
        Instance inst{std::move(g), {}};
        inst.links = random_links(n, gen.link_count, gen.min_weight, gen.max_weight, rng);
        return inst;
    }
    throw std::runtime_error("could not certify a 2-connected instance");
}

RequirementMap random_requirements(const Graph &g, int k_max, double density, ConnectivityMode mode, Rng &rng) {
    RequirementMap req;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (mode == ConnectivityMode::Element && (!g.reliable(a) || !g.reliable(b)))
                continue;
            if (!rng.chance(density))
                continue;
            const int want = static_cast<int>(rng.between(1, k_max));
            const int r = std::min(want, pair_connectivity(g, a, b, mode, want));
            if (r > 0)
                req.set(a, b, r);
        }
    return req;
}

} // namespace streamnd
