#include "streamnd/ft_spanner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

#include "streamnd/errors.hpp"
#include "streamnd/random.hpp"

namespace streamnd {

std::string_view to_string(FaultMode mode) { return mode == FaultMode::Vertex ? "vft" : "eft"; }

std::string_view to_string(TestKind kind) {
    switch (kind) {
    case TestKind::Exact:
        return "exact";
    case TestKind::SampledVft:
        return "sampled";
    case TestKind::PeelingEft:
        return "peeling";
    }
    return "?";
}

FaultMode parse_fault_mode(std::string_view text) {
    if (text == "vft" || text == "vertex")
        return FaultMode::Vertex;
    if (text == "eft" || text == "edge")
        return FaultMode::Edge;
    throw std::invalid_argument("unknown fault mode '" + std::string(text) + "'");
}

TestKind parse_test_kind(std::string_view text) {
    if (text == "exact")
        return TestKind::Exact;
    if (text == "sampled")
        return TestKind::SampledVft;
    if (text == "peeling")
        return TestKind::PeelingEft;
    throw std::invalid_argument("unknown test kind '" + std::string(text) + "'");
}

void FtConfig::validate() const {
    if (f < 0)
        throw std::invalid_argument("fault budget f must be nonnegative");
    if (t < 1)
        throw std::invalid_argument("stretch parameter t must be at least 1");
    if (!(eps > 0.0))
        throw std::invalid_argument("eps must be positive");
    if (test == TestKind::SampledVft && mode != FaultMode::Vertex)
        throw std::invalid_argument("the sampled test handles vertex faults only");
    if (test == TestKind::PeelingEft && mode != FaultMode::Edge)
        throw std::invalid_argument("the peeling test handles edge faults only");
}

TestKind resolve_test_kind(int vertex_count, int f, std::optional<TestKind> requested, FaultMode mode) {
    if (requested)
        return *requested;
    if (f <= 3 || vertex_count <= 12)
        return TestKind::Exact;
    throw std::invalid_argument("exact test too expensive for f=" + std::to_string(f) + ", n=" +
                                std::to_string(vertex_count) + "; choose --test " +
                                (mode == FaultMode::Vertex ? "sampled" : "peeling"));
}

namespace {

// Any fault set that cuts all short paths must hit the shortest one found, so
// branching on its interior elements is exhaustive.
bool breakable(const HopGraph &h, int u, int v, int budget, int threshold, FaultMode mode,
               std::vector<char> &blocked_vertices, std::vector<char> &blocked_edges) {
    auto p = h.short_path(u, v, threshold, blocked_vertices, blocked_edges);
    if (!p)
        return true;
    if (budget == 0)
        return false;
    if (mode == FaultMode::Vertex) {
        for (std::size_t i = 1; i + 1 < p->vertices.size(); ++i) {
            const int x = p->vertices[i];
            blocked_vertices[x] = 1;
            const bool hit = breakable(h, u, v, budget - 1, threshold, mode, blocked_vertices, blocked_edges);
            blocked_vertices[x] = 0;
            if (hit)
                return true;
        }
    } else {
        for (std::size_t id : p->edges) {
            blocked_edges[id] = 1;
            const bool hit = breakable(h, u, v, budget - 1, threshold, mode, blocked_vertices, blocked_edges);
            blocked_edges[id] = 0;
            if (hit)
                return true;
        }
    }
    return false;
}

} // namespace

bool ft_test_exact(const HopGraph &h, int u, int v, int f, int threshold, FaultMode mode) {
    if (threshold < 1)
        throw std::invalid_argument("threshold must be at least 1");
    std::vector<char> blocked_vertices(static_cast<std::size_t>(h.vertex_count()), 0);
    std::vector<char> blocked_edges(h.edge_count(), 0);
    return breakable(h, u, v, std::max(f, 0), threshold, mode, blocked_vertices, blocked_edges);
}

bool ft_test_sampled_vft(const HopGraph &h, int u, int v, int f, int threshold, std::uint64_t seed) {
    if (f <= 0)
        return !h.short_path(u, v, threshold);
    const int n = h.vertex_count();
    const int samples = std::max(1, 16 * static_cast<int>(std::ceil(std::log2(std::max(n, 2)))));
    const double keep = 1.0 / (2.0 * f);
    Rng rng(seed);
    std::vector<char> dropped(static_cast<std::size_t>(n), 0);
    int far = 0;
    for (int s = 0; s < samples; ++s) {
        for (int x = 0; x < n; ++x)
            dropped[x] = (x != u && x != v && !rng.chance(keep)) ? 1 : 0;
        if (!h.short_path(u, v, threshold, dropped))
            ++far;
    }
    return 4 * far >= samples;
}

bool ft_test_peeling_eft(const HopGraph &h, int u, int v, int f, int threshold) {
    std::vector<char> removed(h.edge_count(), 0);
    for (int round = 0; round <= std::max(f, 0); ++round) {
        auto p = h.short_path(u, v, threshold, {}, removed);
        if (!p)
            return true;
        for (std::size_t id : p->edges)
            removed[id] = 1;
    }
    return false;
}

FtSpanner::FtSpanner(int vertex_count, FtConfig config, BucketScheme scheme)
    : n_(vertex_count), config_(config), scheme_(scheme) {
    if (vertex_count < 0)
        throw std::invalid_argument("negative vertex count");
    config_.validate();
}

bool FtSpanner::process_edge(const WeightedEdge &e) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    const int j = scheme_.bucket_of(e.w);
    auto it = buckets_.find(j);
    if (it == buckets_.end())
        it = buckets_.emplace(j, HopGraph(n_)).first;
    HopGraph &h = it->second;
    bool keep = false;
    if (e.u != e.v) {
        switch (config_.test) {
        case TestKind::Exact:
            keep = ft_test_exact(h, e.u, e.v, config_.f, config_.threshold(), config_.mode);
            break;
        case TestKind::SampledVft:
            keep = ft_test_sampled_vft(h, e.u, e.v, config_.f, config_.threshold(), mix_seed(config_.seed, e.index));
            break;
        case TestKind::PeelingEft:
            keep = ft_test_peeling_eft(h, e.u, e.v, config_.f, config_.threshold());
            break;
        }
    }
    if (keep) {
        h.add_edge(e.u, e.v);
        kept_.push_back(e);
    } else {
        rejected_.push_back({e, j});
    }
    return keep;
}

void FtSpanner::consume(EdgeStream &stream) {
    while (auto e = stream.next())
        process_edge(*e);
}

Graph FtSpanner::spanner() const {
    Graph g(n_);
    for (const auto &e : kept_)
        g.add_edge(e.u, e.v, e.w);
    return g;
}

std::vector<std::vector<int>> extract_disjoint_paths(const HopGraph &h, int u, int v, int count, int hop_bound,
                                                     FaultMode mode) {
    std::vector<char> blocked_vertices(static_cast<std::size_t>(h.vertex_count()), 0);
    std::vector<char> blocked_edges(h.edge_count(), 0);
    std::vector<std::vector<int>> paths;
    for (int i = 0; i < count; ++i) {
        auto p = h.short_path(u, v, hop_bound, blocked_vertices, blocked_edges);
        if (!p)
            throw ContractViolation("found only " + std::to_string(paths.size()) + " of " + std::to_string(count) +
                                    " disjoint paths of at most " + std::to_string(hop_bound) + " hops between " +
                                    std::to_string(u) + " and " + std::to_string(v));
        for (std::size_t id : p->edges)
            blocked_edges[id] = 1;
        if (mode == FaultMode::Vertex)
            for (std::size_t k = 1; k + 1 < p->vertices.size(); ++k)
                blocked_vertices[p->vertices[k]] = 1;
        paths.push_back(std::move(p->vertices));
    }
    return paths;
}

int certified_path_count(const FtConfig &config) {
    if (config.mode == FaultMode::Edge)
        return config.f / (2 * config.t - 1) + 1;
    if (config.t < 2)
        return 1;
    return config.f / (2 * config.t - 2) + 1;
}

namespace {

constexpr long double kUnreachable = std::numeric_limits<long double>::infinity();

std::vector<long double> weighted_distances(const Graph &g, const std::vector<char> &edge_alive,
                                            const std::vector<char> &vertex_alive, int source) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<std::pair<int, Weight>>> adj(n);
    for (std::size_t id = 0; id < g.edge_count(); ++id) {
        if (!edge_alive[id])
            continue;
        const auto &e = g.edge(id);
        if (!vertex_alive[e.u] || !vertex_alive[e.v])
            continue;
        adj[e.u].push_back({e.v, e.w});
        adj[e.v].push_back({e.u, e.w});
    }
    std::vector<long double> dist(n, kUnreachable);
    using Item = std::pair<long double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0;
    heap.push({0, source});
    while (!heap.empty()) {
        auto [d, x] = heap.top();
        heap.pop();
        if (d > dist[x])
            continue;
        for (auto [y, w] : adj[x]) {
            const long double nd = d + static_cast<long double>(w);
            if (nd < dist[y]) {
                dist[y] = nd;
                heap.push({nd, y});
            }
        }
    }
    return dist;
}

long double combinations_up_to(std::size_t n, int f) {
    long double total = 0, term = 1;
    for (int i = 0; i <= f && static_cast<std::size_t>(i) <= n; ++i) {
        total += term;
        term = term * static_cast<long double>(n - static_cast<std::size_t>(i)) / (i + 1);
    }
    return total;
}

// Calls fn(chosen) for every subset of [0, universe) of size <= f; stops when
// fn returns false. Returns false iff stopped.
template <class Fn>
bool for_each_subset(std::size_t universe, int f, std::vector<std::size_t> &chosen, std::size_t from, Fn &&fn) {
    if (!fn(chosen))
        return false;
    if (static_cast<int>(chosen.size()) >= f)
        return true;
    for (std::size_t i = from; i < universe; ++i) {
        chosen.push_back(i);
        const bool go = for_each_subset(universe, f, chosen, i + 1, fn);
        chosen.pop_back();
        if (!go)
            return false;
    }
    return true;
}

} // namespace

bool verify_ft_spanner(const Graph &g, std::span<const std::size_t> kept_ids, const FtConfig &config) {
    config.validate();
    const int n = g.vertex_count();
    const std::size_t universe = config.mode == FaultMode::Vertex ? static_cast<std::size_t>(n) : g.edge_count();
    const long double pairs = static_cast<long double>(n) * (n - 1) / 2;
    if (combinations_up_to(universe, config.f) * pairs > 1e7L)
        throw ResourceError("fault-set enumeration exceeds 10^7 (fault sets x pairs)");

    std::vector<char> in_h(g.edge_count(), 0);
    for (std::size_t id : kept_ids) {
        if (id >= g.edge_count())
            throw std::invalid_argument("kept edge id out of range");
        in_h[id] = 1;
    }
    const long double stretch = static_cast<long double>(config.threshold()) * (1.0L + config.eps);
    std::vector<std::size_t> chosen;
    return for_each_subset(universe, config.f, chosen, 0, [&](const std::vector<std::size_t> &faults) {
        std::vector<char> vertex_alive(static_cast<std::size_t>(n), 1);
        std::vector<char> g_alive(g.edge_count(), 1);
        if (config.mode == FaultMode::Vertex)
            for (std::size_t x : faults)
                vertex_alive[x] = 0;
        else
            for (std::size_t id : faults)
                g_alive[id] = 0;
        std::vector<char> h_alive(g.edge_count(), 0);
        for (std::size_t id = 0; id < g.edge_count(); ++id)
            h_alive[id] = g_alive[id] && in_h[id];
        for (int s = 0; s < n; ++s) {
            if (!vertex_alive[s])
                continue;
            const auto dg = weighted_distances(g, g_alive, vertex_alive, s);
            const auto dh = weighted_distances(g, h_alive, vertex_alive, s);
            for (int x = s + 1; x < n; ++x) {
                if (!vertex_alive[x] || dg[x] == kUnreachable)
                    continue;
                if (dh[x] > stretch * dg[x] * (1 + 1e-12L) + 1e-9L)
                    return false;
            }
        }
        return true;
    });
}

bool verify_ft_spanner(const Graph &g, const Graph &h, const FtConfig &config) {
    if (h.vertex_count() != g.vertex_count())
        throw std::invalid_argument("spanner and graph have different vertex counts");
    using Key = std::tuple<int, int, Weight>;
    std::map<Key, std::vector<std::size_t>> available;
    for (std::size_t id = g.edge_count(); id-- > 0;) {
        const auto &e = g.edge(id);
        available[{std::min(e.u, e.v), std::max(e.u, e.v), e.w}].push_back(id);
    }
    std::vector<std::size_t> kept;
    for (const auto &e : h.edges()) {
        auto &ids = available[{std::min(e.u, e.v), std::max(e.u, e.v), e.w}];
        if (ids.empty())
            throw std::invalid_argument("spanner edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " is not an edge of the graph");
        kept.push_back(ids.back());
        ids.pop_back();
    }
    return verify_ft_spanner(g, kept, config);
}

} // namespace streamnd
