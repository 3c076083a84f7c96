#include "streamnd/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace streamnd {

namespace {

// Split-vertex flow network reused across all pair queries of one graph.
// Vertex x becomes in(x) = 2x and out(x) = 2x + 1.
class UnitFlowNetwork {
  public:
    UnitFlowNetwork(const Graph &g, ConnectivityMode mode) : node_count_(2 * g.vertex_count()) {
        const int inf = static_cast<int>(g.edge_count()) + 1;
        head_.assign(static_cast<std::size_t>(node_count_), {});
        for (int x = 0; x < g.vertex_count(); ++x) {
            const bool split = mode == ConnectivityMode::Vertex ||
                               (mode == ConnectivityMode::Element && !g.reliable(x));
            add_arc(2 * x, 2 * x + 1, split ? 1 : inf);
        }
        for (const auto &e : g.edges()) {
            add_arc(2 * e.u + 1, 2 * e.v, 1);
            add_arc(2 * e.v + 1, 2 * e.u, 1);
        }
        original_cap_.resize(arcs_.size());
        std::transform(arcs_.begin(), arcs_.end(), original_cap_.begin(),
                       [](const Arc &a) { return a.cap; });
    }

    int max_flow(int source_vertex, int sink_vertex, int cap) {
        for (std::size_t i = 0; i < arcs_.size(); ++i)
            arcs_[i].cap = original_cap_[i];
        const int source = 2 * source_vertex + 1;
        const int sink = 2 * sink_vertex;
        int flow = 0;
        std::vector<int> via(static_cast<std::size_t>(node_count_));
        while (flow < cap) {
            std::fill(via.begin(), via.end(), -1);
            std::queue<int> queue;
            queue.push(source);
            via[static_cast<std::size_t>(source)] = -2;
            while (!queue.empty() && via[static_cast<std::size_t>(sink)] == -1) {
                const int x = queue.front();
                queue.pop();
                for (int a : head_[static_cast<std::size_t>(x)]) {
                    const auto &arc = arcs_[static_cast<std::size_t>(a)];
                    if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
                        via[static_cast<std::size_t>(arc.to)] = a;
                        queue.push(arc.to);
                    }
                }
            }
            if (via[static_cast<std::size_t>(sink)] == -1)
                break;
            for (int x = sink; x != source;) {
                const int a = via[static_cast<std::size_t>(x)];
                arcs_[static_cast<std::size_t>(a)].cap -= 1;
                arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
                x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
            }
            ++flow;
        }
        return flow;
    }

  private:
    struct Arc {
        int to;
        int cap;
    };

    void add_arc(int from, int to, int cap) {
        head_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap});
        head_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

    int node_count_;
    std::vector<Arc> arcs_;
    std::vector<int> original_cap_;
    std::vector<std::vector<int>> head_;
};

void require_pair(const Graph &g, int u, int v) {
    if (!g.contains_vertex(u) || !g.contains_vertex(v))
        throw std::invalid_argument("vertex out of range in connectivity query");
    if (u == v)
        throw std::invalid_argument("connectivity query on identical vertices " + std::to_string(u));
}

} // namespace

int pair_connectivity(const Graph &g, int u, int v, ConnectivityMode mode, int cap) {
    require_pair(g, u, v);
    if (cap <= 0)
        return 0;
    UnitFlowNetwork network(g, mode);
    return network.max_flow(u, v, cap);
}

bool check_feasible(const Graph &g, const RequirementMap &req, ConnectivityMode mode) {
    req.validate(g, mode);
    if (req.empty())
        return true;
    UnitFlowNetwork network(g, mode);
    for (const auto &[pair, r] : req) {
        if (network.max_flow(pair.first, pair.second, r) < r)
            return false;
    }
    return true;
}

bool is_k_connected(const Graph &g, int k, ConnectivityMode mode) {
    if (k < 0)
        throw std::invalid_argument("negative connectivity target");
    if (k == 0)
        return true;
    const int n = g.vertex_count();
    if (mode == ConnectivityMode::Vertex && n < k + 1)
        return false;
    UnitFlowNetwork network(g, mode);
    for (int u = 0; u < n; ++u) {
        if (mode == ConnectivityMode::Element && !g.reliable(u))
            continue;
        for (int v = u + 1; v < n; ++v) {
            if (mode == ConnectivityMode::Element && !g.reliable(v))
                continue;
            if (network.max_flow(u, v, k) < k)
                return false;
        }
    }
    return true;
}

std::pair<std::vector<int>, int> components_without(const Graph &g, const std::vector<char> &removed) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const auto adj = g.adjacency();
    std::vector<int> label(n, -1);
    int count = 0;
    std::vector<int> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (label[s] != -1 || (s < removed.size() && removed[s]))
            continue;
        label[s] = count;
        stack.push_back(static_cast<int>(s));
        while (!stack.empty()) {
            const auto x = static_cast<std::size_t>(stack.back());
            stack.pop_back();
            for (const auto &inc : adj[x]) {
                const auto y = static_cast<std::size_t>(inc.to);
                if (label[y] == -1 && !(y < removed.size() && removed[y])) {
                    label[y] = count;
                    stack.push_back(inc.to);
                }
            }
        }
        ++count;
    }
    return {label, count};
}

} // namespace streamnd
