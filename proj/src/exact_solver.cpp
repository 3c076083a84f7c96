#include "streamnd/exact_solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "streamnd/connectivity.hpp"
#include "streamnd/errors.hpp"

namespace streamnd {

Graph augmented(const Graph &base, std::span<const WeightedEdge> candidates, std::span<const std::size_t> chosen) {
    Graph g = base;
    for (std::size_t i : chosen)
        g.add_edge(candidates[i].u, candidates[i].v, candidates[i].w);
    return g;
}

namespace {

class Search {
  public:
    Search(const Graph &base, std::span<const WeightedEdge> candidates, const RequirementMap &req,
           ConnectivityMode mode, std::vector<std::size_t> order)
        : base_(base), candidates_(candidates), req_(req), mode_(mode), order_(std::move(order)),
          alive_(candidates.size(), 0) {}

    void mark_alive(std::size_t i) { alive_[i] = 1; }

    bool feasible() const {
        Graph g = base_;
        for (std::size_t i = 0; i < candidates_.size(); ++i)
            if (alive_[i])
                g.add_edge(candidates_[i].u, candidates_[i].v, candidates_[i].w);
        return check_feasible(g, req_, mode_);
    }

    Weight alive_weight() const {
        Weight w = 0;
        for (std::size_t i = 0; i < candidates_.size(); ++i)
            if (alive_[i])
                w += candidates_[i].w;
        return w;
    }

    void run() {
        best_weight_ = alive_weight();
        best_ = alive_;
        descend(0, 0);
    }

    Solution result() const {
        Solution s;
        for (std::size_t i = 0; i < best_.size(); ++i)
            if (best_[i])
                s.chosen.push_back(i);
        s.weight = best_weight_;
        return s;
    }

  private:
    // Positions < depth are decided; `included` is the weight of everything
    // decided in. Invariant: the alive set is feasible.
    void descend(std::size_t depth, Weight included) {
        if (included >= best_weight_)
            return;
        const Weight alive = alive_weight();
        if (alive < best_weight_) {
            best_weight_ = alive;
            best_ = alive_;
        }
        if (depth == order_.size())
            return;
        const std::size_t i = order_[depth];
        alive_[i] = 0;
        if (feasible())
            descend(depth + 1, included);
        alive_[i] = 1;
        descend(depth + 1, included + candidates_[i].w);
    }

    const Graph &base_;
    std::span<const WeightedEdge> candidates_;
    const RequirementMap &req_;
    ConnectivityMode mode_;
    std::vector<std::size_t> order_;
    std::vector<char> alive_;
    std::vector<char> best_;
    Weight best_weight_ = 0;
};

} // namespace

Solution exact_augment(const Graph &base, std::span<const WeightedEdge> candidates, const RequirementMap &req,
                       ConnectivityMode mode, std::size_t guard) {
    req.validate(base, mode);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto &c = candidates[i];
        if (!base.contains_vertex(c.u) || !base.contains_vertex(c.v))
            throw std::invalid_argument("candidate endpoint out of range");
        if (c.w > 0)
            order.push_back(i);
    }
    if (order.size() > guard)
        throw ResourceError("exact solver guard exceeded: " + std::to_string(order.size()) +
                            " positive-weight candidates > " + std::to_string(guard));
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return candidates[a].w > candidates[b].w; });
    Search search(base, candidates, req, mode, order);
    for (std::size_t i = 0; i < candidates.size(); ++i)
        search.mark_alive(i);
    if (!search.feasible())
        throw InfeasibleError("requirements cannot be met even with every candidate");
    search.run();
    return search.result();
}

Solution exact_solve(const Graph &g, const RequirementMap &req, ConnectivityMode mode, std::size_t guard) {
    Graph empty(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        empty.set_reliable(v, g.reliable(v));
    std::vector<WeightedEdge> candidates;
    candidates.reserve(g.edge_count());
    for (std::size_t id = 0; id < g.edge_count(); ++id)
        candidates.push_back({g.edge(id).u, g.edge(id).v, g.edge(id).w, id});
    return exact_augment(empty, candidates, req, mode, guard);
}

} // namespace streamnd
