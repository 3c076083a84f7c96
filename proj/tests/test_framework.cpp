#include <doctest.h>

#include "streamnd/connectivity.hpp"
#include "streamnd/errors.hpp"
#include "streamnd/exact_solver.hpp"
#include "streamnd/framework.hpp"
#include "streamnd/oracle.hpp"
#include "streamnd/random.hpp"

using namespace streamnd;

namespace {

// Plain 2^m scan over edge subsets.
Weight naive_optimum(const Graph &g, const RequirementMap &req, ConnectivityMode mode) {
    const std::size_t m = g.edge_count();
    Weight best = -1;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<std::size_t> ids;
        Weight w = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1u) {
                ids.push_back(i);
                w += g.edge(i).w;
            }
        if (best >= 0 && w >= best)
            continue;
        if (check_feasible(g.with_edges(ids), req, mode))
            best = w;
    }
    return best;
}

std::vector<WeightedEdge> edges_of(const Graph &g) {
    std::vector<WeightedEdge> out;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        out.push_back({g.edge(i).u, g.edge(i).v, g.edge(i).w, i});
    return out;
}

} // namespace

TEST_CASE("parameter choices") {
    FrameworkConfig cfg;
    cfg.t = 2;
    CHECK(cfg.eps() == doctest::Approx(1.0 / 3));
    cfg.mode = ConnectivityMode::Vertex;
    cfg.analysis = Analysis::Integral;
    CHECK(cfg.fault_budget(2) == 2);
    CHECK(cfg.fault_budget(1) == 0);
    CHECK(cfg.factor_bound(2) == 8);
    cfg.analysis = Analysis::Fractional;
    CHECK(cfg.fault_budget(2) == 6);
    CHECK(cfg.factor_bound(3) == 12);
    cfg.mode = ConnectivityMode::Edge;
    CHECK(cfg.fault_budget(2) == 9);
    CHECK(cfg.fault_mode() == FaultMode::Edge);
    CHECK(cfg.factor_bound(3) == 12);
    CHECK(cfg.factor_bound(5) == 16);
    cfg.mode = ConnectivityMode::Element;
    CHECK(cfg.fault_mode() == FaultMode::Vertex);
    CHECK(cfg.factor_bound(5) == 16);
    CHECK(parse_analysis("integral") == Analysis::Integral);
    CHECK_THROWS_AS(parse_analysis("lp"), std::invalid_argument);
}

TEST_CASE("exact solver examples") {
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    const auto all = exact_solve(k3, RequirementMap::uniform(3, 2), ConnectivityMode::Edge);
    CHECK(all.weight == 3);
    CHECK(all.chosen.size() == 3);

    Graph path(4);
    path.add_edge(0, 1, 2);
    path.add_edge(1, 2, 3);
    path.add_edge(2, 3, 4);
    path.add_edge(0, 3, 20);
    RequirementMap ends;
    ends.set(0, 3, 1);
    const auto s = exact_solve(path, ends, ConnectivityMode::Edge);
    CHECK(s.weight == 9);
    CHECK(s.chosen == std::vector<std::size_t>{0, 1, 2});

    RequirementMap impossible;
    impossible.set(0, 3, 3);
    CHECK_THROWS_AS(exact_solve(path, impossible, ConnectivityMode::Edge), InfeasibleError);
    CHECK_THROWS_AS(exact_solve(path, ends, ConnectivityMode::Edge, 2), ResourceError);
}

TEST_CASE("zero-weight candidates do not count against the guard") {
    Graph base(3);
    std::vector<WeightedEdge> cands{{0, 1, 0, 0}, {1, 2, 0, 1}, {0, 2, 5, 2}};
    const auto s = exact_augment(base, cands, RequirementMap::uniform(3, 1), ConnectivityMode::Edge, 1);
    CHECK(s.weight == 0);
}

TEST_CASE("exact solver matches plain subset enumeration") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        InstanceGenerator gen;
        gen.seed = seed;
        gen.n = 4 + static_cast<int>(seed % 4);
        gen.density = 0.6;
        gen.min_weight = 0;
        Graph g = generate(gen).base;
        while (g.edge_count() > 14) {
            std::vector<std::size_t> ids(14);
            for (std::size_t i = 0; i < 14; ++i)
                ids[i] = i;
            g = g.with_edges(ids);
        }
        Rng rng(seed);
        const auto mode = static_cast<ConnectivityMode>(seed % 3);
        if (mode == ConnectivityMode::Element)
            g.set_reliable(0, false);
        const RequirementMap req = random_requirements(g, 3, 0.5, mode, rng);
        INFO("seed " << seed);
        CHECK(exact_solve(g, req, mode).weight == naive_optimum(g, req, mode));
    }
}

TEST_CASE("framework examples") {
    SUBCASE("single edge") {
        Graph g(2);
        g.add_edge(0, 1, 5);
        RequirementMap req;
        req.set(0, 1, 1);
        for (auto mode : {ConnectivityMode::Edge, ConnectivityMode::Vertex, ConnectivityMode::Element}) {
            FrameworkConfig cfg;
            cfg.mode = mode;
            EdgeStream s = stream_of(g);
            const auto r = run_framework(s, 2, req, cfg);
            CHECK(r.weight == 5);
            CHECK(r.solution.chosen.size() == 1);
        }
    }
    SUBCASE("unit C4 with edge requirement 2 and t = 1") {
        Graph g(4);
        for (int i = 0; i < 4; ++i)
            g.add_edge(i, (i + 1) % 4);
        FrameworkConfig cfg;
        cfg.t = 1;
        cfg.mode = ConnectivityMode::Edge;
        EdgeStream s = stream_of(g);
        const auto r = run_framework(s, 4, RequirementMap::uniform(4, 2), cfg);
        CHECK(r.weight == 4);
        CHECK(r.spanner_edges.size() == 4);
    }
    SUBCASE("infeasible input") {
        Graph g(3);
        g.add_edge(0, 1, 1);
        RequirementMap req;
        req.set(0, 2, 1);
        FrameworkConfig cfg;
        EdgeStream s = stream_of(g);
        CHECK_THROWS_AS(run_framework(s, 3, req, cfg), InfeasibleError);
    }
}

TEST_CASE("framework solutions are feasible and within the factor bound") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        InstanceGenerator gen;
        gen.seed = seed;
        gen.n = 5 + static_cast<int>(seed % 6);
        gen.density = gen.n >= 9 ? 0.35 : 0.45;
        Graph g = generate(gen).base;
        if (g.edge_count() > 20)
            continue;
        const auto mode = static_cast<ConnectivityMode>(seed % 3);
        std::vector<int> non_reliable;
        if (mode == ConnectivityMode::Element) {
            g.set_reliable(1, false);
            non_reliable.push_back(1);
        }
        Rng rng(seed);
        const RequirementMap req = random_requirements(g, 2, 0.5, mode, rng);
        for (auto analysis : {Analysis::Integral, Analysis::Fractional}) {
            FrameworkConfig cfg;
            cfg.mode = mode;
            cfg.analysis = analysis;
            cfg.t = 1 + static_cast<int>(seed % 2);
            EdgeStream s = stream_of(g, seed);
            const auto r = run_framework(s, g.vertex_count(), req, cfg, non_reliable);
            CHECK(check_feasible(r.spanner.with_edges(r.solution.chosen), req, mode));
            Graph empty(g.vertex_count());
            for (int v : non_reliable)
                empty.set_reliable(v, false);
            const auto opt = brute_optimal(empty, edges_of(g), req, mode);
            CHECK(r.weight >= opt.weight);
            CHECK(static_cast<double>(r.weight) <=
                  cfg.factor_bound(req.max_requirement()) * static_cast<double>(opt.weight) + 1e-9);
        }
    }
}
