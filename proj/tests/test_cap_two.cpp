#include <doctest.h>

#include <algorithm>

#include "streamnd/cap_two.hpp"
#include "streamnd/connectivity.hpp"
#include "streamnd/errors.hpp"
#include "streamnd/oracle.hpp"

using namespace streamnd;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

bool contains(const std::vector<Link> &links, const Link &l) {
    return std::find(links.begin(), links.end(), l) != links.end();
}

} // namespace

TEST_CASE("edge-minimal 2-connected subgraphs") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        InstanceGenerator gen;
        gen.seed = seed;
        gen.family = Family::TwoConnected;
        gen.n = 4 + static_cast<int>(seed % 6);
        gen.density = 0.5;
        const Graph g = generate(gen).base;
        const auto kept = edge_minimal_two_connected(g);
        const Graph h = g.with_edges(kept);
        CHECK(is_k_connected(h, 2, ConnectivityMode::Vertex));
        CHECK(kept.size() <= static_cast<std::size_t>(2 * g.vertex_count() - 2));
        for (std::size_t drop = 0; drop < kept.size(); ++drop) {
            auto fewer = kept;
            fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
            CHECK_FALSE(is_k_connected(g.with_edges(fewer), 2, ConnectivityMode::Vertex));
        }
    }
    CHECK_THROWS_AS(edge_minimal_two_connected(Graph(4)), std::invalid_argument);
}

TEST_CASE("C5 base is a single cycle node without dummies") {
    CapTwo cap(cycle(5), 0.5, 1);
    CHECK(cap.minimal_base().edge_count() == 5);
    REQUIRE(cap.tree().node_count() == 1);
    const auto &layout = cap.layout(0);
    CHECK(layout.order.size() == 5);
    CHECK(layout.dummy_count == 0);
    CHECK(layout.order == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(cap.base_links().empty());
}

TEST_CASE("C5 chord fills dictionary and both cycle tables") {
    CapTwo cap(cycle(5), 0.5, 1);
    const auto &layout = cap.layout(0);
    const int mu1 = layout.order[1], mu3 = layout.order[3];
    cap.process_link({mu1, mu3, 1, 0});
    const int j = cap.scheme().bucket_of(1);
    const Link l{mu1, mu3, 1, 0, false};
    CHECK(cap.dictionary_entry(0, j) == l);
    for (bool minimum : {true, false}) {
        CHECK(cap.cycle_link(0, minimum, layout.position[mu1], j) == l);
        CHECK(cap.cycle_link(0, minimum, layout.position[mu3], j) == l);
        CHECK_FALSE(cap.cycle_link(0, minimum, layout.position[layout.order[2]], j));
    }
    // same reach depth: the first link stays
    cap.process_link({layout.order[0], layout.order[2], 1, 1});
    CHECK(cap.dictionary_entry(0, j)->index == 0);
}

TEST_CASE("C4 plus a chord") {
    Graph g = cycle(4);
    g.add_edge(0, 2);
    CapTwo cap(g, 0.5, 1);
    CHECK(cap.minimal_base().edge_count() == 4);
    REQUIRE(cap.base_links().size() == 1);
    CHECK(cap.base_links()[0].index == 4);
    CHECK(cap.base_links()[0].from_base);
    CHECK(cap.tree().canonical_form() ==
          build_spqr(g.with_edges(edge_minimal_two_connected(g))).canonical_form());
}

TEST_CASE("finalize examples") {
    SUBCASE("C4 needs both diagonals") {
        const std::vector<WeightedEdge> links{{0, 2, 1, 0}, {1, 3, 1, 1}};
        CapTwo cap(cycle(4), 0.5, 1);
        EdgeStream s(links);
        cap.consume(s);
        const auto r = cap.finalize();
        CHECK(r.weight == 2);
        CHECK(r.solution.size() == 2);
        const auto opt = brute_optimal(cycle(4), links, RequirementMap::uniform(4, 3), ConnectivityMode::Vertex);
        CHECK(opt.weight == 2);
        std::vector<Link> opt_links;
        for (std::size_t i : opt.chosen)
            opt_links.push_back(stream_link(links[i]));
        const auto sol = cap.sol_from_opt(opt_links);
        CHECK(is_k_connected(with_links(cycle(4), sol), 3, ConnectivityMode::Vertex));
        for (const auto &l : sol)
            CHECK(contains(r.stored, l));
    }
    SUBCASE("K4 is already 3-connected") {
        Graph k4 = cycle(4);
        k4.add_edge(0, 2);
        k4.add_edge(1, 3);
        CapTwo cap(k4, 0.5, 1);
        const auto r = cap.finalize();
        CHECK(r.weight == 0);
        CHECK(r.solution.empty());
        // the diagonals are demoted base edges, free and always available
        const auto sol = cap.sol_from_opt({});
        CHECK(weight_of(sol) == 0);
        CHECK(std::all_of(sol.begin(), sol.end(), [](const Link &l) { return l.from_base; }));
    }
    SUBCASE("infeasible") {
        CapTwo cap(cycle(5), 0.5, 1);
        EdgeStream s({{0, 2, 1, 0}});
        cap.consume(s);
        CHECK_THROWS_AS(cap.finalize(), InfeasibleError);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(CapTwo(cycle(3), 0.5, 1), std::invalid_argument);
        Graph path(4);
        path.add_edge(0, 1);
        path.add_edge(1, 2);
        path.add_edge(2, 3);
        CHECK_THROWS_AS(CapTwo(path, 0.5, 1), std::invalid_argument);
    }
}

TEST_CASE("random bases: feasibility, ratios and space accounting") {
    const double eps = 0.5;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        InstanceGenerator gen;
        gen.seed = seed;
        gen.family = Family::TwoConnected;
        gen.n = 4 + static_cast<int>(seed % 6);
        gen.density = 0.25;
        gen.link_count = std::min(18, 2 * gen.n + 2);
        const Instance inst = generate(gen);
        Graph all = inst.base;
        for (const auto &l : inst.links)
            all.add_edge(l.u, l.v, l.w);
        if (!is_k_connected(all, 3, ConnectivityMode::Vertex))
            continue;
        CapTwo cap(inst.base, eps, gen.max_weight);
        EdgeStream s(inst.links);
        cap.consume(s);
        const auto r = cap.finalize();
        INFO("seed " << seed << "\n" << cap.tree().debug_string());

        for (int x = 0; x < cap.tree().node_count(); ++x) {
            const auto &node = cap.tree().node(x);
            if (node.kind != SpqrKind::S)
                continue;
            const auto virtuals = std::count_if(node.edges.begin(), node.edges.end(),
                                                [](const SkeletonEdge &e) { return e.is_virtual; });
            CHECK(cap.layout(x).dummy_count == virtuals);
        }

        const auto account = cap.space_account();
        CHECK(account.stored == r.stored.size());
        CHECK(account.chain_holds());
        CHECK(r.stored.size() <= cap.space_bound());
        const std::size_t m = cap.minimal_base().edge_count();
        CHECK(account.skeleton_edges <= 3 * m - 6);
        CHECK(m <= static_cast<std::size_t>(2 * gen.n - 2));

        CHECK(is_k_connected(with_links(inst.base, r.solution), 3, ConnectivityMode::Vertex));
        const auto opt = brute_optimal(inst.base, inst.links, RequirementMap::uniform(gen.n, 3),
                                       ConnectivityMode::Vertex);
        CHECK(static_cast<double>(r.weight) <= (7 + eps) * static_cast<double>(opt.weight));
        std::vector<Link> opt_links;
        for (std::size_t i : opt.chosen)
            opt_links.push_back(stream_link(inst.links[i]));
        const auto sol = cap.sol_from_opt(opt_links);
        CHECK(is_k_connected(with_links(inst.base, sol), 3, ConnectivityMode::Vertex));
        CHECK(static_cast<double>(weight_of(sol)) <= (7 + 6 * eps) * static_cast<double>(opt.weight));
        CHECK(r.weight <= weight_of(sol));
        for (const auto &l : sol)
            CHECK(contains(r.stored, l));
    }
}
