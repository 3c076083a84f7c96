// Acceptance suite: one PASS/FAIL line per criterion, each with its own
// tolerance and wall-clock limit. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "streamnd/bench.hpp"
#include "streamnd/cap_one.hpp"
#include "streamnd/cap_two.hpp"
#include "streamnd/connectivity.hpp"
#include "streamnd/errors.hpp"
#include "streamnd/framework.hpp"
#include "streamnd/ft_spanner.hpp"
#include "streamnd/oracle.hpp"
#include "streamnd/report.hpp"
#include "streamnd/random.hpp"
#include "streamnd/spqr.hpp"
#include "streamnd/streaming_mst.hpp"

using namespace streamnd;

namespace {

constexpr double kTol = 1e-9;

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    std::string name;
    double limit_s; // 0: no limit
    std::function<Outcome()> run;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

std::vector<WeightedEdge> edges_of(const Graph &g) {
    std::vector<WeightedEdge> out;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        out.push_back({g.edge(i).u, g.edge(i).v, g.edge(i).w, i});
    return out;
}

// Criterion-2 runs are shared with the path-extraction criterion.
struct SpannerRun {
    FtConfig cfg;
    FtSpanner builder;
};

std::vector<SpannerRun> &spanner_runs() {
    static std::vector<SpannerRun> runs;
    return runs;
}

Outcome menger_equivalence() {
    std::size_t pairs = 0, mismatches = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        InstanceGenerator gen;
        gen.seed = seed;
        gen.n = 2 + static_cast<int>(seed % 7);
        gen.density = 0.3 + 0.1 * static_cast<double>(seed % 5);
        Graph g = generate(gen).base;
        Rng rng(mix_seed(seed, 1));
        for (int v = 0; v < g.vertex_count(); ++v)
            g.set_reliable(v, rng.chance(0.6));
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v)
                for (auto mode : {ConnectivityMode::Edge, ConnectivityMode::Vertex, ConnectivityMode::Element}) {
                    ++pairs;
                    if (pair_connectivity(g, u, v, mode) != brute_pair_connectivity(g, u, v, mode))
                        ++mismatches;
                }
    }
    return {mismatches == 0, "200 graphs, " + std::to_string(pairs) + " pair/mode checks, " +
                                 std::to_string(mismatches) + " mismatches"};
}

Outcome spanner_correctness() {
    auto &runs = spanner_runs();
    runs.clear();
    std::size_t failures = 0, kept = 0, total = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        InstanceGenerator gen;
        gen.seed = seed;
        gen.n = 5 + static_cast<int>(seed % 5);
        gen.density = 0.6 + 0.1 * static_cast<double>(seed % 4);
        gen.max_weight = 1 + static_cast<Weight>(seed % 3);
        const Graph g = generate(gen).base;
        FtConfig cfg;
        cfg.mode = seed % 2 ? FaultMode::Vertex : FaultMode::Edge;
        cfg.f = static_cast<int>(seed / 2 % 3);
        cfg.t = 1 + static_cast<int>(seed / 6 % 2);
        cfg.eps = 1.0 / (2 * cfg.t - 1);
        FtSpanner builder(g.vertex_count(), cfg, BucketScheme(cfg.eps, gen.max_weight));
        EdgeStream stream = stream_of(g, seed);
        builder.consume(stream);
        std::vector<std::size_t> ids;
        for (const auto &e : builder.kept_edges())
            ids.push_back(e.index);
        if (!verify_ft_spanner(g, ids, cfg))
            ++failures;
        kept += ids.size();
        total += g.edge_count();
        runs.push_back({cfg, std::move(builder)});
    }
    return {failures == 0, "100 graphs, " + std::to_string(failures) + " verification failures, kept " +
                               std::to_string(kept) + "/" + std::to_string(total) + " edges"};
}

Outcome disjoint_paths() {
    std::size_t checked = 0, failures = 0;
    for (const auto &run : spanner_runs()) {
        if (run.cfg.t != 2)
            continue;
        // vertex faults: f/(2t-2)+1 internally disjoint paths; edge faults:
        // f/(2t-1)+1 edge-disjoint paths (each path can absorb 2t-1 faults)
        const int count = certified_path_count(run.cfg);
        for (const auto &[e, bucket] : run.builder.rejected_edges()) {
            ++checked;
            try {
                const auto paths = extract_disjoint_paths(run.builder.buckets().at(bucket), e.u, e.v, count,
                                                          run.cfg.threshold(), run.cfg.mode);
                for (const auto &p : paths)
                    if (static_cast<int>(p.size()) - 1 > run.cfg.threshold())
                        ++failures;
            } catch (const ContractViolation &) {
                ++failures;
            }
        }
    }
    return {failures == 0 && checked > 0,
            std::to_string(checked) + " rejected edges (t = 2 runs), " + std::to_string(failures) + " failures"};
}

Outcome framework_ratios() {
    double worst[3] = {0, 0, 0};
    std::size_t violations = 0, infeasible = 0, runs = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        InstanceGenerator gen;
        gen.n = 4 + static_cast<int>(seed % 7);
        gen.density = gen.n >= 9 ? 0.35 : 0.45;
        gen.max_weight = 10;
        Graph g;
        for (std::uint64_t attempt = 0;; ++attempt) {
            gen.seed = mix_seed(seed, attempt);
            g = generate(gen).base;
            if (g.edge_count() <= 20)
                break;
        }
        Rng rng(mix_seed(seed, 4));
        std::vector<int> non_reliable;
        Graph marked = g;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rng.chance(0.25)) {
                marked.set_reliable(v, false);
                non_reliable.push_back(v);
            }
        const int t = 1 + static_cast<int>(seed % 2);
        const struct {
            ConnectivityMode mode;
            Analysis analysis;
        } configs[] = {{ConnectivityMode::Vertex, Analysis::Integral},
                       {ConnectivityMode::Edge, Analysis::Fractional},
                       {ConnectivityMode::Element, Analysis::Fractional}};
        for (int c = 0; c < 3; ++c) {
            const auto mode = configs[c].mode;
            const Graph &host = mode == ConnectivityMode::Element ? marked : g;
            const RequirementMap req = random_requirements(host, 2, 0.4, mode, rng);
            FrameworkConfig cfg;
            cfg.t = t;
            cfg.mode = mode;
            cfg.analysis = configs[c].analysis;
            EdgeStream stream = stream_of(g, seed);
            const std::span<const int> nr = mode == ConnectivityMode::Element ? std::span<const int>(non_reliable)
                                                                               : std::span<const int>();
            FrameworkResult result;
            try {
                result = run_framework(stream, g.vertex_count(), req, cfg, nr);
            } catch (const InfeasibleError &) {
                ++infeasible; // every generated instance is feasible on g
                continue;
            }
            Graph empty(g.vertex_count());
            for (int v : nr)
                empty.set_reliable(v, false);
            const Solution opt = brute_optimal(empty, edges_of(g), req, mode);
            const double ratio = ratio_of(result.weight, opt.weight);
            const int k = std::max(1, req.max_requirement());
            const double ceiling = mode == ConnectivityMode::Vertex ? 2.0 * t * k : 8.0 * t;
            const bool feasible = check_feasible(result.spanner.with_edges(result.solution.chosen), req, mode);
            if (!feasible || ratio > ceiling + kTol)
                ++violations;
            worst[c] = std::max(worst[c], ratio);
            ++runs;
        }
    }
    return {violations == 0 && infeasible == 0,
            std::to_string(runs) + " runs; max ratio vc/integral " + fmt(worst[0]) + " (<= 2tk), ec/fractional " +
                fmt(worst[1]) + " (<= 8t), elc " + fmt(worst[2]) + " (<= 8t); " + std::to_string(violations) +
                " violations, " + std::to_string(infeasible) + " spurious infeasible"};
}

Outcome sparsification() {
    InstanceGenerator gen;
    gen.seed = 64;
    gen.n = 64;
    gen.density = 0.5;
    gen.max_weight = 1;
    const Graph g = generate(gen).base;
    std::vector<std::size_t> stored;
    for (int f = 0; f <= 2; ++f) {
        FtConfig cfg;
        cfg.f = f;
        cfg.t = 2;
        cfg.eps = 1.0 / 3;
        FtSpanner builder(g.vertex_count(), cfg, BucketScheme(cfg.eps, 1));
        EdgeStream stream = stream_of(g);
        builder.consume(stream);
        stored.push_back(builder.stored_edge_count());
    }
    const bool ok = stored[2] < g.edge_count() && stored[0] <= stored[1] && stored[1] <= stored[2];
    return {ok, "|E| = " + std::to_string(g.edge_count()) + ", stored for f = 0,1,2: " + std::to_string(stored[0]) +
                    ", " + std::to_string(stored[1]) + ", " + std::to_string(stored[2])};
}

Instance feasible_instance(std::uint64_t seed, Family family, int n, int k) {
    InstanceGenerator gen;
    gen.family = family;
    gen.n = n;
    gen.density = 0.25;
    gen.max_weight = 10;
    gen.link_count = std::min(20, 2 * n + 2 + static_cast<int>(seed % 4));
    for (std::uint64_t attempt = 0;; ++attempt) {
        gen.seed = mix_seed(seed, attempt);
        Instance inst = generate(gen);
        Graph all = inst.base;
        for (const auto &l : inst.links)
            all.add_edge(l.u, l.v, l.w);
        if (is_k_connected(all, k, ConnectivityMode::Vertex))
            return inst;
    }
}

template <class Cap>
Outcome cap_criterion(bool two) {
    const double eps = 0.5;
    const int k = two ? 3 : 2;
    const double ceiling = two ? 7 + eps : 3 + eps;
    const double sol_ceiling = two ? 7 + 6 * eps : 3 + 2 * eps;
    double worst = 0, worst_sol = 0;
    std::size_t violations = 0, stored = 0, offered = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const int n = two ? 4 + static_cast<int>(seed % 6) : 3 + static_cast<int>(seed % 8);
        const Instance inst = feasible_instance(seed, two ? Family::TwoConnected : Family::Tree, n, k);
        Cap cap(inst.base, eps, 10);
        EdgeStream stream(inst.links);
        cap.consume(stream);
        const CapResult result = cap.finalize();
        const Solution opt =
            brute_optimal(inst.base, inst.links, RequirementMap::uniform(n, k), ConnectivityMode::Vertex);
        std::vector<Link> opt_links;
        for (std::size_t i : opt.chosen)
            opt_links.push_back(stream_link(inst.links[i]));
        const auto sol = cap.sol_from_opt(opt_links);

        bool ok = is_k_connected(with_links(inst.base, result.solution), k, ConnectivityMode::Vertex);
        ok = ok && is_k_connected(with_links(inst.base, sol), k, ConnectivityMode::Vertex);
        const double ratio = ratio_of(result.weight, opt.weight);
        const double sol_ratio = ratio_of(weight_of(sol), opt.weight);
        ok = ok && ratio <= ceiling + kTol && sol_ratio <= sol_ceiling + kTol;
        if constexpr (std::is_same_v<Cap, CapTwo>) {
            const SpaceAccount a = cap.space_account();
            const std::size_t m = cap.minimal_base().edge_count();
            ok = ok && a.stored == result.stored.size() && a.chain_holds() &&
                 a.skeleton_edges <= 3 * m - 6 && m <= static_cast<std::size_t>(2 * n - 2);
        } else {
            const std::size_t bound =
                static_cast<std::size_t>(n) * static_cast<std::size_t>(cap.scheme().bucket_count()) + 2 * (n - 1);
            ok = ok && result.stored.size() <= bound && bound == cap.space_bound();
        }
        violations += ok ? 0 : 1;
        worst = std::max(worst, ratio);
        worst_sol = std::max(worst_sol, sol_ratio);
        stored += static_cast<std::size_t>(
            std::count_if(result.stored.begin(), result.stored.end(), [](const Link &l) { return !l.from_base; }));
        offered += inst.links.size();
    }
    return {violations == 0, "100 instances; max ratio " + fmt(worst) + " (<= " + fmt(ceiling) +
                                 "), max SOL-from-OPT ratio " + fmt(worst_sol) + " (<= " + fmt(sol_ceiling) +
                                 "); stored " + std::to_string(stored) + " of " + std::to_string(offered) +
                                 " streamed links; " + std::to_string(violations) + " violations"};
}

Outcome spqr_criterion() {
    std::size_t violations = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        InstanceGenerator gen;
        gen.seed = seed;
        gen.family = Family::TwoConnected;
        gen.n = 4 + static_cast<int>(seed % 6);
        gen.density = 0.1 + 0.1 * static_cast<double>(seed % 4);
        const Graph g = generate(gen).base;
        const SpqrTree tree = build_spqr(g);
        bool ok = enumerate_two_cuts(tree) == brute_two_cuts(g);
        ok = ok && tree.total_skeleton_edges() <= 3 * g.edge_count() - 6;
        std::vector<std::size_t> ids(g.edge_count());
        std::iota(ids.begin(), ids.end(), 0);
        ok = ok && tree.reassemble() == ids;
        try {
            tree.check_invariants();
        } catch (const ContractViolation &) {
            ok = false;
        }
        violations += ok ? 0 : 1;
    }
    // the example graph with hubs 1, 2 (shifted to 0, 1)
    const std::pair<int, int> labelled[] = {{1, 3}, {3, 2}, {1, 4},  {4, 2},  {1, 5}, {6, 2},  {5, 7},
                                            {5, 8}, {6, 9}, {6, 10}, {7, 8}, {9, 10}, {7, 9}, {8, 10}};
    Graph example(10);
    for (auto [a, b] : labelled)
        example.add_edge(a - 1, b - 1);
    const SpqrTree example_tree = build_spqr(example);
    std::string kinds;
    for (const auto &node : example_tree.nodes())
        kinds += to_char(node.kind);
    std::sort(kinds.begin(), kinds.end());
    return {violations == 0 && kinds == "PRSSS", "100 graphs, " + std::to_string(violations) +
                                                     " violations; example graph node kinds " + kinds +
                                                     " (expected PRSSS)"};
}

Outcome mst_prefixes() {
    std::size_t prefixes = 0, mismatches = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Rng rng(mix_seed(seed, 9));
        const int n = 2 + static_cast<int>(seed % 9);
        const auto stream = random_links(n, 5 * n, 0, 12, rng);
        StreamingMst mst(n);
        for (std::size_t i = 0; i < stream.size(); ++i) {
            mst.insert(stream[i].u, stream[i].v, stream[i].w, i);
            ++prefixes;
            if (mst.total_weight() != kruskal_weight(n, std::span(stream).first(i + 1)))
                ++mismatches;
        }
    }
    return {mismatches == 0,
            "50 streams, " + std::to_string(prefixes) + " prefixes, " + std::to_string(mismatches) + " mismatches"};
}

Outcome determinism() {
    std::size_t differing = 0;
    std::string suites;
    for (const auto &suite : bench_suites()) {
        std::ostringstream first, second;
        run_bench(suite, 1, 20, first, false, 1);
        run_bench(suite, 1, 20, second, false, 4);
        if (first.str() != second.str())
            ++differing;
        suites += (suites.empty() ? "" : ",") + suite;
    }
    return {differing == 0, "suites " + suites + " over seeds 1..20, sequential vs 4 threads; " +
                                std::to_string(differing) + " differ"};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"menger-oracle-equivalence", 30, menger_equivalence},
        {"ft-spanner-stretch", 300, spanner_correctness},
        {"rejection-disjoint-paths", 0, disjoint_paths},
        {"framework-ratios", 600, framework_ratios},
        {"sparsification", 60, sparsification},
        {"cap1-augmentation", 300, [] { return cap_criterion<CapOne>(false); }},
        {"spqr-structure", 300, spqr_criterion},
        {"cap2-augmentation", 900, [] { return cap_criterion<CapTwo>(true); }},
        {"streaming-mst-prefixes", 30, mst_prefixes},
        {"bench-determinism", 0, determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto &c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_s <= 0 || secs < c.limit_s;
        const bool pass = outcome.ok && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s [%zu/%zu] %s: %s; %.2fs%s%s\n", pass ? "PASS" : "FAIL", i + 1, criteria.size(),
                    c.name.c_str(), outcome.detail.c_str(), secs,
                    c.limit_s > 0 ? (" (limit " + fmt(c.limit_s) + "s)").c_str() : "",
                    in_time ? "" : " TIME LIMIT EXCEEDED");
        std::fflush(stdout);
    }
    return failures;
}
