#include "streamnd/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>

#include "streamnd/cap_one.hpp"
#include "streamnd/cap_two.hpp"
#include "streamnd/connectivity.hpp"
#include "streamnd/errors.hpp"
#include "streamnd/framework.hpp"
#include "streamnd/ft_spanner.hpp"
#include "streamnd/oracle.hpp"
#include "streamnd/random.hpp"
#include "streamnd/report.hpp"
#include "streamnd/spqr.hpp"
#include "streamnd/streaming_mst.hpp"

namespace streamnd {

namespace {

using nlohmann::json;

std::vector<WeightedEdge> edges_of(const Graph &g) {
    std::vector<WeightedEdge> out;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        out.push_back({g.edge(i).u, g.edge(i).v, g.edge(i).w, i});
    return out;
}

std::vector<Link> links_of(std::span<const WeightedEdge> links, const std::vector<std::size_t> &chosen) {
    std::vector<Link> out;
    for (std::size_t i : chosen)
        out.push_back(stream_link(links[i]));
    return out;
}

void put_ratio(json &j, Weight sol, Weight opt) {
    const double r = ratio_of(sol, opt);
    if (std::isinf(r))
        j["ratio"] = "inf";
    else
        j["ratio"] = r;
}

json spanner_case(std::uint64_t seed) {
    InstanceGenerator gen;
    gen.seed = seed;
    gen.family = Family::Gnp;
    gen.n = 6 + static_cast<int>(seed % 4);
    gen.density = 0.5;
    gen.max_weight = 8;
    const Graph g = generate(gen).base;

    FtConfig cfg;
    cfg.mode = seed % 2 ? FaultMode::Edge : FaultMode::Vertex;
    cfg.t = 1 + static_cast<int>(seed / 2 % 2);
    cfg.f = static_cast<int>(seed % 3);
    cfg.eps = 1.0 / (2 * cfg.t - 1);
    cfg.test = TestKind::Exact;
    FtSpanner builder(g.vertex_count(), cfg, BucketScheme(cfg.eps, std::max<Weight>(1, gen.max_weight)));
    EdgeStream stream = stream_of(g);
    builder.consume(stream);

    std::vector<std::size_t> kept;
    for (const auto &e : builder.kept_edges())
        kept.push_back(e.index);
    const bool valid = verify_ft_spanner(g, kept, cfg);
    int path_failures = 0;
    for (const auto &[e, bucket] : builder.rejected_edges()) {
        try {
            extract_disjoint_paths(builder.buckets().at(bucket), e.u, e.v, certified_path_count(cfg),
                                   cfg.threshold(), cfg.mode);
        } catch (const ContractViolation &) {
            ++path_failures;
        }
    }
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["params"] = {{"mode", to_string(cfg.mode)}, {"f", cfg.f}, {"t", cfg.t}, {"eps", cfg.eps}};
    j["stored_edges"] = builder.stored_edge_count();
    j["buckets"] = builder.buckets().size();
    j["valid"] = valid;
    j["path_failures"] = path_failures;
    j["violations"] = (valid ? 0 : 1) + path_failures;
    return j;
}

json sndp_case(std::uint64_t seed) {
    static constexpr ConnectivityMode kModes[] = {ConnectivityMode::Vertex, ConnectivityMode::Edge,
                                                  ConnectivityMode::Element};
    const ConnectivityMode mode = kModes[seed % 3];
    Rng rng(mix_seed(seed, 0x5d0f));
    InstanceGenerator gen;
    gen.family = Family::Gnp;
    gen.n = 6 + static_cast<int>(seed % 5);
    gen.density = gen.n >= 9 ? 0.35 : 0.45;
    gen.max_weight = 10;
    Graph g;
    for (std::uint64_t attempt = 0;; ++attempt) {
        gen.seed = mix_seed(seed, attempt);
        g = generate(gen).base;
        if (g.edge_count() <= 20)
            break;
    }
    std::vector<int> non_reliable;
    if (mode == ConnectivityMode::Element)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rng.chance(0.25)) {
                g.set_reliable(v, false);
                non_reliable.push_back(v);
            }
    const RequirementMap req = random_requirements(g, 2, 0.4, mode, rng);

    FrameworkConfig cfg;
    cfg.t = 2;
    cfg.mode = mode;
    cfg.analysis = mode == ConnectivityMode::Vertex ? Analysis::Integral : Analysis::Fractional;
    EdgeStream stream = stream_of(g);
    const FrameworkResult result = run_framework(stream, g.vertex_count(), req, cfg, non_reliable);

    Graph empty(g.vertex_count());
    for (int v : non_reliable)
        empty.set_reliable(v, false);
    const auto edges = edges_of(g);
    const Solution opt = brute_optimal(empty, edges, req, mode);

    const double bound = cfg.factor_bound(req.max_requirement());
    const double ratio = ratio_of(result.weight, opt.weight);
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["params"] = {{"mode", to_string(mode)},
                   {"t", cfg.t},
                   {"analysis", to_string(cfg.analysis)},
                   {"k", req.max_requirement()},
                   {"f", result.spanner_config.f}};
    j["stored_edges"] = result.spanner_edges.size();
    j["sol_weight"] = result.weight;
    j["opt_weight"] = opt.weight;
    put_ratio(j, result.weight, opt.weight);
    j["factor_bound"] = bound;
    const bool feasible = check_feasible(result.spanner.with_edges(result.solution.chosen), req, mode);
    j["feasible"] = feasible;
    j["violations"] = (feasible ? 0 : 1) + (ratio <= bound + 1e-9 ? 0 : 1);
    return j;
}

template <class Cap>
json cap_case(std::uint64_t seed, bool two) {
    const double eps = 0.5;
    const int k = two ? 3 : 2;
    InstanceGenerator gen;
    gen.family = two ? Family::TwoConnected : Family::Tree;
    gen.n = two ? 4 + static_cast<int>(seed % 6) : 4 + static_cast<int>(seed % 7);
    gen.density = 0.25;
    gen.max_weight = 10;
    gen.link_count = std::min(20, 2 * gen.n + 2 + static_cast<int>(seed % 4));
    Instance inst;
    for (std::uint64_t attempt = 0;; ++attempt) {
        gen.seed = mix_seed(seed, attempt);
        inst = generate(gen);
        Graph all = inst.base;
        for (const auto &l : inst.links)
            all.add_edge(l.u, l.v, l.w);
        if (is_k_connected(all, k, ConnectivityMode::Vertex))
            break;
    }
    Cap cap(inst.base, eps, gen.max_weight);
    EdgeStream stream(inst.links);
    cap.consume(stream);
    const CapResult result = cap.finalize();
    const Solution opt = brute_optimal(inst.base, inst.links, RequirementMap::uniform(gen.n, k),
                                       ConnectivityMode::Vertex);
    const auto from_opt = cap.sol_from_opt(links_of(inst.links, opt.chosen));
    const Weight from_opt_weight = weight_of(from_opt);

    const double bound = two ? 7 + eps : 3 + eps;
    const double sol_bound = two ? 7 + 6 * eps : 3 + 2 * eps;
    const bool feasible = is_k_connected(with_links(inst.base, result.solution), k, ConnectivityMode::Vertex);
    const bool from_opt_feasible = is_k_connected(with_links(inst.base, from_opt), k, ConnectivityMode::Vertex);
    const bool space_ok = result.stored.size() <= cap.space_bound();
    json j;
    j["n"] = gen.n;
    j["base_edges"] = inst.base.edge_count();
    j["links"] = inst.links.size();
    j["stored_links"] = result.stored.size();
    j["space_bound"] = cap.space_bound();
    j["sol_weight"] = result.weight;
    j["opt_weight"] = opt.weight;
    put_ratio(j, result.weight, opt.weight);
    j["factor_bound"] = bound;
    j["sol_from_opt_weight"] = from_opt_weight;
    j["feasible"] = feasible;
    j["sol_from_opt_feasible"] = from_opt_feasible;
    int violations = (feasible ? 0 : 1) + (from_opt_feasible ? 0 : 1) + (space_ok ? 0 : 1);
    violations += ratio_of(result.weight, opt.weight) <= bound + 1e-9 ? 0 : 1;
    violations += static_cast<double>(from_opt_weight) <= sol_bound * static_cast<double>(opt.weight) + 1e-9 ? 0 : 1;
    violations += result.weight <= from_opt_weight ? 0 : 1;
    if constexpr (std::is_same_v<Cap, CapTwo>) {
        const SpaceAccount account = cap.space_account();
        j["spqr_nodes"] = cap.tree().node_count();
        j["space_chain"] = account.chain_holds();
        violations += account.chain_holds() ? 0 : 1;
    }
    j["violations"] = violations;
    return j;
}

json spqr_case(std::uint64_t seed) {
    InstanceGenerator gen;
    gen.seed = seed;
    gen.family = Family::TwoConnected;
    gen.n = 4 + static_cast<int>(seed % 6);
    gen.density = 0.2 + 0.1 * static_cast<double>(seed % 4);
    const Graph g = generate(gen).base;
    const SpqrTree tree = build_spqr(g);
    int violations = 0;
    try {
        tree.check_invariants();
    } catch (const ContractViolation &) {
        ++violations;
    }
    const bool cuts_match = enumerate_two_cuts(tree) == brute_two_cuts(g);
    violations += cuts_match ? 0 : 1;
    std::string kinds;
    for (const auto &node : tree.nodes())
        kinds += to_char(node.kind);
    std::sort(kinds.begin(), kinds.end());
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["spqr_nodes"] = tree.node_count();
    j["kinds"] = kinds;
    j["skeleton_edges"] = tree.total_skeleton_edges();
    j["cuts"] = enumerate_two_cuts(tree).size();
    j["cuts_match"] = cuts_match;
    j["violations"] = violations;
    return j;
}

json mst_case(std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x357));
    const int n = 3 + static_cast<int>(seed % 8);
    const auto stream = random_links(n, 3 * n, 1, 6, rng);
    StreamingMst mst(n);
    int mismatches = 0;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        mst.insert(stream[i].u, stream[i].v, stream[i].w, i);
        if (mst.total_weight() != kruskal_weight(n, std::span(stream).first(i + 1)))
            ++mismatches;
    }
    json j;
    j["n"] = n;
    j["stream"] = stream.size();
    j["stored_edges"] = mst.size();
    j["mst_weight"] = mst.total_weight();
    j["prefix_mismatches"] = mismatches;
    j["violations"] = mismatches;
    return j;
}

} // namespace

const std::vector<std::string> &bench_suites() {
    static const std::vector<std::string> suites{"spanner", "sndp", "cap1", "cap2", "spqr", "mst"};
    return suites;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(std::string_view text) {
    auto number = [&](std::string_view part) {
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
            throw std::invalid_argument("bad seed range '" + std::string(text) + "'");
        return value;
    };
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto s = number(text);
        return {s, s};
    }
    const auto first = number(text.substr(0, dots));
    const auto last = number(text.substr(dots + 2));
    if (last < first)
        throw std::invalid_argument("empty seed range '" + std::string(text) + "'");
    return {first, last};
}

json bench_case(std::string_view suite, std::uint64_t seed) {
    json j;
    if (suite == "spanner")
        j = spanner_case(seed);
    else if (suite == "sndp")
        j = sndp_case(seed);
    else if (suite == "cap1")
        j = cap_case<CapOne>(seed, false);
    else if (suite == "cap2")
        j = cap_case<CapTwo>(seed, true);
    else if (suite == "spqr")
        j = spqr_case(seed);
    else if (suite == "mst")
        j = mst_case(seed);
    else
        throw std::invalid_argument("unknown bench suite '" + std::string(suite) + "'");
    j["suite"] = suite;
    j["seed"] = seed;
    return j;
}

BenchSummary run_bench(std::string_view suite, std::uint64_t first, std::uint64_t last, std::ostream &out,
                       bool pretty, unsigned jobs) {
    if (std::find(bench_suites().begin(), bench_suites().end(), suite) == bench_suites().end())
        throw std::invalid_argument("unknown bench suite '" + std::string(suite) + "'");
    const std::uint64_t count = last - first + 1;
    std::vector<json> reports(count);
    jobs = std::max(1u, jobs);
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w)
        workers.push_back(std::async(std::launch::async, [&, w] {
            for (std::uint64_t i = w; i < count; i += jobs)
                reports[i] = bench_case(suite, first + i);
        }));
    for (auto &worker : workers)
        worker.get();

    BenchSummary summary;
    for (const auto &r : reports) {
        out << dump_json(r, pretty) << '\n';
        ++summary.runs;
        summary.violations += r.at("violations").get<std::size_t>();
        if (r.contains("ratio")) {
            const double ratio = r["ratio"].is_string() ? INFINITY : r["ratio"].get<double>();
            summary.max_ratio = std::max(summary.max_ratio.value_or(ratio), ratio);
        }
    }
    json s;
    s["suite"] = suite;
    s["summary"] = true;
    s["runs"] = summary.runs;
    s["violations"] = summary.violations;
    if (summary.max_ratio)
        s["max_ratio"] = std::isinf(*summary.max_ratio) ? json("inf") : json(*summary.max_ratio);
    out << dump_json(s, pretty) << '\n';
    return summary;
}

} // namespace streamnd
