#include "streamnd/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "streamnd/bench.hpp"
#include "streamnd/cap_one.hpp"
#include "streamnd/cap_two.hpp"
#include "streamnd/errors.hpp"
#include "streamnd/framework.hpp"
#include "streamnd/ft_spanner.hpp"
#include "streamnd/graph_io.hpp"
#include "streamnd/oracle.hpp"
#include "streamnd/report.hpp"
#include "streamnd/stream.hpp"

namespace streamnd {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Options {
    std::uint64_t seed = 1;
    bool pretty = false;
    std::optional<std::uint64_t> shuffle_seed;

    // spanner / verify-spanner
    std::string fault_mode = "vft";
    int f = 1;
    int t = 2;
    std::optional<double> eps;
    std::optional<std::string> test;
    std::string input, output, spanner_file;

    // sndp / oracle
    std::string conn_mode = "vc";
    std::string analysis = "fractional";
    std::string graph, req, reliability;
    std::optional<int> uniform_k;
    bool oracle = false;
    std::size_t guard = kDefaultSolverGuard;

    // cap1 / cap2 / oracle
    std::string base, links;
    double cap_eps = 0.5;

    // bench
    std::string suite;
    std::string seeds = "1..10";
    unsigned jobs = 1;
};

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<WeightedEdge> drain(EdgeStream stream) {
    std::vector<WeightedEdge> out;
    while (auto e = stream.next())
        out.push_back(*e);
    return out;
}

std::vector<int> non_reliable_of(const Graph &g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.reliable(v))
            out.push_back(v);
    return out;
}

json links_json(const std::vector<Link> &links) {
    json arr = json::array();
    for (const auto &l : links)
        arr.push_back({{"u", l.u}, {"v", l.v}, {"w", l.w}, {"index", l.index}});
    return arr;
}

FtConfig spanner_config(const Options &o, int n) {
    FtConfig cfg;
    cfg.mode = parse_fault_mode(o.fault_mode);
    cfg.f = o.f;
    cfg.t = o.t;
    if (o.t < 1)
        throw std::invalid_argument("t must be at least 1");
    cfg.eps = o.eps.value_or(1.0 / (2 * o.t - 1));
    cfg.test = resolve_test_kind(n, o.f, o.test ? std::optional(parse_test_kind(*o.test)) : std::nullopt, cfg.mode);
    cfg.seed = o.seed;
    cfg.validate();
    return cfg;
}

json ft_params(const FtConfig &cfg) {
    return {{"mode", to_string(cfg.mode)}, {"f", cfg.f},          {"t", cfg.t},
            {"eps", cfg.eps},              {"test", to_string(cfg.test)}, {"seed", cfg.seed}};
}

RunReport cmd_spanner(const Options &o) {
    const auto start = Clock::now();
    GraphStream gs = open_graph_stream(o.input, o.shuffle_seed);
    const FtConfig cfg = spanner_config(o, gs.vertex_count);
    FtSpanner builder(gs.vertex_count, cfg, BucketScheme(cfg.eps, std::max<Weight>(1, gs.edges.max_weight())));
    builder.consume(gs.edges);

    RunReport r;
    r.command = "spanner";
    r.params = ft_params(cfg);
    r.stored = builder.stored_edge_count();
    r.extra["buckets"] = builder.buckets().size();
    r.extra["rejected_edges"] = builder.rejected_count();
    if (!o.output.empty()) {
        write_graph(std::filesystem::path(o.output), builder.spanner());
        std::ofstream sidecar(o.output + ".json");
        if (!sidecar)
            throw std::runtime_error("cannot write '" + o.output + ".json'");
        sidecar << dump_json({{"stored_edges", r.stored}, {"buckets", builder.buckets().size()}, {"params", r.params}},
                             o.pretty)
                << '\n';
    }
    r.wall_time_ms = elapsed_ms(start);
    return r;
}

RunReport cmd_sndp(const Options &o) {
    const auto start = Clock::now();
    GraphStream gs = open_graph_stream(o.graph, o.shuffle_seed);
    Graph shape(gs.vertex_count);
    if (!o.reliability.empty())
        read_reliability(shape, o.reliability);
    const auto non_reliable = non_reliable_of(shape);
    const RequirementMap req = read_requirements(o.req);

    FrameworkConfig cfg;
    cfg.t = o.t;
    cfg.mode = parse_connectivity_mode(o.conn_mode);
    cfg.analysis = parse_analysis(o.analysis);
    if (o.test)
        cfg.test = parse_test_kind(*o.test);
    cfg.seed = o.seed;
    cfg.guard = o.guard;
    const FrameworkResult result = run_framework(gs.edges, gs.vertex_count, req, cfg, non_reliable);

    RunReport r;
    r.command = "sndp";
    r.params = {{"mode", to_string(cfg.mode)},
                {"t", cfg.t},
                {"analysis", to_string(cfg.analysis)},
                {"k", req.max_requirement()},
                {"f", result.spanner_config.f},
                {"eps", cfg.eps()},
                {"test", to_string(result.spanner_config.test)}};
    r.stored = result.spanner_edges.size();
    r.sol_weight = result.weight;
    r.factor_bound = cfg.factor_bound(req.max_requirement());
    json chosen = json::array();
    for (std::size_t i : result.solution.chosen) {
        const auto &e = result.spanner_edges[i];
        chosen.push_back({{"u", e.u}, {"v", e.v}, {"w", e.w}, {"index", e.index}});
    }
    r.extra["solution"] = chosen;
    r.extra["buckets"] = result.bucket_count;
    if (o.oracle) {
        Graph g = read_graph(o.graph);
        std::vector<WeightedEdge> edges;
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            edges.push_back({g.edge(i).u, g.edge(i).v, g.edge(i).w, i});
        r.opt_weight = brute_optimal(shape, edges, req, cfg.mode).weight;
    }
    r.wall_time_ms = elapsed_ms(start);
    return r;
}

template <class Cap>
RunReport cmd_cap(const Options &o, bool two) {
    const auto start = Clock::now();
    const Graph base = read_graph(o.base);
    EdgeStream stream = open_stream(o.links, o.shuffle_seed);
    const auto all_links = drain(open_stream(o.links));
    Cap cap(base, o.cap_eps, std::max<Weight>(1, stream.max_weight()));
    cap.consume(stream);
    const CapResult result = cap.finalize(o.guard);

    RunReport r;
    r.command = two ? "cap2" : "cap1";
    r.params = {{"eps", o.cap_eps}, {"buckets", cap.scheme().bucket_count()}};
    r.stored_key = "stored_links";
    r.stored = result.stored.size();
    r.sol_weight = result.weight;
    r.factor_bound = (two ? 7.0 : 3.0) + o.cap_eps;
    r.extra["space_bound"] = cap.space_bound();
    r.extra["solution"] = links_json(result.solution);
    if constexpr (std::is_same_v<Cap, CapTwo>)
        r.extra["spqr_nodes"] = cap.tree().node_count();
    if (o.oracle)
        r.opt_weight =
            brute_optimal(base, all_links, RequirementMap::uniform(base.vertex_count(), two ? 3 : 2),
                          ConnectivityMode::Vertex)
                .weight;
    r.wall_time_ms = elapsed_ms(start);
    return r;
}

json cmd_oracle(const Options &o) {
    Graph base = read_graph(o.base);
    if (!o.reliability.empty())
        read_reliability(base, o.reliability);
    const auto links = drain(open_stream(o.links));
    const ConnectivityMode mode = parse_connectivity_mode(o.conn_mode);
    RequirementMap req;
    if (o.uniform_k)
        req = mode == ConnectivityMode::Element ? RequirementMap::uniform_reliable(base, *o.uniform_k)
                                                : RequirementMap::uniform(base.vertex_count(), *o.uniform_k);
    else if (!o.req.empty())
        req = read_requirements(o.req);
    else
        throw std::invalid_argument("oracle needs --req or --k");
    const Solution s = brute_optimal(base, links, req, mode);
    json chosen = json::array();
    for (std::size_t i : s.chosen)
        chosen.push_back(links[i].index);
    return {{"command", "oracle"}, {"opt_weight", s.weight}, {"opt_links", chosen}};
}

json cmd_verify(const Options &o) {
    const Graph g = read_graph(o.graph);
    const Graph h = read_graph(o.spanner_file);
    FtConfig cfg = spanner_config(o, g.vertex_count());
    const bool valid = verify_ft_spanner(g, h, cfg);
    return {{"command", "verify-spanner"}, {"params", ft_params(cfg)}, {"valid", valid}};
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Streaming fault-tolerant spanners, network design and connectivity augmentation"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "Seed for randomized tests");
    app.add_flag("--json-pretty", o.pretty, "Indent JSON output");
    app.add_option("--shuffle-seed", o.shuffle_seed, "Feed the stream in a seeded random order");

    auto *spanner = app.add_subcommand("spanner", "Build a fault-tolerant spanner from a graph stream");
    spanner->add_option("--mode", o.fault_mode, "vft or eft")->check(CLI::IsMember({"vft", "eft"}));
    spanner->add_option("--f", o.f, "Fault budget");
    spanner->add_option("--t", o.t, "Stretch parameter (per-bucket hop bound 2t-1)");
    spanner->add_option("--eps", o.eps, "Bucketing epsilon (default 1/(2t-1))");
    spanner->add_option("--test", o.test, "exact, sampled or peeling")
        ->check(CLI::IsMember({"exact", "sampled", "peeling"}));
    spanner->add_option("-i,--input", o.input, "Graph file read as a stream")->required();
    spanner->add_option("-o,--output", o.output, "Spanner graph file (plus a .json sidecar)");

    auto *sndp = app.add_subcommand("sndp", "Survivable network design over a graph stream");
    sndp->add_option("--mode", o.conn_mode, "ec, vc or elc")->check(CLI::IsMember({"ec", "vc", "elc"}));
    sndp->add_option("--t", o.t, "Stretch parameter");
    sndp->add_option("--analysis", o.analysis, "integral or fractional")
        ->check(CLI::IsMember({"integral", "fractional"}));
    sndp->add_option("--graph", o.graph, "Graph file read as a stream")->required();
    sndp->add_option("--req", o.req, "Requirement file")->required();
    sndp->add_option("--reliability", o.reliability, "Non-reliable vertex list (elc)");
    sndp->add_option("--test", o.test, "exact, sampled or peeling")
        ->check(CLI::IsMember({"exact", "sampled", "peeling"}));
    sndp->add_option("--guard", o.guard, "Exact solver limit on positive-weight edges");
    sndp->add_flag("--oracle", o.oracle, "Also compute the optimum by brute force");

    auto *cap1 = app.add_subcommand("cap1", "Streaming 1-to-2 vertex-connectivity augmentation");
    auto *cap2 = app.add_subcommand("cap2", "Streaming 2-to-3 vertex-connectivity augmentation");
    for (auto *cap : {cap1, cap2}) {
        cap->add_option("--base", o.base, "Base graph file")->required();
        cap->add_option("--links", o.links, "Link stream file (u v w lines)")->required();
        cap->add_option("--eps", o.cap_eps, "Approximation slack");
        cap->add_option("--guard", o.guard, "Exact solver limit on positive-weight links");
        cap->add_flag("--oracle", o.oracle, "Also compute the optimum by brute force");
    }

    auto *oracle = app.add_subcommand("oracle", "Brute-force optimal augmentation");
    oracle->add_option("--base", o.base, "Base graph file")->required();
    oracle->add_option("--links", o.links, "Candidate link file")->required();
    oracle->add_option("--req", o.req, "Requirement file");
    oracle->add_option("--k", o.uniform_k, "Uniform requirement over all (reliable) pairs");
    oracle->add_option("--mode", o.conn_mode, "ec, vc or elc")->check(CLI::IsMember({"ec", "vc", "elc"}));
    oracle->add_option("--reliability", o.reliability, "Non-reliable vertex list (elc)");

    auto *verify = app.add_subcommand("verify-spanner", "Exhaustively check a fault-tolerant spanner");
    verify->add_option("--graph", o.graph, "Original graph file")->required();
    verify->add_option("--spanner", o.spanner_file, "Spanner graph file")->required();
    verify->add_option("--mode", o.fault_mode, "vft or eft")->check(CLI::IsMember({"vft", "eft"}));
    verify->add_option("--f", o.f, "Fault budget");
    verify->add_option("--t", o.t, "Stretch parameter");
    verify->add_option("--eps", o.eps, "Bucketing epsilon (default 1/(2t-1))");

    auto *bench = app.add_subcommand("bench", "Seeded end-to-end runs checked against the oracles");
    bench->add_option("--suite", o.suite, "spanner, sndp, cap1, cap2, spqr or mst")
        ->required()
        ->check(CLI::IsMember(bench_suites()));
    bench->add_option("--seeds", o.seeds, "Seed range a..b");
    bench->add_option("--jobs", o.jobs, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (*spanner)
            out << dump_json(cmd_spanner(o).to_json(), o.pretty) << '\n';
        else if (*sndp)
            out << dump_json(cmd_sndp(o).to_json(), o.pretty) << '\n';
        else if (*cap1)
            out << dump_json(cmd_cap<CapOne>(o, false).to_json(), o.pretty) << '\n';
        else if (*cap2)
            out << dump_json(cmd_cap<CapTwo>(o, true).to_json(), o.pretty) << '\n';
        else if (*oracle)
            out << dump_json(cmd_oracle(o), o.pretty) << '\n';
        else if (*verify)
            out << dump_json(cmd_verify(o), o.pretty) << '\n';
        else if (*bench) {
            const auto [first, last] = parse_seed_range(o.seeds);
            run_bench(o.suite, first, last, out, o.pretty, o.jobs);
        }
    } catch (const InfeasibleError &e) {
        out << dump_json({{"infeasible", true}, {"message", e.what()}}, o.pretty) << '\n';
        err << "infeasible: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError &e) {
        err << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const ContractViolation &e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace streamnd
