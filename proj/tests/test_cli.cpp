#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "streamnd/cli.hpp"
#include "streamnd/graph_io.hpp"
#include "streamnd/oracle.hpp"
#include "streamnd/random.hpp"

using namespace streamnd;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "streamnd");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp(const std::string &name, const std::string &text) {
    const auto path = std::filesystem::temp_directory_path() / ("streamnd_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::string graph_file(const std::string &name, const Graph &g) {
    std::ostringstream text;
    write_graph(text, g);
    return temp(name, text.str());
}

std::string links_file(const std::string &name, const std::vector<WeightedEdge> &links) {
    std::ostringstream text;
    for (const auto &l : links)
        text << l.u << ' ' << l.v << ' ' << l.w << '\n';
    return temp(name, text.str());
}

} // namespace

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"spanner", "--bogus"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"bench", "--suite", "nope"}).code == 1);
    CHECK(run({"bench", "--suite", "mst", "--seeds", "5..2"}).code == 1);
}

TEST_CASE("missing file names the path") {
    const auto r = run({"cap1", "--base", "/no/such/base.txt", "--links", "/no/such/links.txt"});
    CHECK(r.code == 1);
    CHECK(r.err.find("/no/such/base.txt") != std::string::npos);
}

TEST_CASE("parse errors report the line") {
    const auto bad = temp("bad.txt", "3 2\n0 1\n1 q\n");
    const auto r = run({"spanner", "-i", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find(":3") != std::string::npos);
}

TEST_CASE("spanner writes the graph and the sidecar, and verifies") {
    InstanceGenerator gen;
    gen.seed = 3;
    gen.n = 8;
    gen.density = 0.6;
    const Graph g = generate(gen).base;
    const auto in = graph_file("spanner_in.txt", g);
    const auto out = (std::filesystem::temp_directory_path() / "streamnd_cli_spanner_out.txt").string();
    const auto r = run({"spanner", "--mode", "vft", "--f", "1", "--t", "2", "-i", in, "-o", out});
    REQUIRE(r.code == 0);
    const auto report = json::parse(r.out);
    CHECK(report["command"] == "spanner");
    CHECK(report["stored_edges"].get<int>() >= 0);
    CHECK(report.contains("wall_time_ms"));
    std::ifstream sidecar_in(out + ".json");
    const auto sidecar = json::parse(sidecar_in);
    CHECK(sidecar["stored_edges"] == report["stored_edges"]);
    CHECK(sidecar.contains("buckets"));
    CHECK(sidecar["params"]["f"] == 1);
    CHECK(read_graph(out).edge_count() == report["stored_edges"].get<std::size_t>());

    const auto v = run({"verify-spanner", "--graph", in, "--spanner", out, "--mode", "vft", "--f", "1", "--t", "2"});
    REQUIRE(v.code == 0);
    CHECK(json::parse(v.out)["valid"] == true);
}

TEST_CASE("sndp with the oracle stays within 8t") {
    InstanceGenerator gen;
    gen.seed = 11;
    gen.n = 8;
    gen.density = 0.4;
    const Graph g = generate(gen).base;
    Rng rng(4);
    const auto req = random_requirements(g, 2, 0.5, ConnectivityMode::Edge, rng);
    std::ostringstream req_text;
    for (const auto &[pair, r] : req)
        req_text << pair.first << ' ' << pair.second << ' ' << r << '\n';
    const auto r = run({"sndp", "--mode", "ec", "--t", "2", "--graph", graph_file("sndp_g.txt", g), "--req",
                        temp("sndp_r.txt", req_text.str()), "--oracle"});
    REQUIRE(r.code == 0);
    const auto report = json::parse(r.out);
    CHECK(report["ratio"].get<double>() <= 16.0);
    CHECK(report["ratio"].get<double>() >= 1.0);
    CHECK(report["factor_bound"].get<double>() <= 16.0);
    CHECK(report.contains("opt_weight"));

    const auto without = run({"sndp", "--mode", "ec", "--t", "2", "--graph", graph_file("sndp_g.txt", g), "--req",
                              temp("sndp_r.txt", req_text.str())});
    REQUIRE(without.code == 0);
    CHECK_FALSE(json::parse(without.out).contains("ratio"));
}

TEST_CASE("cap commands, oracle and exit codes") {
    Graph c4(4);
    for (int i = 0; i < 4; ++i)
        c4.add_edge(i, (i + 1) % 4);
    const auto base = graph_file("c4.txt", c4);
    const auto diagonals = links_file("diag.txt", {{0, 2, 1, 0}, {1, 3, 1, 1}});

    const auto cap2 = run({"--json-pretty", "cap2", "--base", base, "--links", diagonals, "--oracle"});
    REQUIRE(cap2.code == 0);
    CHECK(cap2.out.find('\n') < cap2.out.size() - 1);
    const auto report = json::parse(cap2.out);
    CHECK(report["sol_weight"] == 2);
    CHECK(report["opt_weight"] == 2);
    CHECK(report["ratio"] == 1.0);
    CHECK(report.contains("spqr_nodes"));
    CHECK(report.contains("stored_links"));

    const auto oracle = run({"oracle", "--base", base, "--links", diagonals, "--k", "3", "--mode", "vc"});
    REQUIRE(oracle.code == 0);
    const auto o = json::parse(oracle.out);
    CHECK(o["opt_weight"] == 2);
    CHECK(o["opt_links"] == json::array({0, 1}));

    const auto one = links_file("one.txt", {{0, 2, 1, 0}});
    const auto infeasible = run({"cap2", "--base", base, "--links", one});
    CHECK(infeasible.code == 2);
    CHECK(json::parse(infeasible.out)["infeasible"] == true);

    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    const auto cap1 = run({"cap1", "--base", graph_file("path.txt", path), "--links",
                           links_file("path_links.txt", {{0, 3, 2, 0}, {0, 2, 1, 1}, {1, 3, 1, 2}}), "--oracle"});
    REQUIRE(cap1.code == 0);
    const auto c1 = json::parse(cap1.out);
    CHECK(c1["ratio"].get<double>() <= 3.5);
    const auto guarded = run({"cap1", "--guard", "0", "--base", graph_file("path.txt", path), "--links",
                              links_file("path_links.txt", {{0, 3, 2, 0}})});
    CHECK(guarded.code == 3);
}

TEST_CASE("bench prints one line per seed plus a summary, reproducibly") {
    const auto a = run({"bench", "--suite", "cap1", "--seeds", "1..5"});
    const auto b = run({"bench", "--suite", "cap1", "--seeds", "1..5", "--jobs", "3"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    std::istringstream lines(a.out);
    std::string line;
    std::vector<json> reports;
    while (std::getline(lines, line))
        reports.push_back(json::parse(line));
    REQUIRE(reports.size() == 6);
    CHECK(reports.back()["summary"] == true);
    CHECK(reports.back().contains("max_ratio"));
    for (std::size_t i = 0; i + 1 < reports.size(); ++i) {
        CHECK(reports[i]["seed"] == i + 1);
        CHECK(reports[i]["stored_links"].get<long>() >= 0);
    }
}
