#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "streamnd/errors.hpp"
#include "streamnd/oracle.hpp"
#include "streamnd/random.hpp"
#include "streamnd/stream.hpp"
#include "streamnd/streaming_mst.hpp"

using namespace streamnd;

namespace {

std::filesystem::path write_temp(const std::string &name, const std::string &text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

std::vector<WeightedEdge> drain(EdgeStream &s) {
    std::vector<WeightedEdge> out;
    while (auto e = s.next())
        out.push_back(*e);
    return out;
}

} // namespace

TEST_CASE("bucket examples") {
    const BucketScheme unit(1.0, 100);
    CHECK(unit.bucket_of(0) == 0);
    CHECK(unit.bucket_of(1) == 1);
    CHECK(unit.bucket_of(2) == 2);
    CHECK(unit.bucket_of(3) == 2);
    CHECK(unit.bucket_of(5) == 3);
    CHECK(unit.bucket_of(8) == 4);
    CHECK_THROWS_AS(unit.bucket_of(-1), std::invalid_argument);
    CHECK_THROWS_AS(unit.bucket_of(101), std::invalid_argument);
    CHECK_THROWS_AS(BucketScheme(0.0, 5), std::invalid_argument);
}

TEST_CASE("buckets are monotone and tight") {
    for (double eps : {1.0, 0.5, 1.0 / 3, 0.25, 1.0 / 12}) {
        const BucketScheme scheme(eps, 5000);
        int previous = 0;
        for (Weight w = 1; w <= 5000; ++w) {
            const int i = scheme.bucket_of(w);
            CHECK(i >= previous);
            previous = i;
            // w lies in [(1+eps)^(i-1), (1+eps)^i)
            const long double lo = std::pow(1.0L + eps, i - 1);
            const long double hi = std::pow(1.0L + eps, i);
            CHECK(static_cast<long double>(w) >= lo * (1 - 1e-12L));
            CHECK(static_cast<long double>(w) < hi * (1 + 1e-12L));
        }
        CHECK(scheme.bucket_count() == scheme.bucket_of(5000) + 1);
    }
}

TEST_CASE("stream file order, shuffles and errors") {
    const auto path = write_temp("streamnd_stream.txt", "0 1 3\n1 2\n2 0 7\n");
    EdgeStream plain = open_stream(path);
    CHECK(plain.size() == 3);
    CHECK(plain.max_weight() == 7);
    const auto in_order = drain(plain);
    REQUIRE(in_order.size() == 3);
    CHECK(in_order[0].w == 3);
    CHECK(in_order[1].w == 1);
    CHECK(in_order[2].u == 2);
    CHECK(plain.exhausted());
    CHECK_FALSE(plain.next());

    EdgeStream a = open_stream(path, 11), b = open_stream(path, 11), c = open_stream(path, 12);
    const auto sa = drain(a), sb = drain(b), sc = drain(c);
    auto indices = [](const std::vector<WeightedEdge> &v) {
        std::vector<std::size_t> out;
        for (const auto &e : v)
            out.push_back(e.index);
        return out;
    };
    CHECK(indices(sa) == indices(sb));
    auto sorted = [&](const std::vector<WeightedEdge> &v) {
        auto idx = indices(v);
        std::sort(idx.begin(), idx.end());
        return idx;
    };
    CHECK(sorted(sa) == sorted(sc));
    CHECK(sorted(sa) == std::vector<std::size_t>{0, 1, 2});

    const auto bad = write_temp("streamnd_bad_stream.txt", "0 1 3\n0 1 2 9\n");
    try {
        open_stream(bad);
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("graph stream keeps header and order") {
    const auto path = write_temp("streamnd_graph_stream.txt", "4 3\n0 1 2\n1 2 2\n2 3 9\n");
    GraphStream gs = open_graph_stream(path);
    CHECK(gs.vertex_count == 4);
    CHECK(gs.edges.size() == 3);
    CHECK(gs.edges.max_weight() == 9);
}

TEST_CASE("streaming mst examples") {
    StreamingMst single(3);
    CHECK_FALSE(single.insert(0, 1, 5));

    std::vector<std::array<Weight, 3>> orders{{1, 2, 3}, {3, 2, 1}, {2, 3, 1}, {3, 1, 2}};
    for (const auto &order : orders) {
        StreamingMst mst(3);
        const std::pair<int, int> ends[] = {{0, 1}, {1, 2}, {2, 0}};
        for (int i = 0; i < 3; ++i)
            mst.insert(ends[i].first, ends[i].second, order[i]);
        CHECK(mst.size() == 2);
        CHECK(mst.total_weight() == 3);
    }
    CHECK_THROWS_AS(single.insert(0, 3, 1), std::invalid_argument);
}

TEST_CASE("streaming mst evicts the most recent heaviest edge on ties") {
    StreamingMst mst(3);
    mst.insert(0, 1, 4, 10);
    mst.insert(1, 2, 4, 11);
    const auto evicted = mst.insert(2, 0, 4, 12);
    REQUIRE(evicted);
    CHECK(evicted->tag == 12);

    StreamingMst lighter(3);
    lighter.insert(0, 1, 4, 10);
    lighter.insert(1, 2, 4, 11);
    const auto out = lighter.insert(2, 0, 1, 12);
    REQUIRE(out);
    CHECK(out->tag == 11);
}

TEST_CASE("streaming mst matches offline mst on every prefix") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Rng rng(seed);
        const int n = 2 + static_cast<int>(seed % 9);
        const auto stream = random_links(n, 4 * n, 0, 9, rng);
        StreamingMst mst(n);
        for (std::size_t i = 0; i < stream.size(); ++i) {
            mst.insert(stream[i].u, stream[i].v, stream[i].w, i);
            CHECK(mst.total_weight() == kruskal_weight(n, std::span(stream).first(i + 1)));
            CHECK(mst.size() <= static_cast<std::size_t>(n - 1));
        }
    }
}
