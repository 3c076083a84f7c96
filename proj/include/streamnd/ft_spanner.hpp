#ifndef STREAMND_FT_SPANNER_HPP_
#define STREAMND_FT_SPANNER_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "streamnd/graph.hpp"
#include "streamnd/hop_graph.hpp"
#include "streamnd/stream.hpp"

namespace streamnd {

enum class FaultMode { Vertex, Edge };
enum class TestKind { Exact, SampledVft, PeelingEft };

std::string_view to_string(FaultMode mode);
std::string_view to_string(TestKind kind);
/// Accepts "vft"/"vertex" and "eft"/"edge".
FaultMode parse_fault_mode(std::string_view text);
/// Accepts "exact", "sampled", "peeling".
TestKind parse_test_kind(std::string_view text);

struct FtConfig {
    int f = 0;
    int t = 1; // per-bucket hop threshold is 2t - 1
    FaultMode mode = FaultMode::Vertex;
    double eps = 1.0;
    TestKind test = TestKind::Exact;
    std::uint64_t seed = 0; // sampled test only

    int threshold() const { return 2 * t - 1; }
    /// Throws std::invalid_argument on f < 0, t < 1, eps <= 0 or a test kind
    /// that does not match the fault mode.
    void validate() const;
};

/// The exact test is the default while it stays cheap (f <= 3 or n <= 12);
/// beyond that a polynomial test has to be requested explicitly.
TestKind resolve_test_kind(int vertex_count, int f, std::optional<TestKind> requested, FaultMode mode);

/// True iff some fault set F with |F| <= f (vertices other than u, v, or edges)
/// pushes the hop distance from u to v in h \ F above `threshold`.
bool ft_test_exact(const HopGraph &h, int u, int v, int f, int threshold, FaultMode mode);

/// Randomized vertex-fault test: 16 * ceil(log2 n) induced subgraphs keeping u,
/// v and every other vertex with probability 1/(2f); true iff at least a
/// quarter of them have d(u, v) > threshold. f = 0 is a plain distance test.
bool ft_test_sampled_vft(const HopGraph &h, int u, int v, int f, int threshold, std::uint64_t seed);

/// Edge-fault test: up to f + 1 rounds of finding a short u-v path and
/// deleting its edges; true iff some round finds none.
bool ft_test_peeling_eft(const HopGraph &h, int u, int v, int f, int threshold);

/// Greedy streaming fault-tolerant spanner: one greedy spanner per weight
/// bucket, each edge tested only against the spanner of its own bucket.
class FtSpanner {
  public:
    FtSpanner(int vertex_count, FtConfig config, BucketScheme scheme);

    /// Tests the edge against its bucket and keeps it iff the test passes.
    bool process_edge(const WeightedEdge &e);
    /// Feeds the whole remaining stream.
    void consume(EdgeStream &stream);

    const FtConfig &config() const noexcept { return config_; }
    const BucketScheme &scheme() const noexcept { return scheme_; }
    int vertex_count() const noexcept { return n_; }
    std::size_t stored_edge_count() const noexcept { return kept_.size(); }
    std::size_t rejected_count() const noexcept { return rejected_.size(); }

    /// Kept edges in arrival order.
    const std::vector<WeightedEdge> &kept_edges() const noexcept { return kept_; }
    /// Rejected edges in arrival order, with their bucket index.
    const std::vector<std::pair<WeightedEdge, int>> &rejected_edges() const noexcept { return rejected_; }
    /// Nonempty buckets and their spanners.
    const std::map<int, HopGraph> &buckets() const noexcept { return buckets_; }

    /// Kept edges as a weighted graph (edge i = kept_edges()[i]).
    Graph spanner() const;

  private:
    int n_;
    FtConfig config_;
    BucketScheme scheme_;
    std::map<int, HopGraph> buckets_;
    std::vector<WeightedEdge> kept_;
    std::vector<std::pair<WeightedEdge, int>> rejected_;
};

/// Internally-vertex-disjoint (or, with FaultMode::Edge, edge-disjoint) u-v
/// paths in h with at most `hop_bound` hops each, found by repeatedly taking
/// a shortest path and blocking what it used. A direct u-v edge is used at
/// most once. Throws ContractViolation when fewer than `count` are found.
std::vector<std::vector<int>> extract_disjoint_paths(const HopGraph &h, int u, int v, int count, int hop_bound,
                                                     FaultMode mode = FaultMode::Vertex);

/// Number of disjoint short paths a rejection certifies: f/(2t-2) + 1 for
/// vertex faults (t >= 2), f/(2t-1) + 1 for edge faults.
int certified_path_count(const FtConfig &config);

/// Exhaustive check that the kept edges form an f-fault-tolerant spanner of
/// g with stretch (2t-1)(1+eps) under weighted distances. Throws
/// ResourceError when (#fault sets) * (#pairs) exceeds 10^7.
bool verify_ft_spanner(const Graph &g, std::span<const std::size_t> kept_ids, const FtConfig &config);
/// Same, with h given as a graph; its edges are matched to g's by
/// (endpoints, weight). Throws std::invalid_argument if h is not a subgraph.
bool verify_ft_spanner(const Graph &g, const Graph &h, const FtConfig &config);

} // namespace streamnd

#endif // STREAMND_FT_SPANNER_HPP_
