#ifndef STREAMND_ORACLE_HPP_
#define STREAMND_ORACLE_HPP_

#include <cstdint>
#include <set>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "streamnd/exact_solver.hpp"
#include "streamnd/graph.hpp"
#include "streamnd/random.hpp"
#include "streamnd/stream.hpp"

namespace streamnd {

// Brute-force ground truth. The oracles avoid the max-flow code except
// brute_optimal on non-uniform requirements, where no cheaper independent
// check exists.

inline constexpr std::size_t kOracleGuard = 22;

/// Global minimum-weight subset of `links` whose union with `base` meets
/// `req`: depth-first enumeration of subsets in input order (include before
/// exclude), cut off when the weight reaches the incumbent or when even all
/// remaining links cannot restore feasibility. Zero-weight links are taken
/// up front. Uniform vertex requirements are checked by deleting every
/// (k-1)-subset of vertices. Throws ResourceError when more than `guard`
/// positive-weight links are given and InfeasibleError when nothing works.
Solution brute_optimal(const Graph &base, std::span<const WeightedEdge> links, const RequirementMap &req,
                       ConnectivityMode mode, std::size_t guard = kOracleGuard);

/// True iff g has at least k + 1 vertices and stays connected after deleting
/// any k - 1 of them.
bool survives_vertex_faults(const Graph &g, int k);

/// Maximum number of disjoint u-v paths by enumerating all simple paths and
/// searching packings exhaustively.
int brute_pair_connectivity(const Graph &g, int u, int v, ConnectivityMode mode);

/// Offline minimum spanning forest weight (Kruskal with union-find).
Weight kruskal_weight(int n, std::span<const WeightedEdge> edges);

/// Vertex pairs whose deletion disconnects g.
std::set<std::pair<int, int>> brute_two_cuts(const Graph &g);

/// Minimum over bisets (S, S+) with u in S and v outside S+ of the biset cut
/// value, by enumerating every assignment of the other vertices.
int brute_biset_connectivity(const Graph &g, int u, int v);

enum class Family { Tree, TwoConnected, Gnp, CyclePlusChords };

std::string_view to_string(Family family);

struct InstanceGenerator {
    std::uint64_t seed = 1;
    Family family = Family::Gnp;
    int n = 8;
    Weight min_weight = 1;
    Weight max_weight = 10;
    double density = 0.4; // edge probability (GNP) or chord probability
    int link_count = 0;   // random links to draw on top of the base graph
};

struct Instance {
    Graph base;
    std::vector<WeightedEdge> links;
};

/// Deterministic for fixed parameters. Vertex labels are randomly permuted.
/// TwoConnected output is certified with is_k_connected; failure after
/// bounded retries throws std::runtime_error.
Instance generate(const InstanceGenerator &gen);

/// `count` links between distinct random vertices with weights in range.
std::vector<WeightedEdge> random_links(int n, int count, Weight min_weight, Weight max_weight, Rng &rng);

/// Random requirements on about `density` of the pairs (reliable pairs in
/// element mode), each drawn from [1, k_max] and capped at the pair's actual
/// connectivity in g so the instance is feasible; zero draws are dropped.
RequirementMap random_requirements(const Graph &g, int k_max, double density, ConnectivityMode mode, Rng &rng);

} // namespace streamnd

#endif // STREAMND_ORACLE_HPP_
