#ifndef STREAMND_FRAMEWORK_HPP_
#define STREAMND_FRAMEWORK_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "streamnd/exact_solver.hpp"
#include "streamnd/ft_spanner.hpp"
#include "streamnd/graph.hpp"
#include "streamnd/stream.hpp"

namespace streamnd {

enum class Analysis { Integral, Fractional };

std::string_view to_string(Analysis analysis);
Analysis parse_analysis(std::string_view text);

struct FrameworkConfig {
    int t = 2;
    ConnectivityMode mode = ConnectivityMode::Vertex;
    Analysis analysis = Analysis::Fractional;
    std::optional<TestKind> test;   // default: exact when cheap
    std::uint64_t seed = 0;         // sampled test only
    std::size_t guard = kDefaultSolverGuard;

    double eps() const { return 1.0 / (2 * t - 1); }
    /// Edge connectivity uses edge faults; vertex and element connectivity
    /// use vertex faults.
    FaultMode fault_mode() const;
    /// (2t-2)(k-1) for integral vertex/element, (2t-2)(2k-1) for fractional
    /// vertex/element, (2t-1)(2k-1) for edge connectivity.
    int fault_budget(int k) const;
    /// Approximation ceiling guaranteed for requirement bound k:
    /// 2tk in general, min(2tk, 8t) where the fractional analysis applies
    /// (edge connectivity, element connectivity with fractional parameters).
    double factor_bound(int k) const;
};

struct FrameworkResult {
    FtConfig spanner_config;
    Graph spanner;                          // kept edges, in arrival order
    std::vector<WeightedEdge> spanner_edges; // same, with original stream indices
    int bucket_count = 0;
    Solution solution;                      // indices into spanner_edges
    Weight weight = 0;
};

/// Streams the edges into a fault-tolerant spanner parameterized from cfg and
/// the requirement bound, then solves the instance exactly on the spanner.
/// `non_reliable` lists vertices that are not reliable (element mode).
/// Throws InfeasibleError when the spanner admits no feasible solution.
FrameworkResult run_framework(EdgeStream &stream, int vertex_count, const RequirementMap &req,
                              const FrameworkConfig &cfg, std::span<const int> non_reliable = {});

} // namespace streamnd

#endif // STREAMND_FRAMEWORK_HPP_
