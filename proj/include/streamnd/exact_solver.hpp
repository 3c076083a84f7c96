#ifndef STREAMND_EXACT_SOLVER_HPP_
#define STREAMND_EXACT_SOLVER_HPP_

#include <span>
#include <vector>

#include "streamnd/graph.hpp"
#include "streamnd/stream.hpp"

namespace streamnd {

inline constexpr std::size_t kDefaultSolverGuard = 40;

struct Solution {
    std::vector<std::size_t> chosen; // ascending indices into the candidate list
    Weight weight = 0;
};

/// Minimum-weight subset of `candidates` whose union with `base` meets `req`.
///
/// Branch and bound over candidates by decreasing weight, trying exclusion
/// first. Every search node keeps the invariant that base plus all
/// not-yet-excluded candidates is feasible, so that set is also an
/// incumbent. Zero-weight candidates are always taken. Throws ResourceError
/// when more than `guard` positive-weight candidates remain and
/// InfeasibleError when even the full candidate set fails.
Solution exact_augment(const Graph &base, std::span<const WeightedEdge> candidates, const RequirementMap &req,
                       ConnectivityMode mode, std::size_t guard = kDefaultSolverGuard);

/// Minimum-weight feasible edge subset of g (indices are g's edge ids).
Solution exact_solve(const Graph &g, const RequirementMap &req, ConnectivityMode mode,
                     std::size_t guard = kDefaultSolverGuard);

/// base plus the chosen candidates.
Graph augmented(const Graph &base, std::span<const WeightedEdge> candidates, std::span<const std::size_t> chosen);

} // namespace streamnd

#endif // STREAMND_EXACT_SOLVER_HPP_
