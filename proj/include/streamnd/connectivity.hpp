#ifndef STREAMND_CONNECTIVITY_HPP_
#define STREAMND_CONNECTIVITY_HPP_

#include <climits>

#include "streamnd/graph.hpp"

namespace streamnd {

/// Maximum number of pairwise edge-/vertex-/element-disjoint u-v paths.
///
/// Computed as a unit-capacity max-flow. In vertex mode every vertex other
/// than u and v is split into an in/out pair joined by a unit arc; element mode
/// splits only the non-reliable ones. Parallel edges count separately.
/// The search stops as soon as `cap` paths have been found.
int pair_connectivity(const Graph &g, int u, int v, ConnectivityMode mode, int cap = INT_MAX);

/// True iff every pair with r(uv) > 0 has pair_connectivity >= r(uv).
bool check_feasible(const Graph &g, const RequirementMap &req, ConnectivityMode mode);

/// Uniform requirement k over all pairs (reliable pairs in element mode).
/// Vertex mode additionally requires n >= k + 1.
bool is_k_connected(const Graph &g, int k, ConnectivityMode mode);

/// Connected components of g with the given vertices removed; returns the
/// component label per vertex (-1 for removed vertices) and the count.
std::pair<std::vector<int>, int> components_without(const Graph &g, const std::vector<char> &removed);

} // namespace streamnd

#endif // STREAMND_CONNECTIVITY_HPP_
