#ifndef STREAMND_STREAMING_MST_HPP_
#define STREAMND_STREAMING_MST_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "streamnd/graph.hpp"

namespace streamnd {

struct MstLink {
    int a = 0;
    int b = 0;
    Weight w = 0;
    std::size_t tag = 0; // caller's identifier for the link
    std::uint64_t seq = 0;
};

/// Minimum spanning forest of an insertion-only link stream over a fixed node
/// universe, kept in O(nodes) space: a link closing a cycle evicts the heaviest
/// edge of that cycle. Among equally heavy cycle edges the most recently
/// inserted one goes.
class StreamingMst {
  public:
    explicit StreamingMst(int node_count);

    /// Returns the evicted link, if any (possibly the inserted link itself).
    std::optional<MstLink> insert(int a, int b, Weight w, std::size_t tag = 0);

    int node_count() const noexcept { return n_; }
    std::size_t size() const noexcept { return links_.size(); }
    const std::vector<MstLink> &links() const noexcept { return links_; }
    Weight total_weight() const;

  private:
    // Forest path a -> b as indices into links_, empty if disconnected.
    std::optional<std::vector<std::size_t>> path(int a, int b) const;

    int n_;
    std::uint64_t next_seq_ = 0;
    std::vector<MstLink> links_;
};

} // namespace streamnd

#endif // STREAMND_STREAMING_MST_HPP_
