#ifndef STREAMND_LINK_HPP_
#define STREAMND_LINK_HPP_

#include <tuple>
#include <vector>

#include "streamnd/graph.hpp"
#include "streamnd/stream.hpp"

namespace streamnd {

/// A retained augmentation link. Base edges that the augmentation algorithms
/// demote to weight-0 links carry from_base = true and their base edge id as
/// index; streamed links carry their stream position.
struct Link {
    int u = 0;
    int v = 0;
    Weight w = 0;
    std::size_t index = 0;
    bool from_base = false;

    auto key() const { return std::make_tuple(from_base, index); }
    friend bool operator==(const Link &a, const Link &b) { return a.key() == b.key(); }
    friend bool operator<(const Link &a, const Link &b) { return a.key() < b.key(); }
};

inline Link stream_link(const WeightedEdge &e) { return {e.u, e.v, e.w, e.index, false}; }

/// Sorted, duplicate-free copy.
std::vector<Link> unique_links(std::vector<Link> links);
Weight weight_of(const std::vector<Link> &links);
std::vector<WeightedEdge> as_edges(const std::vector<Link> &links);
/// g plus every link.
Graph with_links(const Graph &g, const std::vector<Link> &links);

} // namespace streamnd

#endif // STREAMND_LINK_HPP_
