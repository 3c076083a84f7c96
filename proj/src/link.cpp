#include "streamnd/link.hpp"

#include <algorithm>

namespace streamnd {

std::vector<Link> unique_links(std::vector<Link> links) {
    std::sort(links.begin(), links.end());
    links.erase(std::unique(links.begin(), links.end()), links.end());
    return links;
}

Weight weight_of(const std::vector<Link> &links) {
    Weight sum = 0;
    for (const auto &l : links)
        sum += l.w;
    return sum;
}

std::vector<WeightedEdge> as_edges(const std::vector<Link> &links) {
    std::vector<WeightedEdge> out;
    out.reserve(links.size());
    for (const auto &l : links)
        out.push_back({l.u, l.v, l.w, l.index});
    return out;
}

Graph with_links(const Graph &g, const std::vector<Link> &links) {
    Graph out = g;
    for (const auto &l : links)
        out.add_edge(l.u, l.v, l.w);
    return out;
}

} // namespace streamnd
