#include "streamnd/streaming_mst.hpp"

#include <stdexcept>
#include <tuple>

namespace streamnd {

StreamingMst::StreamingMst(int node_count) : n_(node_count) {
    if (node_count < 0)
        throw std::invalid_argument("negative node count");
}

std::optional<std::vector<std::size_t>> StreamingMst::path(int a, int b) const {
    std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < links_.size(); ++i) {
        adj[links_[i].a].push_back({links_[i].b, i});
        adj[links_[i].b].push_back({links_[i].a, i});
    }
    std::vector<std::size_t> via(static_cast<std::size_t>(n_), kNoEdge);
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{a};
    seen[a] = 1;
    while (!stack.empty() && !seen[b]) {
        const int x = stack.back();
        stack.pop_back();
        for (auto [y, id] : adj[x]) {
            if (seen[y])
                continue;
            seen[y] = 1;
            via[y] = id;
            stack.push_back(y);
        }
    }
    if (!seen[b])
        return std::nullopt;
    std::vector<std::size_t> out;
    for (int x = b; x != a;) {
        const auto &l = links_[via[x]];
        out.push_back(via[x]);
        x = l.a == x ? l.b : l.a;
    }
    return out;
}

std::optional<MstLink> StreamingMst::insert(int a, int b, Weight w, std::size_t tag) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw std::invalid_argument("link endpoint outside the node universe");
    const MstLink link{a, b, w, tag, next_seq_++};
    if (a == b)
        return link;
    auto cycle = path(a, b);
    if (!cycle) {
        links_.push_back(link);
        return std::nullopt;
    }
    std::size_t heaviest = kNoEdge;
    for (std::size_t id : *cycle)
        if (heaviest == kNoEdge ||
            std::tie(links_[id].w, links_[id].seq) > std::tie(links_[heaviest].w, links_[heaviest].seq))
            heaviest = id;
    if (w >= links_[heaviest].w)
        return link;
    MstLink evicted = links_[heaviest];
    links_[heaviest] = link;
    return evicted;
}

Weight StreamingMst::total_weight() const {
    Weight sum = 0;
    for (const auto &l : links_)
        sum += l.w;
    return sum;
}

} // namespace streamnd
