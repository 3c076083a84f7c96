#include "streamnd/stream.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "streamnd/graph_io.hpp"
#include "streamnd/random.hpp"

namespace streamnd {

BucketScheme::BucketScheme(double eps, Weight max_weight) : eps_(eps), max_weight_(max_weight) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("bucket eps must be positive");
    if (max_weight < 0)
        throw std::invalid_argument("negative maximum weight");
}

int BucketScheme::bucket_of(Weight w) const {
    if (w < 0 || w > max_weight_)
        throw std::invalid_argument("weight " + std::to_string(w) + " outside [0, " + std::to_string(max_weight_) +
                                    "]");
    if (w == 0)
        return 0;
    const long double base = 1.0L + static_cast<long double>(eps_);
    const long double x = static_cast<long double>(w);
    int i = static_cast<int>(std::floor(std::log(x) / std::log(base))) + 1;
    if (i < 1)
        i = 1;
    // the logarithm can land one off at bucket boundaries
    while (i > 1 && std::pow(base, i - 1) > x)
        --i;
    while (std::pow(base, i) <= x)
        ++i;
    return i;
}

std::optional<WeightedEdge> EdgeStream::next() {
    if (cursor_ >= edges_.size())
        return std::nullopt;
    return edges_[cursor_++];
}

void EdgeStream::shuffle(std::uint64_t seed) {
    std::vector<WeightedEdge> rest(edges_.begin() + static_cast<std::ptrdiff_t>(cursor_), edges_.end());
    Rng rng(seed);
    rng.shuffle(rest);
    std::copy(rest.begin(), rest.end(), edges_.begin() + static_cast<std::ptrdiff_t>(cursor_));
}

Weight EdgeStream::max_weight() const {
    Weight best = 0;
    for (const auto &e : edges_)
        best = std::max(best, e.w);
    return best;
}

EdgeStream stream_of(const Graph &g, std::optional<std::uint64_t> shuffle_seed) {
    std::vector<WeightedEdge> edges;
    edges.reserve(g.edge_count());
    for (std::size_t id = 0; id < g.edge_count(); ++id) {
        const auto &e = g.edge(id);
        edges.push_back({e.u, e.v, e.w, id});
    }
    EdgeStream s(std::move(edges));
    if (shuffle_seed)
        s.shuffle(*shuffle_seed);
    return s;
}

EdgeStream open_stream(const std::filesystem::path &path, std::optional<std::uint64_t> shuffle_seed) {
    auto in = open_input(path);
    std::vector<WeightedEdge> edges;
    for (const auto &line : parse_edge_lines(in, path.string())) {
        if (line.u == line.v)
            continue;
        edges.push_back({line.u, line.v, line.w, edges.size()});
    }
    EdgeStream s(std::move(edges));
    if (shuffle_seed)
        s.shuffle(*shuffle_seed);
    return s;
}

GraphStream open_graph_stream(const std::filesystem::path &path, std::optional<std::uint64_t> shuffle_seed) {
    const Graph g = read_graph(path);
    return {g.vertex_count(), stream_of(g, shuffle_seed)};
}

} // namespace streamnd
