#ifndef STREAMND_STREAM_HPP_
#define STREAMND_STREAM_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "streamnd/graph.hpp"

namespace streamnd {

/// An edge or link as it arrives; `index` is its position in the source order.
struct WeightedEdge {
    int u = 0;
    int v = 0;
    Weight w = 1;
    std::size_t index = 0;
};

/// Geometric weight classes: bucket 0 holds weight 0, bucket i >= 1 holds
/// [(1+eps)^(i-1), (1+eps)^i).
class BucketScheme {
  public:
    BucketScheme(double eps, Weight max_weight);

    double eps() const noexcept { return eps_; }
    Weight max_weight() const noexcept { return max_weight_; }

    int bucket_of(Weight w) const;
    /// Number of buckets a weight in [0, max_weight] can land in.
    int bucket_count() const { return bucket_of(max_weight_) + 1; }

  private:
    double eps_;
    Weight max_weight_;
};

/// Single-pass edge sequence. Each edge is handed out once; there is no rewind.
class EdgeStream {
  public:
    EdgeStream() = default;
    explicit EdgeStream(std::vector<WeightedEdge> edges) : edges_(std::move(edges)) {}

    std::optional<WeightedEdge> next();
    bool exhausted() const noexcept { return cursor_ >= edges_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }
    std::size_t consumed() const noexcept { return cursor_; }

    /// Permutes the not-yet-consumed edges (Fisher-Yates on a seeded Rng).
    void shuffle(std::uint64_t seed);

    /// Largest weight in the whole sequence (0 when empty). Reading the
    /// maximum up front stands in for a known weight bound W.
    Weight max_weight() const;

  private:
    std::vector<WeightedEdge> edges_;
    std::size_t cursor_ = 0;
};

/// Stream of a graph's edges in id order (optionally shuffled).
EdgeStream stream_of(const Graph &g, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Headerless "u v [w]" lines (link files), in file order or a seeded permutation.
EdgeStream open_stream(const std::filesystem::path &path, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

struct GraphStream {
    int vertex_count;
    EdgeStream edges;
};

/// A Graph file ("n m" header) read as a stream of its edges.
GraphStream open_graph_stream(const std::filesystem::path &path,
                              std::optional<std::uint64_t> shuffle_seed = std::nullopt);

} // namespace streamnd

#endif // STREAMND_STREAM_HPP_
