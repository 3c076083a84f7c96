#ifndef STREAMND_RANDOM_HPP_
#define STREAMND_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace streamnd {

/// Seeded generator with platform-independent derived draws. The standard
/// distributions are implementation-defined, so bounded integers and shuffles
/// are computed here directly from the 64-bit engine output.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    /// Uniform in [0, 1).
    double unit();
    bool chance(double p) { return unit() < p; }

    template <class T> void shuffle(std::vector<T> &items) {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[static_cast<std::size_t>(below(i))]);
    }

  private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer over a pair, for deriving independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

} // namespace streamnd

#endif // STREAMND_RANDOM_HPP_
