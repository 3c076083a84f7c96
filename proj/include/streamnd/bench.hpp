#ifndef STREAMND_BENCH_HPP_
#define STREAMND_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace streamnd {

/// spanner, sndp, cap1, cap2, spqr, mst.
const std::vector<std::string> &bench_suites();

/// "a..b" (inclusive) or a single seed.
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(std::string_view text);

/// One seeded instance of a suite, run end to end and checked against the
/// brute-force oracles. The report carries "violations": the number of
/// checked properties that failed. No timing fields, so the output is a pure
/// function of (suite, seed).
nlohmann::json bench_case(std::string_view suite, std::uint64_t seed);

struct BenchSummary {
    std::size_t runs = 0;
    std::size_t violations = 0;
    std::optional<double> max_ratio;
};

/// Writes one JSON line per seed in seed order, then a summary line.
/// Seeds are spread over `jobs` threads.
BenchSummary run_bench(std::string_view suite, std::uint64_t first, std::uint64_t last, std::ostream &out,
                       bool pretty = false, unsigned jobs = 1);

} // namespace streamnd

#endif // STREAMND_BENCH_HPP_
