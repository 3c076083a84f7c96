#include "streamnd/framework.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace streamnd {

std::string_view to_string(Analysis analysis) {
    return analysis == Analysis::Integral ? "integral" : "fractional";
}

Analysis parse_analysis(std::string_view text) {
    if (text == "integral")
        return Analysis::Integral;
    if (text == "fractional")
        return Analysis::Fractional;
    throw std::invalid_argument("unknown analysis '" + std::string(text) + "'");
}

FaultMode FrameworkConfig::fault_mode() const {
    return mode == ConnectivityMode::Edge ? FaultMode::Edge : FaultMode::Vertex;
}

int FrameworkConfig::fault_budget(int k) const {
    if (t < 1)
        throw std::invalid_argument("t must be at least 1");
    const int kk = std::max(k, 1);
    if (mode == ConnectivityMode::Edge)
        return (2 * t - 1) * (2 * kk - 1);
    if (analysis == Analysis::Integral)
        return (2 * t - 2) * (kk - 1);
    return (2 * t - 2) * (2 * kk - 1);
}

double FrameworkConfig::factor_bound(int k) const {
    const double integral = 2.0 * t * std::max(k, 1);
    const bool fractional_applies =
        mode == ConnectivityMode::Edge || (mode == ConnectivityMode::Element && analysis == Analysis::Fractional);
    return fractional_applies ? std::min(integral, 8.0 * t) : integral;
}

FrameworkResult run_framework(EdgeStream &stream, int vertex_count, const RequirementMap &req,
                              const FrameworkConfig &cfg, std::span<const int> non_reliable) {
    Graph shape(vertex_count);
    for (int v : non_reliable)
        shape.set_reliable(v, false);
    req.validate(shape, cfg.mode);

    const int k = req.max_requirement();
    FtConfig ft;
    ft.t = cfg.t;
    ft.f = cfg.fault_budget(k);
    ft.mode = cfg.fault_mode();
    ft.eps = cfg.eps();
    ft.test = resolve_test_kind(vertex_count, ft.f, cfg.test, ft.mode);
    ft.seed = cfg.seed;

    FtSpanner builder(vertex_count, ft, BucketScheme(ft.eps, std::max<Weight>(stream.max_weight(), 1)));
    builder.consume(stream);

    FrameworkResult result;
    result.spanner_config = ft;
    result.spanner = builder.spanner();
    for (int v : non_reliable)
        result.spanner.set_reliable(v, false);
    result.spanner_edges = builder.kept_edges();
    result.bucket_count = static_cast<int>(builder.buckets().size());
    result.solution = exact_solve(result.spanner, req, cfg.mode, cfg.guard);
    result.weight = result.solution.weight;
    return result;
}

} // namespace streamnd
