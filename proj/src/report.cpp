#include "streamnd/report.hpp"

#include <cmath>
#include <limits>

namespace streamnd {

double ratio_of(Weight sol, Weight opt) {
    if (opt == 0)
        return sol == 0 ? 1.0 : std::numeric_limits<double>::infinity();
    return static_cast<double>(sol) / static_cast<double>(opt);
}

std::optional<double> RunReport::ratio() const {
    if (!opt_weight)
        return std::nullopt;
    return ratio_of(sol_weight.value_or(0), *opt_weight);
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["params"] = params;
    j[stored_key] = stored;
    if (sol_weight)
        j["sol_weight"] = *sol_weight;
    if (opt_weight) {
        j["opt_weight"] = *opt_weight;
        const double r = *ratio();
        if (std::isinf(r))
            j["ratio"] = "inf";
        else
            j["ratio"] = r;
    }
    if (factor_bound)
        j["factor_bound"] = *factor_bound;
    for (const auto &[key, value] : extra.items())
        j[key] = value;
    if (wall_time_ms)
        j["wall_time_ms"] = *wall_time_ms;
    return j;
}

std::string dump_json(const nlohmann::json &j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

} // namespace streamnd
