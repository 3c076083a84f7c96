#ifndef STREAMND_REPORT_HPP_
#define STREAMND_REPORT_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "streamnd/graph.hpp"

namespace streamnd {

/// sol / opt, with 0 / 0 = 1 and x / 0 = +inf for x > 0.
double ratio_of(Weight sol, Weight opt);

/// One command's JSON summary. Stored counts are retained edges or links,
/// the streaming space measure.
struct RunReport {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::string stored_key = "stored_edges";
    std::size_t stored = 0;
    std::optional<Weight> sol_weight;
    std::optional<Weight> opt_weight;
    std::optional<double> factor_bound;
    std::optional<double> wall_time_ms;
    nlohmann::json extra = nlohmann::json::object(); // command-specific fields

    std::optional<double> ratio() const;
    /// ratio is written iff opt_weight is set; an infinite ratio is written
    /// as the string "inf".
    nlohmann::json to_json() const;
};

std::string dump_json(const nlohmann::json &j, bool pretty);

} // namespace streamnd

#endif // STREAMND_REPORT_HPP_
