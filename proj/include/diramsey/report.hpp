#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace diramsey {

// Run record written by every CLI invocation. verification may only read
// "oracle-checked" when every certificate in the run was re-validated.
struct RunReport {
    std::string command;
    nlohmann::json parameters;
    std::string outcome;
    std::vector<std::string> certificate_paths;
    double wall_time_ms = 0;
    std::string verification = "none"; // none | oracle-checked | failed
    nlohmann::json extra;

    nlohmann::json to_json() const;
    void write(const std::string& path) const;
};

} // namespace diramsey
