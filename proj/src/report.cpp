#include "diramsey/report.hpp"

#include <fstream>
#include <stdexcept>

namespace diramsey {

nlohmann::json RunReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "diramsey-report/1";
    j["command"] = command;
    j["parameters"] = parameters;
    j["outcome"] = outcome;
    j["certificates"] = certificate_paths;
    j["wall_time_ms"] = wall_time_ms;
    j["verification"] = verification;
    if (!extra.is_null()) j["extra"] = extra;
    return j;
}

void RunReport::write(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write report: " + path);
    f << to_json().dump(2) << "\n";
}

} // namespace diramsey
