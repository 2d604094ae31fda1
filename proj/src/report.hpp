#pragma once

#include <map>
#include <string>

#include <json.hpp>

namespace ttt::report {

// Bumped on any incompatible change of the report layout; docs/report.schema.json
// carries the same number.
inline constexpr const char* kSchemaVersion = "1.0.0";

using json = nlohmann::ordered_json;
using Options = std::map<std::string, std::string>;

struct Result {
    json report;
    std::string csv;  // trajectory, connect only
    int code = 0;     // 0 ok, 1 usage, 2 domain, 3 structure, 4 ODE, 5 quadrature
};

// Commands: correspond, monodromy, connect, barnes. Never throws; failures
// become an "error" block in the report and a nonzero code.
Result run(const std::string& command, const Options& opts);

}  // namespace ttt::report
