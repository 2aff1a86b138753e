#pragma once

#include <json.hpp>

#include "lnk/worksheet.hpp"

namespace lnk {

/// Machine-readable rendering; same content as render_text.
inline std::string render_machine(const RunReport& rep) {
    nlohmann::json j;
    j["version"] = rep.version;
    j["seed"] = rep.seed;
    j["results"] = nlohmann::json::array();
    for (const auto& r : rep.results) {
        nlohmann::json t;
        t["task"] = r.task;
        t["verdict"] = r.verdict;
        t["evidence"] = r.evidence;
        t["timing_ms"] = r.timing_ms;
        j["results"].push_back(std::move(t));
    }
    return j.dump(2) + "\n";
}

} // namespace lnk
