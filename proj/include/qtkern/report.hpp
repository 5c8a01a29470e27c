#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace qtkern {

/// One verification outcome. Witness holds the sampled values that make the
/// check reproducible.
struct CheckRecord {
    std::string check;
    std::string lambda;
    std::string mu;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> witness;
    bool verdict = false;
    // reported alongside the suite but left out of its overall verdict
    bool informational = false;
    std::string value;
    std::string note;
};

inline nlohmann::json to_json(const CheckRecord& r) {
    nlohmann::json j{{"check", r.check}, {"seed", r.seed}, {"verdict", r.verdict ? "pass" : "fail"},
                     {"value", r.value}};
    if (!r.lambda.empty()) j["lambda"] = r.lambda;
    if (!r.mu.empty()) j["mu"] = r.mu;
    j["witness"] = r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    if (r.informational) j["informational"] = true;
    return j;
}

inline bool all_pass(const std::vector<CheckRecord>& rs) {
    for (const auto& r : rs)
        if (!r.verdict && !r.informational) return false;
    return true;
}

}  // namespace qtkern
