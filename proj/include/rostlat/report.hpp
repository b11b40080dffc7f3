#ifndef ROSTLAT_REPORT_HPP
#define ROSTLAT_REPORT_HPP

// Command output container with text and JSON serializations. JSON keys are
// emitted in sorted order by the serializer, so output is byte-deterministic.

#include <string>

#include <json.hpp>

#include "rostlat/numeric.hpp"

namespace rostlat {

using Json = nlohmann::json;

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json payload = Json::object();
    bool ok = true;
    std::string error;
    std::string text; // human rendering, already newline-terminated

    static Report failure(std::string command, std::string message) {
        Report r;
        r.command = std::move(command);
        r.ok = false;
        r.error = std::move(message);
        r.text = "error: " + r.error + "\n";
        return r;
    }
};

inline std::string to_json_string(const Report& r) {
    Json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["status"] = r.ok ? "ok" : "error";
    if (!r.ok) j["error"] = r.error;
    j["payload"] = r.payload;
    return j.dump(2) + "\n";
}

// JSON helpers for library values whose magnitudes are bounded by the rank
// ceiling; rationals go through strings to stay exact.
inline Json json_int(const Int& v) { return Json(to_int(v)); }

inline Json json_int_vector(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(json_int(x));
    return a;
}

inline Json json_set(const std::set<int>& s) {
    Json a = Json::array();
    for (int v : s) a.push_back(v);
    return a;
}

inline Json json_rational_vector(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

} // namespace rostlat

#endif
