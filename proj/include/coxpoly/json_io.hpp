#pragma once

#include <fstream>
#include <istream>
#include <string>

#include <json.hpp>

#include "coxpoly/errors.hpp"
#include "coxpoly/quiver.hpp"

namespace coxpoly {

// Malformed input (bad JSON, wrong shapes/types): a usage problem, reported
// separately from domain errors like cyclic quivers.
struct JsonFormatError : Error {
    explicit JsonFormatError(const std::string& d) : Error("json_format", d) {}
};

// Quiver wire format: {"n": <int>, "arrows": [[s,t], ...]}, 1-based vertex
// indices, duplicate pairs encoding parallel arrows. Shape problems throw
// JsonFormatError; out-of-range endpoints throw InvalidQuiverError.
inline Quiver quiver_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("arrows"))
        throw JsonFormatError("expected object with fields \"n\" and \"arrows\"");
    if (!j["n"].is_number_integer()) throw JsonFormatError("\"n\" must be an integer");
    if (!j["arrows"].is_array()) throw JsonFormatError("\"arrows\" must be an array");
    Quiver q;
    q.n = j["n"].get<int>();
    for (const auto& a : j["arrows"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
            !a[1].is_number_integer())
            throw JsonFormatError("each arrow must be a pair of integers");
        q.arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    q.validate();
    return q;
}

inline Quiver read_quiver(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw JsonFormatError(e.what());
    }
    return quiver_from_json(j);
}

inline Quiver read_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonFormatError("cannot open file: " + path);
    return read_quiver(in);
}

inline nlohmann::json quiver_to_json(const Quiver& q) {
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& [s, t] : q.arrows) arrows.push_back({s, t});
    return {{"n", q.n}, {"arrows", arrows}};
}

}  // namespace coxpoly
