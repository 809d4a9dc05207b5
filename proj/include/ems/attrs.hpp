#pragma once

#include <map>
#include <string>
#include <variant>

#include <json.hpp>

#include "ems/errors.hpp"

namespace ems {

// Scalar attribute value. Ordered map keeps serialization deterministic.
using AttrValue = std::variant<bool, double, std::string>;
using AttrMap = std::map<std::string, AttrValue>;

inline nlohmann::json attr_to_json(const AttrValue& v) {
    return std::visit([](const auto& x) { return nlohmann::json(x); }, v);
}

inline AttrValue attr_from_json(const nlohmann::json& j) {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return j.get<std::string>();
    throw Error(errc::bad_format, "attribute values must be scalar");
}

inline nlohmann::json attrs_to_json(const AttrMap& m) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : m) j[k] = attr_to_json(v);
    return j;
}

inline AttrMap attrs_from_json(const nlohmann::json& j) {
    AttrMap m;
    if (j.is_null()) return m;
    if (!j.is_object()) throw Error(errc::bad_format, "attrs must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) m[it.key()] = attr_from_json(it.value());
    return m;
}

inline std::string attr_to_string(const AttrValue& v) {
    if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
    if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
    nlohmann::json j = std::get<double>(v);
    return j.dump();
}

}  // namespace ems
