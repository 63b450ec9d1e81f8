#ifndef CYCPERM_TESTS_SCHEMA_VALIDATE_HPP
#define CYCPERM_TESTS_SCHEMA_VALIDATE_HPP

// Just enough JSON-Schema to check instances against the schemas shipped in
// schemas/: type, properties, required, additionalProperties, items, enum,
// oneOf, minimum.

#include <json.hpp>

#include <string>

namespace schema {

using nlohmann::json;

inline bool validate(const json& schema, const json& value, std::string& error);

inline bool type_matches(const std::string& type, const json& value) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    return false;
}

inline bool validate(const json& schema, const json& value, std::string& error) {
    if (schema.contains("oneOf")) {
        int matched = 0;
        for (const auto& alternative : schema["oneOf"]) {
            std::string ignored;
            if (validate(alternative, value, ignored)) ++matched;
        }
        if (matched != 1) {
            error = "oneOf matched " + std::to_string(matched) + " alternatives";
            return false;
        }
        return true;
    }
    if (schema.contains("type") && !type_matches(schema["type"], value)) {
        error = "expected type " + schema["type"].get<std::string>();
        return false;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& allowed : schema["enum"]) found = found || allowed == value;
        if (!found) {
            error = "value not in enum";
            return false;
        }
    }
    if (schema.contains("minimum") && value.is_number()) {
        if (value.get<double>() < schema["minimum"].get<double>()) {
            error = "below minimum";
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema["required"]) {
                if (!value.contains(key.get<std::string>())) {
                    error = "missing required key " + key.get<std::string>();
                    return false;
                }
            }
        }
        const json props = schema.value("properties", json::object());
        for (const auto& [key, member] : value.items()) {
            if (props.contains(key)) {
                if (!validate(props[key], member, error)) {
                    error = key + ": " + error;
                    return false;
                }
            } else if (schema.value("additionalProperties", json(true)) == json(false)) {
                error = "unexpected key " + key;
                return false;
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (!validate(schema["items"], value[i], error)) {
                error = "item " + std::to_string(i) + ": " + error;
                return false;
            }
        }
    }
    return true;
}

} // namespace schema

#endif
