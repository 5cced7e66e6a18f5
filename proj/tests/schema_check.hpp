// A small JSON-Schema checker covering the subset the shipped schema uses:
// type, enum, required, properties, additionalProperties, items.
#pragma once

#include <string>

#include "json.hpp"

namespace schema_check {

inline bool type_matches(const nlohmann::json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "boolean") return doc.is_boolean();
  if (type == "integer") return doc.is_number_integer();
  if (type == "number") return doc.is_number();
  if (type == "null") return doc.is_null();
  return false;
}

inline bool validate(const nlohmann::json& doc, const nlohmann::json& schema,
                     std::string* error, const std::string& path = "$") {
  auto fail = [&](const std::string& why) {
    if (error) *error = path + ": " + why;
    return false;
  };
  if (schema.contains("type") &&
      !type_matches(doc, schema["type"].get<std::string>()))
    return fail("expected type " + schema["type"].get<std::string>());
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& v : schema["enum"])
      if (v == doc) hit = true;
    if (!hit) return fail("value not in enum");
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      if (!doc.contains(key.get<std::string>()))
        return fail("missing required key " + key.get<std::string>());
  if (doc.is_object() && schema.contains("properties")) {
    const auto& props = schema["properties"];
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (props.contains(it.key())) {
        if (!validate(it.value(), props[it.key()], error, path + "." + it.key()))
          return false;
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_boolean() &&
                 !schema["additionalProperties"].get<bool>()) {
        return fail("unexpected key " + it.key());
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    int i = 0;
    for (const auto& item : doc) {
      if (!validate(item, schema["items"], error,
                    path + "[" + std::to_string(i) + "]"))
        return false;
      ++i;
    }
  }
  if (error) error->clear();
  return true;
}

}  // namespace schema_check
