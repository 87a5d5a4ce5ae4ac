// Structural JSON schema checker for the published schema files. Covers the
// vocabulary those schemas use (type, enum, required, properties,
// additionalProperties, items, minItems, maxItems) and reports violations as
// readable path-prefixed strings instead of throwing.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace testsupport {

inline bool type_matches(const nlohmann::json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "number") return doc.is_number();
  if (type == "integer") return doc.is_number_integer();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  return false;
}

inline void collect_violations(const nlohmann::json& schema, const nlohmann::json& doc,
                               const std::string& path, std::vector<std::string>& out) {
  if (schema.contains("type")) {
    const nlohmann::json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(doc, t.get<std::string>());
    } else {
      for (const auto& alt : t) ok = ok || type_matches(doc, alt.get<std::string>());
    }
    if (!ok) {
      out.push_back(path + ": type mismatch");
      return;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& v : schema["enum"]) ok = ok || v == doc;
    if (!ok) out.push_back(path + ": value not in enum");
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!doc.contains(key.get<std::string>()))
          out.push_back(path + ": missing required key " + key.get<std::string>());
    const nlohmann::json props = schema.value("properties", nlohmann::json::object());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      const std::string sub = path + "." + it.key();
      if (props.contains(it.key())) {
        collect_violations(props[it.key()], it.value(), sub, out);
      } else if (schema.contains("additionalProperties")) {
        const nlohmann::json& extra = schema["additionalProperties"];
        if (extra.is_boolean() && !extra.get<bool>()) {
          out.push_back(sub + ": unexpected key");
        } else if (extra.is_object()) {
          collect_violations(extra, it.value(), sub, out);
        }
      }
    }
  }
  if (doc.is_array()) {
    if (schema.contains("minItems") && doc.size() < schema["minItems"].get<std::size_t>())
      out.push_back(path + ": too few items");
    if (schema.contains("maxItems") && doc.size() > schema["maxItems"].get<std::size_t>())
      out.push_back(path + ": too many items");
    if (schema.contains("items"))
      for (std::size_t i = 0; i < doc.size(); ++i)
        collect_violations(schema["items"], doc[i], path + "[" + std::to_string(i) + "]", out);
  }
}

inline std::vector<std::string> schema_violations(const nlohmann::json& schema,
                                                  const nlohmann::json& doc) {
  std::vector<std::string> out;
  collect_violations(schema, doc, "$", out);
  return out;
}

}  // namespace testsupport
