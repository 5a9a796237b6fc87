#include "pglcat/json_schema.hpp"

#include "pglcat/embedded_data.hpp"
#include "pglcat/errors.hpp"

namespace pglcat {

using nlohmann::json;

namespace {

bool type_matches(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  throw DataError("schema uses unsupported type '" + type + "'");
}

}  // namespace

void validate_json(const json& value, const json& schema, const std::string& path) {
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else if (t.is_array()) {
      for (const auto& alt : t)
        if (type_matches(value, alt.get<std::string>())) ok = true;
    }
    if (!ok) throw DataError(path + ": type mismatch (expected " + t.dump() + ")");
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& alt : schema["enum"])
      if (value == alt) ok = true;
    if (!ok) throw DataError(path + ": value " + value.dump() + " not in enum");
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& name : schema["required"])
        if (!value.contains(name.get<std::string>()))
          throw DataError(path + ": missing required key '" + name.get<std::string>() + "'");
    const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
    bool allow_extra = true;
    if (schema.contains("additionalProperties"))
      allow_extra = schema["additionalProperties"].get<bool>();
    for (const auto& [key, sub] : value.items()) {
      if (props && props->contains(key)) {
        validate_json(sub, (*props)[key], path + "." + key);
      } else if (!allow_extra) {
        throw DataError(path + ": unexpected key '" + key + "'");
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    size_t i = 0;
    for (const auto& item : value) {
      validate_json(item, schema["items"], path + "[" + std::to_string(i) + "]");
      ++i;
    }
  }
}

const json& cli_schema() {
  static const json schema = json::parse(embedded::data_cli_schema_json);
  return schema;
}

void validate_cli_payload(const json& payload) {
  const json& schema = cli_schema();
  validate_json(payload, schema["envelope"], "$");
  std::string command = payload["command"].get<std::string>();
  // The schema key is the first token of the echoed command, except for the
  // abelian branch of `socles` which has its own result shape.
  std::string key = command.substr(0, command.find(' '));
  if (key == "socles" && command.find("--abelian") != std::string::npos) key = "socles-abelian";
  const json& commands = schema["commands"];
  if (!commands.contains(key)) throw DataError("no schema for command '" + key + "'");
  validate_json(payload["result"], commands[key], "$.result");
}

}  // namespace pglcat
