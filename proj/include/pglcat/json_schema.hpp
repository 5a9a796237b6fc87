#pragma once

#include <string>

#include <json.hpp>

namespace pglcat {

/// Minimal JSON-schema subset: type, required, properties, items, enum,
/// additionalProperties (boolean). Throws DataError naming the offending
/// path.
void validate_json(const nlohmann::json& value, const nlohmann::json& schema,
                   const std::string& path = "$");

/// Schema document shipped with the CLI (one entry per subcommand plus the
/// output envelope).
const nlohmann::json& cli_schema();

/// Validates a full CLI payload: envelope first, then the per-command
/// result schema.
void validate_cli_payload(const nlohmann::json& payload);

}  // namespace pglcat
