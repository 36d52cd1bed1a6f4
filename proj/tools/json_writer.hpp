#pragma once

#include <string>

#include <json.hpp>

namespace edsum::cli {

/// Serialises with every floating-point number printed to 17 significant
/// digits, so output is byte-stable and round-trips exactly.
std::string dump_json(const nlohmann::json& j, int indent = 2);

}  // namespace edsum::cli
