#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "povmcoh/qstate.hpp"

namespace povmcoh {

// {"dim": d, "effects": [[[re, im], ...row-major...], ...]}
nlohmann::json povm_to_json(const Povm& p);
Povm povm_from_json(const nlohmann::json& j);

void write_povm_file(const Povm& p, const std::filesystem::path& path);
Povm read_povm_file(const std::filesystem::path& path);

}  // namespace povmcoh
