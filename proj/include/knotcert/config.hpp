#pragma once

#include "knotcert/infection.hpp"

#include <json.hpp>

#include <filesystem>

namespace knotcert {

// {"base": "bundled" | knot expression | {"rows": ...},
//  "modulus": q,
//  "sites": [{"label", "z", "z_prime" | null, "companion", "copies_per_c"}],
//  "summand_scales": [...] | "geometric"}            (optional)
// Relative paths inside knot expressions resolve against base_dir.
InfectionConfig parse_infection_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
InfectionConfig load_infection_config(const std::filesystem::path& path);

}  // namespace knotcert
