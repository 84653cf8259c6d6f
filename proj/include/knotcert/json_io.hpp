#pragma once

#include "knotcert/bigint.hpp"
#include "knotcert/int_matrix.hpp"

#include <json.hpp>

#include <filesystem>

namespace knotcert {

// Integers that do not fit in 64 bits travel as decimal strings.
nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

// {"rows": [[...], ...]}; a bare array of rows is accepted on input.
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
IntMatrix read_matrix_file(const std::filesystem::path& path);

}  // namespace knotcert
