#include "knotcert/json_io.hpp"

#include "knotcert/error.hpp"

#include <fstream>

namespace knotcert {

nlohmann::json integer_to_json(const Integer& x) {
  if (fits_int64(x)) return to_int64(x);
  return x.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw InputError("malformed integer string \"" + s + "\"");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw InputError("malformed integer string \"" + s + "\"");
    return Integer(s);
  }
  throw InputError("expected an integer, got " + j.dump());
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", std::move(rows)}};
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  const nlohmann::json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("rows")) throw InputError("matrix object has no \"rows\" field");
    rows = &j.at("rows");
  }
  if (!rows->is_array()) throw InputError("matrix rows must be an array");
  std::vector<std::vector<Integer>> out;
  for (const auto& row : *rows) {
    if (!row.is_array()) throw InputError("matrix row must be an array");
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    out.push_back(std::move(r));
  }
  return IntMatrix::from_rows(out);
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

IntMatrix read_matrix_file(const std::filesystem::path& path) { return matrix_from_json(read_json_file(path)); }

}  // namespace knotcert
