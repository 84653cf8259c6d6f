#include "knotcert/config.hpp"

#include "knotcert/error.hpp"
#include "knotcert/json_io.hpp"
#include "knotcert/knot_expr.hpp"
#include "knotcert/paper_data.hpp"
#include "knotcert/seifert.hpp"

namespace knotcert {

namespace {

HomologyClass class_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("homology class must be an integer array");
  HomologyClass z;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("homology class must be an integer array");
    z.coefficients.push_back(x.get<std::int64_t>());
  }
  return z;
}

}  // namespace

InfectionConfig parse_infection_config(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  try {
    InfectionConfig cfg;
    const auto& base = j.at("base");
    if (base.is_string() && base.get<std::string>() == "bundled") {
      cfg.base = CoverPresentation(SeifertKnot(load_paper_dataset().seifert_matrix));
    } else if (base.is_string()) {
      cfg.base = CoverPresentation(seifert_matrix(parse_knot_expr(base.get<std::string>(), base_dir)));
    } else {
      cfg.base = CoverPresentation(SeifertKnot(matrix_from_json(base)));
    }
    cfg.modulus = j.at("modulus").get<std::int64_t>();
    for (const auto& s : j.at("sites")) {
      InfectionSite site;
      site.label = s.at("label").get<long>();
      site.z = class_from_json(s.at("z"));
      if (s.contains("z_prime") && !s.at("z_prime").is_null()) site.z_prime = class_from_json(s.at("z_prime"));
      site.companion = parse_knot_expr(s.at("companion").get<std::string>(), base_dir);
      site.copies_per_c = s.contains("copies_per_c") ? integer_from_json(s.at("copies_per_c")) : Integer(1);
      cfg.sites.push_back(std::move(site));
    }
    if (j.contains("summand_scales")) {
      const auto& sc = j.at("summand_scales");
      if (sc.is_string()) {
        if (sc.get<std::string>() != "geometric") throw InputError("summand_scales must be a list or \"geometric\"");
        cfg.geometric_scales = true;
      } else {
        for (const auto& x : sc) cfg.summand_scales.push_back(integer_from_json(x));
      }
    }
    validate_config(cfg);
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed configuration: ") + e.what());
  }
}

InfectionConfig load_infection_config(const std::filesystem::path& path) {
  return parse_infection_config(read_json_file(path), path.parent_path());
}

}  // namespace knotcert
