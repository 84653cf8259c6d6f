#include "knotcert/paper_data.hpp"

#include "knotcert/error.hpp"
#include "knotcert/json_io.hpp"
#include "knotcert/knot_expr.hpp"
#include "knotcert/seifert.hpp"

#include <mutex>

namespace knotcert {

namespace detail {
extern const std::string_view kBundledDataset;
}

namespace {

std::vector<std::int64_t> int_vector(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an integer array");
  std::vector<std::int64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(std::string(what) + " must be an integer array");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

std::int64_t dot_mod(const std::vector<std::int64_t>& coeffs, const std::vector<std::int64_t>& values, std::int64_t q) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc = (acc + mod_reduce(coeffs[i], q) * values[i]) % q;
  return acc;
}

std::string show(const Residues& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

KnotDataset parse_dataset(const nlohmann::json& j) {
  try {
    KnotDataset d;
    d.seifert_matrix = matrix_from_json(j.at("seifert_matrix"));
    for (const auto& f : j.at("expected_invariant_factors")) d.expected_invariant_factors.push_back(integer_from_json(f));
    d.modulus = j.at("modulus").get<std::int64_t>();
    for (const auto& g : j.at("reduced_generators")) d.reduced_generators.push_back(g.get<std::size_t>());
    for (const auto& [label, v] : j.at("z_raw").items()) d.z_raw[label] = HomologyClass{int_vector(v, "z_raw entry")};
    for (const auto& [label, v] : j.at("z_reduced").items()) d.z_reduced[label] = int_vector(v, "z_reduced entry");
    for (const auto& [key, v] : j.at("y_reduction").items()) {
      d.y_reduction[static_cast<std::size_t>(std::stoul(key))] = int_vector(v, "y_reduction entry");
    }
    for (const auto& row : j.at("condition_table")) {
      KnotDataset::ConditionRow r;
      r.site = row.at("site").get<long>();
      for (const auto& alt : row.at("alternatives")) r.alternatives.push_back(int_vector(alt, "condition form"));
      d.condition_table.push_back(std::move(r));
    }
    const auto& profile = j.at("profile");
    d.companion = profile.at("companion").get<std::string>();
    for (const auto& s : profile.at("sites")) {
      KnotDataset::ProfileSite p;
      p.label = s.at("label").get<long>();
      p.z = s.at("z").get<std::string>();
      if (!s.at("z_prime").is_null()) p.z_prime = s.at("z_prime").get<std::string>();
      p.copies_per_c = integer_from_json(s.at("copies_per_c"));
      d.profile_sites.push_back(std::move(p));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed dataset: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InputError("malformed dataset: y_reduction keys must be generator indices");
  }
}

void validate_dataset(const KnotDataset& d) {
  const IntMatrix& a = d.seifert_matrix;
  if (!a.is_square()) throw ValidationError("Seifert matrix is not square");
  const std::size_t n = a.rows();
  const Integer form = determinant(a - a.transpose());
  if (abs_value(form) != 1) {
    throw ValidationError("intersection form check failed: |det(A - A^T)| = " + abs_value(form).get_str() + ", expected 1");
  }
  const CoverPresentation cover{SeifertKnot(a)};
  if (cover.invariant_factors() != d.expected_invariant_factors) {
    std::string got;
    for (const auto& f : cover.invariant_factors()) got += (got.empty() ? "" : ",") + f.get_str();
    throw ValidationError("invariant factor check failed: A + A^T has factors (" + got + ")");
  }

  const std::size_t r = d.reduced_generators.size();
  for (auto g : d.reduced_generators)
    if (g >= n) throw ValidationError("reduced generator index out of range");
  for (const auto& [label, z] : d.z_raw) {
    if (z.coefficients.size() != n) throw ValidationError("z-class " + label + " has the wrong length");
    const auto it = d.z_reduced.find(label);
    if (it == d.z_reduced.end() || it->second.size() != r) {
      throw ValidationError("z-class " + label + " has no reduced form of length " + std::to_string(r));
    }
  }
  for (const auto& [k, v] : d.y_reduction)
    if (k >= n || v.size() != r) throw ValidationError("y-reduction row " + std::to_string(k) + " is malformed");

  const std::int64_t q = d.modulus;
  for (const auto& chi : enumerate_characters(cover, q)) {
    Residues reduced(r);
    for (std::size_t i = 0; i < r; ++i) reduced[i] = chi.values[d.reduced_generators[i]];
    for (const auto& [label, z] : d.z_raw) {
      if (evaluate(chi, z) != dot_mod(d.z_reduced.at(label), reduced, q)) {
        throw ValidationError("z-class check failed: " + label + " raw and reduced forms differ on character " +
                              show(chi.values));
      }
    }
    for (const auto& [k, v] : d.y_reduction) {
      if (chi.values[k] != dot_mod(v, reduced, q)) {
        throw ValidationError("y-reduction check failed: y" + std::to_string(k) + " on character " + show(chi.values));
      }
    }
    for (const auto& row : d.condition_table) {
      const KnotDataset::ProfileSite* site = nullptr;
      for (const auto& p : d.profile_sites)
        if (p.label == row.site) site = &p;
      if (site == nullptr) throw ValidationError("condition table names unknown site " + std::to_string(row.site));
      const std::int64_t x = evaluate(chi, d.z_raw.at(site->z));
      bool holds = x == 0;
      if (site->z_prime) {
        const std::int64_t y = evaluate(chi, d.z_raw.at(*site->z_prime));
        holds = x == y || x == (q - y) % q;
      }
      bool table = false;
      for (const auto& alt : row.alternatives) table = table || dot_mod(alt, reduced, q) == 0;
      if (holds != table) {
        throw ValidationError("condition table check failed for site " + std::to_string(row.site) + " on character " +
                              show(chi.values));
      }
    }
  }
}

std::string_view bundled_dataset_text() { return detail::kBundledDataset; }

const KnotDataset& load_paper_dataset() {
  static const KnotDataset dataset = [] {
    KnotDataset d = parse_dataset(nlohmann::json::parse(bundled_dataset_text()));
    validate_dataset(d);
    return d;
  }();
  return dataset;
}

InfectionConfig dataset_config(const KnotDataset& d) {
  InfectionConfig cfg;
  cfg.base = CoverPresentation(SeifertKnot(d.seifert_matrix));
  cfg.modulus = d.modulus;
  const KnotExpr companion = parse_knot_expr(d.companion);
  for (const auto& p : d.profile_sites) {
    InfectionSite s;
    s.label = p.label;
    s.z = d.z_raw.at(p.z);
    if (p.z_prime) s.z_prime = d.z_raw.at(*p.z_prime);
    s.companion = companion;
    s.copies_per_c = p.copies_per_c;
    cfg.sites.push_back(std::move(s));
  }
  validate_config(cfg);
  return cfg;
}

InfectionConfig default_paper_config() { return dataset_config(load_paper_dataset()); }

}  // namespace knotcert
