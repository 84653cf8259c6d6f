#pragma once

#include "knotcert/bigint.hpp"
#include "knotcert/branched_cover.hpp"
#include "knotcert/infection.hpp"
#include "knotcert/int_matrix.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knotcert {

// Base knot data: a Seifert matrix, curve classes in the y generators with
// their reductions to a small generating set, the rewritten condition
// table, and the default companion profile.
struct KnotDataset {
  struct ConditionRow {
    long site = 0;
    // Linear forms on the reduced generators; the site condition holds iff
    // one of them vanishes mod the modulus.
    std::vector<std::vector<std::int64_t>> alternatives;
  };
  struct ProfileSite {
    long label = 0;
    std::string z;
    std::optional<std::string> z_prime;
    Integer copies_per_c = 1;
  };

  IntMatrix seifert_matrix;
  std::vector<Integer> expected_invariant_factors;
  std::int64_t modulus = 1;
  std::vector<std::size_t> reduced_generators;
  std::map<std::string, HomologyClass> z_raw;
  std::map<std::string, std::vector<std::int64_t>> z_reduced;
  std::map<std::size_t, std::vector<std::int64_t>> y_reduction;
  std::vector<ConditionRow> condition_table;
  std::string companion;
  std::vector<ProfileSite> profile_sites;
};

// Structural parse; InputError on missing or mistyped fields.
KnotDataset parse_dataset(const nlohmann::json& j);

// Load-time checks, each failure a ValidationError naming the invariant:
// unimodular intersection form, expected invariant factors, raw and reduced
// classes agree on every character, the y-reduction identities, and the
// condition table matches the site conditions on every character.
void validate_dataset(const KnotDataset& d);

std::string_view bundled_dataset_text();

// The bundled dataset, parsed and validated once.
const KnotDataset& load_paper_dataset();

// Infection configuration of a dataset's default profile.
InfectionConfig dataset_config(const KnotDataset& d);
InfectionConfig default_paper_config();

}  // namespace knotcert
