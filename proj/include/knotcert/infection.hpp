#pragma once

#include "knotcert/bigint.hpp"
#include "knotcert/branched_cover.hpp"
#include "knotcert/knot_expr.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotcert {

// One infection: the curve class z carries the companion J (scaled by
// copies_per_c copies of J per unit of the formal scale c); the paired class
// z_prime, when present, carries -J.
struct InfectionSite {
  long label = 0;
  HomologyClass z;
  std::optional<HomologyClass> z_prime;
  KnotExpr companion = KnotExpr::unknot();
  Integer copies_per_c = 1;
};

struct InfectionConfig {
  CoverPresentation base;
  std::vector<InfectionSite> sites;  // ascending by label
  std::int64_t modulus = 1;
  // Scale of each connected summand in a multi-copy sum, multiplying every
  // site's copies_per_c. Empty means all ones; geometric_scales overrides
  // with geometric_summand_scales.
  std::vector<Integer> summand_scales;
  bool geometric_scales = false;
};

// The per-summand scales used for a sum of `summands` copies. InputError if
// an explicit list has the wrong length.
std::vector<Integer> resolved_scales(const InfectionConfig& cfg, std::size_t summands);

// Checks q is a prime power, labels distinct and class dimensions match;
// sorts sites by label. Throws InputError.
void validate_config(InfectionConfig& cfg);

// a*c + b in the formal scale c.
struct LinearInC {
  Integer slope;
  Integer intercept;

  // a c + b > 0 for every integer c >= 2
  bool positive_for_all_c_ge_2() const { return slope >= 0 && 2 * slope + intercept > 0; }
  bool operator==(const LinearInC&) const = default;
};

// Tristram-Levine signatures of one companion (a single copy) at every
// power of exp(2 pi i / q), with the summary numbers the ledger uses.
struct SiteProfile {
  long label = 0;
  Integer copies_per_c = 1;
  bool paired = false;
  std::vector<long> sigma;   // sigma[a], a in [0, q); sigma[0] = 0
  long max_magnitude = 0;     // max over a != 0 of |sigma[a]|
  long min_nonzero = 0;       // min over a != 0 of |sigma[a]| (0 if some value vanishes)
  long min_violation_gap = 0;  // min over a != +-b of |sigma[a] - sigma[b]|
  long max_gap = 0;           // max over a, b of |sigma[a] - sigma[b]|
};

std::vector<SiteProfile> signature_profile(const InfectionConfig& cfg);

// Coefficient of c in 2 sigma_J0(w^chi(z0)) + 2 sum_i [sigma_Ji(w^chi(zi)) - sigma_Ji(w^chi(zi'))]
// for a single summand, with sigma at w^0 taken to be 0.
Integer cg_correction(const InfectionConfig& cfg, const Character& chi);
Integer cg_correction(const InfectionConfig& cfg, const std::vector<SiteProfile>& profile, const Character& chi);

struct ConditionReport {
  std::vector<bool> per_site;  // in site order
  bool all = true;
};

// Unpaired site: chi(z) = 0. Paired site: chi(z) = +-chi(z') mod q.
ConditionReport conditions_satisfied(const InfectionConfig& cfg, const Character& chi);

// Characters satisfying every site condition, lexicographic.
std::vector<Character> small_character_set(const InfectionConfig& cfg, std::size_t cap = kDefaultEnumerationCap);
std::vector<Character> small_character_set(const InfectionConfig& cfg, const std::vector<Character>& all);

struct LedgerEntry {
  std::size_t summand = 0;  // 0-based
  long site_label = 0;
  LinearInC bound;
  bool holds = false;
};

struct SeparationLedger {
  std::vector<LedgerEntry> entries;
  bool separated = false;  // every entry holds, and there is at least one
};

// For each site s (in summand, label order) as the last violated one: the
// correction is at least 2 |gap or value at s| c minus the largest possible
// contributions of every earlier site, and must beat the base term (at
// most c per summand) plus 4g.
SeparationLedger verify_separation_profile(const InfectionConfig& cfg, long genus, std::size_t summands = 1);
SeparationLedger verify_separation_profile(const InfectionConfig& cfg, const std::vector<SiteProfile>& profile,
                                           long genus, std::size_t summands);

// Summand scales 6N 2^(25k), k = 1..N.
std::vector<Integer> geometric_summand_scales(std::size_t summands);

}  // namespace knotcert
