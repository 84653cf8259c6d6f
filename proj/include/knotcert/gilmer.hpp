#pragma once

#include "knotcert/bigint.hpp"
#include "knotcert/branched_cover.hpp"
#include "knotcert/infection.hpp"
#include "knotcert/kernels.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace knotcert {

inline constexpr std::size_t kDefaultSubgroupCap = 100'000;

// Invariant factors of a finite abelian p-group.
class AbelianShape {
 public:
  explicit AbelianShape(std::vector<Integer> factors);  // InputError unless all are powers of one prime

  const std::vector<Integer>& factors() const noexcept { return factors_; }
  std::int64_t prime() const noexcept { return prime_; }  // 0 for the trivial group
  Integer order() const;
  Integer exponent() const;
  AbelianShape power(std::size_t copies) const;  // direct sum of `copies` copies

 private:
  std::vector<Integer> factors_;  // ascending, 1s removed
  std::int64_t prime_ = 0;
};

// |H|^(1/2) / |A1|^(1/2) with |A1| the product of the 2g largest factors,
// floored when the quotient is not a perfect square.
Integer min_annihilator_order(const AbelianShape& h, long genus);

// Subgroups of exact order p or p^2 inside `group`, a complete sorted
// listing of a subgroup of (Z/q)^n with q a power of p. CapExceeded beyond
// `cap` subgroups; InputError for other target orders.
std::vector<Subgroup> subgroups_of_order(const std::vector<Residues>& group, std::int64_t target, std::int64_t q,
                                         std::size_t cap = kDefaultSubgroupCap);

struct GilmerVerdict {
  bool contradiction = false;
  std::string method;  // "cardinality" or "enumeration"
  std::size_t subgroups_checked = 0;
  std::optional<Subgroup> witness;  // a subgroup of order n inside the small set
};

// Is there a subgroup of order >= n inside `small`? None means contradiction.
// Both inputs are sorted value vectors; `small` must be a subset of `group`.
GilmerVerdict gilmer_contradiction_check(const std::vector<Residues>& group, const std::vector<Residues>& small,
                                         const Integer& n, std::int64_t q, std::size_t cap = kDefaultSubgroupCap);

// Product of per-summand small sets, counted without being built.
class ProductSmallSet {
 public:
  explicit ProductSmallSet(std::vector<std::vector<Residues>> per_copy);

  const Integer& count() const noexcept { return count_; }
  const std::vector<std::vector<Residues>>& factors() const noexcept { return factors_; }
  // Every tuple (one element per copy), in lexicographic order. CapExceeded beyond cap.
  std::vector<std::vector<Residues>> materialize(std::size_t cap) const;

 private:
  std::vector<std::vector<Residues>> factors_;
  Integer count_ = 1;
};

ProductSmallSet product_small_set(const std::vector<std::vector<Residues>>& per_copy);

struct CertifyOptions {
  std::size_t character_cap = kDefaultEnumerationCap;
  std::size_t subgroup_cap = kDefaultSubgroupCap;
};

struct GenusCertificate {
  std::vector<Integer> invariant_factors;  // of one summand
  std::int64_t modulus = 1;
  std::size_t summands = 1;
  long genus_target = 0;
  std::size_t character_count = 0;
  std::vector<Character> small_set;  // per summand
  Integer product_small_set_size;
  Integer annihilator_bound;
  GilmerVerdict subgroup_check;
  SeparationLedger ledger;
  std::vector<Integer> summand_scales;
  std::vector<std::string> failures;
  std::optional<std::string> conclusion;

  bool certified() const { return conclusion.has_value(); }
  nlohmann::json to_json() const;
};

GenusCertificate certify_genus_lower_bound(const InfectionConfig& cfg, std::size_t summands, long genus,
                                           const CertifyOptions& options = {});

// Re-runs the cheap checks on an emitted certificate: small-set membership
// and conditions, witness closure, ledger arithmetic against a fresh
// profile, the annihilator bound, and that a conclusion appears exactly
// when nothing failed. Returns the list of problems (empty when valid).
std::vector<std::string> verify_certificate(const nlohmann::json& certificate, const InfectionConfig& cfg);

}  // namespace knotcert
