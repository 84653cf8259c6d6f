#include "knotcert/gilmer.hpp"

#include "knotcert/error.hpp"
#include "knotcert/json_io.hpp"

#include <algorithm>
#include <set>

namespace knotcert {

namespace {

const char* const kConditionalOn = "c >= max(c0, 2)";

std::string conclusion_text(long genus) {
  return "g4 >= " + std::to_string(genus + 1) + " for all " + kConditionalOn;
}

bool contains_sorted(const std::vector<Residues>& sorted, const Residues& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Smallest power of p that is >= n.
Integer round_up_to_power(const Integer& n, std::int64_t p) {
  Integer r = 1;
  while (r < n) r *= static_cast<long>(p);
  return r;
}

}  // namespace

AbelianShape::AbelianShape(std::vector<Integer> factors) {
  for (auto& f : factors) {
    if (f <= 0) throw InputError("abelian shape factors must be positive (finite group)");
    if (f == 1) continue;
    if (!fits_int64(f)) throw InputError("invariant factor " + f.get_str() + " is too large");
    const auto pp = prime_power_decomposition(to_int64(f));
    if (pp.prime == 0) throw InputError("invariant factor " + f.get_str() + " is not a prime power");
    if (prime_ != 0 && pp.prime != prime_) throw InputError("invariant factors involve more than one prime");
    prime_ = pp.prime;
    factors_.push_back(f);
  }
  std::sort(factors_.begin(), factors_.end());
}

Integer AbelianShape::order() const {
  Integer r = 1;
  for (const auto& f : factors_) r *= f;
  return r;
}

Integer AbelianShape::exponent() const { return factors_.empty() ? Integer(1) : factors_.back(); }

AbelianShape AbelianShape::power(std::size_t copies) const {
  std::vector<Integer> all;
  for (std::size_t i = 0; i < copies; ++i) all.insert(all.end(), factors_.begin(), factors_.end());
  return AbelianShape(std::move(all));
}

Integer min_annihilator_order(const AbelianShape& h, long genus) {
  if (genus < 0) throw InputError("genus must be non-negative");
  const auto& f = h.factors();  // ascending
  const std::size_t drop = std::min(f.size(), static_cast<std::size_t>(2 * genus));
  Integer rest = 1;
  for (std::size_t i = 0; i + drop < f.size(); ++i) rest *= f[i];
  return floor_sqrt(rest);
}

std::vector<Subgroup> subgroups_of_order(const std::vector<Residues>& group, std::int64_t target, std::int64_t q,
                                         std::size_t cap) {
  const auto pp = prime_power_decomposition(q);
  if (pp.prime == 0) throw InputError("modulus " + std::to_string(q) + " is not a prime power");
  const std::int64_t p = pp.prime;
  std::vector<Subgroup> out;
  if (target == p) {
    out = kernels::cyclic_subgroups(group, p, q);
  } else if (target == p * p) {
    if (q % (p * p) == 0) out = kernels::cyclic_subgroups(group, p * p, q);
    auto elementary = kernels::elementary_rank2_subgroups(group, p, q);
    out.insert(out.end(), std::make_move_iterator(elementary.begin()), std::make_move_iterator(elementary.end()));
    std::sort(out.begin(), out.end());
  } else {
    throw InputError("subgroup enumeration supports orders p and p^2 only (asked for " + std::to_string(target) + ")");
  }
  if (out.size() > cap) {
    throw CapExceeded(std::to_string(out.size()) + " subgroups exceed the cap of " + std::to_string(cap));
  }
  return out;
}

GilmerVerdict gilmer_contradiction_check(const std::vector<Residues>& group, const std::vector<Residues>& small,
                                         const Integer& n, std::int64_t q, std::size_t cap) {
  GilmerVerdict v;
  if (Integer(static_cast<unsigned long>(small.size())) < n) {
    v.contradiction = true;
    v.method = "cardinality";
    return v;
  }
  v.method = "enumeration";
  const auto pp = prime_power_decomposition(q);
  const Integer target = round_up_to_power(n, pp.prime);
  if (target == 1) {
    v.subgroups_checked = 1;
    const Residues zero(group.empty() ? 0 : group.front().size(), 0);
    if (contains_sorted(small, zero)) v.witness = Subgroup{{zero}, true};
    v.contradiction = !v.witness;
    return v;
  }
  if (!fits_int64(target)) throw InputError("annihilator bound too large to enumerate");
  for (auto& s : subgroups_of_order(group, to_int64(target), q, cap)) {
    ++v.subgroups_checked;
    if (std::all_of(s.elements.begin(), s.elements.end(), [&](const Residues& x) { return contains_sorted(small, x); })) {
      v.witness = std::move(s);
      break;
    }
  }
  v.contradiction = !v.witness;
  return v;
}

ProductSmallSet::ProductSmallSet(std::vector<std::vector<Residues>> per_copy) : factors_(std::move(per_copy)) {
  for (const auto& f : factors_) count_ *= static_cast<unsigned long>(f.size());
}

std::vector<std::vector<Residues>> ProductSmallSet::materialize(std::size_t cap) const {
  if (count_ > Integer(static_cast<unsigned long>(cap))) {
    throw CapExceeded("product small set of size " + count_.get_str() + " exceeds the cap of " + std::to_string(cap));
  }
  std::vector<std::vector<Residues>> out;
  if (count_ == 0) return out;
  std::vector<std::size_t> idx(factors_.size(), 0);
  while (true) {
    std::vector<Residues> tuple;
    for (std::size_t k = 0; k < factors_.size(); ++k) tuple.push_back(factors_[k][idx[k]]);
    out.push_back(std::move(tuple));
    std::size_t k = factors_.size();
    while (k > 0) {
      --k;
      if (++idx[k] < factors_[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

GenusCertificate certify_genus_lower_bound(const InfectionConfig& cfg, std::size_t summands, long genus,
                                           const CertifyOptions& options) {
  if (summands == 0) throw InputError("copies must be at least 1");
  if (genus < 0) throw InputError("genus must be non-negative");
  GenusCertificate cert;
  cert.invariant_factors = cfg.base.invariant_factors();
  cert.modulus = cfg.modulus;
  cert.summands = summands;
  cert.genus_target = genus;
  cert.summand_scales = resolved_scales(cfg, summands);
  const std::int64_t q = cfg.modulus;
  const std::int64_t p = prime_power_decomposition(q).prime;

  const AbelianShape shape(cfg.base.invariant_factors());
  if (shape.prime() != 0 && shape.prime() != p) {
    cert.failures.push_back("cover homology is a " + std::to_string(shape.prime()) + "-group but the modulus is a power of " +
                            std::to_string(p));
  } else if (Integer(static_cast<long>(q)) % shape.exponent() != 0) {
    cert.failures.push_back("exponent " + shape.exponent().get_str() + " of the cover homology does not divide the modulus");
  }

  const auto characters = enumerate_characters(cfg.base, q, options.character_cap);
  cert.character_count = characters.size();
  cert.small_set = small_character_set(cfg, characters);
  if (cert.small_set.size() == characters.size()) cert.failures.push_back("small set equals whole character group");

  cert.ledger = verify_separation_profile(cfg, genus, summands);
  if (cert.ledger.entries.empty()) cert.failures.push_back("separation ledger is empty");
  for (const auto& e : cert.ledger.entries) {
    if (!e.holds) {
      cert.failures.push_back("separation fails for summand " + std::to_string(e.summand) + " site " +
                              std::to_string(e.site_label));
    }
  }

  cert.annihilator_bound = min_annihilator_order(shape.power(summands), genus);
  std::vector<Residues> small_values;
  for (const auto& c : cert.small_set) small_values.push_back(c.values);
  const ProductSmallSet product(std::vector<std::vector<Residues>>(summands, small_values));
  cert.product_small_set_size = product.count();

  if (summands == 1) {
    std::vector<Residues> all_values;
    all_values.reserve(characters.size());
    for (const auto& c : characters) all_values.push_back(c.values);
    cert.subgroup_check = gilmer_contradiction_check(all_values, small_values, cert.annihilator_bound, q, options.subgroup_cap);
    if (!cert.subgroup_check.contradiction) {
      cert.failures.push_back("a subgroup of order " + cert.annihilator_bound.get_str() + " lies inside the small set");
    }
  } else {
    cert.subgroup_check.method = "cardinality";
    cert.subgroup_check.contradiction = product.count() < cert.annihilator_bound;
    if (!cert.subgroup_check.contradiction) {
      cert.failures.push_back("product small set of size " + product.count().get_str() +
                              " is not below the annihilator bound " + cert.annihilator_bound.get_str());
    }
  }

  if (cert.failures.empty()) cert.conclusion = conclusion_text(genus);
  return cert;
}

namespace {

nlohmann::json residues_json(const Residues& r) { return nlohmann::json(r); }

nlohmann::json ledger_json(const SeparationLedger& ledger) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : ledger.entries) {
    out.push_back({{"summand", e.summand},
                   {"case", e.site_label},
                   {"slope", integer_to_json(e.bound.slope)},
                   {"intercept", integer_to_json(e.bound.intercept)},
                   {"holds_c_ge_2", e.holds}});
  }
  return out;
}

}  // namespace

nlohmann::json GenusCertificate::to_json() const {
  nlohmann::json j;
  j["invariant_factors"] = nlohmann::json::array();
  for (const auto& f : invariant_factors) j["invariant_factors"].push_back(integer_to_json(f));
  j["modulus"] = modulus;
  j["summands"] = summands;
  j["genus_target"] = genus_target;
  j["character_count"] = character_count;
  j["small_set"] = nlohmann::json::array();
  for (const auto& c : small_set) j["small_set"].push_back(residues_json(c.values));
  j["small_set_size"] = small_set.size();
  j["product_small_set_size"] = integer_to_json(product_small_set_size);
  j["annihilator_bound"] = integer_to_json(annihilator_bound);
  nlohmann::json sc = {{"method", subgroup_check.method},
                       {"contradiction", subgroup_check.contradiction},
                       {"subgroups_checked", subgroup_check.subgroups_checked}};
  if (subgroup_check.witness) {
    sc["witness"] = nlohmann::json::array();
    for (const auto& x : subgroup_check.witness->elements) sc["witness"].push_back(residues_json(x));
  }
  j["subgroup_check"] = std::move(sc);
  j["separation_ledger"] = ledger_json(ledger);
  j["separated"] = ledger.separated;
  j["summand_scales"] = nlohmann::json::array();
  for (const auto& s : summand_scales) j["summand_scales"].push_back(integer_to_json(s));
  j["failures"] = failures;
  j["certified"] = certified();
  if (conclusion) j["conclusion"] = *conclusion;
  j["conditional_on"] = kConditionalOn;
  return j;
}

std::vector<std::string> verify_certificate(const nlohmann::json& cert, const InfectionConfig& cfg) {
  std::vector<std::string> problems;
  auto problem = [&problems](std::string s) { problems.push_back(std::move(s)); };
  try {
    const std::int64_t q = cert.at("modulus").get<std::int64_t>();
    if (q != cfg.modulus) problem("modulus differs from the configuration");
    std::vector<Integer> factors;
    for (const auto& f : cert.at("invariant_factors")) factors.push_back(integer_from_json(f));
    if (factors != cfg.base.invariant_factors()) problem("invariant factors differ from the configuration base");
    const auto summands = cert.at("summands").get<std::size_t>();
    const long genus = cert.at("genus_target").get<long>();
    if (summands == 0) problem("summands must be positive");

    std::vector<Residues> small;
    for (const auto& v : cert.at("small_set")) {
      Character chi{cfg.modulus, v.get<Residues>()};
      if (!is_character(cfg.base, chi)) problem("small set entry " + v.dump() + " is not a character");
      else if (!conditions_satisfied(cfg, chi).all) problem("small set entry " + v.dump() + " violates a site condition");
      small.push_back(chi.values);
    }
    if (!std::is_sorted(small.begin(), small.end()) || std::adjacent_find(small.begin(), small.end()) != small.end()) {
      problem("small set is not strictly sorted");
    }
    if (cert.at("small_set_size").get<std::size_t>() != small.size()) problem("small_set_size does not match the listing");
    const Integer product = pow_int(Integer(static_cast<unsigned long>(small.size())), summands);
    if (integer_from_json(cert.at("product_small_set_size")) != product) problem("product_small_set_size is wrong");

    const Integer bound = min_annihilator_order(AbelianShape(cfg.base.invariant_factors()).power(summands), genus);
    if (integer_from_json(cert.at("annihilator_bound")) != bound) problem("annihilator bound does not recompute");

    const auto& sc = cert.at("subgroup_check");
    const bool contradiction = sc.at("contradiction").get<bool>();
    if (sc.contains("witness")) {
      std::vector<Residues> w;
      for (const auto& x : sc.at("witness")) w.push_back(x.get<Residues>());
      std::set<Residues> ws(w.begin(), w.end());
      bool closed = true;
      for (const auto& a : w) {
        if (!std::binary_search(small.begin(), small.end(), a)) problem("witness element outside the small set");
        for (const auto& b : w) closed = closed && ws.count(add(a, b, q)) > 0;
      }
      if (!closed) problem("witness is not closed under addition");
      if (Integer(static_cast<unsigned long>(w.size())) < bound) problem("witness is smaller than the annihilator bound");
      if (contradiction) problem("witness present but a contradiction is claimed");
    }
    if (contradiction && sc.at("method").get<std::string>() == "cardinality" && !(product < bound)) {
      problem("cardinality shortcut claimed but the product small set is not below the bound");
    }

    InfectionConfig scaled = cfg;
    scaled.summand_scales.clear();
    scaled.geometric_scales = false;
    for (const auto& s : cert.at("summand_scales")) scaled.summand_scales.push_back(integer_from_json(s));
    const SeparationLedger fresh = verify_separation_profile(scaled, genus, summands);
    const auto& listed = cert.at("separation_ledger");
    bool all_hold = !listed.empty();
    if (listed.size() != fresh.entries.size()) {
      problem("separation ledger has the wrong number of cases");
    } else {
      for (std::size_t i = 0; i < listed.size(); ++i) {
        const LinearInC lin{integer_from_json(listed[i].at("slope")), integer_from_json(listed[i].at("intercept"))};
        if (!(lin == fresh.entries[i].bound)) problem("ledger case " + std::to_string(i) + " does not recompute");
        if (listed[i].at("holds_c_ge_2").get<bool>() != lin.positive_for_all_c_ge_2()) {
          problem("ledger case " + std::to_string(i) + " has a wrong holds flag");
        }
        all_hold = all_hold && lin.positive_for_all_c_ge_2();
      }
    }

    const bool should_certify = all_hold && contradiction && cert.at("failures").empty();
    if (cert.contains("conclusion") != should_certify) problem("conclusion presence does not match the checks");
    if (cert.contains("conclusion") && cert.at("conclusion").get<std::string>() != conclusion_text(genus)) {
      problem("conclusion text does not match the genus target");
    }
  } catch (const nlohmann::json::exception& e) {
    problem(std::string("malformed certificate: ") + e.what());
  }
  return problems;
}

}  // namespace knotcert
