#include "knotcert/infection.hpp"

#include "knotcert/error.hpp"
#include "knotcert/kernels.hpp"
#include "knotcert/seifert.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>

namespace knotcert {

void validate_config(InfectionConfig& cfg) {
  if (cfg.modulus < 2 || !is_prime_power(cfg.modulus) || cfg.modulus >= kMaxModulus) {
    throw InputError("modulus " + std::to_string(cfg.modulus) + " is not a prime power");
  }
  const std::size_t n = cfg.base.generator_count();
  std::set<long> labels;
  for (const auto& s : cfg.sites) {
    if (!labels.insert(s.label).second) throw InputError("duplicate site label " + std::to_string(s.label));
    if (s.z.coefficients.size() != n || (s.z_prime && s.z_prime->coefficients.size() != n)) {
      throw InputError("site " + std::to_string(s.label) + ": class length does not match the " + std::to_string(n) +
                       " cover generators");
    }
    if (s.copies_per_c < 0) throw InputError("site " + std::to_string(s.label) + ": negative copies_per_c");
  }
  for (const auto& sc : cfg.summand_scales)
    if (sc <= 0) throw InputError("summand scales must be positive");
  std::sort(cfg.sites.begin(), cfg.sites.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
}

std::vector<SiteProfile> signature_profile(const InfectionConfig& cfg) {
  const std::int64_t q = cfg.modulus;
  std::vector<SiteProfile> out;
  for (const auto& site : cfg.sites) {
    SiteProfile p;
    p.label = site.label;
    p.copies_per_c = site.copies_per_c;
    p.paired = site.z_prime.has_value();
    p.sigma.assign(static_cast<std::size_t>(q), 0);
    for (std::int64_t a = 1; a < q; ++a) {
      try {
        p.sigma[static_cast<std::size_t>(a)] = tl_signature_at(site.companion, a, q);
      } catch (const SingularOmega& e) {
        throw SingularOmega(e.denominator(), "site " + std::to_string(site.label));
      }
    }
    p.min_nonzero = q > 1 ? std::numeric_limits<long>::max() : 0;
    for (std::int64_t a = 1; a < q; ++a) {
      const long m = std::labs(p.sigma[static_cast<std::size_t>(a)]);
      p.max_magnitude = std::max(p.max_magnitude, m);
      p.min_nonzero = std::min(p.min_nonzero, m);
    }
    bool any_pair = false;
    long gap = std::numeric_limits<long>::max();
    for (std::int64_t a = 0; a < q; ++a)
      for (std::int64_t b = 0; b < q; ++b) {
        const long d = std::labs(p.sigma[static_cast<std::size_t>(a)] - p.sigma[static_cast<std::size_t>(b)]);
        p.max_gap = std::max(p.max_gap, d);
        if (b == a || b == (q - a) % q) continue;
        any_pair = true;
        gap = std::min(gap, d);
      }
    p.min_violation_gap = any_pair ? gap : 0;
    out.push_back(std::move(p));
  }
  return out;
}

Integer cg_correction(const InfectionConfig& cfg, const std::vector<SiteProfile>& profile, const Character& chi) {
  Integer total = 0;
  for (std::size_t i = 0; i < cfg.sites.size(); ++i) {
    const auto& site = cfg.sites[i];
    const auto& sig = profile[i].sigma;
    long term = sig[static_cast<std::size_t>(evaluate(chi, site.z))];
    if (site.z_prime) term -= sig[static_cast<std::size_t>(evaluate(chi, *site.z_prime))];
    total += 2 * site.copies_per_c * Integer(term);
  }
  return total;
}

Integer cg_correction(const InfectionConfig& cfg, const Character& chi) {
  return cg_correction(cfg, signature_profile(cfg), chi);
}

ConditionReport conditions_satisfied(const InfectionConfig& cfg, const Character& chi) {
  ConditionReport r;
  const std::int64_t q = chi.modulus;
  for (const auto& site : cfg.sites) {
    const std::int64_t a = evaluate(chi, site.z);
    bool ok = false;
    if (!site.z_prime) {
      ok = a == 0;
    } else {
      const std::int64_t b = evaluate(chi, *site.z_prime);
      ok = a == b || a == (q - b) % q;
    }
    r.per_site.push_back(ok);
    r.all = r.all && ok;
  }
  return r;
}

std::vector<Character> small_character_set(const InfectionConfig& cfg, const std::vector<Character>& all) {
  const auto keep = kernels::filter_indices(all.size(), [&](std::size_t i) { return conditions_satisfied(cfg, all[i]).all; });
  std::vector<Character> out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(all[i]);
  return out;
}

std::vector<Character> small_character_set(const InfectionConfig& cfg, std::size_t cap) {
  return small_character_set(cfg, enumerate_characters(cfg.base, cfg.modulus, cap));
}

SeparationLedger verify_separation_profile(const InfectionConfig& cfg, const std::vector<SiteProfile>& profile,
                                           long genus, std::size_t summands) {
  SeparationLedger ledger;
  const auto scales = resolved_scales(cfg, summands);
  // Largest possible |contribution| of every site already passed, per unit c.
  Integer earlier = 0;
  for (std::size_t k = 0; k < summands; ++k) {
    const Integer& scale = scales[k];
    for (const auto& p : profile) {
      const Integer copies = scale * p.copies_per_c;
      const long floor_value = p.paired ? p.min_violation_gap : p.min_nonzero;
      const long ceiling = p.paired ? p.max_gap : p.max_magnitude;
      LedgerEntry e;
      e.summand = k;
      e.site_label = p.label;
      e.bound.slope = 2 * copies * floor_value - Integer(static_cast<unsigned long>(summands)) - earlier;
      e.bound.intercept = -4 * Integer(genus);
      e.holds = e.bound.positive_for_all_c_ge_2();
      ledger.entries.push_back(e);
      earlier += 2 * copies * ceiling;
    }
  }
  ledger.separated = !ledger.entries.empty() &&
                     std::all_of(ledger.entries.begin(), ledger.entries.end(), [](const auto& e) { return e.holds; });
  return ledger;
}

SeparationLedger verify_separation_profile(const InfectionConfig& cfg, long genus, std::size_t summands) {
  return verify_separation_profile(cfg, signature_profile(cfg), genus, summands);
}

std::vector<Integer> resolved_scales(const InfectionConfig& cfg, std::size_t summands) {
  if (summands == 0) throw InputError("at least one summand is required");
  if (cfg.geometric_scales) return geometric_summand_scales(summands);
  if (cfg.summand_scales.empty()) return std::vector<Integer>(summands, Integer(1));
  if (cfg.summand_scales.size() != summands) {
    throw InputError("summand_scales lists " + std::to_string(cfg.summand_scales.size()) + " scales for " +
                     std::to_string(summands) + " summands");
  }
  return cfg.summand_scales;
}

std::vector<Integer> geometric_summand_scales(std::size_t summands) {
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= summands; ++k) out.push_back(6 * Integer(static_cast<unsigned long>(summands)) * pow_int(2, 25 * k));
  return out;
}

}  // namespace knotcert
