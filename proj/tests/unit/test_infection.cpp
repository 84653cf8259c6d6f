#include "knotcert/config.hpp"
#include "knotcert/error.hpp"
#include "knotcert/infection.hpp"
#include "knotcert/paper_data.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <numeric>
#include <set>

using namespace knotcert;

namespace {

const char* const kCompanion = "3*T(2,3) # 3*T(2,5) # T(2,7) # 5*mirror(T(2,9))";

InfectionConfig bundled(std::int64_t q) {
  InfectionConfig cfg = default_paper_config();
  cfg.modulus = q;
  return cfg;
}

InfectionConfig flat_profile() {
  InfectionConfig cfg = bundled(9);
  for (auto& s : cfg.sites) s.copies_per_c = 1;
  return cfg;
}

// A single unpaired site on a trefoil base whose class is y0.
InfectionConfig single_site(const char* companion) {
  InfectionConfig cfg;
  cfg.base = CoverPresentation(SeifertKnot(IntMatrix{{-1, 1}, {0, -1}}));
  cfg.modulus = 9;
  InfectionSite s;
  s.label = 0;
  s.z = HomologyClass{{1, 0}};
  s.companion = parse_knot_expr(companion);
  cfg.sites.push_back(s);
  return cfg;
}

}  // namespace

TEST_CASE("linear forms in c") {
  CHECK(LinearInC{3, -4}.positive_for_all_c_ge_2());
  CHECK_FALSE(LinearInC{1, -4}.positive_for_all_c_ge_2());  // 2 - 4 < 0
  CHECK_FALSE(LinearInC{-1, 100}.positive_for_all_c_ge_2());
  CHECK(LinearInC{0, 1}.positive_for_all_c_ge_2());
  CHECK_FALSE(LinearInC{2, -4}.positive_for_all_c_ge_2());  // zero at c = 2
}

TEST_CASE("signature profile of the companion sum") {
  const auto profile = signature_profile(bundled(9));
  REQUIRE(profile.size() == 5);
  const std::vector<long> expected{0, 2, 4, 8, 16, 16, 8, 4, 2};
  for (const auto& p : profile) {
    CHECK(p.sigma == expected);
    CHECK(p.min_violation_gap == 2);
    CHECK(p.max_magnitude == 16);
    CHECK(p.min_nonzero == 2);
    CHECK(p.max_gap == 16);
  }
  CHECK(profile[1].copies_per_c * profile[1].min_violation_gap == 64);

  const auto unknot = signature_profile(single_site("0*T(2,3)"));
  CHECK(unknot[0].max_magnitude == 0);
  CHECK(unknot[0].min_violation_gap == 0);
  CHECK(signature_profile(single_site("T(2,3)"))[0].sigma == std::vector<long>{0, 0, -2, -2, -2, -2, -2, -2, 0});
}

TEST_CASE("cg correction") {
  InfectionConfig cfg = single_site(kCompanion);
  const auto chars = enumerate_characters(cfg.base, 9);
  REQUIRE(chars.size() == 3);
  CHECK(chars[1].values == Residues{3, 6});
  CHECK(cg_correction(cfg, chars[0]) == 0);
  CHECK(cg_correction(cfg, chars[1]) == 2 * 8);
  CHECK(cg_correction(cfg, chars[2]) == 2 * 8);
  cfg.sites[0].copies_per_c = 5;
  CHECK(cg_correction(cfg, chars[1]) == 2 * 5 * 8);
  cfg.sites[0].z_prime = HomologyClass{{0, 1}};  // chi(y1) = -chi(y0)
  CHECK(cg_correction(cfg, chars[1]) == 0);
  CHECK(conditions_satisfied(cfg, chars[1]).all);
}

TEST_CASE("cg correction on the bundled cover") {
  const InfectionConfig cfg = bundled(9);
  const auto profile = signature_profile(cfg);
  const auto chars = enumerate_characters(cfg.base, 9);
  std::size_t nonzero = 0;
  for (const auto& chi : chars) {
    const Integer v = cg_correction(cfg, profile, chi);
    CHECK(v == cg_correction(cfg, profile, Character{9, negate(chi.values, 9)}));
    if (conditions_satisfied(cfg, chi).all) CHECK(v == 0);
    if (v != 0) ++nonzero;
  }
  CHECK(nonzero > 0);
}

TEST_CASE("site conditions") {
  const InfectionConfig cfg = bundled(9);
  const auto chars = enumerate_characters(cfg.base, 9);
  CHECK(conditions_satisfied(cfg, chars.front()).all);
  for (const auto& chi : chars)
    if (chi.values[9] != 0) CHECK_FALSE(conditions_satisfied(cfg, chi).per_site[0]);

  const InfectionConfig three = bundled(3);
  for (const auto& chi : enumerate_characters(three.base, 3)) {
    if (chi.values[9] == 0 && chi.values[11] == 1 && chi.values[13] == 0 && chi.values[15] == 0) {
      const auto r = conditions_satisfied(three, chi);
      CHECK(r.all);
      CHECK(r.per_site.size() == 5);
    }
  }
}

TEST_CASE("condition rewrite table matches the site conditions") {
  const InfectionConfig cfg = bundled(9);
  const auto& d = load_paper_dataset();
  for (const auto& chi : enumerate_characters(cfg.base, 9)) {
    const auto r = conditions_satisfied(cfg, chi);
    const Residues red{chi.values[9], chi.values[11], chi.values[13], chi.values[15]};
    for (const auto& row : d.condition_table) {
      bool any = false;
      for (const auto& alt : row.alternatives) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < 4; ++i) s += alt[i] * red[i];
        any = any || s % 9 == 0;
      }
      CHECK(any == r.per_site[static_cast<std::size_t>(row.site)]);
    }
  }
}

TEST_CASE("small sets") {
  const auto s3 = small_character_set(bundled(3));
  REQUIRE(s3.size() == 3);
  for (std::size_t i = 1; i < 3; ++i) {
    CHECK(s3[i].values[9] == 0);
    CHECK(s3[i].values[13] == 0);
    CHECK(s3[i].values[15] == 0);
  }
  CHECK(rescaling_classes({s3[1], s3[2]}).size() == 1);

  InfectionConfig unknot;
  unknot.base = CoverPresentation(SeifertKnot());
  unknot.modulus = 9;
  CHECK(small_character_set(unknot).size() == 1);
}

TEST_CASE("characters dual to y11 pass every mod 9 condition") {
  // y11 coefficients of (z_i, z_i') agree up to sign and z0 = y9; checked on the reduced table directly
  const auto& d = load_paper_dataset();
  const std::pair<const char*, const char*> pairs[] = {{"z1", "z1'"}, {"z2", "z2'"}, {"z3", "z3'"}, {"z4", "z4'"}};
  for (const auto& [a, b] : pairs) {
    const auto x = d.z_reduced.at(a)[1], y = d.z_reduced.at(b)[1];
    CHECK(((x - y) % 9 == 0 || (x + y) % 9 == 0));
  }
  CHECK(d.z_reduced.at("z0")[1] == 0);
  const InfectionConfig cfg = bundled(9);
  const auto small = small_character_set(cfg);
  std::size_t dual = 0;
  for (const auto& chi : small)
    if (chi.values[9] == 0 && chi.values[13] == 0 && chi.values[15] == 0) ++dual;
  CHECK(dual == 9);
}

TEST_CASE("small set is stable under negation and rescaling") {
  for (std::int64_t q : {3, 9}) {
    const auto s = small_character_set(bundled(q));
    std::set<Residues> values;
    for (const auto& c : s) values.insert(c.values);
    for (const auto& c : s)
      for (std::int64_t u = 1; u < q; ++u)
        if (std::gcd(u, q) == 1) CHECK(values.count(scale(c.values, u, q)) == 1);
  }
}

TEST_CASE("separation ledger") {
  const auto ledger = verify_separation_profile(bundled(9), 1);
  REQUIRE(ledger.entries.size() == 5);
  CHECK(ledger.separated);
  CHECK(ledger.entries[0].bound == LinearInC{3, -4});
  CHECK(ledger.entries[1].bound == LinearInC{2 * 32 * 2 - 1 - 2 * 16, -4});
  for (const auto& e : ledger.entries) CHECK(e.holds);

  const auto flat = verify_separation_profile(flat_profile(), 1);
  CHECK_FALSE(flat.separated);
  CHECK_FALSE(flat.entries[1].holds);

  InfectionConfig empty = bundled(9);
  empty.sites.clear();
  CHECK_FALSE(verify_separation_profile(empty, 1).separated);

  // two summands at unit scale cannot separate: the second summand's gap is swamped
  CHECK_FALSE(verify_separation_profile(bundled(9), 2, 2).separated);
  InfectionConfig geometric = bundled(9);
  geometric.geometric_scales = true;
  const auto g2 = verify_separation_profile(geometric, 2, 2);
  CHECK(g2.separated);
  CHECK(g2.entries.size() == 10);
  InfectionConfig wrong = bundled(9);
  wrong.summand_scales = {1, 2, 3};
  CHECK_THROWS_AS(verify_separation_profile(wrong, 1, 2), InputError);
}

TEST_CASE("geometric scales") {
  const auto s = geometric_summand_scales(2);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == 12 * pow_int(2, 25));
  CHECK(s[1] == 12 * pow_int(2, 50));
}

TEST_CASE("configuration files") {
  const auto cfg = load_infection_config(std::filesystem::path(KNOTCERT_SOURCE_DIR) / "data" / "paper_config.json");
  CHECK(cfg.modulus == 9);
  CHECK(cfg.sites.size() == 5);
  CHECK(cfg.sites[4].copies_per_c == 1048576);
  const auto sum = load_infection_config(std::filesystem::path(KNOTCERT_SOURCE_DIR) / "data" / "paper_sum_config.json");
  CHECK(sum.geometric_scales);

  nlohmann::json j = {{"base", "T(2,3)"}, {"modulus", 6}, {"sites", nlohmann::json::array()}};
  CHECK_THROWS_AS(parse_infection_config(j), InputError);
  j["modulus"] = 3;
  CHECK(parse_infection_config(j).base.order() == 3);
  j["sites"] = {{{"label", 0}, {"z", {1}}, {"companion", "T(2,3)"}}};
  CHECK_THROWS_AS(parse_infection_config(j), InputError);
  j["sites"] = {{{"label", 0}, {"z", {1, 0}}, {"companion", "T(2,3)"}}, {{"label", 0}, {"z", {0, 1}}, {"companion", "T(2,5)"}}};
  CHECK_THROWS_AS(parse_infection_config(j), InputError);
  j.erase("sites");
  CHECK_THROWS_AS(parse_infection_config(j), InputError);
}
