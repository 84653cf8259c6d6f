#include "knotcert/config.hpp"
#include "knotcert/error.hpp"
#include "knotcert/gilmer.hpp"
#include "knotcert/paper_data.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace knotcert;

namespace {

std::vector<Residues> full_group(std::int64_t q, std::size_t dim) {
  std::vector<Residues> out{Residues(dim, 0)};
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Residues> next;
    for (const auto& x : out)
      for (std::int64_t a = 0; a < q; ++a) {
        auto y = x;
        y[k] = a;
        next.push_back(y);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::set<Residues>> as_sets(const std::vector<Subgroup>& v) {
  std::set<std::set<Residues>> out;
  for (const auto& s : v) out.emplace(s.elements.begin(), s.elements.end());
  return out;
}

// Two trefoils, one unpaired site on each; only the trivial character survives.
InfectionConfig two_trefoils(long second_copies) {
  nlohmann::json j = {{"base", "T(2,3) # T(2,3)"},
                      {"modulus", 3},
                      {"sites",
                       {{{"label", 0}, {"z", {1, 0, 0, 0}}, {"companion", "3*T(2,3) # 3*T(2,5) # T(2,7) # 5*mirror(T(2,9))"}},
                        {{"label", 1},
                         {"z", {0, 0, 1, 0}},
                         {"companion", "3*T(2,3) # 3*T(2,5) # T(2,7) # 5*mirror(T(2,9))"},
                         {"copies_per_c", second_copies}}}}};
  return parse_infection_config(j);
}

}  // namespace

TEST_CASE("abelian shapes") {
  const AbelianShape h({9, 9, 9, 9});
  CHECK(h.prime() == 3);
  CHECK(h.order() == 6561);
  CHECK(h.exponent() == 9);
  CHECK(h.power(2).factors().size() == 8);
  CHECK(AbelianShape({1, 1}).prime() == 0);
  CHECK(AbelianShape({}).order() == 1);
  CHECK(AbelianShape({3, 1, 27}).factors() == std::vector<Integer>{3, 27});
  CHECK_THROWS_AS(AbelianShape({3, 5}), InputError);
  CHECK_THROWS_AS(AbelianShape({6}), InputError);
}

TEST_CASE("annihilator bound") {
  const AbelianShape h({9, 9, 9, 9});
  CHECK(min_annihilator_order(h, 0) == 81);
  CHECK(min_annihilator_order(h, 1) == 9);
  CHECK(min_annihilator_order(h, 2) == 1);
  CHECK(min_annihilator_order(h.power(2), 2) == 81);
  CHECK(min_annihilator_order(AbelianShape({3, 9, 27}), 1) == 1);
  CHECK(min_annihilator_order(AbelianShape({3, 3, 3}), 0) == 5);  // floor(sqrt 27)
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto hm = h.power(2 * m);
    CHECK(min_annihilator_order(hm, static_cast<long>(3 * m - 1)) == pow_int(3, 2 * m + 2));
    for (long g = 0; g < static_cast<long>(4 * m); ++g)
      CHECK(min_annihilator_order(hm, g + 1) <= min_annihilator_order(hm, g));
  }
  CHECK_THROWS_AS(min_annihilator_order(h, -1), InputError);
}

TEST_CASE("subgroup counts") {
  const auto g94 = full_group(9, 4);
  const auto order9 = subgroups_of_order(g94, 9, 9);
  CHECK(order9.size() == 1210);
  CHECK(std::count_if(order9.begin(), order9.end(), [](const Subgroup& s) { return s.cyclic; }) == 1080);
  CHECK(subgroups_of_order(g94, 3, 9).size() == 40);
  CHECK(subgroups_of_order(full_group(3, 4), 9, 3).size() == 130);
  CHECK(subgroups_of_order(full_group(9, 1), 9, 9).size() == 1);
  CHECK_THROWS_AS(subgroups_of_order(g94, 9, 9, 1209), CapExceeded);
  CHECK_THROWS_AS(subgroups_of_order(g94, 27, 9), InputError);
  CHECK_THROWS_AS(subgroups_of_order(g94, 9, 6), InputError);
  for (const auto& s : order9) {
    CHECK(s.order() == 9);
    CHECK(std::is_sorted(s.elements.begin(), s.elements.end()));
  }
}

TEST_CASE("subgroup enumeration agrees with brute force on small groups") {
  for (auto [q, dim] : {std::pair<std::int64_t, std::size_t>{3, 2}, {9, 2}, {3, 3}, {4, 2}, {2, 3}, {5, 2}}) {
    const auto g = full_group(q, dim);
    const std::int64_t p = prime_power_decomposition(q).prime;
    CHECK(as_sets(subgroups_of_order(g, p, q)) == oracle::brute_force_subgroups(q, dim, static_cast<std::size_t>(p)));
    CHECK(as_sets(subgroups_of_order(g, p * p, q)) == oracle::brute_force_subgroups(q, dim, static_cast<std::size_t>(p * p)));
  }
}

TEST_CASE("contradiction check") {
  const auto g = full_group(3, 2);
  const std::vector<Residues> line{{0, 0}, {0, 1}, {0, 2}};
  const std::vector<Residues> spread{{0, 0}, {0, 1}, {1, 0}};

  auto v = gilmer_contradiction_check(g, line, 3, 3);
  CHECK_FALSE(v.contradiction);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->elements == line);
  CHECK(v.method == "enumeration");

  v = gilmer_contradiction_check(g, spread, 3, 3);
  CHECK(v.contradiction);
  CHECK(v.subgroups_checked == 4);

  v = gilmer_contradiction_check(g, spread, 2, 3);  // rounds up to 3
  CHECK(v.contradiction);

  v = gilmer_contradiction_check(g, line, 4, 3);
  CHECK(v.contradiction);
  CHECK(v.method == "cardinality");

  v = gilmer_contradiction_check(g, {{0, 0}}, 1, 3);
  CHECK_FALSE(v.contradiction);
  v = gilmer_contradiction_check(g, {{0, 1}}, 1, 3);
  CHECK(v.contradiction);
}

TEST_CASE("product small sets") {
  const ProductSmallSet p({{{0}, {1}, {2}}, {{0}, {1}}});
  CHECK(p.count() == 6);
  const auto all = p.materialize(6);
  REQUIRE(all.size() == 6);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all.front() == std::vector<Residues>{{0}, {0}});
  CHECK(all.back() == std::vector<Residues>{{2}, {1}});
  CHECK_THROWS_AS(p.materialize(5), CapExceeded);
  CHECK(ProductSmallSet({{{0}}, {}}).count() == 0);
  CHECK(ProductSmallSet({{{0}}, {}}).materialize(10).empty());
  const ProductSmallSet big(std::vector<std::vector<Residues>>(40, std::vector<Residues>(9, Residues{0})));
  CHECK(big.count() == pow_int(9, 40));
}

TEST_CASE("a certified pipeline") {
  const InfectionConfig cfg = two_trefoils(4);
  const auto cert = certify_genus_lower_bound(cfg, 1, 0);
  CHECK(cert.failures.empty());
  REQUIRE(cert.certified());
  CHECK(*cert.conclusion == "g4 >= 1 for all c >= max(c0, 2)");
  CHECK(cert.small_set.size() == 1);
  CHECK(cert.annihilator_bound == 3);
  CHECK(cert.subgroup_check.method == "cardinality");
  const auto j = cert.to_json();
  CHECK(j["certified"] == true);
  CHECK(j["conditional_on"] == "c >= max(c0, 2)");
  CHECK(verify_certificate(j, cfg).empty());

  auto tampered = j;
  tampered["small_set"] = {{1, 2, 0, 0}};
  CHECK_FALSE(verify_certificate(tampered, cfg).empty());
  tampered = j;
  tampered["annihilator_bound"] = 1;
  CHECK_FALSE(verify_certificate(tampered, cfg).empty());
  tampered = j;
  tampered["separation_ledger"][1]["slope"] = 1000;
  CHECK_FALSE(verify_certificate(tampered, cfg).empty());
  tampered = j;
  tampered.erase("conclusion");
  CHECK_FALSE(verify_certificate(tampered, cfg).empty());
  tampered = j;
  tampered.erase("modulus");
  CHECK_FALSE(verify_certificate(tampered, cfg).empty());
}

TEST_CASE("named failures") {
  const auto weak = certify_genus_lower_bound(two_trefoils(1), 1, 0);
  CHECK_FALSE(weak.certified());
  CHECK(std::find(weak.failures.begin(), weak.failures.end(), "separation fails for summand 0 site 1") != weak.failures.end());
  CHECK(verify_certificate(weak.to_json(), two_trefoils(1)).empty());

  InfectionConfig unknot;
  unknot.base = CoverPresentation(SeifertKnot());
  unknot.modulus = 3;
  const auto u = certify_genus_lower_bound(unknot, 1, 0);
  CHECK_FALSE(u.certified());
  CHECK(std::find(u.failures.begin(), u.failures.end(), "small set equals whole character group") != u.failures.end());
  CHECK(std::find(u.failures.begin(), u.failures.end(), "separation ledger is empty") != u.failures.end());

  InfectionConfig five = two_trefoils(4);
  five.modulus = 5;
  const auto f = certify_genus_lower_bound(five, 1, 0);
  CHECK(f.failures.front() == "cover homology is a 3-group but the modulus is a power of 5");
  CHECK_THROWS_AS(certify_genus_lower_bound(two_trefoils(4), 0, 0), InputError);
}

TEST_CASE("certificates on the bundled knot verify") {
  const InfectionConfig cfg = default_paper_config();
  const auto one = certify_genus_lower_bound(cfg, 1, 1);
  CHECK(one.ledger.separated);
  CHECK(one.annihilator_bound == 9);
  CHECK(verify_certificate(one.to_json(), cfg).empty());
  if (one.subgroup_check.witness) {
    const auto& w = one.subgroup_check.witness->elements;
    CHECK(oracle::closure(w, 9).size() == w.size());
  }
}
