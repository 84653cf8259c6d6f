// The OpenMP kernels must agree exactly with the serial reference.
#include "knotcert/kernels.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace knotcert;

namespace {

std::vector<Residues> random_generators(std::mt19937_64& rng, std::size_t count, std::size_t dim, std::int64_t q) {
  std::uniform_int_distribution<std::int64_t> d(0, q - 1);
  std::vector<Residues> g(count, Residues(dim));
  for (auto& x : g)
    for (auto& v : x) v = d(rng);
  return g;
}

}  // namespace

TEST_CASE("element orders") {
  CHECK(element_order({0, 0}, 9) == 1);
  CHECK(element_order({3, 6}, 9) == 3);
  CHECK(element_order({3, 1}, 9) == 9);
  CHECK(element_order({2}, 8) == 4);
}

TEST_CASE("span enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t q = trial % 2 == 0 ? 9 : 8;
    const std::size_t dim = 1 + trial % 4;
    const auto gens = random_generators(rng, 1 + trial % 3, dim, q);
    std::vector<std::int64_t> orders;
    for (const auto& g : gens) orders.push_back(element_order(g, q));
    const auto a = kernels::enumerate_span(gens, orders, q, dim);
    const auto b = reference::enumerate_span(gens, orders, q, dim);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end()));
    const auto c = oracle::closure(gens, q);
    CHECK(std::set<Residues>(a.begin(), a.end()) == c);
  }
}

TEST_CASE("subgroup kernels") {
  for (auto [q, dim] : {std::pair<std::int64_t, std::size_t>{9, 3}, {3, 4}, {4, 3}, {27, 2}}) {
    const std::int64_t p = prime_power_decomposition(q).prime;
    std::vector<Residues> gens;
    for (std::size_t i = 0; i < dim; ++i) {
      Residues e(dim, 0);
      e[i] = 1;
      gens.push_back(e);
    }
    const auto group = reference::enumerate_span(gens, std::vector<std::int64_t>(dim, q), q, dim);
    for (std::int64_t order : {p, p * p}) {
      if (q % order != 0) continue;
      CHECK(kernels::cyclic_subgroups(group, order, q) == reference::cyclic_subgroups(group, order, q));
    }
    CHECK(kernels::elementary_rank2_subgroups(group, p, q) == reference::elementary_rank2_subgroups(group, p, q));
  }
}

TEST_CASE("filtering") {
  auto keep = [](std::size_t i) { return (i * 2654435761u) % 7 < 3; };
  CHECK(kernels::filter_indices(100000, keep) == reference::filter_indices(100000, keep));
  CHECK(kernels::filter_indices(0, keep).empty());
}
