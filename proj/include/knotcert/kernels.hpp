#pragma once

// Data-parallel inner loops. Each kernel in `kernels` has a serial twin in
// `reference` with identical output; the references exist for the
// equivalence tests and the benchmark. Parallel kernels write into
// per-index slots and merge in canonical (lexicographic) order, so results
// never depend on the thread count.

#include "knotcert/residues.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace knotcert {

// A subgroup of (Z/q)^n listed by its sorted elements.
struct Subgroup {
  std::vector<Residues> elements;
  bool cyclic = true;

  std::size_t order() const noexcept { return elements.size(); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) { return a.elements <=> b.elements; }
};

// Additive order of x in (Z/q)^n (q a power of p).
std::int64_t element_order(const Residues& x, std::int64_t q);

namespace kernels {

// All sums sum_i a_i g_i (mod q), 0 <= a_i < orders[i], sorted. The caller
// bounds the product of the orders.
std::vector<Residues> enumerate_span(const std::vector<Residues>& generators, const std::vector<std::int64_t>& orders,
                                     std::int64_t q, std::size_t dimension);

// Indices i in [0, count) with keep(i), ascending.
template <class Predicate>
std::vector<std::size_t> filter_indices(std::size_t count, Predicate keep) {
  std::vector<unsigned char> flags(count, 0);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) flags[static_cast<std::size_t>(i)] = keep(static_cast<std::size_t>(i)) ? 1 : 0;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i)
    if (flags[i]) out.push_back(i);
  return out;
}

// Cyclic subgroups of the given order among `elements` (a sorted, complete
// group listing), each found once through its lexicographically least
// generator.
std::vector<Subgroup> cyclic_subgroups(const std::vector<Residues>& elements, std::int64_t order, std::int64_t q);

// Subgroups isomorphic to (Z/p)^2 inside `elements`.
std::vector<Subgroup> elementary_rank2_subgroups(const std::vector<Residues>& elements, std::int64_t p, std::int64_t q);

}  // namespace kernels

namespace reference {

std::vector<Residues> enumerate_span(const std::vector<Residues>& generators, const std::vector<std::int64_t>& orders,
                                     std::int64_t q, std::size_t dimension);

template <class Predicate>
std::vector<std::size_t> filter_indices(std::size_t count, Predicate keep) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i)
    if (keep(i)) out.push_back(i);
  return out;
}

std::vector<Subgroup> cyclic_subgroups(const std::vector<Residues>& elements, std::int64_t order, std::int64_t q);
std::vector<Subgroup> elementary_rank2_subgroups(const std::vector<Residues>& elements, std::int64_t p, std::int64_t q);

}  // namespace reference

}  // namespace knotcert
