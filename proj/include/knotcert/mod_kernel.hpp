#pragma once

#include "knotcert/bigint.hpp"
#include "knotcert/int_matrix.hpp"
#include "knotcert/residues.hpp"
#include "knotcert/smith.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace knotcert {

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

// Solution group {c in (Z/q)^n : M c = 0 mod q}, held as a direct sum of
// cyclic pieces. The generators come from the Smith form of M, so the
// group is never materialized unless enumerate() is called.
class ModKernel {
 public:
  ModKernel(std::int64_t modulus, std::vector<std::vector<std::int64_t>> relation_mod_q,
            std::vector<Residues> generators, std::vector<std::int64_t> generator_orders);

  std::int64_t modulus() const noexcept { return modulus_; }
  std::size_t dimension() const noexcept { return relation_.size(); }
  const std::vector<Residues>& generators() const noexcept { return generators_; }
  const std::vector<std::int64_t>& generator_orders() const noexcept { return orders_; }
  const Integer& order() const noexcept { return order_; }

  bool contains(const Residues& c) const;

  // Every solution, lexicographically sorted. Throws CapExceeded when the
  // group has more than `cap` elements.
  std::vector<Residues> enumerate(std::size_t cap = kDefaultEnumerationCap) const;

 private:
  std::int64_t modulus_;
  std::vector<std::vector<std::int64_t>> relation_;
  std::vector<Residues> generators_;
  std::vector<std::int64_t> orders_;
  Integer order_;
};

// M must be square and q a prime power below kMaxModulus.
ModKernel kernel_mod_q(const IntMatrix& m, std::int64_t q);
ModKernel kernel_mod_q(const IntMatrix& m, const SNFResult& snf, std::int64_t q);

}  // namespace knotcert
