#pragma once

#include <cstdint>
#include <vector>

namespace knotcert {

// A vector over Z/q, entries in [0, q). Ordered lexicographically.
using Residues = std::vector<std::int64_t>;

// Largest modulus accepted anywhere residues are multiplied; keeps every
// product of two residues inside 63 bits.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

inline Residues scale(const Residues& x, std::int64_t factor, std::int64_t q) {
  Residues r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = (x[i] * factor) % q;
  return r;
}

inline Residues add(const Residues& x, const Residues& y, std::int64_t q) {
  Residues r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::int64_t s = x[i] + y[i];
    r[i] = s >= q ? s - q : s;
  }
  return r;
}

inline Residues negate(const Residues& x, std::int64_t q) {
  Residues r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] == 0 ? 0 : q - x[i];
  return r;
}

inline bool is_zero(const Residues& x) {
  for (auto v : x)
    if (v != 0) return false;
  return true;
}

}  // namespace knotcert
