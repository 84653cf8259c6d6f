#pragma once

#include "knotcert/cyclotomic.hpp"

#include <cstddef>
#include <vector>

namespace knotcert {

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
  bool operator==(const Inertia&) const = default;
};

// Square Hermitian matrix over a cyclotomic field, row-major.
struct HermitianMatrix {
  std::size_t size = 0;
  std::vector<CyclotomicField::Element> entries;

  CyclotomicField::Element& at(std::size_t r, std::size_t c) { return entries[r * size + c]; }
  const CyclotomicField::Element& at(std::size_t r, std::size_t c) const { return entries[r * size + c]; }
};

// Exact congruence diagonalisation. Pivot signs are read under the
// embedding zeta -> exp(2 pi i j / n). Throws invalid_argument if the
// input is not Hermitian.
Inertia hermitian_inertia(const CyclotomicField& field, HermitianMatrix h, long embedding);

}  // namespace knotcert
