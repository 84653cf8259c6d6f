#include "knotcert/bigint.hpp"

#include <numeric>
#include <stdexcept>

namespace knotcert {

std::int64_t to_int64(const Integer& x) {
  if (!fits_int64(x)) throw std::overflow_error("integer " + x.get_str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(x.get_si());
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

PrimePower prime_power_decomposition(std::int64_t q) {
  if (q < 2) return {};
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  int k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {};
  return {p, k};
}

}  // namespace knotcert
