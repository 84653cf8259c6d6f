#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace knotcert {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool fits_int64(const Integer& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

// Throws std::overflow_error when x does not fit.
std::int64_t to_int64(const Integer& x);

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer floor_sqrt(const Integer& x) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer floor_of(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

// Non-negative residue of x modulo m (m > 0).
inline std::int64_t mod_reduce(const Integer& x, std::int64_t m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), Integer(static_cast<long>(m)).get_mpz_t());
  return static_cast<std::int64_t>(r.get_si());
}

inline std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;
};

// Decomposes q = p^k with p prime and k >= 1; returns prime == 0 otherwise.
PrimePower prime_power_decomposition(std::int64_t q);

inline bool is_prime_power(std::int64_t q) { return prime_power_decomposition(q).prime != 0; }

}  // namespace knotcert
