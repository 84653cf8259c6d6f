#include "knotcert/colored_sig.hpp"

#include "knotcert/error.hpp"

namespace knotcert {

namespace {

void require_odd(long m) {
  if (m <= 0 || m % 2 == 0) throw InputError("m must be an odd positive integer, got " + std::to_string(m));
}

}  // namespace

Integer ind(const Rational& x) { return floor_of(x) - floor_of(Rational(-x)); }

Integer sigma_col_hopf_cable(long m) {
  require_odd(m);
  const Integer d = ind(Rational(m, 2)) - Integer(m) * ind(Rational(1, 2));
  return d * d;
}

Integer linking_Lm(long m) {
  require_odd(m);
  return Integer(m) * Integer(m);
}

Integer signature_Lm(long m) { return sigma_col_hopf_cable(m) - linking_Lm(m); }

Integer g4_bound_banded(long m) {
  const Integer value = abs_value(signature_Lm(m) + 2 * Integer(m - 1));
  return ceil_of(Rational(value, 2));
}

}  // namespace knotcert
