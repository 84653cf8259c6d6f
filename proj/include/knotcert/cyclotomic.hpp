#pragma once

#include "knotcert/bigint.hpp"
#include "knotcert/polynomial.hpp"

#include <vector>

namespace knotcert {

// The field Q(zeta) with zeta a primitive n-th root of unity, elements held
// as rational coefficient vectors on 1, zeta, ..., zeta^(phi(n)-1) modulo
// the cyclotomic polynomial. Equality with zero is exact.
class CyclotomicField {
 public:
  using Element = std::vector<Rational>;

  explicit CyclotomicField(int n);

  int order() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  const IntPolynomial& minimal_polynomial() const noexcept { return modulus_; }

  Element zero() const { return Element(static_cast<std::size_t>(degree_)); }
  Element from_integer(const Integer& x) const;
  Element zeta_power(long k) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Integer& s, const Element& a) const;
  Element inverse(const Element& a) const;   // a must be nonzero
  Element conjugate(const Element& a) const;  // zeta -> zeta^-1

  static bool is_zero(const Element& a);
  bool is_real(const Element& a) const { return conjugate(a) == a; }

  // Sign of a real element under the embedding zeta -> exp(2 pi i j / n).
  // Evaluated in interval-bounded MPFR arithmetic at doubling precision
  // until the enclosure excludes zero.
  int real_sign(const Element& a, long j) const;

 private:
  int n_;
  int degree_;
  IntPolynomial modulus_;
  std::vector<Element> powers_;  // zeta^k reduced, k in [0, n)
};

}  // namespace knotcert
