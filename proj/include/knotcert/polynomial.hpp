#pragma once

#include "knotcert/bigint.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace knotcert {

// Dense univariate polynomial, coefficients stored lowest degree first.
// The representation is always trimmed, so the zero polynomial has no
// coefficients and degree -1.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }
  static Polynomial monomial(const Coeff& c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }
  Coeff coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }
  const Coeff& leading() const { return coeffs_.back(); }

  template <class X>
  X evaluate(const X& x) const {
    X acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + X(coeffs_[k]);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r[k] += b.coeffs_[k];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Coeff& s, const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.coeffs_) c *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

// Quotient and remainder over Q; b must be nonzero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

// Monic greatest common divisor over Q (zero if both inputs are zero).
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

// Remainder of a modulo a monic integer polynomial; stays in Z[t].
IntPolynomial remainder_monic(const IntPolynomial& a, const IntPolynomial& monic);

// Exact quotient by a monic divisor; throws std::domain_error when the
// division leaves a remainder.
IntPolynomial exact_quotient_monic(const IntPolynomial& a, const IntPolynomial& monic);

std::string to_string(const IntPolynomial& p, char variable = 't');

// Number of distinct real roots in the open interval (lo, hi), by Sturm's
// theorem. Neither endpoint may be a root; std::invalid_argument otherwise.
std::size_t count_distinct_real_roots(const RatPolynomial& p, const Rational& lo, const Rational& hi);

// Same, counting multiplicity (via the chain p, gcd(p, p'), ...).
std::size_t count_real_roots_with_multiplicity(const RatPolynomial& p, const Rational& lo, const Rational& hi);

// n-th cyclotomic polynomial, n >= 1.
IntPolynomial cyclotomic_polynomial(int n);

int euler_phi(int n);

}  // namespace knotcert
