#include "knotcert/cyclotomic.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace knotcert {

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~MpfrValue() { mpfr_clear(value_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

}  // namespace

CyclotomicField::CyclotomicField(int n) : n_(n), degree_(euler_phi(n)), modulus_(cyclotomic_polynomial(n)) {
  powers_.reserve(static_cast<std::size_t>(n));
  Element current = zero();
  current[0] = 1;
  for (int k = 0; k < n; ++k) {
    powers_.push_back(current);
    // multiply by zeta: shift up, reduce the overflow coefficient
    Element next = zero();
    for (int i = 0; i + 1 < degree_; ++i) next[static_cast<std::size_t>(i + 1)] = current[static_cast<std::size_t>(i)];
    const Rational top = current[static_cast<std::size_t>(degree_ - 1)];
    if (top != 0) {
      for (int i = 0; i < degree_; ++i) next[static_cast<std::size_t>(i)] -= top * Rational(modulus_.coefficient(static_cast<std::size_t>(i)));
    }
    current = std::move(next);
  }
}

CyclotomicField::Element CyclotomicField::from_integer(const Integer& x) const {
  Element e = zero();
  e[0] = x;
  return e;
}

CyclotomicField::Element CyclotomicField::zeta_power(long k) const {
  long r = k % n_;
  if (r < 0) r += n_;
  return powers_[static_cast<std::size_t>(r)];
}

CyclotomicField::Element CyclotomicField::add(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

CyclotomicField::Element CyclotomicField::sub(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

CyclotomicField::Element CyclotomicField::scale(const Integer& s, const Element& a) const {
  Element r = a;
  for (auto& c : r) c *= s;
  return r;
}

CyclotomicField::Element CyclotomicField::mul(const Element& a, const Element& b) const {
  const auto d = static_cast<std::size_t>(degree_);
  std::vector<Rational> full(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      full[i + j] += a[i] * b[j];
    }
  }
  Element r(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < full.size(); ++k) {
    if (full[k] == 0) continue;
    const Element& p = powers_[k % static_cast<std::size_t>(n_)];
    for (std::size_t i = 0; i < d; ++i)
      if (p[i] != 0) r[i] += full[k] * p[i];
  }
  return r;
}

CyclotomicField::Element CyclotomicField::conjugate(const Element& a) const {
  Element r = zero();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    const Element& p = powers_[(static_cast<std::size_t>(n_) - k) % static_cast<std::size_t>(n_)];
    for (std::size_t i = 0; i < r.size(); ++i)
      if (p[i] != 0) r[i] += a[k] * p[i];
  }
  return r;
}

bool CyclotomicField::is_zero(const Element& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

CyclotomicField::Element CyclotomicField::inverse(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in a cyclotomic field");
  // Extended Euclid in Q[x]: track s with s * a = r (mod Phi_n).
  RatPolynomial r0 = to_rational(modulus_);
  RatPolynomial r1{std::vector<Rational>(a.begin(), a.end())};
  RatPolynomial s0;
  RatPolynomial s1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::logic_error("cyclotomic inverse: element shares a factor with the modulus");
  const Rational c = r0.leading();
  Element out = zero();
  const RatPolynomial reduced = divmod(s0, to_rational(modulus_)).second;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = reduced.coefficient(i) / c;
  return out;
}

int CyclotomicField::real_sign(const Element& a, long j) const {
  if (is_zero(a)) return 0;
  if (degree_ == 1) return sgn(a[0]);
  const long n = n_;
  for (mpfr_prec_t precision = 128; precision <= (mpfr_prec_t{1} << 22); precision *= 2) {
    MpfrValue sum(precision), term(precision), angle(precision), coeff(precision), weight(precision);
    mpfr_set_zero(sum.get(), 1);
    mpfr_set_zero(weight.get(), 1);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == 0) continue;
      const long m = ((j % n) * static_cast<long>(k)) % n;
      mpfr_const_pi(angle.get(), MPFR_RNDN);
      mpfr_mul_si(angle.get(), angle.get(), 2 * m, MPFR_RNDN);
      mpfr_div_si(angle.get(), angle.get(), n, MPFR_RNDN);
      mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
      mpfr_set_q(coeff.get(), a[k].get_mpq_t(), MPFR_RNDN);
      mpfr_mul(term.get(), term.get(), coeff.get(), MPFR_RNDN);
      mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
      mpfr_abs(coeff.get(), coeff.get(), MPFR_RNDU);
      mpfr_add(weight.get(), weight.get(), coeff.get(), MPFR_RNDU);
    }
    // Each term carries relative error well under 32 ulps (pi, the angle,
    // cos, the coefficient, the product); summation adds one ulp per term.
    mpfr_add_ui(weight.get(), weight.get(), 1, MPFR_RNDU);
    mpfr_mul_ui(weight.get(), weight.get(), 64 + 4 * a.size(), MPFR_RNDU);
    mpfr_mul_2si(weight.get(), weight.get(), -static_cast<long>(precision) + 1, MPFR_RNDU);
    mpfr_abs(term.get(), sum.get(), MPFR_RNDN);
    if (mpfr_greater_p(term.get(), weight.get())) return mpfr_sgn(sum.get());
  }
  throw std::runtime_error("real_sign: precision limit reached without certifying a sign");
}

}  // namespace knotcert
