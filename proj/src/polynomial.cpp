#include "knotcert/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace knotcert {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / lead;
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= factor * b.coefficients()[static_cast<std::size_t>(i)];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lead = a.leading();
  return Rational(1 / lead) * a;
}

IntPolynomial remainder_monic(const IntPolynomial& a, const IntPolynomial& monic) {
  if (monic.is_zero() || monic.leading() != 1) throw std::invalid_argument("remainder_monic: divisor is not monic");
  std::vector<Integer> rem = a.coefficients();
  const int d = monic.degree();
  for (int k = a.degree(); k >= d; --k) {
    const Integer factor = rem[static_cast<std::size_t>(k)];
    if (factor == 0) continue;
    for (int i = 0; i <= d; ++i) rem[static_cast<std::size_t>(k - d + i)] -= factor * monic.coefficients()[static_cast<std::size_t>(i)];
  }
  return IntPolynomial(std::move(rem));
}

IntPolynomial exact_quotient_monic(const IntPolynomial& a, const IntPolynomial& monic) {
  if (monic.is_zero() || monic.leading() != 1) throw std::invalid_argument("exact_quotient_monic: divisor is not monic");
  const int d = monic.degree();
  if (a.degree() < d) {
    if (!a.is_zero()) throw std::domain_error("exact_quotient_monic: non-zero remainder");
    return {};
  }
  std::vector<Integer> rem = a.coefficients();
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - d + 1));
  for (int k = a.degree(); k >= d; --k) {
    const Integer factor = rem[static_cast<std::size_t>(k)];
    quot[static_cast<std::size_t>(k - d)] = factor;
    if (factor == 0) continue;
    for (int i = 0; i <= d; ++i) rem[static_cast<std::size_t>(k - d + i)] -= factor * monic.coefficients()[static_cast<std::size_t>(i)];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("exact_quotient_monic: non-zero remainder");
  return IntPolynomial(std::move(quot));
}

std::string to_string(const IntPolynomial& p, char variable) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Integer& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Integer mag = abs_value(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << variable;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

namespace {

int sign_of(const Rational& x) { return sgn(x); }

std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p) {
  std::vector<RatPolynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    RatPolynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

std::size_t sign_changes(const std::vector<RatPolynomial>& chain, const Rational& x) {
  std::size_t changes = 0;
  int previous = 0;
  for (const auto& q : chain) {
    const int s = sign_of(q.evaluate(x));
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

}  // namespace

std::size_t count_distinct_real_roots(const RatPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (p.evaluate(lo) == 0 || p.evaluate(hi) == 0) throw std::invalid_argument("interval endpoint is a root");
  if (!(lo < hi)) return 0;
  if (p.degree() == 0) return 0;
  const auto chain = sturm_chain(p);
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

std::size_t count_real_roots_with_multiplicity(const RatPolynomial& p, const Rational& lo, const Rational& hi) {
  std::size_t total = 0;
  RatPolynomial current = p;
  while (current.degree() >= 1) {
    total += count_distinct_real_roots(current, lo, hi);
    current = gcd(current, current.derivative());
  }
  return total;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::mutex mutex;
  static std::map<int, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // t^n - 1 divided by every Phi_d with d a proper divisor of n.
  IntPolynomial result = IntPolynomial::monomial(1, static_cast<std::size_t>(n)) - IntPolynomial::constant(1);
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) result = exact_quotient_monic(result, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(n, result);
  return result;
}

}  // namespace knotcert
