#include "knotcert/seifert.hpp"

#include "knotcert/cyclotomic.hpp"
#include "knotcert/error.hpp"
#include "knotcert/hermitian.hpp"
#include "knotcert/smith.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace knotcert {

SeifertKnot::SeifertKnot(IntMatrix a) : a_(std::move(a)) {
  if (!a_.is_square()) throw InputError("Seifert matrix must be square");
  const Integer d = determinant(a_ - a_.transpose());
  if (abs_value(d) != 1) throw InputError("not a knot Seifert matrix: |det(A - A^T)| = " + abs_value(d).get_str());
}

RationalAngle::RationalAngle(long j, long n) {
  if (n <= 0 || j <= 0 || j >= n) {
    throw InputError("angle " + std::to_string(j) + "/" + std::to_string(n) + " is not strictly between 0 and 1");
  }
  const long g = std::gcd(j, n);
  j_ = j / g;
  n_ = n / g;
}

RationalAngle RationalAngle::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw InputError("angle must be written j/n");
  long j = 0, n = 0;
  const auto a = text.substr(0, slash);
  const auto b = text.substr(slash + 1);
  auto r1 = std::from_chars(a.data(), a.data() + a.size(), j);
  auto r2 = std::from_chars(b.data(), b.data() + b.size(), n);
  if (r1.ec != std::errc{} || r1.ptr != a.data() + a.size() || r2.ec != std::errc{} || r2.ptr != b.data() + b.size()) {
    throw InputError("malformed angle \"" + std::string(text) + "\"");
  }
  return RationalAngle(j, n);
}

namespace {

IntMatrix torus_two_matrix(long n) {
  const std::size_t size = static_cast<std::size_t>(std::labs(n) - 1);
  IntMatrix a(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    a(i, i) = -1;
    if (i + 1 < size) a(i, i + 1) = 1;
  }
  return n > 0 ? a : IntMatrix(-a.transpose());
}

// Parameter n of a torus knot T(2, n) in either argument order.
long torus_two_parameter(const KnotExpr& e) {
  const long p = e.torus_p(), q = e.torus_q();
  if (p == 2 || p == -2) return p > 0 ? q : -q;
  if (q == 2 || q == -2) return q > 0 ? p : -p;
  throw InputError(e.to_string() + ": only torus knots T(2,n) have a Seifert matrix here");
}

IntMatrix realize(const KnotExpr& e) {
  switch (e.kind()) {
    case KnotExpr::Kind::Torus:
      return torus_two_matrix(torus_two_parameter(e));
    case KnotExpr::Kind::Mirror:
      return -realize(e.inner()).transpose();
    case KnotExpr::Kind::Multiple: {
      IntMatrix one = realize(e.inner());
      IntMatrix out;
      for (long i = 0; i < e.count(); ++i) out = block_diagonal(out, one);
      return out;
    }
    case KnotExpr::Kind::Sum:
      return block_diagonal(realize(e.left()), realize(e.right()));
    case KnotExpr::Kind::Literal:
      return e.matrix();
  }
  return {};
}

// Index sets of the connected components of the graph with an edge i-j
// whenever a_ij or a_ji is nonzero.
std::vector<std::vector<std::size_t>> components(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a(i, j) != 0 || a(j, i) != 0) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

IntMatrix submatrix(const IntMatrix& a, const std::vector<std::size_t>& idx) {
  IntMatrix out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = a(idx[r], idx[c]);
  return out;
}

long block_signature(const IntMatrix& a, const RationalAngle& s) {
  if (a.rows() == 0) return 0;
  const long n = s.denominator();
  const IntPolynomial delta = det_linear_pencil(a, a.transpose());
  if (remainder_monic(delta, cyclotomic_polynomial(static_cast<int>(n))).is_zero()) throw SingularOmega(n);

  const CyclotomicField field(static_cast<int>(n));
  const auto one_minus = field.sub(field.from_integer(1), field.zeta_power(1));
  const auto one_minus_bar = field.conjugate(one_minus);
  HermitianMatrix h;
  h.size = a.rows();
  h.entries.assign(h.size * h.size, field.zero());
  for (std::size_t r = 0; r < h.size; ++r)
    for (std::size_t c = 0; c < h.size; ++c)
      h.at(r, c) = field.add(field.scale(a(r, c), one_minus), field.scale(a(c, r), one_minus_bar));
  const Inertia in = hermitian_inertia(field, std::move(h), s.numerator());
  if (in.zero != 0) throw std::logic_error("tl_signature: degenerate form at a non-root of the Alexander polynomial");
  return in.signature();
}

long torus_signature(long n, const RationalAngle& s) {
  static std::mutex mutex;
  static std::map<std::tuple<long, long, long>, long> cache;
  const auto key = std::make_tuple(n, s.numerator(), s.denominator());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const long value = block_signature(torus_two_matrix(n), s);
  std::lock_guard lock(mutex);
  cache.emplace(key, value);
  return value;
}

}  // namespace

SeifertKnot seifert_matrix(const KnotExpr& e) { return SeifertKnot(realize(e)); }

IntPolynomial alexander_polynomial(const SeifertKnot& k) {
  return det_linear_pencil(k.matrix(), k.matrix().transpose());
}

long tl_signature(const SeifertKnot& k, const RationalAngle& s) {
  long total = 0;
  for (const auto& idx : components(k.matrix())) total += block_signature(submatrix(k.matrix(), idx), s);
  return total;
}

long tl_signature(const KnotExpr& e, const RationalAngle& s) {
  switch (e.kind()) {
    case KnotExpr::Kind::Torus:
      return torus_signature(torus_two_parameter(e), s);
    case KnotExpr::Kind::Mirror:
      return -tl_signature(e.inner(), s);
    case KnotExpr::Kind::Multiple:
      return e.count() == 0 ? 0 : e.count() * tl_signature(e.inner(), s);
    case KnotExpr::Kind::Sum:
      return tl_signature(e.left(), s) + tl_signature(e.right(), s);
    case KnotExpr::Kind::Literal:
      return tl_signature(SeifertKnot(e.matrix()), s);
  }
  return 0;
}

long tl_signature_at(const KnotExpr& e, long a, long q) {
  if (q <= 0) throw InputError("modulus must be positive");
  long r = a % q;
  if (r < 0) r += q;
  if (r == 0) return 0;
  return tl_signature(e, RationalAngle(r, q));
}

std::size_t unit_circle_root_count(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("unit_circle_root_count: zero polynomial");
  if (p.evaluate(Integer(1)) == 0 || p.evaluate(Integer(-1)) == 0) {
    throw std::invalid_argument("unit_circle_root_count: polynomial vanishes at 1 or -1");
  }
  const auto& all = p.coefficients();
  std::size_t low = 0;
  while (all[low] == 0) ++low;
  const std::vector<Integer> c(all.begin() + static_cast<std::ptrdiff_t>(low), all.end());
  const std::size_t d = c.size() - 1;
  if (d % 2 != 0) throw std::invalid_argument("unit_circle_root_count: odd degree, not a knot polynomial");
  for (std::size_t k = 0; k <= d; ++k)
    if (c[k] != c[d - k]) throw std::invalid_argument("unit_circle_root_count: coefficients are not palindromic");
  const std::size_t h = d / 2;
  if (h == 0) return 0;

  // t^-h p(t) = c_h + sum_k c_{h+k} (t^k + t^-k), and t^k + t^-k = V_k(t + 1/t)
  // with V_0 = 2, V_1 = x, V_{k+1} = x V_k - V_{k-1}.
  const IntPolynomial x = IntPolynomial::monomial(Integer(1), 1);
  IntPolynomial prev = IntPolynomial::constant(Integer(2));
  IntPolynomial cur = x;
  IntPolynomial folded = IntPolynomial::constant(c[h]);
  for (std::size_t k = 1; k <= h; ++k) {
    folded = folded + c[h + k] * cur;
    IntPolynomial next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  // Each root x in (-2, 2) gives a conjugate pair on the circle with the same multiplicity.
  return 2 * count_real_roots_with_multiplicity(to_rational(folded), Rational(-2), Rational(2));
}

long g4_signature_bound(const SeifertKnot& k) {
  const long s = tl_signature(k, RationalAngle(1, 2));
  return (std::labs(s) + 1) / 2;
}

}  // namespace knotcert
