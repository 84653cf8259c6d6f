#pragma once

#include "knotcert/int_matrix.hpp"
#include "knotcert/knot_expr.hpp"
#include "knotcert/polynomial.hpp"

#include <string>
#include <string_view>

namespace knotcert {

// Seifert matrix of a knot: square, with |det(A - A^T)| = 1.
class SeifertKnot {
 public:
  SeifertKnot() = default;
  explicit SeifertKnot(IntMatrix a);  // InputError on an invalid matrix

  const IntMatrix& matrix() const noexcept { return a_; }
  std::size_t size() const noexcept { return a_.rows(); }
  std::size_t genus() const noexcept { return a_.rows() / 2; }

 private:
  IntMatrix a_;
};

// j/n in lowest terms with 0 < j/n < 1, standing for exp(2 pi i j / n).
class RationalAngle {
 public:
  RationalAngle(long j, long n);  // InputError if j/n is not strictly between 0 and 1
  static RationalAngle parse(std::string_view text);  // "j/n"

  long numerator() const noexcept { return j_; }
  long denominator() const noexcept { return n_; }
  std::string to_string() const { return std::to_string(j_) + "/" + std::to_string(n_); }
  bool operator==(const RationalAngle&) const = default;

 private:
  long j_;
  long n_;
};

// T(2,n): the (|n|-1)-square matrix with -1 on the diagonal and +1 above it;
// mirror is -A^T; sums and multiples are block sums. Only torus knots with
// one parameter equal to +-2 are realized.
SeifertKnot seifert_matrix(const KnotExpr& e);

// det(A - t A^T).
IntPolynomial alexander_polynomial(const SeifertKnot& k);

// Signature of (1 - w) A + (1 - conj w) A^T at w = exp(2 pi i s). Throws
// SingularOmega when the cyclotomic polynomial of s's denominator divides
// the Alexander polynomial.
long tl_signature(const SeifertKnot& k, const RationalAngle& s);

// Same value, computed summand by summand over the expression tree.
long tl_signature(const KnotExpr& e, const RationalAngle& s);

// Signature at w = exp(2 pi i a / q); zero when a = 0 mod q.
long tl_signature_at(const KnotExpr& e, long a, long q);

// Roots of a reciprocal polynomial on |t| = 1, with multiplicity. Requires
// p(1), p(-1) nonzero and, after removing powers of t, even degree with
// palindromic coefficients; throws invalid_argument otherwise.
std::size_t unit_circle_root_count(const IntPolynomial& p);

// ceil(|sigma(K, 1/2)| / 2).
long g4_signature_bound(const SeifertKnot& k);

}  // namespace knotcert
