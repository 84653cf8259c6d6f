#include "knotcert/smith.hpp"

#include "knotcert/error.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace knotcert {

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> d;
  const std::size_t k = std::min(D.rows(), D.cols());
  d.reserve(k);
  for (std::size_t i = 0; i < k; ++i) d.push_back(D(i, i));
  return d;
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallest_nonzero(const IntMatrix& d, std::size_t from) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = from; i < d.rows(); ++i) {
    for (std::size_t j = from; j < d.cols(); ++j) {
      const Integer& x = d(i, j);
      if (x == 0) continue;
      Integer a = abs_value(x);
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

Integer truncated_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
  SNFResult r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = r.D;
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      const auto pivot = smallest_nonzero(d, t);
      if (!pivot) return r;  // remaining block is zero
      d.swap_rows(t, pivot->row);
      r.U.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      r.V.swap_cols(t, pivot->col);

      bool cleared = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = truncated_quotient(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        r.U.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = truncated_quotient(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        r.V.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Pivot must divide the rest of the block; otherwise fold an offending
      // row in and reduce again, which strictly shrinks the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i) {
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            r.U.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      r.U.negate_row(t);
    }
  }
  return r;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  for (auto& x : smith_normal_form(m).diagonal())
    if (x != 1) out.push_back(std::move(x));
  return out;
}

IntPolynomial det_linear_pencil(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw InputError("det_linear_pencil: A and B must be square of equal size");
  }
  const std::size_t n = a.rows();
  std::vector<Integer> xs;
  std::vector<Rational> table;
  xs.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const long step = static_cast<long>((k + 1) / 2);
    const Integer x = (k % 2 == 1) ? Integer(step) : Integer(-step);
    xs.push_back(x);
    table.emplace_back(determinant(a - x * b));
  }
  // Newton divided differences, in place.
  for (std::size_t level = 1; level <= n; ++level) {
    for (std::size_t i = n; i >= level; --i) {
      table[i] = (table[i] - table[i - 1]) / Rational(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  RatPolynomial p = RatPolynomial::constant(table[n]);
  for (std::size_t k = n; k-- > 0;) {
    p = p * RatPolynomial(std::vector<Rational>{Rational(-xs[k]), Rational(1)}) + RatPolynomial::constant(table[k]);
  }
  std::vector<Integer> coeffs;
  for (const auto& c : p.coefficients()) {
    if (!is_integral(c)) throw std::logic_error("det_linear_pencil: interpolation produced a non-integer coefficient");
    coeffs.push_back(c.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace knotcert
