#pragma once

#include "knotcert/int_matrix.hpp"
#include "knotcert/polynomial.hpp"

#include <vector>

namespace knotcert {

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SNFResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  // The min(rows, cols) diagonal entries of D.
  std::vector<Integer> diagonal() const;
};

// Pivots on the nonzero entry of least absolute value; D does not depend on
// the pivot choice.
SNFResult smith_normal_form(const IntMatrix& m);

// Diagonal entries of the Smith form other than 1, in divisibility order.
// Zero entries (free summands of the cokernel) are kept.
std::vector<Integer> invariant_factors(const IntMatrix& m);

// Exact coefficients of det(A - t*B), by evaluation at t = 0, 1, -1, 2, -2, ...
// with fraction-free determinants and Newton interpolation over Q.
IntPolynomial det_linear_pencil(const IntMatrix& a, const IntMatrix& b);

}  // namespace knotcert
