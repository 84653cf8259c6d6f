#include "knotcert/hermitian.hpp"

#include <stdexcept>

namespace knotcert {

namespace {

// Rough cost of pivoting on an entry: total bit length of its coefficients.
std::size_t entry_size(const CyclotomicField::Element& e) {
  std::size_t bits = 0;
  for (const auto& c : e) {
    if (c == 0) continue;
    bits += mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
  }
  return bits;
}

}  // namespace

Inertia hermitian_inertia(const CyclotomicField& field, HermitianMatrix h, long embedding) {
  const std::size_t n = h.size;
  if (h.entries.size() != n * n) throw std::invalid_argument("hermitian_inertia: entry count does not match size");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      if (field.conjugate(h.at(r, c)) != h.at(c, r)) throw std::invalid_argument("hermitian_inertia: matrix is not Hermitian");

  Inertia out;
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  auto drop = [&active](std::size_t index) { std::erase(active, index); };

  while (!active.empty()) {
    std::size_t best = n;
    std::size_t best_size = 0;
    for (std::size_t i : active) {
      if (CyclotomicField::is_zero(h.at(i, i))) continue;
      const std::size_t s = entry_size(h.at(i, i));
      if (best == n || s < best_size) {
        best = i;
        best_size = s;
      }
    }

    if (best != n) {
      const std::size_t i = best;
      const int sign = field.real_sign(h.at(i, i), embedding);
      (sign > 0 ? out.positive : out.negative) += 1;
      const auto pivot_inv = field.inverse(h.at(i, i));
      drop(i);
      for (std::size_t ri = 0; ri < active.size(); ++ri) {
        const std::size_t r = active[ri];
        if (CyclotomicField::is_zero(h.at(r, i))) continue;
        const auto f = field.mul(h.at(r, i), pivot_inv);
        for (std::size_t ci = ri; ci < active.size(); ++ci) {
          const std::size_t c = active[ci];
          if (CyclotomicField::is_zero(h.at(i, c))) continue;
          h.at(r, c) = field.sub(h.at(r, c), field.mul(f, h.at(i, c)));
          if (c != r) h.at(c, r) = field.conjugate(h.at(r, c));
        }
      }
      continue;
    }

    // Zero diagonal: pair i, j with h(i, j) = b != 0 spans a hyperbolic
    // plane [[0, b], [conj b, 0]] contributing one positive and one negative.
    std::size_t pi = n, pj = n;
    for (std::size_t a = 0; a < active.size() && pi == n; ++a)
      for (std::size_t b = a + 1; b < active.size(); ++b)
        if (!CyclotomicField::is_zero(h.at(active[a], active[b]))) {
          pi = active[a];
          pj = active[b];
          break;
        }
    if (pi == n) {
      out.zero += active.size();
      break;
    }
    out.positive += 1;
    out.negative += 1;
    const auto b_inv = field.inverse(h.at(pi, pj));
    const auto bbar_inv = field.conjugate(b_inv);
    drop(pi);
    drop(pj);
    for (std::size_t ri = 0; ri < active.size(); ++ri) {
      const std::size_t r = active[ri];
      const bool has_i = !CyclotomicField::is_zero(h.at(r, pi));
      const bool has_j = !CyclotomicField::is_zero(h.at(r, pj));
      if (!has_i && !has_j) continue;
      const auto left_i = field.mul(h.at(r, pi), bbar_inv);
      const auto left_j = field.mul(h.at(r, pj), b_inv);
      for (std::size_t ci = ri; ci < active.size(); ++ci) {
        const std::size_t c = active[ci];
        auto update = field.add(field.mul(left_i, h.at(pj, c)), field.mul(left_j, h.at(pi, c)));
        if (CyclotomicField::is_zero(update)) continue;
        h.at(r, c) = field.sub(h.at(r, c), update);
        if (c != r) h.at(c, r) = field.conjugate(h.at(r, c));
      }
    }
  }
  return out;
}

}  // namespace knotcert
