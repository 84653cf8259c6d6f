#include "knotcert/kernels.hpp"

#include "knotcert/bigint.hpp"

#include <algorithm>
#include <numeric>

namespace knotcert {

std::int64_t element_order(const Residues& x, std::int64_t q) {
  std::int64_t g = q;
  for (auto v : x) g = gcd_i64(g, v);
  return q / g;
}

namespace {

Residues span_element(std::size_t index, const std::vector<Residues>& generators, const std::vector<std::int64_t>& orders,
                      std::int64_t q, std::size_t dimension) {
  Residues v(dimension, 0);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto radix = static_cast<std::size_t>(orders[g]);
    const auto digit = static_cast<std::int64_t>(index % radix);
    index /= radix;
    if (digit == 0) continue;
    for (std::size_t r = 0; r < dimension; ++r) v[r] = (v[r] + digit * generators[g][r]) % q;
  }
  return v;
}

std::size_t span_size(const std::vector<std::int64_t>& orders) {
  std::size_t total = 1;
  for (auto o : orders) total *= static_cast<std::size_t>(o);
  return total;
}

std::vector<std::int64_t> units_below(std::int64_t order, std::int64_t p) {
  std::vector<std::int64_t> units;
  for (std::int64_t u = 2; u < order; ++u)
    if (u % p != 0) units.push_back(u);
  return units;
}

std::int64_t prime_of(std::int64_t q) { return prime_power_decomposition(q).prime; }

bool is_least_generator(const Residues& x, const std::vector<std::int64_t>& units, std::int64_t q) {
  for (auto u : units)
    if (scale(x, u, q) < x) return false;
  return true;
}

Subgroup cyclic_from(const Residues& x, std::int64_t order, std::int64_t q) {
  Subgroup s;
  s.cyclic = true;
  s.elements.reserve(static_cast<std::size_t>(order));
  Residues acc(x.size(), 0);
  for (std::int64_t k = 0; k < order; ++k) {
    s.elements.push_back(acc);
    acc = add(acc, x, q);
  }
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

// Accepts (x, y) only when x is the least nonzero element of <x, y> and y the
// least element outside <x>, so each (Z/p)^2 is produced exactly once.
bool canonical_pair(const Residues& x, const Residues& y, std::int64_t p, std::int64_t q, Subgroup* out) {
  std::vector<Residues> elements;
  elements.reserve(static_cast<std::size_t>(p * p));
  Residues ax(x.size(), 0);
  for (std::int64_t a = 0; a < p; ++a) {
    Residues v = ax;
    for (std::int64_t b = 0; b < p; ++b) {
      if (b != 0 && is_zero(v)) return false;  // y in <x>
      if ((a != 0 || b != 0) && v < x) return false;
      if (b != 0 && v < y) return false;
      elements.push_back(v);
      v = add(v, y, q);
    }
    ax = add(ax, x, q);
  }
  if (out != nullptr) {
    std::sort(elements.begin(), elements.end());
    out->elements = std::move(elements);
    out->cyclic = false;
  }
  return true;
}

std::vector<Residues> torsion_nonzero(const std::vector<Residues>& elements, std::int64_t p, std::int64_t q) {
  std::vector<Residues> t;
  for (const auto& e : elements)
    if (!is_zero(e) && is_zero(scale(e, p, q))) t.push_back(e);
  return t;
}

}  // namespace

namespace kernels {

std::vector<Residues> enumerate_span(const std::vector<Residues>& generators, const std::vector<std::int64_t>& orders,
                                     std::int64_t q, std::size_t dimension) {
  const std::size_t total = span_size(orders);
  std::vector<Residues> out(total);
  const auto n = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = span_element(static_cast<std::size_t>(i), generators, orders, q, dimension);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> cyclic_subgroups(const std::vector<Residues>& elements, std::int64_t order, std::int64_t q) {
  const auto units = units_below(order, prime_of(q));
  const auto keep = filter_indices(elements.size(), [&](std::size_t i) {
    return element_order(elements[i], q) == order && is_least_generator(elements[i], units, q);
  });
  std::vector<Subgroup> out(keep.size());
  const auto n = static_cast<std::ptrdiff_t>(keep.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k)
    out[static_cast<std::size_t>(k)] = cyclic_from(elements[keep[static_cast<std::size_t>(k)]], order, q);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> elementary_rank2_subgroups(const std::vector<Residues>& elements, std::int64_t p, std::int64_t q) {
  const auto torsion = torsion_nonzero(elements, p, q);
  std::vector<std::vector<Subgroup>> per_first(torsion.size());
  const auto n = static_cast<std::ptrdiff_t>(torsion.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& x = torsion[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < torsion.size(); ++j) {
      Subgroup s;
      if (canonical_pair(x, torsion[j], p, q, &s)) per_first[static_cast<std::size_t>(i)].push_back(std::move(s));
    }
  }
  std::vector<Subgroup> out;
  for (auto& v : per_first)
    for (auto& s : v) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kernels

namespace reference {

std::vector<Residues> enumerate_span(const std::vector<Residues>& generators, const std::vector<std::int64_t>& orders,
                                     std::int64_t q, std::size_t dimension) {
  std::vector<Residues> out;
  out.reserve(span_size(orders));
  std::vector<std::int64_t> digits(generators.size(), 0);
  for (;;) {
    Residues v(dimension, 0);
    for (std::size_t g = 0; g < generators.size(); ++g)
      for (std::size_t r = 0; r < dimension; ++r) v[r] = (v[r] + digits[g] * generators[g][r]) % q;
    out.push_back(std::move(v));
    std::size_t g = 0;
    while (g < digits.size() && ++digits[g] == orders[g]) digits[g++] = 0;
    if (g == digits.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> cyclic_subgroups(const std::vector<Residues>& elements, std::int64_t order, std::int64_t q) {
  const auto units = units_below(order, prime_of(q));
  std::vector<Subgroup> out;
  for (const auto& x : elements)
    if (element_order(x, q) == order && is_least_generator(x, units, q)) out.push_back(cyclic_from(x, order, q));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> elementary_rank2_subgroups(const std::vector<Residues>& elements, std::int64_t p, std::int64_t q) {
  const auto torsion = torsion_nonzero(elements, p, q);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    for (std::size_t j = i + 1; j < torsion.size(); ++j) {
      Subgroup s;
      if (canonical_pair(torsion[i], torsion[j], p, q, &s)) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace reference

}  // namespace knotcert
