#include "knotcert/mod_kernel.hpp"

#include "knotcert/error.hpp"
#include "knotcert/kernels.hpp"

#include <string>

namespace knotcert {

ModKernel::ModKernel(std::int64_t modulus, std::vector<std::vector<std::int64_t>> relation_mod_q,
                     std::vector<Residues> generators, std::vector<std::int64_t> generator_orders)
    : modulus_(modulus),
      relation_(std::move(relation_mod_q)),
      generators_(std::move(generators)),
      orders_(std::move(generator_orders)),
      order_(1) {
  for (auto o : orders_) order_ *= static_cast<long>(o);
}

bool ModKernel::contains(const Residues& c) const {
  if (c.size() != dimension()) return false;
  for (auto v : c)
    if (v < 0 || v >= modulus_) return false;
  for (const auto& row : relation_) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j) acc = (acc + row[j] * c[j]) % modulus_;
    if (acc != 0) return false;
  }
  return true;
}

std::vector<Residues> ModKernel::enumerate(std::size_t cap) const {
  if (order_ > Integer(static_cast<unsigned long>(cap))) {
    throw CapExceeded("solution group has " + order_.get_str() + " elements, cap is " + std::to_string(cap));
  }
  return kernels::enumerate_span(generators_, orders_, modulus_, dimension());
}

ModKernel kernel_mod_q(const IntMatrix& m, std::int64_t q) { return kernel_mod_q(m, smith_normal_form(m), q); }

ModKernel kernel_mod_q(const IntMatrix& m, const SNFResult& snf, std::int64_t q) {
  if (!m.is_square()) throw InputError("kernel_mod_q: matrix must be square");
  if (!is_prime_power(q)) throw InputError("modulus " + std::to_string(q) + " is not a prime power");
  if (q >= kMaxModulus) throw InputError("modulus " + std::to_string(q) + " is too large");
  const std::size_t n = m.rows();

  std::vector<std::vector<std::int64_t>> relation(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) relation[i][j] = mod_reduce(m(i, j), q);

  // M c = 0  <=>  D (V^-1 c) = 0, so c = V w with d_i w_i = 0 mod q, i.e.
  // w_i a multiple of q / gcd(d_i, q).
  std::vector<Residues> generators;
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t d = mod_reduce(snf.D(i, i), q);
    const std::int64_t g = gcd_i64(d, q);  // gcd(0, q) = q
    if (g == 1) continue;
    const std::int64_t step = q / g;
    Residues gen(n);
    for (std::size_t r = 0; r < n; ++r) gen[r] = (mod_reduce(snf.V(r, i), q) * step) % q;
    generators.push_back(std::move(gen));
    orders.push_back(g);
  }
  return ModKernel(q, std::move(relation), std::move(generators), std::move(orders));
}

}  // namespace knotcert
