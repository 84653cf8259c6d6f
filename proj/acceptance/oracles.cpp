#include "oracles.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace oracle {

std::vector<Residues> brute_force_kernel(const IntMatrix& m, std::int64_t q) {
  const std::size_t n = m.cols();
  std::vector<Residues> out;
  Residues c(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < m.rows() && ok; ++r) {
      knotcert::Integer acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += m(r, k) * c[k];
      knotcert::Integer rem = acc % q;
      ok = rem == 0;
    }
    if (ok) out.push_back(c);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++c[k] < q) break;
      c[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

knotcert::Integer cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  knotcert::Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const knotcert::Integer term = m(0, c) * cofactor_determinant(minor);
    total += (c % 2 == 0) ? term : knotcert::Integer(-term);
  }
  return total;
}

namespace {

long count_signature(const Eigen::VectorXd& eig) {
  long s = 0;
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    if (std::abs(eig[i]) < 1e-7) throw std::runtime_error("eigenvalue too close to zero");
    s += eig[i] > 0 ? 1 : -1;
  }
  return s;
}

}  // namespace

long eigen_tl_signature(const IntMatrix& a, long j, long n) {
  const auto size = static_cast<Eigen::Index>(a.rows());
  if (size == 0) return 0;
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
  const std::complex<double> w(std::cos(theta), std::sin(theta));
  Eigen::MatrixXcd h(size, size);
  for (Eigen::Index r = 0; r < size; ++r)
    for (Eigen::Index c = 0; c < size; ++c) {
      const double arc = a(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).get_d();
      const double acr = a(static_cast<std::size_t>(c), static_cast<std::size_t>(r)).get_d();
      h(r, c) = (1.0 - w) * arc + (1.0 - std::conj(w)) * acr;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return count_signature(solver.eigenvalues());
}

long eigen_symmetric_signature(const IntMatrix& m) {
  const auto size = static_cast<Eigen::Index>(m.rows());
  if (size == 0) return 0;
  Eigen::MatrixXd h(size, size);
  for (Eigen::Index r = 0; r < size; ++r)
    for (Eigen::Index c = 0; c < size; ++c) h(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  return count_signature(solver.eigenvalues());
}

long torus_jump_signature(long n, long j, long d) {
  // compare (2l+1)/(2n) with t = min(j, d-j)/d by cross-multiplication
  const long t = std::min(j, d - j);
  long s = 0;
  for (long l = 0; 2 * l + 1 < n; ++l) {
    const long lhs = (2 * l + 1) * d;
    const long rhs = 2 * n * t;
    if (lhs == rhs) throw std::runtime_error("angle sits on a signature jump");
    if (lhs < rhs) s -= 2;
  }
  return s;
}

std::set<Residues> closure(const std::vector<Residues>& gens, std::int64_t q) {
  std::set<Residues> out;
  if (gens.empty()) return out;
  Residues zero(gens.front().size(), 0);
  out.insert(zero);
  std::vector<Residues> frontier{zero};
  while (!frontier.empty()) {
    std::vector<Residues> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Residues y = knotcert::add(x, g, q);
        if (out.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return out;
}

std::set<std::set<Residues>> brute_force_subgroups(std::int64_t q, std::size_t dim, std::size_t order) {
  std::vector<Residues> all;
  Residues c(dim, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= static_cast<std::size_t>(q);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t v = idx;
    for (std::size_t k = dim; k-- > 0;) {
      c[k] = static_cast<std::int64_t>(v % static_cast<std::size_t>(q));
      v /= static_cast<std::size_t>(q);
    }
    all.push_back(c);
  }
  std::set<std::set<Residues>> out;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a; b < all.size(); ++b) {
      auto s = closure({all[a], all[b]}, q);
      if (s.size() == order) out.insert(std::move(s));
    }
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = dist(rng);
  return m;
}

}  // namespace oracle
