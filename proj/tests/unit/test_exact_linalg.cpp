#include "knotcert/error.hpp"
#include "knotcert/int_matrix.hpp"
#include "knotcert/mod_kernel.hpp"
#include "knotcert/smith.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace knotcert;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

void check_snf(const IntMatrix& m) {
  const SNFResult r = smith_normal_form(m);
  CHECK(r.U * m * r.V == r.D);
  CHECK(abs_value(determinant(r.U)) == 1);
  CHECK(abs_value(determinant(r.V)) == 1);
  for (std::size_t i = 0; i < r.D.rows(); ++i)
    for (std::size_t j = 0; j < r.D.cols(); ++j)
      if (i != j) CHECK(r.D(i, j) == 0);
  const auto d = r.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size()) {
      if (d[i] == 0) CHECK(d[i + 1] == 0);
      else CHECK(d[i + 1] % d[i] == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith form of small matrices") {
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal() == ints({1, 6}));
  CHECK(smith_normal_form(IntMatrix(2, 2)).diagonal() == ints({0, 0}));
  CHECK(invariant_factors(IntMatrix{{-2, 1}, {1, -2}}) == ints({3}));
  CHECK(invariant_factors(IntMatrix::identity(5)).empty());
  CHECK(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).diagonal() == ints({2, 6, 12}));
  check_snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
}

TEST_CASE("smith form of rectangular and degenerate matrices") {
  check_snf(IntMatrix{{1, 2, 3}, {4, 5, 6}});
  check_snf(IntMatrix{{0, 0}, {0, 7}, {0, 0}});
  check_snf(IntMatrix{});
  CHECK(invariant_factors(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == ints({3, 0}));
}

TEST_CASE("smith form keeps exactness with huge entries") {
  IntMatrix m{{1, 0}, {0, 1}};
  m(0, 0) = Integer("123456789012345678901234567890");
  m(1, 1) = Integer("987654321098765432109876543210");
  m(0, 1) = Integer("-55555555555555555555555");
  check_snf(m);
  const auto d = smith_normal_form(m).diagonal();
  CHECK(d[0] * d[1] == abs_value(determinant(m)));
}

TEST_CASE("kernel mod q") {
  const ModKernel k = kernel_mod_q(IntMatrix{{3}}, 9);
  CHECK(k.order() == 3);
  CHECK(k.enumerate() == std::vector<Residues>{{0}, {3}, {6}});

  const ModKernel t = kernel_mod_q(IntMatrix{{-2, 1}, {1, -2}}, 3);
  CHECK(t.order() == 3);
  CHECK(t.enumerate() == oracle::brute_force_kernel(IntMatrix{{-2, 1}, {1, -2}}, 3));
  for (const auto& g : t.generators()) CHECK(t.contains(g));
}

TEST_CASE("kernel mod q rejects bad input") {
  CHECK_THROWS_AS(kernel_mod_q(IntMatrix{{1, 2}}, 3), InputError);
  CHECK_THROWS_AS(kernel_mod_q(IntMatrix{{1}}, 6), InputError);
  CHECK_THROWS_AS(kernel_mod_q(IntMatrix{{1}}, 1), InputError);
}

TEST_CASE("kernel enumeration respects the cap") {
  const ModKernel k = kernel_mod_q(IntMatrix(3, 3), 9);
  CHECK(k.order() == 729);
  CHECK_THROWS_AS(k.enumerate(728), CapExceeded);
  CHECK(k.enumerate(729).size() == 729);
}

TEST_CASE("zero matrix kernel is the whole group") {
  const ModKernel k = kernel_mod_q(IntMatrix(2, 2), 4);
  CHECK(k.order() == 16);
}

TEST_CASE("linear pencil determinants") {
  CHECK(det_linear_pencil(IntMatrix{{1}}, IntMatrix{{1}}).coefficients() == ints({1, -1}));
  const IntMatrix trefoil{{-1, 1}, {0, -1}};
  CHECK(det_linear_pencil(trefoil, trefoil.transpose()).coefficients() == ints({1, -1, 1}));
  const IntMatrix t25{{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}};
  CHECK(det_linear_pencil(t25, t25.transpose()).coefficients() == ints({1, -1, 1, -1, 1}));
  CHECK(det_linear_pencil(IntMatrix{}, IntMatrix{}).coefficients() == ints({1}));
  CHECK_THROWS(det_linear_pencil(IntMatrix{{1}}, IntMatrix(2, 2)));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const IntMatrix m = oracle::random_matrix(rng, n, n, -9, 9);
    CHECK(determinant(m) == oracle::cofactor_determinant(m));
  }
}
