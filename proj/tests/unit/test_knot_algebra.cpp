#include "knotcert/cyclotomic.hpp"
#include "knotcert/error.hpp"
#include "knotcert/hermitian.hpp"
#include "knotcert/knot_expr.hpp"
#include "knotcert/seifert.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>

using namespace knotcert;

namespace {

const char* const kCompanion = "3*T(2,3) # 3*T(2,5) # T(2,7) # 5*mirror(T(2,9))";

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("cyclotomic field arithmetic") {
  const CyclotomicField f(9);
  CHECK(f.degree() == 6);
  const auto z = f.zeta_power(1);
  CHECK(f.mul(f.zeta_power(4), f.zeta_power(5)) == f.from_integer(1));
  CHECK(f.zeta_power(-1) == f.zeta_power(8));
  CHECK(f.conjugate(z) == f.zeta_power(8));
  const auto x = f.add(f.from_integer(3), f.scale(Integer(2), f.zeta_power(2)));
  CHECK(f.mul(x, f.inverse(x)) == f.from_integer(1));
  const auto real = f.add(z, f.conjugate(z));  // 2 cos(2 pi / 9) > 0
  CHECK(f.is_real(real));
  CHECK(f.real_sign(real, 1) == 1);
  CHECK(f.real_sign(real, 4) == -1);  // 2 cos(8 pi / 9)
  CHECK(f.real_sign(f.zero(), 1) == 0);
  CHECK_THROWS(f.inverse(f.zero()));
}

TEST_CASE("sign certification separates nearby values") {
  // 2cos(2pi/7) + 2cos(4pi/7) + 2cos(6pi/7) = -1, so adding 1 gives exact zero
  const CyclotomicField f(7);
  auto s = f.from_integer(1);
  for (long k = 1; k <= 6; ++k) s = f.add(s, f.zeta_power(k));
  CHECK(CyclotomicField::is_zero(s));
  // 2cos(2pi/7) - 1.2469796... is tiny but nonzero at this rational
  auto t = f.add(f.zeta_power(1), f.zeta_power(6));
  t = f.sub(t, f.from_integer(0));
  t[0] -= Rational(12469796037, 10000000000);
  CHECK(f.real_sign(t, 1) == 1);
  t[0] -= Rational(1, 10000000000);
  CHECK(f.real_sign(t, 1) == -1);
}

TEST_CASE("hermitian inertia with hyperbolic pivots") {
  const CyclotomicField f(3);
  HermitianMatrix h;
  h.size = 2;
  h.entries = {f.zero(), f.zeta_power(1), f.zeta_power(2), f.zero()};
  CHECK(hermitian_inertia(f, h, 1) == Inertia{1, 1, 0});
  HermitianMatrix z;
  z.size = 2;
  z.entries.assign(4, f.zero());
  CHECK(hermitian_inertia(f, z, 1) == Inertia{0, 0, 2});
  HermitianMatrix bad = h;
  bad.at(1, 0) = f.zeta_power(1);
  CHECK_THROWS_AS(hermitian_inertia(f, bad, 1), std::invalid_argument);
}

TEST_CASE("parse knot expressions") {
  const KnotExpr t = parse_knot_expr("T(2,3)");
  CHECK(t.kind() == KnotExpr::Kind::Torus);
  CHECK(t.torus_p() == 2);
  CHECK(t.torus_q() == 3);

  const KnotExpr s = parse_knot_expr(kCompanion);
  REQUIRE(s.kind() == KnotExpr::Kind::Sum);
  CHECK(s.right().kind() == KnotExpr::Kind::Multiple);
  CHECK(s.right().count() == 5);
  CHECK(s.right().inner().kind() == KnotExpr::Kind::Mirror);
  CHECK(s.left().kind() == KnotExpr::Kind::Sum);  // left-associated
  CHECK(s.left().right().kind() == KnotExpr::Kind::Torus);
  CHECK(s.to_string() == kCompanion);

  CHECK(parse_knot_expr("  2 * ( T(2,3)#T(2,5) ) ").to_string() == "2*(T(2,3) # T(2,5))");
  CHECK(parse_knot_expr("0*T(2,3)").count() == 0);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_knot_expr("T(2,4)"), ParseError);
  try {
    parse_knot_expr("T(2,3) # ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  try {
    parse_knot_expr("T(2,3) $");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(parse_knot_expr("mirror T(2,3)"), ParseError);
  CHECK_THROWS_AS(parse_knot_expr("3 T(2,3)"), ParseError);
  CHECK_THROWS_AS(parse_knot_expr(""), ParseError);
  CHECK_THROWS_AS(parse_knot_expr("seifert(does/not/exist.json)"), ParseError);
  CHECK_THROWS_AS(parse_knot_expr("T(2,99999999999999999999999)"), ParseError);
}

TEST_CASE("seifert literal from file") {
  const std::filesystem::path dir = KNOTCERT_TEST_DATA_DIR;
  const KnotExpr e = parse_knot_expr("seifert(trefoil.json)", dir);
  CHECK(e.matrix() == IntMatrix{{-1, 1}, {0, -1}});
  CHECK(tl_signature(e, RationalAngle(1, 2)) == -2);
  CHECK_THROWS_AS(parse_knot_expr("seifert(not_a_knot.json)", dir), ParseError);
}

TEST_CASE("seifert matrices of torus knots and combinations") {
  CHECK(seifert_matrix(parse_knot_expr("T(2,3)")).matrix() == IntMatrix{{-1, 1}, {0, -1}});
  CHECK(seifert_matrix(parse_knot_expr("mirror(T(2,3))")).matrix() == IntMatrix{{1, 0}, {-1, 1}});
  CHECK(seifert_matrix(parse_knot_expr("T(2,-3)")).matrix() == IntMatrix{{1, 0}, {-1, 1}});
  CHECK(seifert_matrix(parse_knot_expr("T(3,2)")).matrix() == IntMatrix{{-1, 1}, {0, -1}});
  CHECK(seifert_matrix(parse_knot_expr("0*T(2,7)")).size() == 0);
  CHECK(seifert_matrix(parse_knot_expr("T(2,1)")).size() == 0);
  CHECK(seifert_matrix(parse_knot_expr(kCompanion)).size() == 6 + 12 + 6 + 40);
  CHECK_THROWS_AS(seifert_matrix(parse_knot_expr("T(3,5)")), InputError);
  CHECK_THROWS_AS(SeifertKnot(IntMatrix{{1, 0}, {0, 1}}), InputError);
}

TEST_CASE("alexander polynomials") {
  CHECK(alexander_polynomial(SeifertKnot()).coefficients() == ints({1}));
  CHECK(alexander_polynomial(seifert_matrix(parse_knot_expr("T(2,3)"))).coefficients() == ints({1, -1, 1}));
  CHECK(alexander_polynomial(seifert_matrix(parse_knot_expr("T(2,5)"))).coefficients() == ints({1, -1, 1, -1, 1}));
}

TEST_CASE("unit circle root counts") {
  CHECK(unit_circle_root_count(IntPolynomial(ints({1, -1, 1}))) == 2);
  CHECK(unit_circle_root_count(IntPolynomial(ints({1, -3, 1}))) == 0);
  CHECK(unit_circle_root_count(IntPolynomial(ints({1}))) == 0);
  CHECK(unit_circle_root_count(IntPolynomial(ints({0, 0, 1, -1, 1}))) == 2);
  // (t^2 - t + 1)^2: a double pair
  CHECK(unit_circle_root_count(IntPolynomial(ints({1, -2, 3, -2, 1}))) == 4);
  // figure eight: -t^2 + 3t - 1 up to sign
  CHECK(unit_circle_root_count(IntPolynomial(ints({-1, 3, -1}))) == 0);
  CHECK(unit_circle_root_count(IntPolynomial(ints({1, -1, 1, -1, 1, -1, 1}))) == 6);
  CHECK_THROWS_AS(unit_circle_root_count(IntPolynomial(ints({1, 2, 3}))), std::invalid_argument);
  CHECK_THROWS_AS(unit_circle_root_count(IntPolynomial(ints({1, -2, 1}))), std::invalid_argument);
  CHECK_THROWS_AS(unit_circle_root_count(IntPolynomial(ints({1, 1}))), std::invalid_argument);
}

TEST_CASE("tristram-levine signatures") {
  const SeifertKnot trefoil = seifert_matrix(parse_knot_expr("T(2,3)"));
  CHECK(tl_signature(trefoil, RationalAngle(1, 2)) == -2);
  CHECK(tl_signature(trefoil, RationalAngle(1, 9)) == 0);
  CHECK(tl_signature(trefoil, RationalAngle(2, 9)) == -2);
  CHECK(tl_signature(trefoil, RationalAngle(2, 4)) == -2);
  CHECK(tl_signature(seifert_matrix(parse_knot_expr("mirror(T(2,3))")), RationalAngle(1, 2)) == 2);
  CHECK_THROWS_AS(tl_signature(trefoil, RationalAngle(1, 6)), SingularOmega);
  CHECK_THROWS_AS(tl_signature(parse_knot_expr("T(2,3)"), RationalAngle(5, 6)), SingularOmega);
  CHECK(tl_signature_at(parse_knot_expr("T(2,3)"), 9, 9) == 0);
  CHECK(tl_signature_at(parse_knot_expr("T(2,3)"), -7, 9) == -2);
  CHECK_THROWS_AS(RationalAngle(0, 3), InputError);
  CHECK_THROWS_AS(RationalAngle(3, 3), InputError);
  CHECK(RationalAngle::parse("3/9") == RationalAngle(1, 3));
  CHECK_THROWS_AS(RationalAngle::parse("1/x"), InputError);
}

TEST_CASE("companion sum at ninths") {
  const KnotExpr s = parse_knot_expr(kCompanion);
  const SeifertKnot k = seifert_matrix(s);
  const long expected[] = {2, 4, 8, 16};
  for (long j = 1; j <= 4; ++j) {
    CHECK(tl_signature(s, RationalAngle(j, 9)) == expected[j - 1]);
    CHECK(tl_signature(k, RationalAngle(j, 9)) == expected[j - 1]);
    CHECK(oracle::eigen_tl_signature(k.matrix(), j, 9) == expected[j - 1]);
  }
}

TEST_CASE("g4 signature bound") {
  CHECK(g4_signature_bound(seifert_matrix(parse_knot_expr("T(2,3)"))) == 1);
  CHECK(g4_signature_bound(SeifertKnot()) == 0);
  CHECK(g4_signature_bound(seifert_matrix(parse_knot_expr("T(2,7) # mirror(T(2,3))"))) == 2);
}
