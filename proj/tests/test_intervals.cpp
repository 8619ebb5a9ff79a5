#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lcmlab/intervals.hpp"

using namespace lcmlab;

TEST_CASE("exact points") {
  RealInterval x = RealInterval::exact(BigInt(7));
  CHECK(x.is_point());
  CHECK(x.contains(7.0));
  CHECK(x.lo() == 7.0);
  CHECK(x.hi() == 7.0);
  CHECK(x.mid() == 7.0);

  RealInterval h = RealInterval::exact(make_rational(BigInt(1), BigInt(2)));
  CHECK(h.is_point());  // 1/2 is representable
  CHECK(h.contains(0.5));

  RealInterval n = RealInterval::exact(-3L);
  CHECK(n.contains(-3.0));
  CHECK(n.hi_neg());
  CHECK_FALSE(n.lo_nonneg());
  CHECK_FALSE(n.contains_zero());

  RealInterval z = RealInterval::exact(0L);
  CHECK(z.contains_zero());
  CHECK(z.lo_nonneg());
  CHECK_FALSE(z.hi_neg());
}

TEST_CASE("non-representable rational encloses the true value") {
  // 1/3 has no finite binary expansion: the interval must straddle it
  RealInterval t = RealInterval::exact(make_rational(BigInt(1), BigInt(3)));
  CHECK_FALSE(t.is_point());
  CHECK(t.lo() < t.hi());
  CHECK(std::abs(t.mid() - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("arithmetic on points") {
  RealInterval two = RealInterval::exact(2L);
  RealInterval three = RealInterval::exact(3L);
  CHECK(add(two, three).contains(5.0));
  CHECK(sub(two, three).contains(-1.0));
  CHECK(mul(two, three).contains(6.0));
  CHECK(mul(two, three).is_point());
  CHECK(neg(two).contains(-2.0));
  CHECK(lcmlab::abs(neg(two)).contains(2.0));

  // (1/3) * 3 encloses 1 even though neither factor is a point
  RealInterval t = RealInterval::exact(make_rational(BigInt(1), BigInt(3)));
  RealInterval prod = mul(t, three);
  CHECK(prod.lo() <= 1.0);
  CHECK(prod.hi() >= 1.0);
  CHECK(std::abs(prod.mid() - 1.0) < 1e-15);
}

TEST_CASE("division") {
  RealInterval one = RealInterval::exact(1L);
  RealInterval three = RealInterval::exact(3L);
  RealInterval q = div(one, three);
  CHECK(std::abs(q.mid() - (1.0 / 3.0)) < 1e-15);
  CHECK(q.lo() < q.hi());

  RealInterval straddling = sub(RealInterval::exact(1L), RealInterval::exact(1L));
  CHECK(straddling.contains_zero());
  CHECK_THROWS_AS(div(one, straddling), std::domain_error);
}

TEST_CASE("sqrt") {
  RealInterval r = sqrt(RealInterval::exact(BigInt(2)));
  CHECK(std::abs(r.mid() - 1.4142135623730951) < 1e-12);
  CHECK(r.lo() <= r.hi());
  CHECK(sqrt(RealInterval::exact(BigInt(4))).contains(2.0));
  CHECK(sqrt(RealInterval::exact(0L)).contains(0.0));
  CHECK_THROWS_AS(sqrt(RealInterval::exact(-1L)), std::domain_error);
}

TEST_CASE("log and exp") {
  CHECK_THROWS_AS(log(RealInterval::exact(0L)), std::domain_error);
  CHECK_THROWS_AS(log(RealInterval::exact(-2L)), std::domain_error);
  RealInterval l2 = log(RealInterval::exact(2L));
  CHECK(std::abs(l2.mid() - 0.6931471805599453) < 1e-12);
  RealInterval e1 = exp(RealInterval::exact(1L));
  CHECK(std::abs(e1.mid() - 2.718281828459045) < 1e-12);
  // exp(log(x)) encloses x
  RealInterval round = exp(log(RealInterval::exact(10L)));
  CHECK(round.lo() <= 10.0);
  CHECK(round.hi() >= 10.0);
}

TEST_CASE("log_interval frozen values") {
  // ln(1) is the exact point [0, 0]
  RealInterval l1 = log_interval(BigInt(1));
  CHECK(l1.is_point());
  CHECK(l1.contains(0.0));

  // enclosures are far narrower than double precision, so the frozen
  // reference values are compared against the midpoint
  RealInterval a = log_interval(BigInt(2042040));
  CHECK(std::abs(a.mid() - 14.529459866153483) < 1e-9);
  // endpoints agree to double rounding (the raw enclosure is ~2^-120 wide,
  // far below one ulp of 14.5)
  CHECK(a.hi() - a.lo() < 1e-14);

  RealInterval b = log_interval(BigInt(55));
  CHECK(std::abs(b.mid() - 4.0073331852324709) < 1e-12);

  CHECK_THROWS_AS(log_interval(BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(log_interval(BigInt(-5)), std::domain_error);
}

TEST_CASE("pi") {
  RealInterval p = pi_interval();
  CHECK(std::abs(p.mid() - 3.14159265358979323846) < 1e-12);
  CHECK(p.lo() <= p.hi());
  // wider precision nests inside the 8-bit enclosure
  RealInterval coarse = pi_interval(8);
  CHECK(coarse.contains(3.141592653589793));
}

TEST_CASE("pow_si") {
  RealInterval two = RealInterval::exact(2L);
  RealInterval p10 = pow_si(two, 10);
  CHECK(p10.is_point());
  CHECK(p10.contains(1024.0));

  // exponent zero gives exactly [1, 1] whatever the base
  RealInterval z = pow_si(RealInterval::exact(0L), 0);
  CHECK(z.is_point());
  CHECK(z.contains(1.0));
  CHECK(pow_si(RealInterval::exact(-5L), 0).contains(1.0));

  RealInterval inv = pow_si(two, -2);
  CHECK(inv.contains(0.25));

  CHECK_THROWS_AS(pow_si(RealInterval::exact(-2L), 3), std::domain_error);
  CHECK_THROWS_AS(pow_si(RealInterval::exact(0L), -1), std::domain_error);
}

TEST_CASE("pow_rational") {
  // integer exponents dispatch to pow_si
  RealInterval cube = pow_rational(RealInterval::exact(2L), make_rational(BigInt(3), BigInt(1)));
  CHECK(cube.is_point());
  CHECK(cube.contains(8.0));

  RealInterval root = pow_rational(RealInterval::exact(4L), make_rational(BigInt(1), BigInt(2)));
  CHECK(std::abs(root.mid() - 2.0) < 1e-12);

  RealInterval ph = pow_rational(RealInterval::exact(2L), make_rational(BigInt(3), BigInt(2)));
  CHECK(std::abs(ph.mid() - 2.8284271247461903) < 1e-12);
}

TEST_CASE("precision nesting") {
  // a coarse enclosure contains a fine one of the same quantity
  RealInterval coarse = sqrt(RealInterval::exact(BigInt(2), 8));
  RealInterval fine = sqrt(RealInterval::exact(BigInt(2), 64));
  CHECK(coarse.lo() <= fine.lo());
  CHECK(fine.hi() <= coarse.hi());
  CHECK(coarse.contains(1.4142135623730951));
  CHECK(fine.prec() >= 64);
  CHECK(coarse.prec() >= 8);
}

TEST_CASE("certified comparisons") {
  RealInterval two = RealInterval::exact(2L);
  RealInterval three = RealInterval::exact(3L);
  CHECK(certified_geq(three, two));
  CHECK_FALSE(certified_geq(two, three));
  CHECK(certified_leq(two, three));
  CHECK_FALSE(certified_leq(three, two));
  // equality of exact points certifies both directions
  CHECK(certified_geq(two, RealInterval::exact(2L)));
  CHECK(certified_leq(two, RealInterval::exact(2L)));
  // overlapping intervals certify neither
  RealInterval t = RealInterval::exact(make_rational(BigInt(1), BigInt(3)));
  RealInterval s = RealInterval::exact(make_rational(BigInt(1), BigInt(3)));
  CHECK_FALSE(certified_geq(t, s));
  CHECK_FALSE(certified_leq(t, s));
}

TEST_CASE("outward-rounded string endpoints") {
  RealInterval t = RealInterval::exact(make_rational(BigInt(1), BigInt(3)));
  std::string lo = t.lo_str(20);
  std::string hi = t.hi_str(20);
  CHECK(lo != hi);  // 1/3 is not a binary point
  CHECK(t.str(20).find(lo) != std::string::npos);
  CHECK(t.str(20).find(hi) != std::string::npos);
  RealInterval seven = RealInterval::exact(7L);
  CHECK(seven.lo_str(17) == seven.hi_str(17));
}

TEST_CASE("mid of a symmetric interval") {
  RealInterval t = sub(RealInterval::exact(5L), RealInterval::exact(5L));
  CHECK(t.mid() == 0.0);
  CHECK(t.contains_zero());
}
