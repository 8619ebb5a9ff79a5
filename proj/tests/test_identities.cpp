#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcmlab/identities.hpp"

using namespace lcmlab;

namespace {
const RecurrenceParams kFib = validate(1, -1, 0, 1);
const RecurrenceParams kLucasNums = validate(1, -1, 2, 1);
const RecurrenceParams kQ2 = validate(3, 2, 0, 1);
}  // namespace

TEST_CASE("lcm_range frozen values") {
  CHECK(lcm_range(kFib, 1, 10) == 2042040);
  CHECK(lcm_range(kFib, 4, 6) == 120);
  CHECK(lcm_range(kLucasNums, 2, 4) == 84);  // lcm(3,4,7)
  for (unsigned long k = 1; k <= 12; ++k) CHECK(lcm_range(kFib, k, k) == abs(term(kFib, k)));
  // result is positive even when every term is negative
  CHECK(lcm_range(validate(-3, 2, 0, 1), 2, 3) == 21);
  CHECK_THROWS_WITH_AS(lcm_range(kFib, 3, 2), "window needs 1 <= k <= n", std::invalid_argument);
  CHECK_THROWS_WITH_AS(lcm_range(kFib, 0, 2), "window needs 1 <= k <= n", std::invalid_argument);
}

TEST_CASE("lcm_range names the first zero term") {
  RecurrenceParams z = validate(1, -1, 1, -1);  // R_2 = 0
  try {
    lcm_range(z, 1, 3);
    FAIL("expected a zero-term rejection");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("R_2 = 0") != std::string::npos);
  }
}

TEST_CASE("windowed lcm divisibility: wider windows absorb narrower ones") {
  for (unsigned long k = 1; k <= 12; ++k)
    for (unsigned long kp = k; kp <= 12; ++kp)
      CHECK(divides(lcm_range(kFib, kp, 12), lcm_range(kFib, k, 12)));
}

TEST_CASE("exact divisor certificate frozen instances") {
  DivisorCertificate c = theorem1_certificate(kFib, 1, 5);
  CHECK(c.valid);
  CHECK(c.lcm_value == 30);
  CHECK(c.divisor == 5);    // (1*1*2*3*5) / [4]_U!
  CHECK(c.quotient == 6);

  DivisorCertificate l = theorem1_certificate(kLucasNums, 2, 4);
  CHECK(l.valid);
  CHECK(l.lcm_value == 84);
  CHECK(l.divisor == 84);   // (3*4*7) / ([2]_U! * gcd(2,1)^2)
  CHECK(l.quotient == 1);

  DivisorCertificate d = theorem1_certificate(kFib, 7, 7);
  CHECK(d.valid);
  CHECK(d.lcm_value == 13);
  CHECK(d.quotient == 1);
}

TEST_CASE("certificates hold across scope parameters, including negative terms") {
  for (auto [P, Q, R0, R1] : std::vector<std::array<long, 4>>{
           {1, -1, 0, 1}, {3, 2, 0, 1}, {1, -1, 2, 1}, {-3, 2, 0, 1}, {5, 3, 1, 1}, {2, -1, 1, 2}}) {
    RecurrenceParams params = validate(P, Q, R0, R1);
    REQUIRE(params.theorem_scope);
    for (unsigned long n = 1; n <= 20; ++n)
      for (unsigned long k = 1; k <= n; ++k) {
        DivisorCertificate cert = theorem1_certificate(params, k, n);
        CHECK_MESSAGE(cert.valid, "(", P, ",", Q, ",", R0, ",", R1, ") k=", k, " n=", n);
        CHECK(is_integer(cert.quotient));
        if (k == n) CHECK(abs(BigInt(cert.quotient.get_num())) == 1);
      }
  }
}

TEST_CASE("certificate scope rejections") {
  CHECK_THROWS_WITH_AS(theorem1_certificate(validate(2, 4, 0, 1), 1, 4),
                       "certificate needs gcd(P,Q)=gcd(R1,Q)=1", std::domain_error);
  CHECK_THROWS_WITH_AS(theorem1_certificate(validate(3, 2, 0, 2), 1, 4),
                       "certificate needs gcd(P,Q)=gcd(R1,Q)=1", std::domain_error);
  CHECK_THROWS_WITH_AS(theorem1_certificate(validate(1, 1, 0, 1), 1, 4),
                       "certificate needs nondegenerate parameters", std::domain_error);
}

TEST_CASE("window identity: lcm of terms vs scaled binomials") {
  IdentityReport rep = check_identity_co(kFib, 6, 3);
  CHECK(rep.pass);
  CHECK(rep.lhs == 120);
  CHECK(rep.rhs == 120);
  CHECK(rep.tag == IdentityTag::CO);

  rep = check_identity_co(kFib, 10, 5);
  CHECK(rep.pass);
  CHECK(rep.lhs == 2042040);

  for (auto params : {kFib, kQ2}) {
    for (unsigned long n = 1; n <= 14; ++n)
      for (unsigned long k = 1; k <= n; ++k) CHECK(check_identity_co(params, n, k).pass);
  }

  CHECK_THROWS_WITH_AS(check_identity_co(kLucasNums, 6, 3),
                       "identity needs the Lucas specialization (R0,R1)=(0,1)",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(check_identity_co(validate(2, 4, 0, 1), 6, 3),
                       "identity needs gcd(P,Q)=1", std::domain_error);
}

TEST_CASE("window identity: binomial lcm vs extended window") {
  IdentityReport rep = check_identity_co2(kFib, 6, 3);
  CHECK(rep.pass);
  CHECK(rep.lhs == 120);  // lcm(F_7..F_4)/F_7 = 1560/13
  CHECK(rep.rhs == 120);

  CHECK(check_identity_co2(kFib, 5, 5).lhs == 15);
  CHECK(check_identity_co2(kFib, 7, 2).lhs == 104);

  for (auto params : {kFib, kQ2}) {
    for (unsigned long n = 1; n <= 14; ++n)
      for (unsigned long k = 1; k <= n; ++k) CHECK(check_identity_co2(params, n, k).pass);
  }
}

TEST_CASE("lcm-binomial divides the u-binomial") {
  IdentityReport rep = check_theorem_tri(kFib, 6, 3);
  CHECK(rep.pass);
  CHECK(rep.lhs == 60);
  CHECK(rep.rhs == 60);

  rep = check_theorem_tri(kFib, 6, 4);
  CHECK(rep.pass);
  CHECK(rep.lhs == 20);  // a proper divisor of the binomial here
  CHECK(rep.rhs == 40);

  for (auto params : {kFib, kQ2}) {
    for (unsigned long n = 1; n <= 14; ++n)
      for (unsigned long k = 1; k <= n; ++k) CHECK(check_theorem_tri(params, n, k).pass);
  }
}

TEST_CASE("the top half of the window carries the whole lcm") {
  IdentityReport rep = check_corollary_derrr(kFib, 6);
  CHECK(rep.pass);
  CHECK(rep.lhs == 120);
  CHECK(rep.rhs == 120);
  CHECK(check_corollary_derrr(kFib, 1).pass);
  CHECK(check_corollary_derrr(kFib, 11).lhs == 181741560);
  for (auto params : {kFib, kQ2, validate(-3, 2, 0, 1)})
    for (unsigned long n = 1; n <= 16; ++n) CHECK(check_corollary_derrr(params, n).pass);
  CHECK_THROWS_WITH_AS(check_corollary_derrr(kFib, 0), "derrr needs n >= 1",
                       std::invalid_argument);
}

TEST_CASE("cross-index product difference collapses to a single term") {
  IdentityReport rep = check_lemma_dif(kFib, 5, 3);
  CHECK(rep.pass);
  CHECK(rep.lhs == -1);
  CHECK(rep.rhs == -1);

  rep = check_lemma_dif(kFib, 3, 5);
  CHECK(rep.pass);
  CHECK(rep.lhs == 1);

  rep = check_lemma_dif(kFib, 4, 4);
  CHECK(rep.pass);
  CHECK(rep.lhs == 0);

  for (auto params : {kFib, kQ2, validate(2, -1, 0, 1), validate(4, 2, 0, 1)})
    for (unsigned long i = 1; i <= 12; ++i)
      for (unsigned long j = 1; j <= 12; ++j) CHECK(check_lemma_dif(params, i, j).pass);

  CHECK_THROWS_WITH_AS(check_lemma_dif(kFib, 0, 3), "dif needs i, j >= 1", std::invalid_argument);
}

TEST_CASE("partial fraction decompositions of reciprocal window products") {
  // R0 != 0 and R1 != 0: both equations apply
  std::vector<IdentityReport> reps = check_partial_fractions(kLucasNums, 2, 4);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].tag == IdentityTag::PF_E5);
  CHECK(reps[0].pass);
  CHECK(reps[0].lhs == make_rational(BigInt(1), BigInt(21)));  // 2^2/(3*4*7)
  CHECK(reps[0].lhs == reps[0].rhs);
  CHECK(reps[1].tag == IdentityTag::PF_E6);
  CHECK(reps[1].pass);
  CHECK(reps[1].lhs == make_rational(BigInt(1), BigInt(84)));  // 1^2/(3*4*7)

  // Lucas case R0 = 0: only the R1 equation applies
  reps = check_partial_fractions(kFib, 2, 4);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].tag == IdentityTag::PF_E6);
  CHECK(reps[0].pass);
  CHECK(reps[0].lhs == make_rational(BigInt(1), BigInt(6)));  // 1/(F_2 F_3 F_4)

  reps = check_partial_fractions(kLucasNums, 1, 3);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].lhs == make_rational(BigInt(1), BigInt(3)));  // 2^2/(1*3*4)
  CHECK(reps[1].lhs == make_rational(BigInt(1), BigInt(12)));
  CHECK(reps[0].pass);
  CHECK(reps[1].pass);

  for (auto params : {kFib, kQ2, kLucasNums, validate(5, 3, 1, 1)})
    for (unsigned long n = 2; n <= 12; ++n)
      for (unsigned long k = 1; k < n; ++k)
        for (const IdentityReport& r : check_partial_fractions(params, k, n)) CHECK(r.pass);

  CHECK_THROWS_WITH_AS(check_partial_fractions(kFib, 1, 1), "partial fractions need n >= 2",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(check_partial_fractions(validate(2, 4, 0, 1), 1, 3),
                       "partial fractions need gcd(P,Q)=gcd(R1,Q)=1", std::domain_error);
}

TEST_CASE("gcd lemmas") {
  IdentityReport rep = check_gcd_lemmas(kQ2, 20);
  CHECK(rep.pass);
  CHECK(rep.lhs == 1);
  CHECK(rep.rhs == 1);
  CHECK(check_gcd_lemmas(validate(5, 3, 1, 1), 50).pass);
  CHECK(check_gcd_lemmas(kFib, 30).pass);
  CHECK(check_gcd_lemmas(kLucasNums, 40).pass);
  CHECK_THROWS_WITH_AS(check_gcd_lemmas(kQ2, 0), "gcd lemmas need m_max >= 1",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(check_gcd_lemmas(validate(2, 4, 0, 1), 10),
                       "gcd lemmas need gcd(P,Q)=gcd(R1,Q)=1", std::domain_error);
}

TEST_CASE("equality explorer") {
  std::vector<std::pair<unsigned long, unsigned long>> eq = explore_equality(kFib, 6);
  CHECK(eq.size() == 19);
  auto has = [&eq](unsigned long n, unsigned long k) {
    return std::find(eq.begin(), eq.end(), std::make_pair(n, k)) != eq.end();
  };
  CHECK(has(6, 1));
  CHECK(has(6, 2));
  CHECK(has(6, 3));
  CHECK(has(6, 6));
  CHECK_FALSE(has(6, 4));  // lcm-binomial 20 vs binomial 40
  CHECK_FALSE(has(6, 5));
  CHECK(std::is_sorted(eq.begin(), eq.end()));

  CHECK_THROWS_WITH_AS(explore_equality(kLucasNums, 5),
                       "explorer needs the Lucas specialization (R0,R1)=(0,1)",
                       std::invalid_argument);
  CHECK_THROWS_AS(explore_equality(validate(1, 1, 0, 1), 4), std::domain_error);
}

TEST_CASE("identity reports carry their tag labels") {
  CHECK(std::string(tag_label(IdentityTag::CO)) != "");
  CHECK(std::string(tag_label(IdentityTag::PF_E5)) != std::string(tag_label(IdentityTag::PF_E6)));
  IdentityReport rep = check_identity_co(kFib, 4, 2);
  CHECK(rep.P == 1);
  CHECK(rep.Q == -1);
  CHECK(rep.lo == 2);
  CHECK(rep.hi == 4);
}
