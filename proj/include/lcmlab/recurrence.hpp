#pragma once

// Parameter validation, degeneracy detection, exact root data, and term
// generation for R_{n+2} = P*R_{n+1} - Q*R_n and its companion Lucas sequence
// U(P,Q) with U_0 = 0, U_1 = 1.

#include <vector>

#include "lcmlab/integers.hpp"
#include "lcmlab/intervals.hpp"

namespace lcmlab {

struct RecurrenceParams {
  long P = 0, Q = 0, R0 = 0, R1 = 0;
  BigInt delta;       // P^2 - 4Q, nonzero
  BigInt gcd_r0_r1;   // gcd(R0, R1) with gcd(0, x) = |x|
  // true when additionally gcd(P,Q) = 1 and gcd(R1,Q) = 1; several of the
  // divisibility results only hold under these coprimality hypotheses
  bool theorem_scope = false;

  bool lucas_case() const { return R0 == 0 && R1 == 1; }
};

// Checks the standing hypotheses P*Q != 0, delta != 0, |R0|+|R1| > 0 and
// derives the rest. Throws std::domain_error naming the violated hypothesis.
RecurrenceParams validate(long P, long Q, long R0, long R1);

// True iff alpha/beta is a root of unity. Decided exactly over the integers:
// (alpha/beta is a root of unity) <=> Q | P^2 and P^2/Q in {0,1,2,3}
// (P^2 = 4Q cannot occur here since delta != 0).
bool is_degenerate(const RecurrenceParams& params);

// Exact element x + y*sqrt(delta) of Q(sqrt(delta)); delta is fixed per value
// and never a perfect square in our usage, so equality is componentwise.
struct QuadraticSurd {
  BigRational x, y;
  BigInt delta;
};

QuadraticSurd surd_make(const BigRational& x, const BigRational& y, const BigInt& delta);
QuadraticSurd surd_add(const QuadraticSurd& a, const QuadraticSurd& b);
QuadraticSurd surd_sub(const QuadraticSurd& a, const QuadraticSurd& b);
QuadraticSurd surd_mul(const QuadraticSurd& a, const QuadraticSurd& b);
QuadraticSurd surd_div(const QuadraticSurd& a, const QuadraticSurd& b);
QuadraticSurd surd_conj(const QuadraticSurd& a);
QuadraticSurd surd_pow(const QuadraticSurd& a, unsigned long e);
bool surd_eq(const QuadraticSurd& a, const QuadraticSurd& b);
bool surd_is_rational(const QuadraticSurd& a);
// Enclosure of the real value x + y*sqrt(delta); requires delta > 0.
RealInterval surd_interval(const QuadraticSurd& a, mpfr_prec_t prec = kDefaultPrecision);

struct RootData {
  // alpha = (P + s*sqrt(delta))/2 with s = sign(P), the root of larger
  // modulus when delta > 0 (for delta < 0 the two moduli coincide and the
  // choice is conventional); beta is the conjugate.
  QuadraticSurd alpha_surd, beta_surd;
  // a = (R1 - beta*R0)/(alpha - beta) and b = R0 - a, the coefficients with
  // R_n = a*alpha^n + b*beta^n
  QuadraticSurd a_coeff, b_coeff;
  // For complex roots (delta < 0) alpha/beta hold the real part P/2 and the
  // flag below is set; abs_alpha = abs_beta = sqrt(Q) enclosures then.
  RealInterval alpha, beta;
  RealInterval abs_alpha, abs_beta;
  bool complex_roots = false;
};

// Throws std::domain_error for degenerate parameters.
RootData roots(const RecurrenceParams& params, mpfr_prec_t prec = kDefaultPrecision);

// U_n by fast doubling:
//   U_{2k}   = U_k * (2*U_{k+1} - P*U_k)
//   U_{2k+1} = U_{k+1}^2 - Q*U_k^2
BigInt lucas_u(const RecurrenceParams& params, unsigned long n);

// U_0..U_n by the plain recurrence (used in bulk paths and as test oracle).
std::vector<BigInt> lucas_u_list(const RecurrenceParams& params, unsigned long n);

// R_n via R_m = R1*U_m - R0*Q*U_{m-1} for m >= 1; R_0 returned directly.
BigInt term(const RecurrenceParams& params, unsigned long n);

// R_0..R_n by the plain recurrence.
std::vector<BigInt> term_list(const RecurrenceParams& params, unsigned long n);

// [n]_q = (q^n - 1)/(q - 1) = U_n(q+1, q). Throws for q < 2.
BigInt q_integer(long q, unsigned long n);

}  // namespace lcmlab
