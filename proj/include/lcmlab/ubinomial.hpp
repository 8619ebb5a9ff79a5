#pragma once

// U-factorials [j]_U! = U_1*...*U_j, generalized binomials
// C_U(n,k) = [n]_U!/([k]_U! [n-k]_U!) (fibonomials when U = Fibonacci),
// lcm-binomials lcm(U_n..U_{n-k+1})/lcm(U_1..U_k), and the exponent
// bookkeeping functions f, g, h used by the divisibility relations.

#include "lcmlab/recurrence.hpp"

namespace lcmlab {

struct UBinomial {
  unsigned long n = 0, k = 0;
  BigRational value;     // integral whenever gcd(P,Q) = 1
  bool integral = false; // denominator 1 after reduction
};

// [0]_U! = 1; sign carried by the factors.
BigInt u_factorial(const RecurrenceParams& params, unsigned long j);

// Evaluated as prod_{i=1..k} U_{n-k+i}/U_i with cancellation at every step,
// so intermediates stay near the final size (each prefix is itself a
// U-binomial). Outside coprime (P,Q) the exact rational is returned with
// integral = false rather than rejecting, so hypothesis sharpness can be
// probed.
UBinomial u_binomial(const RecurrenceParams& params, unsigned long n, unsigned long k);

// lcm(U_n,...,U_{n-k+1}) / lcm(U_1,...,U_k); divisibility is asserted before
// dividing. Throws on zero terms in either window (degenerate parameters).
BigInt lcm_binomial(const RecurrenceParams& params, unsigned long n, unsigned long k);

struct ExponentTriple {
  unsigned long long f = 0, g = 0, h = 0;
};

// f(j,k,n) = sum_{k<=i<=n, i!=j} min(i,j)   (direct summation)
// g(k,n)   = (n+k)(n-k+1)/2                 (closed form)
// h(k,n)   = max_{k<=j<=n} f(j,k,n)
// Requires k <= j <= n.
ExponentTriple schedule_exponents(unsigned long j, unsigned long k, unsigned long n);

}  // namespace lcmlab
