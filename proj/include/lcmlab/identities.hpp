#pragma once

// Windowed lcm L_{k,n} = lcm(R_k,...,R_n), the exact divisor certificate for
// L_{k,n}, and checkers for the lcm identities and divisibility lemmas:
// window identities for Lucas sequences, the U_i*U_{j-1} - U_{i-1}*U_j case
// split, partial-fraction decompositions of R0^{n-k}/(R_k...R_n) and the R1
// analogue, and the coprimality of U_m, R_m with Q.

#include <string>
#include <utility>
#include <vector>

#include "lcmlab/ubinomial.hpp"

namespace lcmlab {

struct DivisorCertificate {
  unsigned long k = 0, n = 0;
  BigInt lcm_value;      // positive
  BigRational divisor;   // (R_k...R_n) / ([n-k]_U! * gcd(R0,R1)^(n-k)); sign kept
  BigRational quotient;  // lcm_value / divisor
  bool valid = false;    // quotient is an integer (possibly negative)
};

enum class IdentityTag { CO, CO2, TRI, DERRR, DIF, PF_E5, PF_E6, GCD_LEMMAS };

const char* tag_label(IdentityTag tag);

struct IdentityReport {
  IdentityTag tag = IdentityTag::CO;
  long P = 0, Q = 0, R0 = 0, R1 = 0;
  unsigned long lo = 0, hi = 0;  // (k,n), (i,j) for DIF, (1,m_max) for GCD_LEMMAS
  BigRational lhs, rhs;
  bool pass = false;
  std::string note;
};

// lcm of |R_k|,...,|R_n|; throws naming the index of the first zero term.
BigInt lcm_range(const RecurrenceParams& params, unsigned long k, unsigned long n);

// The divisor is exact; integrality of the quotient is the assertion being
// certified, and a false `valid` is a finding, not an input error.
DivisorCertificate theorem1_certificate(const RecurrenceParams& params,
                                        unsigned long k, unsigned long n);

// lcm(U_n,...,U_{n-k+1}) == lcm{ U_m * C_U(n,m) : 1 <= m <= k }
IdentityReport check_identity_co(const RecurrenceParams& params, unsigned long n, unsigned long k);

// lcm{ C_U(n,m) : 1 <= m <= k } == lcm(U_{n+1},...,U_{n-k+1}) / |U_{n+1}|
IdentityReport check_identity_co2(const RecurrenceParams& params, unsigned long n, unsigned long k);

// lcm(U_n..U_{n-k+1})/lcm(U_1..U_k) is a positive integer dividing C_U(n,k)
IdentityReport check_theorem_tri(const RecurrenceParams& params, unsigned long n, unsigned long k);

// lcm(U_1,...,U_n) == lcm(U_n,...,U_{n-ceil(n/2)+1})
IdentityReport check_corollary_derrr(const RecurrenceParams& params, unsigned long n);

// U_i*U_{j-1} - U_{i-1}*U_j == -Q^(j-1)*U_{i-j} for i >= j, else Q^(i-1)*U_{j-i}
IdentityReport check_lemma_dif(const RecurrenceParams& params, unsigned long i, unsigned long j);

// R0^{n-k}/(R_k...R_n) = sum_j (-1)^{n-j} U_j^{n-k} / (Q^{f(j,k,n)} [j-k]_U! [n-j]_U!) * 1/R_j
// (needs R0 != 0) and the R1 analogue with U_{j-1}^{n-k} and exponent
// f(j,k,n)-(n-k) (needs R1 != 0). One report per applicable equation.
std::vector<IdentityReport> check_partial_fractions(const RecurrenceParams& params,
                                                    unsigned long k, unsigned long n);

// gcd(U_m, Q) = 1 and gcd(R_m, Q) = 1 for 1 <= m <= m_max (coprime (P,Q) and
// (R1,Q) required). lhs reports the largest gcd seen, rhs is 1.
IdentityReport check_gcd_lemmas(const RecurrenceParams& params, unsigned long m_max);

// All (n,k), 1 <= k <= n <= n_max, where the lcm-binomial equals the
// U-binomial, in lexicographic order.
std::vector<std::pair<unsigned long, unsigned long>> explore_equality(
    const RecurrenceParams& params, unsigned long n_max);

}  // namespace lcmlab
