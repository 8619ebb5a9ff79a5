#pragma once

// Effective lower bounds on windowed lcms (combined Lucas sequences,
// P>0/Q<0 recurrences, q-arithmetic sequences, two-sided Fibonacci bounds)
// evaluated with certified directed rounding, plus the asymptotic ratio
// estimators (growth-rate scan, consecutive-window ratios, product/lcm
// limit with its kappa correction).

#include <optional>
#include <utility>
#include <vector>

#include "lcmlab/identities.hpp"

namespace lcmlab {

struct BoundReport {
  std::string theorem;                              // e.g. "Theorem 2"
  std::vector<std::pair<std::string, long>> inputs; // echoed scalar inputs, fixed order
  unsigned long m = 0, n = 0;
  BigInt lcm_value;          // exact windowed lcm
  RealInterval log_lcm;      // enclosure of log(lcm_value)
  RealInterval log_bound;    // enclosure of the log of the stated bound
  RealInterval slack;        // log_lcm - log_bound
  RealInterval t_const;      // log gcd(R0,R1) for the sequence at hand
  // upper-bound slack for the two-sided Fibonacci check; empty otherwise
  std::optional<RealInterval> slack_upper;
  bool verdict = false;      // certified: slack.lo >= 0 (and slack_upper if present)
  bool exact_comparison = false;  // verdict decided by exact rational comparison
  mpfr_prec_t precision_bits = kDefaultPrecision;  // highest precision reached
};

// lcm(c*U_{m+1}+d*U_m, ..., c*U_{n+1}+d*U_n) >= (c*alpha+d) * ((c*alpha+d)/(alpha*gcd(c,d)))^(n/2) * alpha^(n^2/4)
// for P,Q >= 1 coprime with positive discriminant, c,d >= 1, m <= floor(n/2).
// Rejections name the violated hypothesis. Note the full theorem additionally
// needs gcd(c*P+d, Q) = 1 (the combined sequence starts R0=c, R1=c*P+d and
// the coprimality hypothesis applies to it); inputs violating that are still
// evaluated, the grid in the test suite filters on it.
BoundReport bound_t2(long P, long Q, long c, long d, unsigned long m, unsigned long n);

// lcm(R_m,...,R_n) >= g * ((R1+R0*|beta|)/g)^((n-1)/2) * alpha^(n^2/4 - n/2 - 7/4),
// g = gcd(R0,R1), for P > 0, Q < 0, R0,R1 >= 1, n >= 2, m <= floor((n+1)/2)+1.
BoundReport bound_t6(const RecurrenceParams& params, unsigned long m, unsigned long n);

// lcm(u_m,...,u_n) >= g * (r/g)^(n/2+1) * q^(n(n-2)/4), g = gcd(u0,r), over
// u_t = u0 + r*[t]_q with gcd(u0+r, q) = 1 and m <= floor(n/2). For even n the
// bound is rational and the comparison is exact.
BoundReport bound_t3(long q, long u0, long r, unsigned long m, unsigned long n);

// Phi^(n^2/4 - 9/4) <= lcm(F_1,...,F_n) <= Phi^(n^2/3 + 4n/3); both sides certified.
BoundReport check_bousla_farhi(unsigned long n);

struct RatioPoint {
  unsigned long n = 0;
  RealInterval numerator_log, denominator_log, ratio;
};

// ratio(n) = log lcm(R_floor(n/2),...,R_n) / ((log|alpha|/4) * n^2); a series
// for inspection, deliberately without pass/fail (asymptotic statement).
std::vector<RatioPoint> theorem4_scan(const RecurrenceParams& params,
                                      const std::vector<unsigned long>& n_list);

// first:  log lcm(R_n..R_{n+m}) / log|R_n*...*R_{n+m}|   (tends to 1, always <= 1)
// second: log lcm(R_n..R_{n+m}) / (n*(m+1)*log|alpha|)
std::pair<RatioPoint, RatioPoint> ratio_t7(const RecurrenceParams& params,
                                           unsigned long m, unsigned long n);

struct AkiyamaEstimate {
  RealInterval kappa;            // log(gcd(P^2,Q)) / (2 log|alpha|)
  RealInterval predicted_limit;  // pi^2 / (6 (1 - kappa))
};

// Empirical ratio log|R_1*...*R_n| / log lcm(R_1,...,R_n) for R0=0 sequences,
// with the predicted limit. Rejects if the interval for 1-kappa reaches 0.
std::pair<RatioPoint, AkiyamaEstimate> ratio_akiyama(const RecurrenceParams& params,
                                                     unsigned long n);

}  // namespace lcmlab
