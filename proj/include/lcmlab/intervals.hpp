#pragma once

// Directed-rounding real intervals over MPFR. The lower endpoint is always
// rounded down and the upper endpoint up, so an interval encloses the exact
// value it stands for and every operation can only widen the enclosure.
// Inequalities tested through the certified_* predicates are therefore true
// inequalities between the exact values, never rounding accidents.

#include <mpfr.h>

#include <string>

#include "lcmlab/integers.hpp"

namespace lcmlab {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr mpfr_prec_t kHardPrecisionCap = 1024;

// Escalation cap in bits; LCMLAB_PREC_CAP overrides the built-in default.
mpfr_prec_t precision_cap();

class RealInterval {
 public:
  RealInterval();                          // [0, 0] at default precision
  explicit RealInterval(mpfr_prec_t prec); // [0, 0] at the given precision
  RealInterval(const RealInterval& o);
  RealInterval(RealInterval&& o) noexcept;
  RealInterval& operator=(const RealInterval& o);
  RealInterval& operator=(RealInterval&& o) noexcept;
  ~RealInterval();

  // Tightest enclosure of an exact value at the given working precision.
  static RealInterval exact(const BigInt& x, mpfr_prec_t prec = kDefaultPrecision);
  static RealInterval exact(const BigRational& x, mpfr_prec_t prec = kDefaultPrecision);
  static RealInterval exact(long x, mpfr_prec_t prec = kDefaultPrecision);

  double lo() const;   // rounded toward -inf
  double hi() const;   // rounded toward +inf
  double mid() const;
  bool contains(double v) const;
  bool contains_zero() const;
  bool lo_nonneg() const;  // exact test on the mpfr endpoint, no double rounding
  bool hi_neg() const;
  bool is_point() const;
  mpfr_prec_t prec() const;
  std::string str(int digits = 6) const;  // "[lo, hi]", endpoints rounded outward
  std::string lo_str(int digits = 6) const;
  std::string hi_str(int digits = 6) const;

  mpfr_srcptr lo_ptr() const { return lo_; }
  mpfr_srcptr hi_ptr() const { return hi_; }
  mpfr_ptr lo_ptr() { return lo_; }
  mpfr_ptr hi_ptr() { return hi_; }

 private:
  mpfr_t lo_, hi_;
};

// Binary operations take the max of the operand precisions.
RealInterval add(const RealInterval& a, const RealInterval& b);
RealInterval sub(const RealInterval& a, const RealInterval& b);
RealInterval mul(const RealInterval& a, const RealInterval& b);
RealInterval div(const RealInterval& a, const RealInterval& b);  // 0 not in b
RealInterval neg(const RealInterval& a);
RealInterval abs(const RealInterval& a);
RealInterval sqrt(const RealInterval& a);  // requires a.lo >= 0
RealInterval log(const RealInterval& a);   // requires a.lo > 0
RealInterval exp(const RealInterval& a);

// x^e by endpoint monotonicity; exact [1,1] for e = 0 (needed where a bound
// holds with equality, e.g. |U_2| = |alpha|^0). Requires x > 0 unless e >= 0
// and x.lo >= 0.
RealInterval pow_si(const RealInterval& x, long e);

// x^(p/q) via exp((p/q) log x) for fractional exponents; integer exponents
// dispatch to pow_si. Requires x > 0.
RealInterval pow_rational(const RealInterval& x, const BigRational& e);

RealInterval pi_interval(mpfr_prec_t prec = kDefaultPrecision);

// Enclosure of ln(x) for x > 0, widening the working precision (doubling, up
// to precision_cap()) until width < 2^-64 * |midpoint|. ln(1) = [0, 0].
RealInterval log_interval(const BigInt& x, mpfr_prec_t prec = kDefaultPrecision);

// a.lo >= b.hi resp. a.hi <= b.lo: the exact values compare the same way.
bool certified_geq(const RealInterval& a, const RealInterval& b);
bool certified_leq(const RealInterval& a, const RealInterval& b);

}  // namespace lcmlab
