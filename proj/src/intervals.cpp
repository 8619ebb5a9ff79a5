#include "lcmlab/intervals.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace lcmlab {

mpfr_prec_t precision_cap() {
  static const mpfr_prec_t cap = [] {
    if (const char* s = std::getenv("LCMLAB_PREC_CAP")) {
      long v = std::atol(s);
      if (v >= MPFR_PREC_MIN && v <= 1 << 20) return static_cast<mpfr_prec_t>(v);
    }
    return kHardPrecisionCap;
  }();
  return cap;
}

RealInterval::RealInterval() : RealInterval(kDefaultPrecision) {}

RealInterval::RealInterval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);  // same precision: exact
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealInterval RealInterval::exact(const BigInt& x, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_z(r.lo_, x.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, x.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::exact(const BigRational& x, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_q(r.lo_, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, x.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::exact(long x, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_si(r.lo_, x, MPFR_RNDD);
  mpfr_set_si(r.hi_, x, MPFR_RNDU);
  return r;
}

double RealInterval::lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double RealInterval::mid() const {
  mpfr_t m;
  mpfr_init2(m, mpfr_get_prec(lo_) + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

bool RealInterval::contains(double v) const {
  return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

bool RealInterval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RealInterval::lo_nonneg() const { return mpfr_sgn(lo_) >= 0; }
bool RealInterval::hi_neg() const { return mpfr_sgn(hi_) < 0; }

bool RealInterval::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

mpfr_prec_t RealInterval::prec() const {
  return std::max(mpfr_get_prec(lo_), mpfr_get_prec(hi_));
}

std::string RealInterval::lo_str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*RDg", digits, lo_);  // rounded down: stays below lo
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string RealInterval::hi_str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*RUg", digits, hi_);  // rounded up: stays above hi
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string RealInterval::str(int digits) const {
  // endpoints printed with outward rounding so the printed interval still
  // encloses the value
  return "[" + lo_str(digits) + ", " + hi_str(digits) + "]";
}

namespace {

mpfr_prec_t join_prec(const RealInterval& a, const RealInterval& b) {
  return std::max(a.prec(), b.prec());
}

}  // namespace

RealInterval add(const RealInterval& a, const RealInterval& b) {
  RealInterval r(join_prec(a, b));
  mpfr_add(r.lo_ptr(), a.lo_ptr(), b.lo_ptr(), MPFR_RNDD);
  mpfr_add(r.hi_ptr(), a.hi_ptr(), b.hi_ptr(), MPFR_RNDU);
  return r;
}

RealInterval sub(const RealInterval& a, const RealInterval& b) {
  RealInterval r(join_prec(a, b));
  mpfr_sub(r.lo_ptr(), a.lo_ptr(), b.hi_ptr(), MPFR_RNDD);
  mpfr_sub(r.hi_ptr(), a.hi_ptr(), b.lo_ptr(), MPFR_RNDU);
  return r;
}

RealInterval mul(const RealInterval& a, const RealInterval& b) {
  const mpfr_prec_t p = join_prec(a, b);
  RealInterval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  // lower endpoint: minimum of the four products rounded down
  mpfr_mul(r.lo_ptr(), a.lo_ptr(), b.lo_ptr(), MPFR_RNDD);
  mpfr_mul(t, a.lo_ptr(), b.hi_ptr(), MPFR_RNDD);
  mpfr_min(r.lo_ptr(), r.lo_ptr(), t, MPFR_RNDD);
  mpfr_mul(t, a.hi_ptr(), b.lo_ptr(), MPFR_RNDD);
  mpfr_min(r.lo_ptr(), r.lo_ptr(), t, MPFR_RNDD);
  mpfr_mul(t, a.hi_ptr(), b.hi_ptr(), MPFR_RNDD);
  mpfr_min(r.lo_ptr(), r.lo_ptr(), t, MPFR_RNDD);
  // upper endpoint: maximum rounded up
  mpfr_mul(r.hi_ptr(), a.lo_ptr(), b.lo_ptr(), MPFR_RNDU);
  mpfr_mul(t, a.lo_ptr(), b.hi_ptr(), MPFR_RNDU);
  mpfr_max(r.hi_ptr(), r.hi_ptr(), t, MPFR_RNDU);
  mpfr_mul(t, a.hi_ptr(), b.lo_ptr(), MPFR_RNDU);
  mpfr_max(r.hi_ptr(), r.hi_ptr(), t, MPFR_RNDU);
  mpfr_mul(t, a.hi_ptr(), b.hi_ptr(), MPFR_RNDU);
  mpfr_max(r.hi_ptr(), r.hi_ptr(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

RealInterval div(const RealInterval& a, const RealInterval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing 0");
  const mpfr_prec_t p = join_prec(a, b);
  // reciprocal of [bl, bh] is [1/bh, 1/bl] (b has constant sign here)
  RealInterval inv(p);
  mpfr_ui_div(inv.lo_ptr(), 1, b.hi_ptr(), MPFR_RNDD);
  mpfr_ui_div(inv.hi_ptr(), 1, b.lo_ptr(), MPFR_RNDU);
  return mul(a, inv);
}

RealInterval neg(const RealInterval& a) {
  RealInterval r(a.prec());
  mpfr_neg(r.lo_ptr(), a.hi_ptr(), MPFR_RNDD);
  mpfr_neg(r.hi_ptr(), a.lo_ptr(), MPFR_RNDU);
  return r;
}

RealInterval abs(const RealInterval& a) {
  if (a.lo_nonneg()) return a;
  if (mpfr_sgn(a.hi_ptr()) <= 0) return neg(a);
  // straddles zero: [0, max(|lo|, hi)]
  RealInterval r(a.prec());
  mpfr_set_zero(r.lo_ptr(), 1);
  mpfr_neg(r.hi_ptr(), a.lo_ptr(), MPFR_RNDU);
  mpfr_max(r.hi_ptr(), r.hi_ptr(), a.hi_ptr(), MPFR_RNDU);
  return r;
}

RealInterval sqrt(const RealInterval& a) {
  if (!a.lo_nonneg()) throw std::domain_error("sqrt of an interval with negative lower endpoint");
  RealInterval r(a.prec());
  mpfr_sqrt(r.lo_ptr(), a.lo_ptr(), MPFR_RNDD);
  mpfr_sqrt(r.hi_ptr(), a.hi_ptr(), MPFR_RNDU);
  return r;
}

RealInterval log(const RealInterval& a) {
  if (mpfr_sgn(a.lo_ptr()) <= 0) throw std::domain_error("log of an interval reaching <= 0");
  RealInterval r(a.prec());
  mpfr_log(r.lo_ptr(), a.lo_ptr(), MPFR_RNDD);
  mpfr_log(r.hi_ptr(), a.hi_ptr(), MPFR_RNDU);
  return r;
}

RealInterval exp(const RealInterval& a) {
  RealInterval r(a.prec());
  mpfr_exp(r.lo_ptr(), a.lo_ptr(), MPFR_RNDD);
  mpfr_exp(r.hi_ptr(), a.hi_ptr(), MPFR_RNDU);
  return r;
}

RealInterval pow_si(const RealInterval& x, long e) {
  RealInterval r(x.prec());
  if (e == 0) {  // exactly [1, 1] regardless of x
    mpfr_set_ui(r.lo_ptr(), 1, MPFR_RNDD);
    mpfr_set_ui(r.hi_ptr(), 1, MPFR_RNDU);
    return r;
  }
  if (e > 0) {
    if (!x.lo_nonneg()) throw std::domain_error("pow_si needs a nonnegative base");
    mpfr_pow_si(r.lo_ptr(), x.lo_ptr(), e, MPFR_RNDD);
    mpfr_pow_si(r.hi_ptr(), x.hi_ptr(), e, MPFR_RNDU);
  } else {
    if (mpfr_sgn(x.lo_ptr()) <= 0) throw std::domain_error("pow_si with negative exponent needs a positive base");
    mpfr_pow_si(r.lo_ptr(), x.hi_ptr(), e, MPFR_RNDD);
    mpfr_pow_si(r.hi_ptr(), x.lo_ptr(), e, MPFR_RNDU);
  }
  return r;
}

RealInterval pow_rational(const RealInterval& x, const BigRational& e) {
  if (is_integer(e) && e.get_num().fits_slong_p())
    return pow_si(x, e.get_num().get_si());
  return exp(mul(RealInterval::exact(e, x.prec()), log(x)));
}

RealInterval pi_interval(mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_const_pi(r.lo_ptr(), MPFR_RNDD);
  mpfr_const_pi(r.hi_ptr(), MPFR_RNDU);
  return r;
}

RealInterval log_interval(const BigInt& x, mpfr_prec_t prec) {
  if (x <= 0) throw std::domain_error("log_interval needs x > 0");
  if (x == 1) return RealInterval(prec);  // ln 1 = [0, 0] exactly
  const mpfr_prec_t cap = precision_cap();
  mpfr_prec_t p = std::min(std::max(prec, static_cast<mpfr_prec_t>(MPFR_PREC_MIN)), cap);
  for (;;) {
    RealInterval v(p);
    mpfr_set_z(v.lo_ptr(), x.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(v.hi_ptr(), x.get_mpz_t(), MPFR_RNDU);
    RealInterval l = log(v);
    // stop once width < 2^-64 |mid|
    mpfr_t width, bound;
    mpfr_init2(width, p);
    mpfr_init2(bound, p);
    mpfr_sub(width, l.hi_ptr(), l.lo_ptr(), MPFR_RNDU);
    mpfr_add(bound, l.lo_ptr(), l.hi_ptr(), MPFR_RNDD);
    mpfr_abs(bound, bound, MPFR_RNDD);
    mpfr_div_2ui(bound, bound, 65, MPFR_RNDD);  // |mid| * 2^-64
    bool ok = mpfr_cmp(width, bound) < 0;
    mpfr_clear(width);
    mpfr_clear(bound);
    if (ok || p >= cap) return l;
    p = std::min(static_cast<mpfr_prec_t>(p * 2), cap);
  }
}

bool certified_geq(const RealInterval& a, const RealInterval& b) {
  return mpfr_cmp(a.lo_ptr(), b.hi_ptr()) >= 0;
}

bool certified_leq(const RealInterval& a, const RealInterval& b) {
  return mpfr_cmp(a.hi_ptr(), b.lo_ptr()) <= 0;
}

}  // namespace lcmlab
