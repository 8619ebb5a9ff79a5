#include "lcmlab/bounds.hpp"

#include <stdexcept>

namespace lcmlab {

namespace {

// log of an exact positive rational, outward rounded
RealInterval log_rational(const BigRational& x, mpfr_prec_t prec) {
  return log(RealInterval::exact(x, prec));
}

RealInterval scale(const RealInterval& iv, const BigRational& c, mpfr_prec_t prec) {
  return mul(RealInterval::exact(c, prec), iv);
}

bool decided(const RealInterval& slack) { return !slack.contains_zero(); }

}  // namespace

BoundReport bound_t2(long P, long Q, long c, long d, unsigned long m, unsigned long n) {
  if (P < 1 || Q < 1) throw std::domain_error("bound needs P, Q >= 1");
  if (c < 1 || d < 1) throw std::domain_error("bound needs c, d >= 1");
  RecurrenceParams base = validate(P, Q, 0, 1);  // carries delta and gcd(P,Q) scope
  if (base.delta <= 0) throw std::domain_error("bound needs a positive discriminant");
  if (gcd(BigInt(P), BigInt(Q)) != 1) throw std::domain_error("bound needs gcd(P,Q)=1");
  if (m < 1 || n < 1) throw std::domain_error("bound needs positive m and n");
  if (m > n / 2) throw std::domain_error("bound needs m <= floor(n/2)");

  BoundReport rep;
  rep.theorem = "Theorem 2";
  rep.inputs = {{"P", P}, {"Q", Q}, {"c", c}, {"d", d}};
  rep.m = m;
  rep.n = n;

  std::vector<BigInt> u = lucas_u_list(base, n + 1);
  std::vector<BigInt> terms;
  for (unsigned long i = m; i <= n; ++i) terms.push_back(c * u[i + 1] + d * u[i]);
  rep.lcm_value = lcm_fold(terms);

  const BigInt g = gcd(BigInt(c), BigInt(d));
  // log bound = (1 + n/2) log(c*alpha+d) + (n^2/4 - n/2) log alpha - (n/2) log g
  const BigRational e_base = make_rational(BigInt(n) + 2, BigInt(2));
  const BigRational e_alpha = make_rational(BigInt(n) * n - 2 * BigInt(n), 4);
  const BigRational e_g = make_rational(BigInt(n), BigInt(2));

  const mpfr_prec_t cap = precision_cap();
  for (mpfr_prec_t prec = kDefaultPrecision;; prec *= 2) {
    if (prec > cap) prec = cap;
    RootData rd = roots(base, prec);
    RealInterval calpha_d = add(mul(RealInterval::exact(BigInt(c), prec), rd.alpha),
                                RealInterval::exact(BigInt(d), prec));
    rep.log_bound = add(scale(log(calpha_d), e_base, prec),
                        sub(scale(log(rd.alpha), e_alpha, prec),
                            scale(log_interval(g, prec), e_g, prec)));
    rep.log_lcm = log_interval(rep.lcm_value, prec);
    rep.slack = sub(rep.log_lcm, rep.log_bound);
    rep.t_const = log_interval(g, prec);
    rep.precision_bits = prec;
    if (decided(rep.slack) || prec >= cap) break;
  }
  rep.verdict = rep.slack.lo_nonneg();
  return rep;
}

BoundReport bound_t6(const RecurrenceParams& params, unsigned long m, unsigned long n) {
  if (params.P <= 0) throw std::domain_error("bound needs P > 0");
  if (params.Q >= 0) throw std::domain_error("bound needs Q < 0");
  if (params.R0 < 1 || params.R1 < 1) throw std::domain_error("bound needs R0, R1 >= 1");
  if (!params.theorem_scope) throw std::domain_error("bound needs gcd(P,Q)=gcd(R1,Q)=1");
  if (n < 2) throw std::domain_error("bound needs n >= 2");
  if (m < 1) throw std::domain_error("bound needs m >= 1");
  if (m > (n + 1) / 2 + 1) throw std::domain_error("bound needs m <= floor((n+1)/2)+1");

  BoundReport rep;
  rep.theorem = "Theorem 6";
  rep.inputs = {{"P", params.P}, {"Q", params.Q}, {"R0", params.R0}, {"R1", params.R1}};
  rep.m = m;
  rep.n = n;
  std::vector<BigInt> r = term_list(params, n);
  std::vector<BigInt> window(r.begin() + m, r.begin() + n + 1);
  rep.lcm_value = lcm_fold(window);

  const BigInt& g = params.gcd_r0_r1;
  const BigRational e_base = make_rational(BigInt(n) - 1, BigInt(2));
  const BigRational e_alpha = make_rational(BigInt(n) * n - 2 * BigInt(n) - 7, 4);

  const mpfr_prec_t cap = precision_cap();
  for (mpfr_prec_t prec = kDefaultPrecision;; prec *= 2) {
    if (prec > cap) prec = cap;
    RootData rd = roots(params, prec);
    // (R1 + R0|beta|)/g
    RealInterval base = div(add(RealInterval::exact(BigInt(params.R1), prec),
                                mul(RealInterval::exact(BigInt(params.R0), prec), rd.abs_beta)),
                            RealInterval::exact(g, prec));
    rep.log_bound = add(log_interval(g, prec),
                        add(scale(log(base), e_base, prec),
                            scale(log(rd.abs_alpha), e_alpha, prec)));
    rep.log_lcm = log_interval(rep.lcm_value, prec);
    rep.slack = sub(rep.log_lcm, rep.log_bound);
    rep.t_const = log_interval(g, prec);
    rep.precision_bits = prec;
    if (decided(rep.slack) || prec >= cap) break;
  }
  rep.verdict = rep.slack.lo_nonneg();
  return rep;
}

BoundReport bound_t3(long q, long u0, long r, unsigned long m, unsigned long n) {
  if (q < 2) throw std::domain_error("bound needs q >= 2");
  if (u0 < 1 || r < 1) throw std::domain_error("bound needs u0, r >= 1");
  if (gcd(BigInt(u0 + r), BigInt(q)) != 1)
    throw std::domain_error("bound needs gcd(u0+r,q)=1");
  if (m < 1 || n < 1) throw std::domain_error("bound needs positive m and n");
  if (m > n / 2) throw std::domain_error("bound needs m <= floor(n/2)");

  BoundReport rep;
  rep.theorem = "Theorem 3";
  rep.inputs = {{"q", q}, {"u0", u0}, {"r", r}};
  rep.m = m;
  rep.n = n;
  std::vector<BigInt> terms;
  for (unsigned long t = m; t <= n; ++t) terms.push_back(u0 + r * q_integer(q, t));
  rep.lcm_value = lcm_fold(terms);

  const BigInt g = gcd(BigInt(u0), BigInt(r));
  const BigRational rg = make_rational(BigInt(r), g);
  const BigRational e_rg = make_rational(BigInt(n) + 2, BigInt(2));  // n/2 + 1
  const BigRational e_q = make_rational(BigInt(n) * (BigInt(n) - 2), 4);

  if (n % 2 == 0) {
    // integer exponents: the bound is an exact rational, compare exactly
    BigRational bound = BigRational(g);
    BigRational rg_pow(pow_int(rg.get_num(), e_rg.get_num().get_ui()),
                       pow_int(rg.get_den(), e_rg.get_num().get_ui()));
    rg_pow.canonicalize();
    bound *= rg_pow;
    // n(n-2)/4 can be negative only for n = 1 (excluded when even)
    bound *= BigRational(pow_int(BigInt(q), e_q.get_num().get_ui()));
    rep.exact_comparison = true;
    rep.verdict = BigRational(rep.lcm_value) >= bound;
    rep.log_lcm = log_interval(rep.lcm_value);
    rep.log_bound = log_rational(bound, kDefaultPrecision);
    rep.slack = sub(rep.log_lcm, rep.log_bound);
    rep.t_const = log_interval(g);
    return rep;
  }

  const mpfr_prec_t cap = precision_cap();
  for (mpfr_prec_t prec = kDefaultPrecision;; prec *= 2) {
    if (prec > cap) prec = cap;
    RealInterval log_q = log(RealInterval::exact(BigInt(q), prec));
    rep.log_bound = add(log_interval(g, prec),
                        add(scale(log_rational(rg, prec), e_rg, prec),
                            scale(log_q, e_q, prec)));
    rep.log_lcm = log_interval(rep.lcm_value, prec);
    rep.slack = sub(rep.log_lcm, rep.log_bound);
    rep.t_const = log_interval(g, prec);
    rep.precision_bits = prec;
    if (decided(rep.slack) || prec >= cap) break;
  }
  rep.verdict = rep.slack.lo_nonneg();
  return rep;
}

BoundReport check_bousla_farhi(unsigned long n) {
  if (n < 1) throw std::domain_error("bound needs n >= 1");
  BoundReport rep;
  rep.theorem = "Fibonacci lcm bounds";
  rep.inputs = {{"P", 1}, {"Q", -1}, {"R0", 0}, {"R1", 1}};
  rep.m = 1;
  rep.n = n;
  RecurrenceParams fib = validate(1, -1, 0, 1);
  rep.lcm_value = lcm_range(fib, 1, n);

  const BigRational e_lower = make_rational(BigInt(n) * n - 9, 4);
  const BigRational e_upper = make_rational(BigInt(n) * n + 4 * BigInt(n), 3);

  const mpfr_prec_t cap = precision_cap();
  for (mpfr_prec_t prec = kDefaultPrecision;; prec *= 2) {
    if (prec > cap) prec = cap;
    RealInterval log_phi = log(roots(fib, prec).alpha);
    rep.log_bound = scale(log_phi, e_lower, prec);
    RealInterval upper_log = scale(log_phi, e_upper, prec);
    rep.log_lcm = log_interval(rep.lcm_value, prec);
    rep.slack = sub(rep.log_lcm, rep.log_bound);
    rep.slack_upper = sub(upper_log, rep.log_lcm);
    rep.t_const = RealInterval(prec);  // gcd(F_0, F_1) = 1
    rep.precision_bits = prec;
    if ((decided(rep.slack) && decided(*rep.slack_upper)) || prec >= cap) break;
  }
  rep.verdict = rep.slack.lo_nonneg() && rep.slack_upper->lo_nonneg();
  return rep;
}

std::vector<RatioPoint> theorem4_scan(const RecurrenceParams& params,
                                      const std::vector<unsigned long>& n_list) {
  std::vector<RatioPoint> out;
  RootData rd = roots(params);
  RealInterval log_alpha = log(rd.abs_alpha);
  for (unsigned long n : n_list) {
    if (n < 2) throw std::invalid_argument("scan needs n >= 2");
    RatioPoint pt;
    pt.n = n;
    pt.numerator_log = log_interval(lcm_range(params, n / 2, n));
    pt.denominator_log = scale(log_alpha, make_rational(BigInt(n) * n, 4), log_alpha.prec());
    pt.ratio = div(pt.numerator_log, pt.denominator_log);
    out.push_back(pt);
  }
  return out;
}

std::pair<RatioPoint, RatioPoint> ratio_t7(const RecurrenceParams& params,
                                           unsigned long m, unsigned long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("ratio needs m, n >= 1");
  BigInt l = lcm_range(params, n, n + m);
  std::vector<BigInt> r = term_list(params, n + m);
  BigInt prod(1);
  for (unsigned long i = n; i <= n + m; ++i) prod *= abs(r[i]);
  if (prod == 1) throw std::domain_error("log of the window product is zero");
  RealInterval log_lcm = log_interval(l);

  RatioPoint first;
  first.n = n;
  first.numerator_log = log_lcm;
  first.denominator_log = log_interval(prod);
  first.ratio = div(first.numerator_log, first.denominator_log);

  RatioPoint second;
  second.n = n;
  second.numerator_log = log_lcm;
  RootData rd = roots(params);
  second.denominator_log =
      mul(RealInterval::exact(BigInt(BigInt(n) * (m + 1))), log(rd.abs_alpha));
  second.ratio = div(second.numerator_log, second.denominator_log);
  return {first, second};
}

std::pair<RatioPoint, AkiyamaEstimate> ratio_akiyama(const RecurrenceParams& params,
                                                     unsigned long n) {
  if (params.R0 != 0 || params.R1 == 0)
    throw std::invalid_argument("estimator needs R0 = 0 and R1 != 0");
  if (n < 2) throw std::invalid_argument("estimator needs n >= 2");
  BigInt l = lcm_range(params, 1, n);
  if (l == 1) throw std::domain_error("log lcm is zero");
  std::vector<BigInt> r = term_list(params, n);
  BigInt prod(1);
  for (unsigned long i = 1; i <= n; ++i) prod *= abs(r[i]);

  RatioPoint pt;
  pt.n = n;
  pt.numerator_log = log_interval(prod);
  pt.denominator_log = log_interval(l);
  pt.ratio = div(pt.numerator_log, pt.denominator_log);

  AkiyamaEstimate est;
  RootData rd = roots(params);
  BigInt g2 = gcd(BigInt(BigInt(params.P) * params.P), BigInt(params.Q));
  est.kappa = div(log_interval(g2), mul(RealInterval::exact(2L), log(rd.abs_alpha)));
  RealInterval one_minus = sub(RealInterval::exact(1L), est.kappa);
  if (one_minus.contains_zero())
    throw std::domain_error("1 - kappa cannot be separated from zero");
  RealInterval pi = pi_interval(est.kappa.prec());
  est.predicted_limit = div(div(mul(pi, pi), RealInterval::exact(6L)), one_minus);
  return {pt, est};
}

}  // namespace lcmlab
