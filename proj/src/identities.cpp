#include "lcmlab/identities.hpp"

#include <stdexcept>

namespace lcmlab {

const char* tag_label(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::CO: return "co";
    case IdentityTag::CO2: return "co2";
    case IdentityTag::TRI: return "tri";
    case IdentityTag::DERRR: return "derrr";
    case IdentityTag::DIF: return "dif";
    case IdentityTag::PF_E5: return "pf-e5";
    case IdentityTag::PF_E6: return "pf-e6";
    case IdentityTag::GCD_LEMMAS: return "gcd-lemmas";
  }
  return "?";
}

namespace {

void require_window(unsigned long k, unsigned long n) {
  if (k < 1 || k > n) throw std::invalid_argument("window needs 1 <= k <= n");
}

void require_lucas_scope(const RecurrenceParams& params) {
  if (!params.lucas_case())
    throw std::invalid_argument("identity needs the Lucas specialization (R0,R1)=(0,1)");
  if (!params.theorem_scope)
    throw std::domain_error("identity needs gcd(P,Q)=1");
}

IdentityReport base_report(IdentityTag tag, const RecurrenceParams& params,
                           unsigned long lo, unsigned long hi) {
  IdentityReport r;
  r.tag = tag;
  r.P = params.P;
  r.Q = params.Q;
  r.R0 = params.R0;
  r.R1 = params.R1;
  r.lo = lo;
  r.hi = hi;
  return r;
}

}  // namespace

BigInt lcm_range(const RecurrenceParams& params, unsigned long k, unsigned long n) {
  require_window(k, n);
  std::vector<BigInt> r = term_list(params, n);
  for (unsigned long i = k; i <= n; ++i)
    if (r[i] == 0)
      throw std::domain_error("R_" + std::to_string(i) + " = 0 in window [" +
                              std::to_string(k) + "," + std::to_string(n) + "]");
  BigInt acc = abs(r[k]);
  for (unsigned long i = k + 1; i <= n; ++i) acc = lcm(acc, r[i]);
  return acc;
}

DivisorCertificate theorem1_certificate(const RecurrenceParams& params,
                                        unsigned long k, unsigned long n) {
  require_window(k, n);
  if (!params.theorem_scope)
    throw std::domain_error("certificate needs gcd(P,Q)=gcd(R1,Q)=1");
  if (is_degenerate(params))
    throw std::domain_error("certificate needs nondegenerate parameters");
  DivisorCertificate cert;
  cert.k = k;
  cert.n = n;
  cert.lcm_value = lcm_range(params, k, n);
  std::vector<BigInt> r = term_list(params, n);
  BigInt prod(1);
  for (unsigned long i = k; i <= n; ++i) prod *= r[i];
  const unsigned long w = n - k;
  BigInt den = u_factorial(params, w) * pow_int(params.gcd_r0_r1, w);
  cert.divisor = make_rational(prod, den);
  cert.quotient = make_rational(cert.lcm_value * den, prod);
  cert.valid = is_integer(cert.quotient);
  return cert;
}

IdentityReport check_identity_co(const RecurrenceParams& params, unsigned long n, unsigned long k) {
  require_window(k, n);
  require_lucas_scope(params);
  IdentityReport rep = base_report(IdentityTag::CO, params, k, n);
  std::vector<BigInt> u = lucas_u_list(params, n);
  BigInt lhs = abs(u[n]);
  for (unsigned long i = n - k + 1; i < n; ++i) lhs = lcm(lhs, u[i]);
  BigInt binom(1), rhs(1);
  for (unsigned long m = 1; m <= k; ++m) {
    BigInt num = binom * u[n - m + 1];
    if (!divides(u[m], num)) {
      rep.note = "C_U(" + std::to_string(n) + "," + std::to_string(m) + ") is not integral";
      rep.pass = false;
      return rep;
    }
    binom = num / u[m];
    BigInt entry = u[m] * binom;
    rhs = m == 1 ? abs(entry) : lcm(rhs, entry);
  }
  rep.lhs = BigRational(lhs);
  rep.rhs = BigRational(rhs);
  rep.pass = lhs == rhs;
  return rep;
}

IdentityReport check_identity_co2(const RecurrenceParams& params, unsigned long n, unsigned long k) {
  require_window(k, n);
  require_lucas_scope(params);
  IdentityReport rep = base_report(IdentityTag::CO2, params, k, n);
  std::vector<BigInt> u = lucas_u_list(params, n + 1);
  BigInt binom(1), lhs(1);
  for (unsigned long m = 1; m <= k; ++m) {
    BigInt num = binom * u[n - m + 1];
    if (!divides(u[m], num)) {
      rep.note = "C_U(" + std::to_string(n) + "," + std::to_string(m) + ") is not integral";
      rep.pass = false;
      return rep;
    }
    binom = num / u[m];
    lhs = m == 1 ? abs(binom) : lcm(lhs, binom);
  }
  BigInt top = abs(u[n + 1]);
  for (unsigned long i = n - k + 1; i <= n; ++i) top = lcm(top, u[i]);
  if (!divides(u[n + 1], top)) {  // cannot fail: U_{n+1} is one of the lcm arguments
    rep.note = "U_{n+1} does not divide the extended window lcm";
    rep.pass = false;
    return rep;
  }
  BigInt rhs = top / abs(u[n + 1]);
  rep.lhs = BigRational(lhs);
  rep.rhs = BigRational(rhs);
  rep.pass = lhs == rhs;
  return rep;
}

IdentityReport check_theorem_tri(const RecurrenceParams& params, unsigned long n, unsigned long k) {
  require_window(k, n);
  require_lucas_scope(params);
  IdentityReport rep = base_report(IdentityTag::TRI, params, k, n);
  std::vector<BigInt> u = lucas_u_list(params, n);
  BigInt numlcm = abs(u[n]);
  for (unsigned long i = n - k + 1; i < n; ++i) numlcm = lcm(numlcm, u[i]);
  BigInt denlcm = abs(u[1]);
  for (unsigned long i = 2; i <= k; ++i) denlcm = lcm(denlcm, u[i]);
  BigInt binom(1);
  for (unsigned long m = 1; m <= k; ++m) {
    BigInt num = binom * u[n - m + 1];
    if (!divides(u[m], num)) {
      rep.note = "C_U(n,k) is not integral";
      rep.pass = false;
      return rep;
    }
    binom = num / u[m];
  }
  rep.rhs = BigRational(binom);
  if (!divides(denlcm, numlcm)) {
    rep.lhs = make_rational(numlcm, denlcm);
    rep.note = "lcm-binomial is not integral";
    rep.pass = false;
    return rep;
  }
  BigInt t = numlcm / denlcm;
  rep.lhs = BigRational(t);
  rep.pass = t > 0 && divides(t, binom);
  if (rep.pass && t != abs(binom)) rep.note = "strict divisor";
  return rep;
}

IdentityReport check_corollary_derrr(const RecurrenceParams& params, unsigned long n) {
  if (n < 1) throw std::invalid_argument("derrr needs n >= 1");
  require_lucas_scope(params);
  IdentityReport rep = base_report(IdentityTag::DERRR, params, 1, n);
  std::vector<BigInt> u = lucas_u_list(params, n);
  BigInt full = abs(u[1]);
  for (unsigned long i = 2; i <= n; ++i) full = lcm(full, u[i]);
  const unsigned long k0 = (n + 1) / 2;  // ceil(n/2)
  BigInt top = abs(u[n]);
  for (unsigned long i = n - k0 + 1; i < n; ++i) top = lcm(top, u[i]);
  rep.lhs = BigRational(full);
  rep.rhs = BigRational(top);
  rep.pass = full == top;
  return rep;
}

IdentityReport check_lemma_dif(const RecurrenceParams& params, unsigned long i, unsigned long j) {
  if (i < 1 || j < 1) throw std::invalid_argument("dif needs i, j >= 1");
  IdentityReport rep = base_report(IdentityTag::DIF, params, i, j);
  std::vector<BigInt> u = lucas_u_list(params, std::max(i, j));
  BigInt lhs = u[i] * u[j - 1] - u[i - 1] * u[j];
  BigInt rhs = i >= j ? BigInt(-pow_int(BigInt(params.Q), j - 1) * u[i - j])
                      : BigInt(pow_int(BigInt(params.Q), i - 1) * u[j - i]);
  rep.lhs = BigRational(lhs);
  rep.rhs = BigRational(rhs);
  rep.pass = lhs == rhs;
  return rep;
}

std::vector<IdentityReport> check_partial_fractions(const RecurrenceParams& params,
                                                    unsigned long k, unsigned long n) {
  require_window(k, n);
  if (n < 2) throw std::invalid_argument("partial fractions need n >= 2");
  if (!params.theorem_scope)
    throw std::domain_error("partial fractions need gcd(P,Q)=gcd(R1,Q)=1");
  if (is_degenerate(params))
    throw std::domain_error("partial fractions need nondegenerate parameters");
  std::vector<BigInt> r = term_list(params, n);
  for (unsigned long i = k; i <= n; ++i)
    if (r[i] == 0)
      throw std::domain_error("R_" + std::to_string(i) + " = 0 in window [" +
                              std::to_string(k) + "," + std::to_string(n) + "]");
  std::vector<BigInt> u = lucas_u_list(params, n);
  std::vector<BigInt> ufact(n + 1);
  ufact[0] = 1;
  for (unsigned long i = 1; i <= n; ++i) ufact[i] = ufact[i - 1] * u[i];

  const unsigned long w = n - k;
  BigInt prod(1);
  for (unsigned long i = k; i <= n; ++i) prod *= r[i];
  const BigInt q(params.Q);

  auto f_exp = [&](unsigned long j) {
    unsigned long f = 0;
    for (unsigned long i = k; i <= n; ++i)
      if (i != j) f += std::min(i, j);
    return f;
  };

  std::vector<IdentityReport> out;
  if (params.R0 != 0) {
    IdentityReport rep = base_report(IdentityTag::PF_E5, params, k, n);
    rep.lhs = make_rational(pow_int(BigInt(params.R0), w), prod);
    BigRational sum(0);
    for (unsigned long j = k; j <= n; ++j) {
      BigInt num = pow_int(u[j], w);
      if ((n - j) % 2 == 1) num = -num;
      BigInt den = pow_int(q, f_exp(j)) * ufact[j - k] * ufact[n - j] * r[j];
      sum += make_rational(num, den);
    }
    rep.rhs = sum;
    rep.pass = rep.lhs == rep.rhs;
    out.push_back(rep);
  }
  if (params.R1 != 0) {
    IdentityReport rep = base_report(IdentityTag::PF_E6, params, k, n);
    rep.lhs = make_rational(pow_int(BigInt(params.R1), w), prod);
    BigRational sum(0);
    for (unsigned long j = k; j <= n; ++j) {
      BigInt num = pow_int(u[j - 1], w);
      if ((n - j) % 2 == 1) num = -num;
      // f(j,k,n) >= n-k always (every min(i,j) is >= 1), so the exponent is natural
      BigInt den = pow_int(q, f_exp(j) - w) * ufact[j - k] * ufact[n - j] * r[j];
      sum += make_rational(num, den);
    }
    rep.rhs = sum;
    rep.pass = rep.lhs == rep.rhs;
    out.push_back(rep);
  }
  return out;
}

IdentityReport check_gcd_lemmas(const RecurrenceParams& params, unsigned long m_max) {
  if (m_max < 1) throw std::invalid_argument("gcd lemmas need m_max >= 1");
  if (!params.theorem_scope)
    throw std::domain_error("gcd lemmas need gcd(P,Q)=gcd(R1,Q)=1");
  IdentityReport rep = base_report(IdentityTag::GCD_LEMMAS, params, 1, m_max);
  std::vector<BigInt> u = lucas_u_list(params, m_max);
  std::vector<BigInt> r = term_list(params, m_max);
  const BigInt q(params.Q);
  BigInt worst(1);
  rep.pass = true;
  for (unsigned long m = 1; m <= m_max; ++m) {
    BigInt gu = gcd(u[m], q);
    BigInt gr = gcd(r[m], q);
    if (gu > worst) worst = gu;
    if (gr > worst) worst = gr;
    if ((gu != 1 || gr != 1) && rep.note.empty()) {
      rep.note = "gcd with Q exceeds 1 at m = " + std::to_string(m);
      rep.pass = false;
    }
  }
  rep.lhs = BigRational(worst);
  rep.rhs = BigRational(1);
  rep.pass = worst == 1;
  return rep;
}

std::vector<std::pair<unsigned long, unsigned long>> explore_equality(
    const RecurrenceParams& params, unsigned long n_max) {
  if (!params.lucas_case())
    throw std::invalid_argument("explorer needs the Lucas specialization (R0,R1)=(0,1)");
  std::vector<std::pair<unsigned long, unsigned long>> out;
  std::vector<BigInt> u = lucas_u_list(params, n_max);
  for (unsigned long i = 1; i <= n_max; ++i)
    if (u[i] == 0) throw std::domain_error("U_" + std::to_string(i) + " = 0 (degenerate parameters)");
  for (unsigned long n = 1; n <= n_max; ++n) {
    BigInt numlcm(0), denlcm(0);
    BigRational binom(1);
    for (unsigned long k = 1; k <= n; ++k) {
      numlcm = k == 1 ? abs(u[n]) : lcm(numlcm, u[n - k + 1]);
      denlcm = k == 1 ? abs(u[1]) : lcm(denlcm, u[k]);
      binom *= make_rational(u[n - k + 1], u[k]);
      if (make_rational(numlcm, denlcm) == binom) out.emplace_back(n, k);
    }
  }
  return out;
}

}  // namespace lcmlab
