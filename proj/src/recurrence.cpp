#include "lcmlab/recurrence.hpp"

#include <bit>
#include <stdexcept>

namespace lcmlab {

RecurrenceParams validate(long P, long Q, long R0, long R1) {
  if (P == 0 || Q == 0) throw std::domain_error("PQ=0 violates standing hypothesis");
  RecurrenceParams p;
  p.P = P;
  p.Q = Q;
  p.R0 = R0;
  p.R1 = R1;
  p.delta = BigInt(P) * P - 4 * BigInt(Q);
  if (p.delta == 0) throw std::domain_error("Δ=0 violates standing hypothesis");
  if (R0 == 0 && R1 == 0) throw std::domain_error("R0=R1=0 violates standing hypothesis");
  p.gcd_r0_r1 = gcd(BigInt(R0), BigInt(R1));
  p.theorem_scope = gcd(BigInt(P), BigInt(Q)) == 1 && gcd(BigInt(R1), BigInt(Q)) == 1;
  return p;
}

bool is_degenerate(const RecurrenceParams& params) {
  BigInt p2 = BigInt(params.P) * params.P;
  if (!divides(BigInt(params.Q), p2)) return false;
  BigInt v = p2 / params.Q;
  return v >= 0 && v <= 3;
}

QuadraticSurd surd_make(const BigRational& x, const BigRational& y, const BigInt& delta) {
  return QuadraticSurd{x, y, delta};
}

QuadraticSurd surd_add(const QuadraticSurd& a, const QuadraticSurd& b) {
  return {a.x + b.x, a.y + b.y, a.delta};
}

QuadraticSurd surd_sub(const QuadraticSurd& a, const QuadraticSurd& b) {
  return {a.x - b.x, a.y - b.y, a.delta};
}

QuadraticSurd surd_mul(const QuadraticSurd& a, const QuadraticSurd& b) {
  BigRational d(a.delta);
  return {a.x * b.x + a.y * b.y * d, a.x * b.y + a.y * b.x, a.delta};
}

QuadraticSurd surd_conj(const QuadraticSurd& a) { return {a.x, -a.y, a.delta}; }

QuadraticSurd surd_div(const QuadraticSurd& a, const QuadraticSurd& b) {
  // multiply by the conjugate; the norm x^2 - y^2*delta vanishes only for 0
  // (delta is never a perfect square here)
  BigRational norm = b.x * b.x - b.y * b.y * BigRational(b.delta);
  if (norm == 0) throw std::domain_error("division by zero surd");
  QuadraticSurd n = surd_mul(a, surd_conj(b));
  return {n.x / norm, n.y / norm, a.delta};
}

QuadraticSurd surd_pow(const QuadraticSurd& a, unsigned long e) {
  QuadraticSurd acc{BigRational(1), BigRational(0), a.delta};
  QuadraticSurd base = a;
  while (e > 0) {
    if (e & 1) acc = surd_mul(acc, base);
    e >>= 1;
    if (e) base = surd_mul(base, base);
  }
  return acc;
}

bool surd_eq(const QuadraticSurd& a, const QuadraticSurd& b) {
  return a.x == b.x && a.y == b.y;
}

bool surd_is_rational(const QuadraticSurd& a) { return a.y == 0; }

RealInterval surd_interval(const QuadraticSurd& a, mpfr_prec_t prec) {
  if (a.delta < 0) throw std::domain_error("surd_interval needs delta > 0");
  RealInterval root = sqrt(RealInterval::exact(a.delta, prec));
  return add(RealInterval::exact(a.x, prec), mul(RealInterval::exact(a.y, prec), root));
}

RootData roots(const RecurrenceParams& params, mpfr_prec_t prec) {
  if (is_degenerate(params)) throw std::domain_error("degenerate parameters: alpha/beta is a root of unity");
  RootData r;
  const long s = params.P > 0 ? 1 : -1;  // pick the dominant root
  BigRational half(1, 2);
  BigRational p_half = BigRational(params.P) * half;
  BigRational s_half = BigRational(s) * half;
  r.alpha_surd = surd_make(p_half, s_half, params.delta);
  r.beta_surd = surd_conj(r.alpha_surd);
  // a = (R1 - beta*R0)/(alpha - beta) simplifies to
  //     R0/2 + s*(2*R1 - R0*P)/(2*delta) * sqrt(delta)
  BigRational a_x = BigRational(params.R0) * half;
  BigRational a_y = BigRational(s) * make_rational(2 * BigInt(params.R1) - BigInt(params.R0) * params.P,
                                                   2 * params.delta);
  r.a_coeff = surd_make(a_x, a_y, params.delta);
  r.b_coeff = surd_conj(r.a_coeff);

  if (params.delta > 0) {
    r.complex_roots = false;
    r.alpha = surd_interval(r.alpha_surd, prec);
    r.beta = surd_interval(r.beta_surd, prec);
    r.abs_alpha = abs(r.alpha);
    r.abs_beta = abs(r.beta);
  } else {
    // conjugate complex roots: |alpha| = |beta| = sqrt(Q) (Q > 0 here);
    // the interval fields carry the common real part P/2
    r.complex_roots = true;
    r.alpha = RealInterval::exact(BigRational(params.P, 2), prec);
    r.beta = r.alpha;
    r.abs_alpha = sqrt(RealInterval::exact(BigInt(params.Q), prec));
    r.abs_beta = r.abs_alpha;
  }
  return r;
}

namespace {

// (U_n, U_{n+1}) by binary fast doubling
std::pair<BigInt, BigInt> lucas_pair(long P, long Q, unsigned long n) {
  std::pair<BigInt, BigInt> uv{0, 1};  // (U_0, U_1)
  if (n == 0) return uv;
  const int bits = std::bit_width(n);
  for (int i = bits - 1; i >= 0; --i) {
    BigInt& u = uv.first;
    BigInt& v = uv.second;
    BigInt u2 = u * (2 * v - P * u);   // U_{2k}
    BigInt v2 = v * v - Q * (u * u);   // U_{2k+1}
    if ((n >> i) & 1UL) {
      uv = {v2, BigInt(P * v2 - Q * u2)};
    } else {
      uv = {u2, v2};
    }
  }
  return uv;
}

}  // namespace

BigInt lucas_u(const RecurrenceParams& params, unsigned long n) {
  return lucas_pair(params.P, params.Q, n).first;
}

std::vector<BigInt> lucas_u_list(const RecurrenceParams& params, unsigned long n) {
  std::vector<BigInt> u;
  u.reserve(n + 1);
  u.emplace_back(0);
  if (n >= 1) u.emplace_back(1);
  for (unsigned long i = 2; i <= n; ++i)
    u.push_back(params.P * u[i - 1] - params.Q * u[i - 2]);
  return u;
}

BigInt term(const RecurrenceParams& params, unsigned long n) {
  if (n == 0) return BigInt(params.R0);
  auto [u_prev, u_n] = lucas_pair(params.P, params.Q, n - 1);  // (U_{n-1}, U_n)
  return params.R1 * u_n - BigInt(params.R0) * params.Q * u_prev;
}

std::vector<BigInt> term_list(const RecurrenceParams& params, unsigned long n) {
  std::vector<BigInt> r;
  r.reserve(n + 1);
  r.emplace_back(params.R0);
  if (n >= 1) r.emplace_back(params.R1);
  for (unsigned long i = 2; i <= n; ++i)
    r.push_back(params.P * r[i - 1] - params.Q * r[i - 2]);
  return r;
}

BigInt q_integer(long q, unsigned long n) {
  if (q < 2) throw std::domain_error("q-integer needs q >= 2");
  BigInt num = pow_int(BigInt(q), n) - 1;
  return num / (q - 1);  // exact: q - 1 divides q^n - 1
}

}  // namespace lcmlab
