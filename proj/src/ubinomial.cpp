#include "lcmlab/ubinomial.hpp"

#include <stdexcept>

namespace lcmlab {

BigInt u_factorial(const RecurrenceParams& params, unsigned long j) {
  std::vector<BigInt> u = lucas_u_list(params, j);
  BigInt acc(1);
  for (unsigned long i = 1; i <= j; ++i) acc *= u[i];
  return acc;
}

UBinomial u_binomial(const RecurrenceParams& params, unsigned long n, unsigned long k) {
  if (k > n) throw std::invalid_argument("u_binomial needs k <= n");
  UBinomial out;
  out.n = n;
  out.k = k;
  std::vector<BigInt> u = lucas_u_list(params, n);
  BigRational acc(1);
  for (unsigned long i = 1; i <= k; ++i) {
    if (u[i] == 0) throw std::domain_error("U_" + std::to_string(i) + " = 0 in denominator (degenerate parameters)");
    acc *= make_rational(u[n - k + i], u[i]);
  }
  out.value = acc;
  out.integral = is_integer(acc);
  return out;
}

BigInt lcm_binomial(const RecurrenceParams& params, unsigned long n, unsigned long k) {
  if (k < 1 || k > n) throw std::invalid_argument("lcm_binomial needs 1 <= k <= n");
  std::vector<BigInt> u = lucas_u_list(params, n);
  for (unsigned long i = n - k + 1; i <= n; ++i)
    if (u[i] == 0) throw std::domain_error("U_" + std::to_string(i) + " = 0 in lcm window");
  for (unsigned long i = 1; i <= k; ++i)
    if (u[i] == 0) throw std::domain_error("U_" + std::to_string(i) + " = 0 in lcm window");
  BigInt num = abs(u[n]);
  for (unsigned long i = n - k + 1; i < n; ++i) num = lcm(num, u[i]);
  BigInt den = abs(u[1]);
  for (unsigned long i = 2; i <= k; ++i) den = lcm(den, u[i]);
  if (!divides(den, num))
    throw std::domain_error("lcm(U_n..U_{n-k+1}) is not a multiple of lcm(U_1..U_k) here");
  return num / den;
}

namespace {

unsigned long long f_sum(unsigned long j, unsigned long k, unsigned long n) {
  unsigned long long f = 0;
  for (unsigned long i = k; i <= n; ++i)
    if (i != j) f += std::min(i, j);
  return f;
}

}  // namespace

ExponentTriple schedule_exponents(unsigned long j, unsigned long k, unsigned long n) {
  if (k > n || j < k || j > n) throw std::invalid_argument("schedule_exponents needs k <= j <= n");
  ExponentTriple t;
  t.f = f_sum(j, k, n);
  t.g = static_cast<unsigned long long>(n + k) * (n - k + 1) / 2;
  t.h = 0;
  for (unsigned long jj = k; jj <= n; ++jj) t.h = std::max(t.h, f_sum(jj, k, n));
  return t;
}

}  // namespace lcmlab
