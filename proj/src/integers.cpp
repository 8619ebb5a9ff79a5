#include "lcmlab/integers.hpp"

namespace lcmlab {

BigInt gcd(const BigInt& a, const BigInt& b) {
  if (a == 0 && b == 0) throw std::domain_error("gcd(0,0) is undefined");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) throw std::domain_error("lcm of zero is undefined");
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;  // mpz_lcm returns a nonnegative result
}

BigInt lcm_fold(const std::vector<BigInt>& xs) {
  if (xs.empty()) throw std::domain_error("lcm of an empty list is undefined");
  BigInt acc = abs(xs.front());
  if (acc == 0) throw std::domain_error("lcm of zero is undefined");
  for (std::size_t i = 1; i < xs.size(); ++i) acc = lcm(acc, xs[i]);
  return acc;
}

BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool divides(const BigInt& d, const BigInt& x) {
  if (d == 0) throw std::domain_error("division by zero");
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();  // lowest terms, denominator made positive
  return r;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRational& r) { return r.get_str(); }

}  // namespace lcmlab
