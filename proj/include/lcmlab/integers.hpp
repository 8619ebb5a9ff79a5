#pragma once

// Exact integer/rational layer. All gcd/lcm traffic funnels through here so
// the sign conventions (gcd >= 0, lcm > 0, rationals in lowest terms with
// positive denominator) live in exactly one place.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace lcmlab {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Nonnegative gcd; gcd(0, x) = |x|. Throws std::domain_error if both are zero.
BigInt gcd(const BigInt& a, const BigInt& b);

// Positive lcm = |a*b| / gcd(a, b). Throws std::domain_error on zero input.
BigInt lcm(const BigInt& a, const BigInt& b);

// Left-to-right fold of binary lcm over a nonempty list.
BigInt lcm_fold(const std::vector<BigInt>& xs);

BigInt pow_int(const BigInt& base, unsigned long e);

// True iff d divides x (d != 0).
bool divides(const BigInt& d, const BigInt& x);

// num/den reduced to lowest terms, denominator > 0. Throws on den = 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

std::string to_string(const BigInt& x);
std::string to_string(const BigRational& r);

}  // namespace lcmlab
