#pragma once

// Exact integer and rational helpers on top of GMP.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace expander_forge {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned long k);
BigInt binomial(unsigned long n, unsigned long k);

/// Number of perfect matchings on 2m points: (2m)! / (m! 2^m).
BigInt perfect_matchings(unsigned long m);

/// Caches k! for 0 <= k <= limit; used by the bound sums where the same
/// factorials are needed thousands of times.
class FactorialTable {
 public:
  explicit FactorialTable(unsigned long limit);
  const BigInt& operator()(unsigned long k) const;
  unsigned long limit() const { return static_cast<unsigned long>(table_.size()) - 1; }

 private:
  std::vector<BigInt> table_;
};

/// Parses "3", "-2", "1/50", "0.02", "2.5e-3" into an exact rational.
/// Decimal literals are read exactly (0.1 is 1/10, not the nearest double).
Rational parse_rational(std::string_view text);

/// "p/q" or "p" for integers.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

double to_double(const Rational& q);

}  // namespace expander_forge
