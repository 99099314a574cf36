#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace betadic {

using Int = mpz_class;
using Rational = mpq_class;

// Parses a decimal integer with optional sign; throws InvalidArgument.
Int parse_int(std::string_view text);
std::string to_string(const Int& value);
std::string to_string(const Rational& value);

// Floor division and the matching non-negative remainder (for positive d).
Int floor_div(const Int& n, const Int& d);
Int floor_mod(const Int& n, const Int& d);

Int ipow(const Int& base, std::uint64_t exp);

// Natural logarithm of |value| that stays accurate far beyond double range.
double log_abs(const Int& value);

// Number of times p divides n (n != 0, p >= 2).
std::uint64_t multiplicity(Int n, const Int& p);

// Miller-Rabin with 40 rounds (GMP); deterministic below 2^64.
bool is_probable_prime(const Int& n);

struct PrimePower {
  Int prime;
  std::uint64_t exponent;
  bool operator==(const PrimePower&) const = default;
};

// Factors |n| (n != 0): trial division to 10^6, then Pollard rho (Brent)
// with polynomial constants c = 1, 2, ... tried in order. Throws
// FactoringFailed if rho exhausts its schedule.
std::vector<PrimePower> factor_integer(const Int& n);

std::vector<Int> prime_divisors(const Int& n);

}  // namespace betadic
