#pragma once

#include <cstdint>
#include <vector>

#include "betadic/integer.hpp"

namespace betadic {

// Dense univariate polynomial over F_p, coefficients low-to-high in [0, p),
// no trailing zeros (the zero polynomial is empty).
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::vector<Int> coeffs, const Int& p);

  static FpPoly constant(const Int& c, const Int& p);
  static FpPoly x(const Int& p);

  const Int& modulus() const { return p_; }
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Int& lead() const { return c_.back(); }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

  FpPoly monic() const;
  FpPoly derivative() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.c_ == b.c_; }
  // Lexicographic on (degree, coefficients high to low).
  friend bool operator<(const FpPoly& a, const FpPoly& b);

 private:
  void trim();
  std::vector<Int> c_;
  Int p_;

};

// Quotient and remainder (b nonzero).
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly operator/(const FpPoly& a, const FpPoly& b);
// Monic gcd (zero if both are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);
FpPoly powmod(const FpPoly& base, const Int& exp, const FpPoly& mod);

struct FpFactor {
  FpPoly factor;  // monic irreducible
  std::uint64_t multiplicity;
};

struct FpFactorization {
  std::vector<FpFactor> factors;  // sorted by (degree, coefficients)
  std::uint64_t seed;             // seed of the equal-degree splitting RNG
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eedULL;

// Complete factorization of poly (integer coefficients) into monic
// irreducibles over F_p: square-free, distinct-degree, then equal-degree
// splitting. For p = 2 the splitting enumerates trace-map candidates
// deterministically; for odd p it draws candidates from a GMP Mersenne
// twister seeded with `seed`. The leading unit is dropped.
FpFactorization factor_mod_p(const std::vector<Int>& poly, const Int& p,
                             std::uint64_t seed = kDefaultSeed);

bool is_irreducible_mod_p(const std::vector<Int>& poly, const Int& p);

}  // namespace betadic
