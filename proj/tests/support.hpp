#pragma once

// Shared fixtures and brute-force oracles for the test suites. Oracles here
// use only plain integer arithmetic or naive enumeration; they never call
// the order, valuation or digit routines they are used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "betadic/lattice.hpp"
#include "betadic/ring.hpp"

namespace betadic::testing {

inline NumberRing rationals() { return NumberRing({Int(0), Int(1)}); }
inline NumberRing gaussian() { return NumberRing({Int(1), Int(0), Int(1)}); }
inline NumberRing sqrt2() { return NumberRing({Int(-2), Int(0), Int(1)}); }
inline std::vector<NumberRing> shipped_fields() { return {rationals(), gaussian(), sqrt2()}; }

inline RingElement elem(const NumberRing& ring, std::vector<long> coords) {
  std::vector<Int> c;
  for (long v : coords) c.emplace_back(v);
  return ring.element(std::move(c));
}

inline RingElement random_element(const NumberRing& ring, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Int> c;
  for (std::size_t i = 0; i < ring.degree(); ++i) c.emplace_back(dist(rng));
  return ring.element(std::move(c));
}

inline RingElement random_nonzero(const NumberRing& ring, std::mt19937_64& rng, long bound) {
  for (;;) {
    auto e = random_element(ring, rng, bound);
    if (!e.is_zero()) return e;
  }
}

// Order of a in the quotient by walking a, a^2, ... until the residue of 1.
inline std::uint64_t naive_order(const QuotientRing& q, const RingElement& a, std::uint64_t limit) {
  const RingElement one = q.reduce(q.ring().one());
  const RingElement start = q.reduce(a);
  RingElement x = start;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (x == one) return n;
    x = q.reduce(x * start);
  }
  return 0;
}

// All canonical residues of a lattice quotient, by mixed-radix enumeration.
inline std::vector<RingElement> all_residues(const NumberRing& ring, const IntegerLattice& lattice) {
  std::vector<RingElement> out;
  const auto n = lattice.determinant().get_ui();
  for (unsigned long i = 0; i < n; ++i) out.push_back(ring.element(lattice.from_index(Int(i))));
  return out;
}

inline std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t mod) {
  __int128 result = 1 % mod;
  __int128 b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1U) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1U;
  }
  return static_cast<std::int64_t>(result);
}

inline std::uint64_t naive_int_order(std::int64_t a, std::int64_t mod) {
  std::int64_t x = ((a % mod) + mod) % mod;
  std::int64_t y = x;
  for (std::uint64_t n = 1; n <= static_cast<std::uint64_t>(mod); ++n) {
    if (y == 1 % mod) return n;
    y = static_cast<std::int64_t>((__int128)y * x % mod);
  }
  return 0;
}

inline std::uint64_t int_valuation(std::int64_t n, std::int64_t p) {
  std::uint64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline std::vector<unsigned> base_digits(std::uint64_t n, unsigned q) {
  std::vector<unsigned> out;
  while (n > 0) {
    out.push_back(static_cast<unsigned>(n % q));
    n /= q;
  }
  return out;
}

}  // namespace betadic::testing
