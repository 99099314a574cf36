#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "betadic/fp_poly.hpp"
#include "betadic/lattice.hpp"
#include "betadic/ring.hpp"

namespace betadic {

// Prime p = (p, g(theta)) above a rational prime, from Kummer-Dedekind.
struct PrimeIdealFactor {
  Int p;
  std::vector<Int> g_poly;  // monic, irreducible mod p, coefficients in [0, p)
  std::uint64_t e = 0;      // ramification index
  std::uint64_t f = 0;      // residue degree = deg g_poly

  friend bool operator==(const PrimeIdealFactor&, const PrimeIdealFactor&) = default;
};

inline constexpr std::uint64_t kInfiniteValuation = std::numeric_limits<std::uint64_t>::max();

// A prime ideal bound to its ring, with a shared cache of the HNF lattices
// of its powers. Copies share the cache; the cache is thread-safe.
class PrimeIdeal {
 public:
  PrimeIdeal(NumberRing ring, PrimeIdealFactor factor);

  const NumberRing& ring() const { return ring_; }
  const PrimeIdealFactor& factor() const { return factor_; }
  const Int& p() const { return factor_.p; }
  std::uint64_t e() const { return factor_.e; }
  std::uint64_t f() const { return factor_.f; }
  Int norm() const { return ipow(factor_.p, factor_.f); }

  RingElement g_element() const;

  // HNF lattice of p^k (k = 0 gives the whole ring).
  const IntegerLattice& power(std::uint64_t k) const;
  QuotientRing quotient(std::uint64_t k) const { return QuotientRing(ring_, power(k)); }
  bool contains(const RingElement& a, std::uint64_t k) const { return power(k).contains(a.coords()); }

 private:
  struct PowerCache;
  NumberRing ring_;
  PrimeIdealFactor factor_;
  std::shared_ptr<PowerCache> cache_;
};

struct PrimeDecomposition {
  Int p;
  std::vector<PrimeIdealFactor> factors;
  std::uint64_t seed;
};

// Kummer-Dedekind on min_poly mod p. Throws NotPrime, or NonMonogenicPrime
// when Dedekind's criterion shows p divides the index of Z[theta].
PrimeDecomposition factor_rational_prime(const NumberRing& ring, const Int& p,
                                         std::uint64_t seed = kDefaultSeed);

// Largest k with a in p^k; kInfiniteValuation for a = 0. The search is
// bounded by v_p(N(a)) / f.
std::uint64_t valuation(const PrimeIdeal& prime, const RingElement& a);

// min(v(a), cap) without computing a norm; suited to residues mod p^cap.
std::uint64_t valuation_capped(const PrimeIdeal& prime, const RingElement& a, std::uint64_t cap);

struct BetaFactor {
  PrimeIdeal prime;
  std::uint64_t multiplicity;  // g_j = v_p(beta)
};

struct BetaFactorization {
  RingElement beta;
  Int norm;  // N(beta), signed
  std::vector<BetaFactor> factors;
  std::uint64_t seed;
};

// (beta) = prod p_j^{g_j}. Verifies |N(beta)| = prod p_j^{f_j g_j}.
// Throws UnitOrZero, NonMonogenicPrime.
BetaFactorization factor_beta(const NumberRing& ring, const RingElement& beta,
                              std::uint64_t seed = kDefaultSeed);

}  // namespace betadic
