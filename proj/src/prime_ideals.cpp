#include "betadic/prime_ideals.hpp"

#include <mutex>
#include <shared_mutex>

#include "betadic/errors.hpp"

namespace betadic {

struct PrimeIdeal::PowerCache {
  std::shared_mutex mutex;
  std::vector<std::unique_ptr<const IntegerLattice>> powers;  // powers[k] = p^k
};

PrimeIdeal::PrimeIdeal(NumberRing ring, PrimeIdealFactor factor)
    : ring_(std::move(ring)), factor_(std::move(factor)), cache_(std::make_shared<PowerCache>()) {
  if (factor_.e == 0 || factor_.f == 0 || factor_.g_poly.size() != factor_.f + 1) {
    throw Error(ErrorKind::InvalidArgument, "malformed prime ideal description");
  }
}

RingElement PrimeIdeal::g_element() const {
  const RingElement theta = ring_.theta();
  RingElement acc = ring_.zero();
  for (std::size_t i = factor_.g_poly.size(); i-- > 0;) acc = acc * theta + ring_.from_int(factor_.g_poly[i]);
  return acc;
}

const IntegerLattice& PrimeIdeal::power(std::uint64_t k) const {
  {
    std::shared_lock lock(cache_->mutex);
    if (k < cache_->powers.size()) return *cache_->powers[k];
  }
  std::unique_lock lock(cache_->mutex);
  auto& powers = cache_->powers;
  const std::size_t d = ring_.degree();
  if (powers.empty()) {
    std::vector<std::vector<Int>> unit;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Int> e(d);
      e[i] = 1;
      unit.push_back(std::move(e));
    }
    powers.push_back(std::make_unique<IntegerLattice>(IntegerLattice::from_generators(unit, 1, d)));
  }
  const std::vector<RingElement> gens{ring_.from_int(factor_.p), g_element()};
  while (powers.size() <= k) {
    const std::uint64_t next = powers.size();
    // p^ceil(next/e) lies in p^next.
    const Int modulus = ipow(factor_.p, (next + factor_.e - 1) / factor_.e);
    powers.push_back(std::make_unique<IntegerLattice>(ideal_product(ring_, *powers.back(), gens, modulus)));
  }
  return *powers[k];
}

PrimeDecomposition factor_rational_prime(const NumberRing& ring, const Int& p, std::uint64_t seed) {
  const auto& f = ring.min_poly();
  auto fac = factor_mod_p(f, p, seed);
  PrimeDecomposition out{p, {}, fac.seed};

  // Dedekind: with h = prod g_i^{e_i} lifted to Z and F = (f - h)/p, p
  // divides the index iff some repeated g_i divides F mod p.
  std::vector<Int> h{1};
  for (const auto& part : fac.factors) {
    for (std::uint64_t m = 0; m < part.multiplicity; ++m) {
      std::vector<Int> next(h.size() + part.factor.coeffs().size() - 1);
      for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = 0; j < part.factor.coeffs().size(); ++j) next[i + j] += h[i] * part.factor.coeffs()[j];
      }
      h = std::move(next);
    }
  }
  std::vector<Int> quotient(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Int diff = f[i] - (i < h.size() ? h[i] : Int(0));
    quotient[i] = diff / p;  // exact: f = h mod p
  }
  const FpPoly big_f(quotient, p);
  for (const auto& part : fac.factors) {
    if (part.multiplicity >= 2 && (big_f % part.factor).is_zero()) {
      throw Error(ErrorKind::NonMonogenicPrime,
                  to_string(p) + " divides the index of Z[theta]; Kummer-Dedekind does not apply");
    }
  }
  for (const auto& part : fac.factors) {
    out.factors.push_back(
        {p, part.factor.coeffs(), part.multiplicity, static_cast<std::uint64_t>(part.factor.degree())});
  }
  return out;
}

std::uint64_t valuation_capped(const PrimeIdeal& prime, const RingElement& a, std::uint64_t cap) {
  std::uint64_t k = 0;
  while (k < cap && prime.contains(a, k + 1)) ++k;
  return k;
}

std::uint64_t valuation(const PrimeIdeal& prime, const RingElement& a) {
  if (a.is_zero()) return kInfiniteValuation;
  const Int n = norm(a);
  const std::uint64_t bound = multiplicity(n, prime.p()) / prime.f();
  return valuation_capped(prime, a, bound);
}

BetaFactorization factor_beta(const NumberRing& ring, const RingElement& beta, std::uint64_t seed) {
  const Int n = norm(beta);
  if (abs(n) <= 1) throw Error(ErrorKind::UnitOrZero, "beta must have |N(beta)| > 1, got " + to_string(n));
  BetaFactorization out{beta, n, {}, seed};
  Int product = 1;
  for (const auto& [p, exponent] : factor_integer(n)) {
    for (auto& fac : factor_rational_prime(ring, p, seed).factors) {
      PrimeIdeal prime(ring, fac);
      const std::uint64_t g = valuation(prime, beta);
      if (g == 0) continue;
      product *= ipow(p, fac.f * g);
      out.factors.push_back({std::move(prime), g});
    }
  }
  if (product != abs(n)) {
    throw Error(ErrorKind::NonMonogenicPrime, "prime factorization of (beta) does not account for |N(beta)| = " +
                                                  to_string(Int(abs(n))));
  }
  return out;
}

}  // namespace betadic
