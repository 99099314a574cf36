#include <doctest.h>

#include <random>

#include "betadic/errors.hpp"
#include "betadic/prime_ideals.hpp"
#include "support.hpp"

using namespace betadic;
using namespace betadic::testing;

namespace {

PrimeIdeal prime_with(const NumberRing& ring, long p, std::size_t index = 0) {
  auto dec = factor_rational_prime(ring, Int(p));
  return PrimeIdeal(ring, dec.factors.at(index));
}

}  // namespace

TEST_CASE("factor_rational_prime in Z[i]") {
  const auto g = gaussian();
  auto d2 = factor_rational_prime(g, Int(2));
  REQUIRE(d2.factors.size() == 1);
  CHECK(d2.factors[0].e == 2);
  CHECK(d2.factors[0].f == 1);
  auto d5 = factor_rational_prime(g, Int(5));
  REQUIRE(d5.factors.size() == 2);
  for (const auto& f : d5.factors) {
    CHECK(f.e == 1);
    CHECK(f.f == 1);
  }
  auto d3 = factor_rational_prime(g, Int(3));
  REQUIRE(d3.factors.size() == 1);
  CHECK(d3.factors[0].e == 1);
  CHECK(d3.factors[0].f == 2);
  CHECK_THROWS_AS(factor_rational_prime(g, Int(6)), Error);
}

TEST_CASE("index primes are rejected") {
  // Z[sqrt(5)] has index 2 in the ring of integers of Q(sqrt 5).
  const NumberRing r({Int(-5), Int(0), Int(1)});
  try {
    factor_rational_prime(r, Int(2));
    FAIL("index prime accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonMonogenicPrime);
  }
  CHECK_NOTHROW(factor_rational_prime(r, Int(5)));
  // Z[2i] has index 2 as well.
  const NumberRing r2({Int(4), Int(0), Int(1)});
  CHECK_THROWS_AS(factor_rational_prime(r2, Int(2)), Error);
}

TEST_CASE("valuations") {
  const auto g = gaussian();
  const auto p2 = prime_with(g, 2);
  CHECK(valuation(p2, g.from_int(Int(2))) == 2);
  CHECK(valuation(p2, elem(g, {1, 1})) == 1);
  CHECK(valuation(p2, g.one()) == 0);
  CHECK(valuation(p2, g.zero()) == kInfiniteValuation);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto p5 = prime_with(g, 5, i);
    CHECK(valuation(p5, g.from_int(Int(5))) == 1);
  }
  // Exactly one of the primes above 5 contains 2 + i.
  CHECK(valuation(prime_with(g, 5, 0), elem(g, {2, 1})) + valuation(prime_with(g, 5, 1), elem(g, {2, 1})) == 1);
  CHECK(valuation(prime_with(g, 3), g.from_int(Int(27))) == 3);
}

TEST_CASE("factor_beta examples") {
  auto f3 = factor_beta(rationals(), rationals().from_int(Int(3)));
  REQUIRE(f3.factors.size() == 1);
  CHECK(f3.factors[0].prime.p() == 3);
  CHECK(f3.factors[0].prime.e() == 1);
  CHECK(f3.factors[0].prime.f() == 1);
  CHECK(f3.factors[0].multiplicity == 1);

  const auto g = gaussian();
  auto fi = factor_beta(g, elem(g, {1, 1}));
  REQUIRE(fi.factors.size() == 1);
  CHECK(fi.factors[0].prime.p() == 2);
  CHECK(fi.factors[0].prime.e() == 2);
  CHECK(fi.factors[0].multiplicity == 1);

  auto f9 = factor_beta(g, g.from_int(Int(3)));
  REQUIRE(f9.factors.size() == 1);
  CHECK(f9.factors[0].prime.f() == 2);
  CHECK(f9.factors[0].multiplicity == 1);

  CHECK_THROWS_AS(factor_beta(g, g.theta()), Error);
  CHECK_THROWS_AS(factor_beta(g, g.zero()), Error);
}

TEST_CASE("sum of e f equals the degree") {
  for (const auto& ring : shipped_fields()) {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 97L, 1093L}) {
      auto dec = factor_rational_prime(ring, Int(p));
      std::uint64_t total = 0;
      for (const auto& f : dec.factors) {
        total += f.e * f.f;
        CHECK(static_cast<std::uint64_t>(f.g_poly.size() - 1) == f.f);
        CHECK(f.g_poly.back() == 1);
        CHECK(is_irreducible_mod_p(f.g_poly, Int(p)));
      }
      CHECK(total == ring.degree());
    }
  }
  // A cubic: x^3 - 2 at p = 5 splits as a linear times an irreducible quadratic.
  const NumberRing cubic({Int(-2), Int(0), Int(0), Int(1)});
  auto dec = factor_rational_prime(cubic, Int(5));
  REQUIRE(dec.factors.size() == 2);
  CHECK(dec.factors[0].f + dec.factors[1].f == 3);
}

TEST_CASE("valuation properties on random elements") {
  std::mt19937_64 rng(77);
  for (const auto& ring : shipped_fields()) {
    std::vector<PrimeIdeal> primes;
    for (long p : {2L, 3L, 5L, 7L}) {
      for (const auto& f : factor_rational_prime(ring, Int(p)).factors) primes.emplace_back(ring, f);
    }
    for (int t = 0; t < 150; ++t) {
      const auto a = random_nonzero(ring, rng, 30);
      const auto b = random_nonzero(ring, rng, 30);
      for (const auto& pr : primes) {
        const auto va = valuation(pr, a);
        const auto vb = valuation(pr, b);
        CHECK(valuation(pr, a * b) == va + vb);
        CHECK(valuation_capped(pr, a, 3) == std::min<std::uint64_t>(va, 3));
        for (std::uint64_t k = 0; k <= 6; ++k) CHECK(pr.contains(a, k) == (va >= k));
      }
    }
  }
}

TEST_CASE("factor_beta norm identity and d = 1 oracle") {
  std::mt19937_64 rng(8);
  for (const auto& ring : shipped_fields()) {
    for (int t = 0; t < 100; ++t) {
      const auto beta = random_nonzero(ring, rng, 12);
      const Int n = abs(norm(beta));
      if (n <= 1) continue;
      auto fac = factor_beta(ring, beta);
      Int prod(1);
      for (const auto& bf : fac.factors) {
        CHECK(valuation(bf.prime, beta) == bf.multiplicity);
        prod *= ipow(bf.prime.p(), bf.prime.f() * bf.multiplicity);
      }
      CHECK(prod == n);
    }
  }
  std::uniform_int_distribution<long> dist(2, 100000);
  for (int t = 0; t < 200; ++t) {
    const long n = dist(rng);
    auto fac = factor_beta(rationals(), rationals().from_int(Int(n)));
    long m = n;
    std::size_t i = 0;
    for (long q = 2; q <= m; ++q) {
      const auto e = int_valuation(m, q);
      if (e == 0) continue;
      for (std::uint64_t k = 0; k < e; ++k) m /= q;
      REQUIRE(i < fac.factors.size());
      CHECK(fac.factors[i].prime.p() == q);
      CHECK(fac.factors[i].multiplicity == e);
      ++i;
    }
    CHECK(i == fac.factors.size());
  }
}

TEST_CASE("prime power lattices") {
  const auto g = gaussian();
  const auto p2 = prime_with(g, 2);
  for (std::uint64_t k = 0; k <= 8; ++k) CHECK(p2.power(k).determinant() == ipow(Int(2), k));
  const auto p3 = prime_with(g, 3);
  for (std::uint64_t k = 0; k <= 5; ++k) CHECK(p3.power(k).determinant() == ipow(Int(9), k));
  // Copies share the cache and agree.
  PrimeIdeal copy = p2;
  CHECK(copy.power(6) == p2.power(6));
}
