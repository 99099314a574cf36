#include <bitset>

#include "betadic/errors.hpp"
#include "betadic/fp_poly.hpp"
#include "betadic/ring.hpp"

namespace betadic {

namespace {

Int evaluate(const std::vector<Int>& f, const Int& x) {
  Int acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

std::vector<Int> positive_divisors(const Int& n) {
  std::vector<Int> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t count = divs.size();
    Int pk = 1;
    for (std::uint64_t k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

std::optional<Int> rational_root(const std::vector<Int>& f) {
  if (f[0] == 0) return Int(0);
  for (const auto& d : positive_divisors(abs(f[0]))) {
    if (evaluate(f, d) == 0) return d;
    if (evaluate(f, -d) == 0) return Int(-d);
  }
  return std::nullopt;
}

bool is_square(const Int& n, Int& root) {
  if (n < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

// Monic quartic x^4 + a3 x^3 + a2 x^2 + a1 x + a0 without rational roots:
// any factorization is (x^2 + b x + c)(x^2 + b' x + c') with c c' = a0.
std::optional<std::vector<Int>> quadratic_factor(const std::vector<Int>& f) {
  const Int &a0 = f[0], &a1 = f[1], &a2 = f[2], &a3 = f[3];
  for (const auto& pos : positive_divisors(abs(a0))) {
    for (const Int& c : {pos, Int(-pos)}) {
      const Int c2 = a0 / c;
      if (c != c2) {
        Int num = a1 - a3 * c;
        Int den = c2 - c;
        if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) continue;
        Int b = num / den;
        Int b2 = a3 - b;
        if (c + c2 + b * b2 == a2 && b * c2 + b2 * c == a1) return std::vector<Int>{c, b, 1};
      } else {
        if (a1 != a3 * c) continue;
        Int disc = a3 * a3 - 4 * (a2 - 2 * c);
        Int root;
        if (!is_square(disc, root)) continue;
        Int twice_b = a3 + root;
        if (mpz_even_p(twice_b.get_mpz_t()) == 0) continue;
        return std::vector<Int>{c, twice_b / 2, 1};
      }
    }
  }
  return std::nullopt;
}

constexpr std::size_t kMaxPatternDegree = 256;
constexpr unsigned kPatternPrimes = 40;

}  // namespace

IrreducibilityCheck check_irreducible(const std::vector<Int>& f) {
  const std::size_t d = f.size() - 1;
  if (d == 1) return {Irreducibility::Irreducible, {}};
  if (auto r = rational_root(f)) return {Irreducibility::Reducible, {Int(-*r), Int(1)}};
  if (d <= 3) return {Irreducibility::Irreducible, {}};

  if (d < kMaxPatternDegree) {
    // Degrees of rational factors must be subset sums of the factor degrees
    // modulo every prime.
    std::bitset<kMaxPatternDegree> possible;
    possible.set();
    Int p = 2;
    for (unsigned count = 0; count < kPatternPrimes; ++count, mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
      std::bitset<kMaxPatternDegree> sums;
      sums.set(0);
      for (const auto& fac : factor_mod_p(f, p).factors) {
        for (std::uint64_t m = 0; m < fac.multiplicity; ++m) sums |= sums << static_cast<std::size_t>(fac.factor.degree());
      }
      possible &= sums;
      bool any = false;
      for (std::size_t k = 1; k < d; ++k) any = any || possible.test(k);
      if (!any) return {Irreducibility::Irreducible, {}};
    }
  }
  if (d == 4) {
    if (auto q = quadratic_factor(f)) return {Irreducibility::Reducible, *q};
    return {Irreducibility::Irreducible, {}};
  }
  return {Irreducibility::Undecided, {}};
}

}  // namespace betadic
