#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "betadic/beta_adic.hpp"
#include "betadic/errors.hpp"
#include "betadic/local.hpp"
#include "support.hpp"

using namespace betadic;
using namespace betadic::testing;

namespace {

Rational frac(const Int& n, const Int& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

std::vector<std::size_t> digits_of(const DigitSystem& ds, const RingElement& x, std::uint64_t m) {
  return expand(ds, x, m).digit_indices;
}

// Residue mod beta^m -> digit vector, by evaluating every vector in D^m.
std::map<std::vector<Int>, std::vector<std::size_t>> digit_table(const DigitSystem& ds, const QuotientRing& q,
                                                                  std::uint64_t m) {
  std::map<std::vector<Int>, std::vector<std::size_t>> table;
  std::vector<std::size_t> v(m, 0);
  const std::size_t n = ds.radix_size();
  for (;;) {
    table.emplace(q.reduce(evaluate(ds, v)).coords(), v);
    std::size_t i = 0;
    while (i < m && ++v[i] == n) v[i++] = 0;
    if (i == m) break;
  }
  return table;
}

// Digit counts over the orbit of alpha mod beta^m from the table above.
std::vector<Int> naive_counts(const DigitSystem& ds, const RingElement& alpha, std::uint64_t m, Int& h) {
  QuotientRing q(ds.ring(), principal_lattice(ds.beta(), m));
  const auto table = digit_table(ds, q, m);
  std::vector<Int> counts(ds.radix_size(), Int(0));
  const auto one = q.reduce(ds.ring().one());
  auto x = q.reduce(alpha);
  h = 0;
  for (;;) {
    ++h;
    for (auto b : table.at(x.coords())) counts[b] += 1;
    if (x == one) break;
    x = q.reduce(x * alpha);
  }
  return counts;
}

}  // namespace

TEST_CASE("canonical digit sets") {
  const auto q = rationals();
  const auto d3 = digit_system(q, q.from_int(Int(3)));
  REQUIRE(d3.radix_size() == 3);
  for (long i = 0; i < 3; ++i) CHECK(d3.digits()[i] == q.from_int(Int(i)));

  const auto g = gaussian();
  const auto d1i = digit_system(g, elem(g, {1, 1}));
  REQUIRE(d1i.radix_size() == 2);
  CHECK(d1i.digits()[0] == g.zero());
  CHECK(d1i.digits()[1] == g.one());

  const auto d9 = digit_system(g, g.from_int(Int(3)));
  REQUIRE(d9.radix_size() == 9);
  std::set<std::vector<Int>> seen;
  for (const auto& d : d9.digits()) {
    CHECK(d[0] >= 0);
    CHECK(d[0] < 3);
    CHECK(d[1] >= 0);
    CHECK(d[1] < 3);
    seen.insert(d.coords());
  }
  CHECK(seen.size() == 9);
  CHECK(kind_of([&] { digit_system(g, g.theta()); }) == ErrorKind::NormTooSmall);
  CHECK(kind_of([&] { digit_system(g, g.zero()); }) == ErrorKind::NormTooSmall);
}

TEST_CASE("user digit sets") {
  const auto q = rationals();
  DigitSystem bal(q, q.from_int(Int(3)), {q.from_int(Int(1)), q.from_int(Int(0)), q.from_int(Int(-1))});
  CHECK(bal.digits()[0] == q.zero());
  CHECK(evaluate(bal, digits_of(bal, q.from_int(Int(5)), 3)) == q.from_int(Int(5)));
  CHECK(kind_of([&] {
          DigitSystem(q, q.from_int(Int(3)), {q.from_int(Int(0)), q.from_int(Int(1)), q.from_int(Int(4))});
        }) == ErrorKind::IncompleteDigitSet);
  CHECK(kind_of([&] {
          DigitSystem(q, q.from_int(Int(3)), {q.from_int(Int(3)), q.from_int(Int(1)), q.from_int(Int(2))});
        }) == ErrorKind::IncompleteDigitSet);
  CHECK(kind_of([&] { DigitSystem(q, q.from_int(Int(3)), {q.from_int(Int(0)), q.from_int(Int(1))}); }) ==
        ErrorKind::IncompleteDigitSet);
}

TEST_CASE("expansion examples") {
  const auto q = rationals();
  const auto d3 = digit_system(q, q.from_int(Int(3)));
  CHECK(digits_of(d3, q.from_int(Int(256)), 6) == std::vector<std::size_t>{1, 1, 1, 0, 0, 1});
  CHECK(digits_of(d3, q.from_int(Int(4)), 2) == std::vector<std::size_t>{1, 1});
  CHECK(digits_of(d3, q.from_int(Int(1)), 1) == std::vector<std::size_t>{1});
  CHECK(digits_of(d3, q.from_int(Int(-1)), 4) == std::vector<std::size_t>{2, 2, 2, 2});
  const auto g = gaussian();
  const auto d = digit_system(g, elem(g, {1, 1}));
  CHECK(digits_of(d, g.theta(), 4) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(digits_of(d, g.theta(), 0).empty());
}

TEST_CASE("expansion properties over random elements") {
  std::mt19937_64 rng(31);
  for (const auto& ring : shipped_fields()) {
    for (int t = 0; t < 60; ++t) {
      const auto beta = random_nonzero(ring, rng, 3);
      if (abs(norm(beta)) < 2) continue;
      const auto ds = digit_system(ring, beta);
      const auto x = random_element(ring, rng, 1000);
      const std::uint64_t m = 1 + t % 12;
      const auto e = expand(ds, x, m);
      REQUIRE(e.digit_indices.size() == m);
      CHECK(principal_lattice(beta, m).contains((x - evaluate(ds, e.digit_indices)).coords()));
      auto longer = digits_of(ds, x, m + 1);
      longer.pop_back();
      CHECK(longer == e.digit_indices);
    }
  }
}

TEST_CASE("digit vectors fill the quotient exactly") {
  const auto g = gaussian();
  for (auto beta : {elem(g, {1, 1}), elem(g, {2, 1}), g.from_int(Int(3))}) {
    const auto ds = digit_system(g, beta);
    for (std::uint64_t m = 1; m <= 3; ++m) {
      QuotientRing q(g, principal_lattice(beta, m));
      const auto table = digit_table(ds, q, m);
      CHECK(Int(table.size()) == q.size());
    }
  }
}

TEST_CASE("orbit sizes over Q") {
  const auto q = rationals();
  const auto d3 = digit_system(q, q.from_int(Int(3)));
  const auto two = q.from_int(Int(2));
  CHECK(orbit_size(d3, two, 1) == 2);
  CHECK(orbit_size(d3, two, 2) == 6);
  CHECK(orbit_size(d3, two, 3) == 18);
  for (std::uint64_t m = 1; m <= 8; ++m) {
    const long mod = ipow(Int(3), m).get_si();
    CHECK(orbit_size(d3, two, m) == naive_int_order(2, mod));
    if (m >= 2) CHECK(orbit_size(d3, two, m) == 3 * orbit_size(d3, two, m - 1));
  }
}

TEST_CASE("orbit sizes agree with naive walks") {
  const auto g = gaussian();
  struct Case {
    RingElement beta, alpha;
    std::uint64_t m_max;
  };
  std::vector<Case> cases{
      {g.from_int(Int(3)), elem(g, {2, 1}), 4},
      {elem(g, {1, 1}), elem(g, {2, 1}), 10},
      {elem(g, {2, 1}), elem(g, {1, 1}), 4},
      // Two primes above 5: the order is the lcm, not the product, of local orders.
      {g.from_int(Int(5)), g.from_int(Int(2)), 3},
      {g.from_int(Int(5)), elem(g, {1, 1}), 3},
      {g.from_int(Int(6)), elem(g, {2, 1}), 2},
  };
  for (const auto& c : cases) {
    const auto ds = digit_system(g, c.beta);
    for (std::uint64_t m = 1; m <= c.m_max; ++m) {
      QuotientRing q(g, principal_lattice(c.beta, m));
      CHECK(orbit_size(ds, c.alpha, m) == naive_order(q, c.alpha, 1'000'000));
    }
  }
  CHECK(orbit_size(digit_system(g, g.from_int(Int(5))), g.from_int(Int(2)), 1) == 4);
  const auto s = sqrt2();
  const auto ds = digit_system(s, elem(s, {3, 1}));  // norm 7
  for (std::uint64_t m = 1; m <= 3; ++m) {
    QuotientRing q(s, principal_lattice(elem(s, {3, 1}), m));
    CHECK(orbit_size(ds, elem(s, {1, 1}), m) == naive_order(q, elem(s, {1, 1}), 1'000'000));
  }
  CHECK(kind_of([&] { OrbitContext(digit_system(g, elem(g, {1, 1})), g.from_int(Int(2))); }) ==
        ErrorKind::NotCoprime);
}

TEST_CASE("orbit digit statistics") {
  const auto q = rationals();
  const auto d3 = digit_system(q, q.from_int(Int(3)));
  const auto two = q.from_int(Int(2));
  auto s1 = orbit_digit_stats(d3, two, 1);
  CHECK(s1.h_m == 2);
  CHECK(s1.freq[0] == 0);
  CHECK(s1.freq[1] == Rational(1, 2));
  CHECK(s1.freq[2] == Rational(1, 2));

  auto s4 = orbit_digit_stats(d3, two, 4);
  auto s8 = orbit_digit_stats(d3, two, 8);
  for (std::size_t b = 0; b < 3; ++b) {
    CHECK(abs(s8.freq[b] - Rational(1, 3)) < abs(s4.freq[b] - Rational(1, 3)));
  }
  // Base-3 conversion of every 2^n mod 3^8.
  std::vector<Int> counts(3, Int(0));
  const std::int64_t mod = 6561;
  std::int64_t x = 1;
  for (Int n = 0; n < s8.h_m; ++n) {
    x = x * 2 % mod;
    auto digits = base_digits(static_cast<std::uint64_t>(x), 3);
    digits.resize(8, 0);
    for (auto d : digits) counts[d] += 1;
  }
  CHECK(counts == s8.counts);
  CHECK(kind_of([&] { orbit_digit_stats(d3, two, 8, 100); }) == ErrorKind::WorkBudgetExceeded);
}

TEST_CASE("digit statistics agree with the evaluation table") {
  const auto g = gaussian();
  struct Case {
    RingElement beta, alpha;
    std::uint64_t m;
  };
  std::vector<Case> cases{{g.from_int(Int(3)), elem(g, {1, 1}), 3},
                          {elem(g, {1, 1}), elem(g, {2, 1}), 8},
                          {elem(g, {2, 1}), elem(g, {1, 1}), 3},
                          {g.from_int(Int(5)), g.from_int(Int(2)), 2}};
  for (const auto& c : cases) {
    const auto ds = digit_system(g, c.beta);
    Int h;
    const auto expected = naive_counts(ds, c.alpha, c.m, h);
    const auto stats = orbit_digit_stats(ds, c.alpha, c.m);
    CHECK(stats.h_m == h);
    CHECK(stats.counts == expected);
    Rational total(0);
    Int slots(0);
    for (std::size_t b = 0; b < stats.counts.size(); ++b) {
      total += stats.freq[b];
      slots += stats.counts[b];
      CHECK(stats.freq[b] == frac(stats.counts[b], Int(c.m) * stats.h_m));
    }
    CHECK(total == 1);
    CHECK(slots == Int(c.m) * stats.h_m);
  }
}

TEST_CASE("recursive statistics") {
  const auto q = rationals();
  const auto d3 = digit_system(q, q.from_int(Int(3)));
  const auto two = q.from_int(Int(2));
  const auto base = orbit_digit_stats(d3, two, 2);
  const auto rec = stats_recursive(d3, two, 6, base);
  const auto direct = orbit_digit_stats(d3, two, 6);
  CHECK(rec.counts == direct.counts);
  CHECK(rec.h_m == direct.h_m);
  CHECK(rec.freq == direct.freq);
  const auto same = stats_recursive(d3, two, 2, base);
  CHECK(same.counts == base.counts);

  // Exact decomposition of the frequencies from a base at M = 1.
  const auto b1 = orbit_digit_stats(d3, two, 1);
  for (std::uint64_t m = 1; m <= 9; ++m) {
    const auto s = orbit_digit_stats(d3, two, m);
    for (std::size_t b = 0; b < 3; ++b) {
      const Rational expected =
          frac(b1.counts[b], Int(m) * b1.h_m) + frac(Int(m - 1), Int(3 * m));
      CHECK(s.freq[b] == expected);
      // |f - 1/3| = C/m with C = |D_1(b)/h_1 - 1/3|.
      const Rational c = abs(frac(b1.counts[b], b1.h_m) - Rational(1, 3));
      CHECK(abs(s.freq[b] - Rational(1, 3)) == c / Int(m));
    }
  }

  const auto g = gaussian();
  const auto d1i = digit_system(g, elem(g, {1, 1}));
  const auto alpha = elem(g, {2, 1});
  const auto gb = orbit_digit_stats(d1i, alpha, 3);
  CHECK(kind_of([&] { stats_recursive(d1i, alpha, 8, gb); }) == ErrorKind::RecursionInvalid);
}

TEST_CASE("limits do not depend on the digit set") {
  const auto q = rationals();
  const auto five = q.from_int(Int(5));
  const auto two = q.from_int(Int(2));
  const auto canon = digit_system(q, five);
  DigitSystem balanced(q, five, {q.from_int(Int(-2)), q.from_int(Int(-1)), q.from_int(Int(0)),
                                 q.from_int(Int(1)), q.from_int(Int(2))});
  const std::uint64_t m = 6;
  const auto a = orbit_digit_stats(canon, two, m);
  const auto b = orbit_digit_stats(balanced, two, m);
  CHECK(a.h_m == b.h_m);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(abs(a.freq[i] - Rational(1, 5)) < Rational(1, Int(m)));
    CHECK(abs(b.freq[i] - Rational(1, 5)) < Rational(1, Int(m)));
  }
}

TEST_CASE("block complexity") {
  const auto q = rationals();
  const auto d3 = digit_system(q, q.from_int(Int(3)));
  auto bc = block_complexity(d3, q.from_int(Int(2)), 10);
  CHECK(bc.limit.exact() == Rational(1));
  REQUIRE(bc.points.size() == 10);
  for (const auto& pt : bc.points) CHECK(pt.blocks == orbit_size(d3, q.from_int(Int(2)), pt.m));

  const auto g = gaussian();
  auto ram = block_complexity(digit_system(g, elem(g, {1, 1})), elem(g, {2, 1}), 40);
  CHECK(ram.limit.exact() == Rational(1, 2));
  CHECK(std::abs(ram.points.back().slope - 0.5) <= 0.05);

  auto inert = block_complexity(digit_system(g, g.from_int(Int(3))), elem(g, {1, 1}), 8);
  CHECK(inert.limit.exact() == Rational(1, 2));
  CHECK(std::abs(inert.points.back().slope - 0.5) <= 0.1);

  // Two different rational primes: the limit is a genuine log combination.
  auto mixed = block_complexity(digit_system(g, elem(g, {1, 1}) * g.from_int(Int(3))), elem(g, {2, 1}), 3);
  CHECK_FALSE(mixed.limit.exact().has_value());
  const double expected = (0.5 * std::log(2.0) + std::log(3.0)) / (std::log(2.0) + 2 * std::log(3.0));
  CHECK(mixed.limit.value() == doctest::Approx(expected).epsilon(1e-12));
}
