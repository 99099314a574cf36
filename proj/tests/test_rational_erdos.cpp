#include <doctest.h>

#include <cmath>
#include <random>

#include "betadic/beta_adic.hpp"
#include "betadic/errors.hpp"
#include "betadic/rational_erdos.hpp"
#include "support.hpp"

using namespace betadic;
using namespace betadic::testing;

TEST_CASE("q-ary digits") {
  CHECK(qary_digits(Int(1), 3) == std::vector<unsigned>{1});
  CHECK(qary_digits(Int(256), 3) == std::vector<unsigned>{1, 1, 1, 0, 0, 1});
  CHECK(qary_digits(Int(32), 3) == std::vector<unsigned>{2, 1, 0, 1});
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1ULL << 62);
  for (int t = 0; t < 500; ++t) {
    const auto n = dist(rng);
    const unsigned q = 2 + static_cast<unsigned>(t % 15);
    const auto d = qary_digits(Int(std::to_string(n)), q);
    CHECK(d == base_digits(n, q));
    Int back(0);
    for (std::size_t i = d.size(); i-- > 0;) back = back * q + d[i];
    CHECK(back == Int(std::to_string(n)));
  }
}

TEST_CASE("q-ary digits agree with beta-adic expansion over Q") {
  const auto q = rationals();
  const auto d3 = digit_system(q, q.from_int(Int(3)));
  for (unsigned n = 0; n <= 60; ++n) {
    const Int x = ipow(Int(2), n);
    const auto d = qary_digits(x, 3);
    const auto e = expand(d3, q.from_int(x), d.size());
    std::vector<unsigned> as_unsigned(e.digit_indices.begin(), e.digit_indices.end());
    CHECK(as_unsigned == d);
  }
}

TEST_CASE("Erdos counts") {
  auto c10 = erdos_count(10);
  CHECK(c10.hits == std::vector<std::uint64_t>{2, 8});
  CHECK(c10.M_N == 2);
  auto c1 = erdos_count(1);
  CHECK(c1.hits.empty());
  CHECK(c1.M_N == 0);
  auto c100 = erdos_count(100);
  CHECK(c100.M_N == 2);
  CHECK(c100.bound == doctest::Approx(1.62 * std::pow(100.0, std::log(2.0) / std::log(3.0))));
  CHECK(narkiewicz_sigma() == doctest::Approx(0.63092).epsilon(1e-5));
}

TEST_CASE("Erdos scan methods and threading agree") {
  const auto inc = erdos_count(2000, ErdosMethod::Incremental, 1);
  const auto rec = erdos_count(2000, ErdosMethod::Reconversion, 1);
  const auto par = erdos_count(2000, ErdosMethod::Incremental, 4);
  CHECK(inc.hits == rec.hits);
  CHECK(inc.running == rec.running);
  CHECK(inc.hits == par.hits);
  CHECK(inc.running == par.running);
  REQUIRE(inc.running.size() == 2000);
  // Monotone in N: a shorter scan is a prefix.
  const auto shorter = erdos_count(500);
  for (std::size_t n = 0; n < 500; ++n) CHECK(shorter.running[n] == inc.running[n]);
  // Direct oracle for small n: 2^n below 2^62 in machine integers.
  for (std::uint64_t n = 1; n <= 62; ++n) {
    const auto d = base_digits(1ULL << n, 3);
    const bool hit = std::find(d.begin(), d.end(), 2U) == d.end();
    const bool listed = std::find(inc.hits.begin(), inc.hits.end(), n) != inc.hits.end();
    CHECK(hit == listed);
  }
}

TEST_CASE("digit counts") {
  CHECK(digit_count(8, 2, 3, 1).count == 4);
  CHECK(digit_count(8, 2, 3, 2).count == 0);
  CHECK(digit_count(1, 2, 3, 2).count == 1);
  const auto r = digit_count(100, 2, 3, 0);
  CHECK(r.ratio == doctest::Approx(r.count / (100 * std::log(2.0) / std::log(3.0))));
  CHECK_THROWS_AS(digit_count(3, 2, 3, 3), Error);
  CHECK_THROWS_AS(digit_count(3, 4, 3, 1), Error);
}

TEST_CASE("Dupuy-Weirich averages") {
  const auto a1 = dupuy_weirich_avg(2, 3, 1);
  CHECK(a1.l_m == 2);
  CHECK(a1.freq == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1, 2)});
  const auto a5 = dupuy_weirich_avg(2, 3, 5);
  const auto a10 = dupuy_weirich_avg(2, 3, 10);
  CHECK(a10.l_m == 39366);
  for (std::size_t b = 0; b < 3; ++b) CHECK(abs(a10.freq[b] - Rational(1, 3)) < abs(a5.freq[b] - Rational(1, 3)));
  for (const auto& a : {a1, a5, a10}) {
    Rational total(0);
    for (const auto& f : a.freq) total += f;
    CHECK(total == 1);
  }
  // Same numbers as the general path.
  const auto q = rationals();
  const auto general = orbit_digit_stats(digit_system(q, q.from_int(Int(7))), q.from_int(Int(3)), 4);
  const auto dw = dupuy_weirich_avg(3, 7, 4);
  CHECK(general.counts == dw.counts);
  CHECK(general.freq == dw.freq);
  CHECK(general.h_m == dw.l_m);
  CHECK_THROWS_AS(dupuy_weirich_avg(3, 3, 2), Error);
  CHECK_THROWS_AS(dupuy_weirich_avg(2, 3, 12, 1000), Error);
}
