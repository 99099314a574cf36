#include "betadic/rational_erdos.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "betadic/errors.hpp"

namespace betadic {

namespace {

bool omits_two(const std::vector<std::uint8_t>& digits) {
  return std::find(digits.begin(), digits.end(), std::uint8_t{2}) == digits.end();
}

std::vector<std::uint8_t> ternary(const Int& value) {
  std::vector<std::uint8_t> out;
  for (unsigned d : qary_digits(value, 3)) out.push_back(static_cast<std::uint8_t>(d));
  return out;
}

// Doubles a little-endian ternary number in place.
void double_ternary(std::vector<std::uint8_t>& digits) {
  unsigned carry = 0;
  for (auto& d : digits) {
    const unsigned t = 2U * d + carry;
    d = static_cast<std::uint8_t>(t % 3U);
    carry = t / 3U;
  }
  if (carry != 0) digits.push_back(static_cast<std::uint8_t>(carry));
}

// Hits in [first, last].
std::vector<std::uint64_t> scan_block(std::uint64_t first, std::uint64_t last, ErdosMethod method) {
  std::vector<std::uint64_t> hits;
  if (method == ErdosMethod::Reconversion) {
    Int power = ipow(2, first);
    for (std::uint64_t n = first; n <= last; ++n) {
      const std::string s = power.get_str(3);
      if (s.find('2') == std::string::npos) hits.push_back(n);
      power *= 2;
    }
    return hits;
  }
  std::vector<std::uint8_t> digits = ternary(ipow(2, first));
  for (std::uint64_t n = first; n <= last; ++n) {
    if (omits_two(digits)) hits.push_back(n);
    double_ternary(digits);
  }
  return hits;
}

}  // namespace

std::vector<unsigned> qary_digits(const Int& m, unsigned q) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "base must be >= 2");
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "q-ary expansion needs m >= 1");
  std::vector<unsigned> out;
  Int rest = m;
  while (rest != 0) {
    out.push_back(static_cast<unsigned>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), q)));
  }
  return out;
}

double narkiewicz_sigma() { return std::log(2.0) / std::log(3.0); }

double narkiewicz_bound(std::uint64_t n) { return 1.62 * std::pow(static_cast<double>(n), narkiewicz_sigma()); }

ErdosCount erdos_count(std::uint64_t N, ErdosMethod method, unsigned threads) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be >= 1");
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(N, 256))));
  std::vector<std::vector<std::uint64_t>> block_hits(threads);
  const std::uint64_t block = (N + threads - 1) / threads;
  if (threads == 1) {
    block_hits[0] = scan_block(1, N, method);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t first = 1 + t * block;
      const std::uint64_t last = std::min(N, first + block - 1);
      if (first > last) continue;
      workers.emplace_back([&, t, first, last] { block_hits[t] = scan_block(first, last, method); });
    }
    for (auto& w : workers) w.join();
  }

  ErdosCount out;
  out.N = N;
  for (auto& hits : block_hits) out.hits.insert(out.hits.end(), hits.begin(), hits.end());
  out.M_N = out.hits.size();
  out.bound = narkiewicz_bound(N);
  out.running.reserve(N);
  std::size_t next_hit = 0;
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    if (next_hit < out.hits.size() && out.hits[next_hit] == n) {
      ++count;
      ++next_hit;
    }
    out.running.push_back(count);
    const double bound = narkiewicz_bound(n);
    // One ulp of slack at the scale of the bound.
    if (static_cast<double>(count) > bound + std::ldexp(bound, -52)) {
      throw Error(ErrorKind::BoundViolated, "M(" + std::to_string(n) + ") = " + std::to_string(count) +
                                                " exceeds 1.62 n^sigma");
    }
  }
  return out;
}

DigitCount digit_count(std::uint64_t n, unsigned p, unsigned q, unsigned b) {
  if (!is_probable_prime(Int(p)) || !is_probable_prime(Int(q))) {
    throw Error(ErrorKind::NotPrime, "p and q must be primes");
  }
  if (p == q) throw Error(ErrorKind::InvalidArgument, "p and q must be distinct");
  if (b >= q) throw Error(ErrorKind::BadDigit, "digit " + std::to_string(b) + " is not below q = " + std::to_string(q));
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  DigitCount out;
  for (unsigned d : qary_digits(ipow(p, n), q)) out.count += (d == b);
  out.ratio = static_cast<double>(out.count) /
              (static_cast<double>(n) * std::log(static_cast<double>(p)) / std::log(static_cast<double>(q)));
  return out;
}

DupuyWeirichAverage dupuy_weirich_avg(unsigned p, unsigned q, std::uint64_t m, std::uint64_t budget) {
  if (!is_probable_prime(Int(p)) || !is_probable_prime(Int(q))) {
    throw Error(ErrorKind::NotPrime, "p and q must be primes");
  }
  if (p == q) throw Error(ErrorKind::InvalidArgument, "p and q must be distinct");
  const NumberRing rationals({Int(0), Int(1)});
  const OrbitContext orbit(DigitSystem(rationals, rationals.from_int(q)), rationals.from_int(p));
  auto stats = orbit.digit_stats(m, budget);
  return {m, stats.h_m, stats.freq, stats.counts};
}

}  // namespace betadic
