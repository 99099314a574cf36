#pragma once

#include <cstdint>
#include <vector>

#include "betadic/beta_adic.hpp"
#include "betadic/integer.hpp"

namespace betadic {

// Base-q digits of m >= 1, low to high, untruncated.
std::vector<unsigned> qary_digits(const Int& m, unsigned q);

// log_3 2
double narkiewicz_sigma();
// 1.62 N^sigma
double narkiewicz_bound(std::uint64_t n);

struct ErdosCount {
  std::uint64_t N = 0;
  std::vector<std::uint64_t> hits;  // n in [1, N] with (2^n)_3 free of the digit 2
  std::uint64_t M_N = 0;
  double bound = 0.0;
  // Running M(n) for n = 1..N (M(n) <= 1.62 n^sigma checked at each n).
  std::vector<std::uint64_t> running;
};

enum class ErdosMethod {
  Incremental,   // ternary digits of 2^n updated by doubling with carries
  Reconversion,  // 2^n converted to base 3 from scratch for every n
};

// Scans n = 1..N. With threads > 1 the range is split into blocks, each
// seeded with 2^start by fast exponentiation. Throws BoundViolated if
// M(n) > 1.62 n^sigma for some n.
ErdosCount erdos_count(std::uint64_t N, ErdosMethod method = ErdosMethod::Incremental, unsigned threads = 1);

struct DigitCount {
  std::uint64_t count = 0;  // d_n(b)
  double ratio = 0.0;       // d_n(b) / (n log_q p)
};

// Occurrences of b in (p^n)_q. Throws BadDigit, NotPrime, InvalidArgument.
DigitCount digit_count(std::uint64_t n, unsigned p, unsigned q, unsigned b);

struct DupuyWeirichAverage {
  std::uint64_t m = 0;
  Int l_m;                     // size of <p> in (Z/q^m)^x
  std::vector<Rational> freq;  // f_{p,m}(b), b = 0..q-1
  std::vector<Int> counts;     // D_m(b)
};

// f_{p,m}(b) through the beta-adic orbit machinery over Q with alpha = p,
// beta = q. Throws NotPrime, InvalidArgument (p = q), WorkBudgetExceeded.
DupuyWeirichAverage dupuy_weirich_avg(unsigned p, unsigned q, std::uint64_t m,
                                      std::uint64_t budget = kDefaultWorkBudget);

}  // namespace betadic
