#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "betadic/lattice.hpp"
#include "betadic/local.hpp"
#include "betadic/prime_ideals.hpp"

namespace betadic {

// Base beta together with a complete residue set for O/beta O (0 first).
class DigitSystem {
 public:
  // Canonical digits: the HNF-reduced representatives of O/beta O in
  // mixed-radix order. Throws NormTooSmall.
  DigitSystem(NumberRing ring, RingElement beta);
  // User-supplied digits; must contain 0 and hit every residue exactly once.
  // Throws NormTooSmall, IncompleteDigitSet.
  DigitSystem(NumberRing ring, RingElement beta, std::vector<RingElement> digits);

  const NumberRing& ring() const { return ring_; }
  const RingElement& beta() const { return beta_; }
  const std::vector<RingElement>& digits() const { return digits_; }
  std::size_t radix_size() const { return digits_.size(); }
  const Int& radix() const { return radix_; }  // |N(beta)|
  const IntegerLattice& beta_lattice() const { return lattice_; }
  const ExactDivider& divider() const { return divider_; }

  // Index of the digit congruent to x mod beta.
  std::size_t digit_index(const RingElement& x) const;

 private:
  void build_index();

  NumberRing ring_;
  RingElement beta_;
  Int radix_;
  IntegerLattice lattice_;
  ExactDivider divider_;
  std::vector<RingElement> digits_;
  std::vector<std::size_t> residue_to_digit_;  // by lattice mixed-radix index
};

struct Expansion {
  RingElement x;
  std::uint64_t m = 0;
  std::vector<std::size_t> digit_indices;  // low to high
};

// b_i <- digit of x mod beta; x <- (x - b_i) / beta, m times.
Expansion expand(const DigitSystem& ds, const RingElement& x, std::uint64_t m);

// sum_{i<m} b_i beta^i
RingElement evaluate(const DigitSystem& ds, const std::vector<std::size_t>& digit_indices);

struct OrbitDigitStats {
  std::uint64_t m = 0;
  Int h_m;
  std::vector<Int> counts;     // D_m(b), indexed like ds.digits()
  std::vector<Rational> freq;  // counts / (m h_m)
};

inline constexpr std::uint64_t kDefaultWorkBudget = 10'000'000;

struct LogRatio {
  // value = sum_p numerator[p] log p / sum_p denominator[p] log p
  std::vector<std::pair<Int, Rational>> numerator;
  std::vector<std::pair<Int, Int>> denominator;
  double value() const;
  // Exact value when a single rational prime is involved.
  std::optional<Rational> exact() const;
  std::string to_string() const;
};

struct ComplexityPoint {
  std::uint64_t m;
  Int blocks;  // C_m(alpha) = h_m
  double slope;
};

struct BlockComplexity {
  std::vector<ComplexityPoint> points;
  LogRatio limit;
};

// Orbit of alpha acting on O/beta^m O, with the local data of every prime
// dividing beta. Local lattice caches persist across calls.
class OrbitContext {
 public:
  // Throws UnitOrZero/NonMonogenicPrime from factor_beta and NotCoprime.
  OrbitContext(DigitSystem ds, RingElement alpha, std::uint64_t seed = kDefaultSeed);

  const DigitSystem& digit_system() const { return ds_; }
  const RingElement& alpha() const { return alpha_; }
  const BetaFactorization& factorization() const { return factorization_; }
  const std::vector<LocalContext>& locals() const { return locals_; }

  // h_m: order of alpha in (O/beta^m O)^x, the lcm over j of its orders
  // modulo p_j^{g_j m}.
  Int orbit_size(std::uint64_t m) const;

  using Progress = std::function<void(std::uint64_t steps, const Int& total)>;
  // Walks alpha, alpha^2, ..., alpha^{h_m} mod beta^m and counts digits.
  // Throws WorkBudgetExceeded when m * h_m > budget.
  OrbitDigitStats digit_stats(std::uint64_t m, std::uint64_t budget = kDefaultWorkBudget,
                              const Progress& progress = {}) const;

  // D_k(b) = N(beta) D_{k-1}(b) + h_{k-1} from base (at m = base.m) up to m.
  // Throws RecursionInvalid when h_k != N(beta) h_{k-1} for a step used.
  OrbitDigitStats stats_recursive(std::uint64_t m, const OrbitDigitStats& base) const;

  BlockComplexity block_complexity(std::uint64_t m_max) const;

  // sum g_j e_j^{-1} log p_j / sum g_j f_j log p_j
  LogRatio theoretical_complexity() const;

 private:
  DigitSystem ds_;
  RingElement alpha_;
  BetaFactorization factorization_;
  std::vector<LocalContext> locals_;
};

DigitSystem digit_system(const NumberRing& ring, const RingElement& beta);
Int orbit_size(const DigitSystem& ds, const RingElement& alpha, std::uint64_t m);
OrbitDigitStats orbit_digit_stats(const DigitSystem& ds, const RingElement& alpha, std::uint64_t m,
                                  std::uint64_t budget = kDefaultWorkBudget);
OrbitDigitStats stats_recursive(const DigitSystem& ds, const RingElement& alpha, std::uint64_t m,
                                const OrbitDigitStats& base);
BlockComplexity block_complexity(const DigitSystem& ds, const RingElement& alpha, std::uint64_t m_max);

}  // namespace betadic
