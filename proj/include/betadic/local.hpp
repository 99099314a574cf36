#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "betadic/prime_ideals.hpp"

namespace betadic {

// Local data at one prime: the prime ideal and a fixed uniformizer.
class LocalContext {
 public:
  // Uniformizer: p when e = 1, otherwise the first of g(theta) + c*p,
  // g(theta) + c*p*theta^j (c = 0, 1, ...) with valuation exactly 1.
  LocalContext(NumberRing ring, PrimeIdealFactor factor);
  explicit LocalContext(PrimeIdeal prime);

  const NumberRing& ring() const { return prime_.ring(); }
  const PrimeIdeal& prime() const { return prime_; }
  const PrimeIdealFactor& factor() const { return prime_.factor(); }
  const RingElement& uniformizer() const { return uniformizer_; }
  const Int& p() const { return prime_.p(); }
  std::uint64_t e() const { return prime_.e(); }
  std::uint64_t f() const { return prime_.f(); }

  bool is_unit(const RingElement& a) const { return !prime_.contains(a, 1); }

 private:
  PrimeIdeal prime_;
  RingElement uniformizer_;
};

// #(O/p^k)^x = p^{f(k-1)} (p^f - 1).
Int unit_group_size(const LocalContext& ctx, std::uint64_t k);

// Fixed point of x -> x^{p^f} mod p^k starting from a; the result t has
// t^{p^f} = t and t = a (mod p). Throws NotAUnit.
RingElement teichmuller(const LocalContext& ctx, const RingElement& a, std::uint64_t k);

// v(j) = v_p(eta^{p^j} - 1) for j = 0..j_max. Working precision starts at
// e(j_max + 2) + v(0) and doubles until every v(j) is below it, capped at
// 2^14. Throws NotPrincipalUnit, RootOfUnity, PrecisionExhausted.
std::vector<std::uint64_t> v_sequence(const LocalContext& ctx, const RingElement& eta, std::uint64_t j_max);

// Exact multiplicative order of alpha in (O/p^k)^x. Throws NotAUnit,
// FactoringFailed.
Int mult_order(const LocalContext& ctx, const RingElement& alpha, std::uint64_t k);

// #ker(G_r -> G_{r-1}) = ord_r / ord_{r-1}, r >= 2.
Int kernel_size(const LocalContext& ctx, const RingElement& alpha, std::uint64_t r);

struct RootOfUnityResult {
  bool is_root = false;
  std::uint64_t order = 0;  // least m with alpha^m = 1 when is_root
};

// Exact: |N(alpha)| = 1 is necessary, and the order m of a root of unity in
// a degree-d field satisfies phi(m) <= d. Throws ZeroElement.
RootOfUnityResult is_root_of_unity(const RingElement& alpha);

struct KernelEntry {
  std::uint64_t r;
  Int size;
};

struct KernelPattern {
  std::uint64_t v = 0;
  std::uint64_t e = 0;
  Int p;
  std::uint64_t verified_up_to = 0;
  std::vector<KernelEntry> kernels;  // r = 2..verified_up_to
  // The threshold v(l) = first v_p(eta^{p^j} - 1) exceeding e, for
  // eta = alpha / teichmuller(alpha); reported alongside, not compared.
  std::optional<std::uint64_t> lifting_threshold;
};

// Kernel sizes for r = 2..r_max.
std::vector<KernelEntry> kernel_sequence(const LocalContext& ctx, const RingElement& alpha, std::uint64_t r_max);

// Least v in [1, r_max) such that for every v < r <= r_max the kernel size
// is p when r - v = 1 (mod e) and 1 otherwise. Throws RootOfUnity and
// PatternNotFound (payload: the kernel sequence as JSON).
KernelPattern detect_pattern(const LocalContext& ctx, const RingElement& alpha, std::uint64_t r_max);

// Least valid threshold for a precomputed kernel sequence, if any.
std::optional<std::uint64_t> match_pattern(const std::vector<KernelEntry>& kernels, const Int& p, std::uint64_t e);

// v(l) for alpha (see KernelPattern::lifting_threshold).
std::uint64_t lifting_threshold(const LocalContext& ctx, const RingElement& alpha);

}  // namespace betadic
