#include "betadic/local.hpp"

#include <map>

#include "betadic/errors.hpp"

namespace betadic {

namespace {

constexpr std::uint64_t kPrecisionCap = std::uint64_t{1} << 14;

RingElement find_uniformizer(const PrimeIdeal& prime) {
  const NumberRing& ring = prime.ring();
  if (prime.e() == 1) return ring.from_int(prime.p());
  auto has_valuation_one = [&](const RingElement& x) { return prime.contains(x, 1) && !prime.contains(x, 2); };
  const RingElement g = prime.g_element();
  const RingElement p = ring.from_int(prime.p());
  for (unsigned c = 0; c < 64; ++c) {
    RingElement candidate = g + Int(c) * p;
    if (has_valuation_one(candidate)) return candidate;
  }
  RingElement theta_power = ring.one();
  for (std::size_t j = 1; j < ring.degree(); ++j) {
    theta_power = theta_power * ring.theta();
    for (unsigned c = 1; c < 64; ++c) {
      RingElement candidate = g + Int(c) * p * theta_power;
      if (has_valuation_one(candidate)) return candidate;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no uniformizer found in the candidate enumeration");
}

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    result -= result / q;
  }
  if (m > 1) result -= result / m;
  return result;
}

void require_unit(const LocalContext& ctx, const RingElement& a) {
  if (!ctx.is_unit(a)) throw Error(ErrorKind::NotAUnit, a.to_string() + " lies in the prime above " + to_string(ctx.p()));
}

// v(0..j_max) from the residue of eta mod p^precision, or nullopt when some
// v(j) reaches the precision.
std::optional<std::vector<std::uint64_t>> v_sequence_at(const LocalContext& ctx, const RingElement& eta,
                                                        std::uint64_t j_max, std::uint64_t precision) {
  const QuotientRing q = ctx.prime().quotient(precision);
  RingElement x = q.reduce(eta);
  const RingElement one = ctx.ring().one();
  std::vector<std::uint64_t> out;
  for (std::uint64_t j = 0; j <= j_max; ++j) {
    const std::uint64_t v = valuation_capped(ctx.prime(), x - one, precision);
    if (v >= precision) return std::nullopt;
    out.push_back(v);
    if (j < j_max) x = q.pow(x, ctx.p());
  }
  return out;
}

}  // namespace

LocalContext::LocalContext(NumberRing ring, PrimeIdealFactor factor)
    : LocalContext(PrimeIdeal(std::move(ring), std::move(factor))) {}

LocalContext::LocalContext(PrimeIdeal prime) : prime_(std::move(prime)), uniformizer_(find_uniformizer(prime_)) {}

Int unit_group_size(const LocalContext& ctx, std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "unit group size needs k >= 1");
  const Int q = ipow(ctx.p(), ctx.f());
  return ipow(ctx.p(), ctx.f() * (k - 1)) * (q - 1);
}

RingElement teichmuller(const LocalContext& ctx, const RingElement& a, std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "precision must be >= 1");
  require_unit(ctx, a);
  const QuotientRing q = ctx.prime().quotient(k);
  const Int frobenius = ipow(ctx.p(), ctx.f());
  RingElement x = q.reduce(a);
  for (std::uint64_t i = 0; i <= k * ctx.e() + 1; ++i) {
    RingElement y = q.pow(x, frobenius);
    if (y == x) return x;
    x = std::move(y);
  }
  throw Error(ErrorKind::PrecisionExhausted, "Teichmuller iteration did not converge");
}

RootOfUnityResult is_root_of_unity(const RingElement& alpha) {
  if (alpha.is_zero()) throw Error(ErrorKind::ZeroElement, "zero is not a root of unity");
  if (abs(norm(alpha)) != 1) return {};
  const std::uint64_t d = alpha.degree();
  const RingElement one = alpha.ring().one();
  // phi(m) >= sqrt(m/2), so phi(m) <= d forces m <= 2 d^2.
  RingElement power = one;
  std::uint64_t exponent = 0;
  for (std::uint64_t m = 1; m <= 2 * d * d + 2; ++m) {
    if (euler_phi(m) > d) continue;
    power = power * alpha.pow(m - exponent);
    exponent = m;
    if (power == one) return {true, m};
  }
  return {};
}

std::vector<std::uint64_t> v_sequence(const LocalContext& ctx, const RingElement& eta, std::uint64_t j_max) {
  const RingElement one = ctx.ring().one();
  if (!ctx.prime().contains(eta - one, 1)) {
    throw Error(ErrorKind::NotPrincipalUnit, eta.to_string() + " is not congruent to 1 mod the prime");
  }
  if (is_root_of_unity(eta).is_root) throw Error(ErrorKind::RootOfUnity, eta.to_string() + " is a root of unity");
  const std::uint64_t v0 = valuation(ctx.prime(), eta - one);
  for (std::uint64_t precision = ctx.e() * (j_max + 2) + v0; precision <= kPrecisionCap; precision *= 2) {
    if (auto seq = v_sequence_at(ctx, eta, j_max, precision)) return *seq;
  }
  throw Error(ErrorKind::PrecisionExhausted, "v(j) exceeded working precision 2^14");
}

Int mult_order(const LocalContext& ctx, const RingElement& alpha, std::uint64_t k) {
  if (k == 0) return 1;
  require_unit(ctx, alpha);
  const Int& p = ctx.p();
  const Int group = unit_group_size(ctx, k);
  std::vector<PrimePower> factors;
  if (ctx.f() * (k - 1) > 0) factors.push_back({p, ctx.f() * (k - 1)});
  const Int residue_units = ipow(p, ctx.f()) - 1;
  if (residue_units > 1) {
    for (auto& pp : factor_integer(residue_units)) factors.push_back(pp);
  }
  const QuotientRing q = ctx.prime().quotient(k);
  const RingElement one = q.reduce(ctx.ring().one());
  Int order = group;
  for (const auto& [prime, exponent] : factors) {
    for (std::uint64_t i = 0; i < exponent; ++i) {
      const Int candidate = order / prime;
      if (q.pow(alpha, candidate) != one) break;
      order = candidate;
    }
  }
  return order;
}

Int kernel_size(const LocalContext& ctx, const RingElement& alpha, std::uint64_t r) {
  if (r < 2) throw Error(ErrorKind::InvalidArgument, "kernel size needs r >= 2");
  return mult_order(ctx, alpha, r) / mult_order(ctx, alpha, r - 1);
}

std::vector<KernelEntry> kernel_sequence(const LocalContext& ctx, const RingElement& alpha, std::uint64_t r_max) {
  std::vector<KernelEntry> out;
  Int previous = mult_order(ctx, alpha, 1);
  for (std::uint64_t r = 2; r <= r_max; ++r) {
    Int current = mult_order(ctx, alpha, r);
    out.push_back({r, current / previous});
    previous = std::move(current);
  }
  return out;
}

std::optional<std::uint64_t> match_pattern(const std::vector<KernelEntry>& kernels, const Int& p, std::uint64_t e) {
  if (kernels.empty()) return std::nullopt;
  const std::uint64_t r_max = kernels.back().r;
  for (std::uint64_t v = 1; v < r_max; ++v) {
    bool ok = true;
    for (const auto& entry : kernels) {
      if (entry.r <= v) continue;
      const Int expected = ((entry.r - v) % e == 1 % e) ? p : Int(1);
      if (entry.size != expected) {
        ok = false;
        break;
      }
    }
    if (ok) return v;
  }
  return std::nullopt;
}

std::uint64_t lifting_threshold(const LocalContext& ctx, const RingElement& alpha) {
  require_unit(ctx, alpha);
  if (is_root_of_unity(alpha).is_root) throw Error(ErrorKind::RootOfUnity, alpha.to_string() + " is a root of unity");
  const RingElement one = ctx.ring().one();
  const Int inverse_exponent = ipow(ctx.p(), ctx.f()) - 2;
  for (std::uint64_t precision = 4 * ctx.e() + 4; precision <= kPrecisionCap; precision *= 2) {
    const QuotientRing q = ctx.prime().quotient(precision);
    const RingElement tau = teichmuller(ctx, alpha, precision);
    // tau^{p^f - 1} = 1, so tau^{p^f - 2} is its inverse.
    RingElement x = q.mul(alpha, q.pow(tau, inverse_exponent));
    for (;;) {
      const std::uint64_t v = valuation_capped(ctx.prime(), x - one, precision);
      if (v >= precision) break;
      if (v > ctx.e()) return v;
      x = q.pow(x, ctx.p());
    }
  }
  throw Error(ErrorKind::PrecisionExhausted, "lifting threshold exceeded working precision 2^14");
}

KernelPattern detect_pattern(const LocalContext& ctx, const RingElement& alpha, std::uint64_t r_max) {
  if (is_root_of_unity(alpha).is_root) throw Error(ErrorKind::RootOfUnity, alpha.to_string() + " is a root of unity");
  require_unit(ctx, alpha);
  KernelPattern out;
  out.e = ctx.e();
  out.p = ctx.p();
  out.kernels = kernel_sequence(ctx, alpha, r_max);
  auto payload = [&] {
    std::string s = "[";
    for (std::size_t i = 0; i < out.kernels.size(); ++i) {
      if (i) s += ",";
      s += "{\"r\":" + std::to_string(out.kernels[i].r) + ",\"size\":\"" + to_string(out.kernels[i].size) + "\"}";
    }
    return s + "]";
  };
  for (const auto& entry : out.kernels) {
    if (entry.size <= 0 || ipow(ctx.p(), multiplicity(entry.size, ctx.p())) != entry.size) {
      throw Error(ErrorKind::PatternNotFound, "kernel size is not a power of p", payload());
    }
  }
  auto v = match_pattern(out.kernels, ctx.p(), ctx.e());
  if (!v) throw Error(ErrorKind::PatternNotFound, "no threshold v < " + std::to_string(r_max) + " fits", payload());
  out.v = *v;
  out.verified_up_to = r_max;
  try {
    out.lifting_threshold = lifting_threshold(ctx, alpha);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::PrecisionExhausted) throw;
  }
  return out;
}

}  // namespace betadic
