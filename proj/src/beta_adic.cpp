#include "betadic/beta_adic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "betadic/errors.hpp"

namespace betadic {

namespace {

constexpr std::size_t kNoDigit = std::numeric_limits<std::size_t>::max();
constexpr std::uint64_t kMaxRadix = std::uint64_t{1} << 24;
constexpr std::uint64_t kProgressInterval = 100'000;

Int checked_radix(const RingElement& beta) {
  Int n = abs(norm(beta));
  if (n <= 1) throw Error(ErrorKind::NormTooSmall, "need |N(beta)| > 1, got " + to_string(n));
  if (n > kMaxRadix) throw Error(ErrorKind::InvalidArgument, "|N(beta)| = " + to_string(n) + " is too large for a digit table");
  return n;
}

}  // namespace

DigitSystem::DigitSystem(NumberRing ring, RingElement beta)
    : ring_(std::move(ring)),
      beta_(std::move(beta)),
      radix_(checked_radix(beta_)),
      lattice_(principal_lattice(beta_, 1)),
      divider_(beta_) {
  const auto n = radix_.get_ui();
  digits_.reserve(n);
  for (unsigned long i = 0; i < n; ++i) digits_.push_back(ring_.element(lattice_.from_index(Int(i))));
  build_index();
}

DigitSystem::DigitSystem(NumberRing ring, RingElement beta, std::vector<RingElement> digits)
    : ring_(std::move(ring)),
      beta_(std::move(beta)),
      radix_(checked_radix(beta_)),
      lattice_(principal_lattice(beta_, 1)),
      divider_(beta_),
      digits_(std::move(digits)) {
  if (digits_.size() != radix_.get_ui()) {
    throw Error(ErrorKind::IncompleteDigitSet, "expected " + to_string(radix_) + " digits, got " +
                                                   std::to_string(digits_.size()));
  }
  auto zero = std::find_if(digits_.begin(), digits_.end(), [](const RingElement& d) { return d.is_zero(); });
  if (zero == digits_.end()) throw Error(ErrorKind::IncompleteDigitSet, "digit set must contain 0");
  std::rotate(digits_.begin(), zero, zero + 1);
  build_index();
}

void DigitSystem::build_index() {
  residue_to_digit_.assign(radix_.get_ui(), kNoDigit);
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    require_same_ring(digits_[i], beta_);
    const auto slot = lattice_.index_of(lattice_.reduce(digits_[i].coords())).get_ui();
    if (residue_to_digit_[slot] != kNoDigit) {
      throw Error(ErrorKind::IncompleteDigitSet, "digits " + digits_[residue_to_digit_[slot]].to_string() + " and " +
                                                     digits_[i].to_string() + " are congruent mod beta");
    }
    residue_to_digit_[slot] = i;
  }
}

std::size_t DigitSystem::digit_index(const RingElement& x) const {
  std::vector<Int> r = x.coords();
  lattice_.reduce_in_place(r);
  return residue_to_digit_[lattice_.index_of(r).get_ui()];
}

Expansion expand(const DigitSystem& ds, const RingElement& x, std::uint64_t m) {
  require_same_ring(x, ds.beta());
  Expansion out{x, m, {}};
  out.digit_indices.reserve(m);
  RingElement rest = x;
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::size_t idx = ds.digit_index(rest);
    out.digit_indices.push_back(idx);
    rest = ds.divider().divide(rest - ds.digits()[idx]);
  }
  return out;
}

RingElement evaluate(const DigitSystem& ds, const std::vector<std::size_t>& digit_indices) {
  RingElement acc = ds.ring().zero();
  for (std::size_t i = digit_indices.size(); i-- > 0;) acc = acc * ds.beta() + ds.digits().at(digit_indices[i]);
  return acc;
}

double LogRatio::value() const {
  double num = 0.0;
  double den = 0.0;
  for (const auto& [p, c] : numerator) num += c.get_d() * log_abs(p);
  for (const auto& [p, c] : denominator) den += c.get_d() * log_abs(p);
  return num / den;
}

std::optional<Rational> LogRatio::exact() const {
  if (numerator.size() != 1 || denominator.size() != 1 || numerator[0].first != denominator[0].first) {
    return std::nullopt;
  }
  Rational r = numerator[0].second / Rational(denominator[0].second);
  r.canonicalize();
  return r;
}

std::string LogRatio::to_string() const {
  auto side = [](const auto& terms) {
    std::string s;
    for (const auto& [p, c] : terms) {
      if (!s.empty()) s += " + ";
      s += betadic::to_string(c) + "*log(" + betadic::to_string(p) + ")";
    }
    return "(" + s + ")";
  };
  return side(numerator) + "/" + side(denominator);
}

OrbitContext::OrbitContext(DigitSystem ds, RingElement alpha, std::uint64_t seed)
    : ds_(std::move(ds)), alpha_(std::move(alpha)), factorization_(factor_beta(ds_.ring(), ds_.beta(), seed)) {
  require_same_ring(alpha_, ds_.beta());
  for (const auto& factor : factorization_.factors) {
    locals_.emplace_back(factor.prime);
    if (alpha_.is_zero() || !locals_.back().is_unit(alpha_)) {
      throw Error(ErrorKind::NotCoprime,
                  alpha_.to_string() + " is not coprime to beta (shares the prime above " + to_string(factor.prime.p()) + ")");
    }
  }
}

Int OrbitContext::orbit_size(std::uint64_t m) const {
  Int h = 1;
  for (std::size_t j = 0; j < locals_.size(); ++j) {
    const Int order = mult_order(locals_[j], alpha_, factorization_.factors[j].multiplicity * m);
    h = lcm(h, order);
  }
  return h;
}

OrbitDigitStats OrbitContext::digit_stats(std::uint64_t m, std::uint64_t budget, const Progress& progress) const {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "digit statistics need m >= 1");
  const Int h = orbit_size(m);
  if (Int(m) * h > Int(static_cast<unsigned long>(budget))) {
    throw Error(ErrorKind::WorkBudgetExceeded, "m * h_m = " + to_string(Int(Int(m) * h)) + " exceeds budget " +
                                                   std::to_string(budget) + " (h_m = " + to_string(h) + ")");
  }
  const QuotientRing q(ds_.ring(), principal_lattice(ds_.beta(), m));
  const RingElement start = q.reduce(alpha_);
  RingElement current = start;
  std::vector<std::uint64_t> counts(ds_.radix_size(), 0);
  const auto steps = h.get_ui();
  for (unsigned long n = 1; n <= steps; ++n) {
    RingElement x = current;
    for (std::uint64_t i = 0; i < m; ++i) {
      const std::size_t idx = ds_.digit_index(x);
      ++counts[idx];
      if (i + 1 < m) x = ds_.divider().divide(x - ds_.digits()[idx]);
    }
    current = q.mul(current, alpha_);
    if (progress && n % kProgressInterval == 0) progress(n, h);
  }
  if (current != start) throw Error(ErrorKind::InvalidArgument, "orbit of alpha did not close after h_m steps");

  OrbitDigitStats out;
  out.m = m;
  out.h_m = h;
  const Rational total(Int(m) * h);
  for (auto c : counts) {
    out.counts.emplace_back(static_cast<unsigned long>(c));
    Rational f(out.counts.back());
    f /= total;
    out.freq.push_back(f);
  }
  return out;
}

OrbitDigitStats OrbitContext::stats_recursive(std::uint64_t m, const OrbitDigitStats& base) const {
  if (base.m == 0 || m < base.m) throw Error(ErrorKind::InvalidArgument, "recursion needs m >= base.m >= 1");
  if (base.counts.size() != ds_.radix_size() || base.h_m != orbit_size(base.m)) {
    throw Error(ErrorKind::InvalidArgument, "base statistics do not belong to this orbit");
  }
  if (m == base.m) return base;
  const Int& radix = ds_.radix();
  Int h_prev = base.h_m;
  std::vector<Int> counts = base.counts;
  for (std::uint64_t k = base.m + 1; k <= m; ++k) {
    const Int h_k = orbit_size(k);
    if (h_k != radix * h_prev) {
      throw Error(ErrorKind::RecursionInvalid, "h_" + std::to_string(k) + " = " + to_string(h_k) + " but N(beta) h_" +
                                                   std::to_string(k - 1) + " = " + to_string(Int(radix * h_prev)));
    }
    for (auto& c : counts) c = radix * c + h_prev;
    h_prev = h_k;
  }
  OrbitDigitStats out;
  out.m = m;
  out.h_m = h_prev;
  out.counts = std::move(counts);
  const Rational total(Int(m) * h_prev);
  for (const auto& c : out.counts) {
    Rational f(c);
    f /= total;
    out.freq.push_back(f);
  }
  return out;
}

LogRatio OrbitContext::theoretical_complexity() const {
  std::map<Int, Rational> num;
  std::map<Int, Int> den;
  for (const auto& factor : factorization_.factors) {
    const Int& p = factor.prime.p();
    Rational term(Int(static_cast<unsigned long>(factor.multiplicity)), Int(static_cast<unsigned long>(factor.prime.e())));
    term.canonicalize();
    num[p] += term;
    den[p] += Int(static_cast<unsigned long>(factor.multiplicity * factor.prime.f()));
  }
  LogRatio out;
  for (auto& [p, c] : num) {
    c.canonicalize();
    out.numerator.emplace_back(p, c);
  }
  for (auto& [p, c] : den) out.denominator.emplace_back(p, c);
  return out;
}

BlockComplexity OrbitContext::block_complexity(std::uint64_t m_max) const {
  BlockComplexity out;
  out.limit = theoretical_complexity();
  const double log_radix = log_abs(ds_.radix());
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    Int blocks = orbit_size(m);
    const double slope = log_abs(blocks) / (static_cast<double>(m) * log_radix);
    out.points.push_back({m, std::move(blocks), slope});
  }
  return out;
}

DigitSystem digit_system(const NumberRing& ring, const RingElement& beta) { return DigitSystem(ring, beta); }

Int orbit_size(const DigitSystem& ds, const RingElement& alpha, std::uint64_t m) {
  return OrbitContext(ds, alpha).orbit_size(m);
}

OrbitDigitStats orbit_digit_stats(const DigitSystem& ds, const RingElement& alpha, std::uint64_t m,
                                  std::uint64_t budget) {
  return OrbitContext(ds, alpha).digit_stats(m, budget);
}

OrbitDigitStats stats_recursive(const DigitSystem& ds, const RingElement& alpha, std::uint64_t m,
                                const OrbitDigitStats& base) {
  return OrbitContext(ds, alpha).stats_recursive(m, base);
}

BlockComplexity block_complexity(const DigitSystem& ds, const RingElement& alpha, std::uint64_t m_max) {
  return OrbitContext(ds, alpha).block_complexity(m_max);
}

}  // namespace betadic
