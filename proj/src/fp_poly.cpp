#include "betadic/fp_poly.hpp"

#include <algorithm>

#include "betadic/errors.hpp"

namespace betadic {

FpPoly::FpPoly(std::vector<Int> coeffs, const Int& p) : c_(std::move(coeffs)), p_(p) {
  for (auto& c : c_) c = floor_mod(c, p_);
  trim();
}

FpPoly FpPoly::constant(const Int& c, const Int& p) { return FpPoly({c}, p); }

FpPoly FpPoly::x(const Int& p) { return FpPoly({Int(0), Int(1)}, p); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  Int inv;
  mpz_invert(inv.get_mpz_t(), lead().get_mpz_t(), p_.get_mpz_t());
  FpPoly r = *this;
  for (auto& c : r.c_) c = (c * inv) % p_;
  return r;
}

FpPoly FpPoly::derivative() const {
  std::vector<Int> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return FpPoly(std::move(d), p_);
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return FpPoly(std::move(r), a.p_ != 0 ? a.p_ : b.p_);
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
  return FpPoly(std::move(r), a.p_ != 0 ? a.p_ : b.p_);
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly({}, a.p_ != 0 ? a.p_ : b.p_);
  std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return FpPoly(std::move(r), a.p_);
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (long i = a.degree(); i >= 0; --i) {
    auto k = static_cast<std::size_t>(i);
    if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
  }
  return false;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  const Int& p = b.modulus();
  std::vector<Int> rem = a.coeffs();
  if (a.degree() < b.degree()) return {FpPoly({}, p), a};
  Int inv;
  mpz_invert(inv.get_mpz_t(), b.lead().get_mpz_t(), p.get_mpz_t());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Int> quo(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    Int t = (rem[k] * inv) % p;
    if (t < 0) t += p;
    quo[k - db] = t;
    if (t == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[k - db + i] = (rem[k - db + i] - t * b.coeffs()[i]) % p;
    }
  }
  rem.resize(db);
  return {FpPoly(std::move(quo), p), FpPoly(std::move(rem), p)};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }
FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPoly powmod(const FpPoly& base, const Int& exp, const FpPoly& mod) {
  const Int& p = mod.modulus();
  FpPoly result = FpPoly::constant(1, p) % mod;
  FpPoly b = base % mod;
  const auto bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(exp.get_mpz_t(), i) != 0) result = (result * b) % mod;
  }
  return result;
}

namespace {

// f(x) = g(x^p) in characteristic p; returns g (coefficients are their own
// p-th roots in F_p).
FpPoly pth_root(const FpPoly& f) {
  const Int& p = f.modulus();
  const unsigned long step = p.get_ui();
  std::vector<Int> g;
  for (std::size_t i = 0; i < f.coeffs().size(); i += step) g.push_back(f.coeffs()[i]);
  return FpPoly(std::move(g), p);
}

void squarefree(const FpPoly& f, std::uint64_t scale, std::vector<FpFactor>& out) {
  const Int& p = f.modulus();
  if (f.degree() <= 0) return;
  FpPoly fd = f.derivative();
  if (fd.is_zero()) {
    squarefree(pth_root(f), scale * p.get_ui(), out);
    return;
  }
  FpPoly c = gcd(f, fd);
  FpPoly w = f / c;
  std::uint64_t i = 1;
  while (w.degree() > 0) {
    FpPoly y = gcd(w, c);
    FpPoly z = (w / y).monic();
    if (z.degree() > 0) out.push_back({z, i * scale});
    ++i;
    w = y;
    c = c / y;
  }
  c = c.monic();
  if (c.degree() > 0) squarefree(pth_root(c), scale * p.get_ui(), out);
}

struct DegreePart {
  FpPoly product;
  long degree;
};

std::vector<DegreePart> distinct_degree(FpPoly f) {
  const Int& p = f.modulus();
  std::vector<DegreePart> out;
  const FpPoly x = FpPoly::x(p);
  FpPoly h = x % f;
  for (long i = 1; f.degree() >= 2 * i; ++i) {
    h = powmod(h, p, f);
    FpPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.push_back({g, i});
      f = (f / g).monic();
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({f, f.degree()});
  return out;
}

// Polynomial whose coefficients are the base-p digits of `counter`.
FpPoly enumerate_candidate(std::uint64_t counter, const Int& p) {
  std::vector<Int> c;
  const unsigned long base = p.get_ui();
  while (counter > 0) {
    c.emplace_back(static_cast<unsigned long>(counter % base));
    counter /= base;
  }
  return FpPoly(std::move(c), p);
}

void equal_degree(const FpPoly& f, long r, gmp_randclass& rng, std::vector<FpPoly>& out) {
  if (f.degree() == r) {
    out.push_back(f.monic());
    return;
  }
  const Int& p = f.modulus();
  const auto n = static_cast<std::size_t>(f.degree());
  for (std::uint64_t attempt = 1;; ++attempt) {
    FpPoly a;
    FpPoly b;
    if (p == 2) {
      a = enumerate_candidate(attempt + 1, p) % f;
      // Trace from F_{2^r} to F_2, evaluated componentwise.
      FpPoly t = a;
      b = a;
      for (long i = 1; i < r; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      std::vector<Int> coeffs(n);
      for (auto& c : coeffs) c = rng.get_z_range(p);
      a = FpPoly(std::move(coeffs), p);
      if (a.degree() <= 0) continue;
      Int e = (ipow(p, static_cast<std::uint64_t>(r)) - 1) / 2;
      b = powmod(a, e, f) - FpPoly::constant(1, p);
    }
    FpPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, r, rng, out);
      equal_degree((f / g).monic(), r, rng, out);
      return;
    }
  }
}

}  // namespace

FpFactorization factor_mod_p(const std::vector<Int>& poly, const Int& p, std::uint64_t seed) {
  if (!is_probable_prime(p)) throw Error(ErrorKind::NotPrime, to_string(p) + " is not prime");
  FpPoly f(poly, p);
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial vanishes modulo " + to_string(p));
  f = f.monic();
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));

  std::vector<FpFactor> sqf;
  squarefree(f, 1, sqf);
  FpFactorization result{{}, seed};
  for (auto& part : sqf) {
    for (auto& dd : distinct_degree(part.factor)) {
      std::vector<FpPoly> pieces;
      equal_degree(dd.product, dd.degree, rng, pieces);
      for (auto& piece : pieces) result.factors.push_back({piece, part.multiplicity});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const FpFactor& a, const FpFactor& b) {
              if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
              return a.factor < b.factor;
            });
  return result;
}

bool is_irreducible_mod_p(const std::vector<Int>& poly, const Int& p) {
  FpPoly f(poly, p);
  if (f.degree() <= 0) return false;
  auto fac = factor_mod_p(poly, p);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace betadic
