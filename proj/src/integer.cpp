#include "betadic/integer.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "betadic/errors.hpp"

namespace betadic {

Int parse_int(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t\n");
  auto last = s.find_last_not_of(" \t\n");
  if (first == std::string::npos) {
    throw Error(ErrorKind::InvalidArgument, "empty integer literal");
  }
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Int value;
  if (s.empty() || value.set_str(s, 10) != 0) {
    throw Error(ErrorKind::InvalidArgument, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string to_string(const Int& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

Int floor_div(const Int& n, const Int& d) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Int floor_mod(const Int& n, const Int& d) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (r < 0) r += abs(d);
  return r;
}

Int ipow(const Int& base, std::uint64_t exp) {
  Int result = 1;
  Int b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

double log_abs(const Int& value) {
  if (value == 0) return -INFINITY;
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

std::uint64_t multiplicity(Int n, const Int& p) {
  if (n == 0) throw Error(ErrorKind::ZeroElement, "multiplicity of zero is infinite");
  std::uint64_t count = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
    n /= p;
    ++count;
  }
  return count;
}

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
Int rho_factor(const Int& n, unsigned long c) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Int y = 2, x, g = 1, q = 1, ys;
  const unsigned long batch = 128;
  auto step = [&](Int& v) {
    v = v * v + c;
    v %= n;
  };
  unsigned long r = 1;
  const unsigned long max_r = 1UL << 22;
  while (g == 1 && r <= max_r) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
        step(y);
        q = (q * abs(x - y)) % n;
      }
      g = gcd(q, n);
      k += batch;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  if (g == 1 || g == n) return 0;
  return g;
}

void factor_into(const Int& n, std::map<Int, std::uint64_t>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  for (unsigned long c = 1; c <= 64; ++c) {
    Int f = rho_factor(n, c);
    if (f != 0) {
      factor_into(f, out);
      factor_into(n / f, out);
      return;
    }
  }
  throw Error(ErrorKind::FactoringFailed, "Pollard rho failed on " + to_string(n));
}

}  // namespace

std::vector<PrimePower> factor_integer(const Int& n_in) {
  if (n_in == 0) throw Error(ErrorKind::ZeroElement, "cannot factor zero");
  Int n = abs(n_in);
  std::map<Int, std::uint64_t> found;
  for (unsigned long d = 2; d <= 1000000UL; d += (d == 2 ? 1 : 2)) {
    if (Int(d) * d > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
      std::uint64_t e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        ++e;
      }
      found[Int(d)] = e;
    }
  }
  factor_into(n, found);
  std::vector<PrimePower> result;
  result.reserve(found.size());
  for (auto& [p, e] : found) result.push_back({p, e});
  return result;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> result;
  for (auto& pp : factor_integer(n)) result.push_back(pp.prime);
  return result;
}

}  // namespace betadic
