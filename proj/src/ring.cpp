#include "betadic/ring.hpp"

#include <sstream>

#include "betadic/errors.hpp"

namespace betadic {

namespace {

std::string poly_string(const std::vector<Int>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += to_string(p[i]);
  }
  return s + "]";
}

}  // namespace

Int determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix adj(n, std::vector<Int>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor;
      minor.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Int> row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
      }
      Int cof = determinant(std::move(minor));
      if ((i + j) % 2 == 1) cof = -cof;
      adj[j][i] = cof;
    }
  }
  return adj;
}

NumberRing::NumberRing(std::vector<Int> min_poly, bool assume_maximal) {
  if (min_poly.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "minimal polynomial must have degree >= 1");
  }
  if (min_poly.back() != 1) {
    throw Error(ErrorKind::NotMonic, "leading coefficient is " + to_string(min_poly.back()));
  }
  auto check = check_irreducible(min_poly);
  if (check.verdict == Irreducibility::Reducible) {
    throw Error(ErrorKind::Reducible, poly_string(min_poly) + " has the factor " + poly_string(check.witness),
                poly_string(check.witness));
  }
  if (check.verdict == Irreducibility::Undecided) {
    throw Error(ErrorKind::IrreducibilityUndecided,
                "could not decide irreducibility of " + poly_string(min_poly));
  }
  auto data = std::make_shared<detail::RingData>();
  data->degree = min_poly.size() - 1;
  data->min_poly = std::move(min_poly);
  data->assume_maximal = assume_maximal;
  data_ = std::move(data);
}

RingElement NumberRing::element(std::vector<Int> coords) const {
  if (coords.size() > degree()) {
    throw Error(ErrorKind::InvalidArgument, "element has " + std::to_string(coords.size()) +
                                                " coordinates, ring degree is " + std::to_string(degree()));
  }
  coords.resize(degree());
  return RingElement(data_, std::move(coords));
}

RingElement NumberRing::from_int(const Int& value) const {
  std::vector<Int> c(degree());
  c[0] = value;
  return RingElement(data_, std::move(c));
}

RingElement NumberRing::zero() const { return from_int(0); }
RingElement NumberRing::one() const { return from_int(1); }

RingElement NumberRing::theta() const {
  if (degree() == 1) return from_int(-min_poly()[0]);
  std::vector<Int> c(degree());
  c[1] = 1;
  return RingElement(data_, std::move(c));
}

bool RingElement::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool RingElement::same_ring(const RingElement& other) const {
  return ring_ == other.ring_ || ring_->min_poly == other.ring_->min_poly;
}

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (!a.same_ring(b)) throw Error(ErrorKind::RingMismatch, "operands belong to different rings");
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  std::vector<Int> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
  return RingElement(a.ring_, std::move(c));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  std::vector<Int> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
  return RingElement(a.ring_, std::move(c));
}

RingElement operator-(const RingElement& a) {
  std::vector<Int> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords_[i];
  return RingElement(a.ring_, std::move(c));
}

RingElement operator*(const Int& k, const RingElement& a) {
  std::vector<Int> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coords_[i];
  return RingElement(a.ring_, std::move(c));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const std::size_t d = a.coords_.size();
  const auto& f = a.ring_->min_poly;
  std::vector<Int> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), a.coords_[i].get_mpz_t(), b.coords_[j].get_mpz_t());
    }
  }
  // theta^d = -(f_0 + f_1 theta + ... + f_{d-1} theta^{d-1})
  for (std::size_t k = 2 * d - 1; k-- > d;) {
    if (prod[k] == 0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      if (f[i] != 0) mpz_submul(prod[k - d + i].get_mpz_t(), prod[k].get_mpz_t(), f[i].get_mpz_t());
    }
  }
  prod.resize(d);
  return RingElement(a.ring_, std::move(prod));
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.same_ring(b) && a.coords_ == b.coords_;
}

RingElement RingElement::pow(std::uint64_t exp) const {
  RingElement result(ring_, std::vector<Int>(coords_.size()));
  result.coords_[0] = 1;
  RingElement base = *this;
  while (exp > 0) {
    if (exp & 1U) result = result * base;
    exp >>= 1U;
    if (exp > 0) base = base * base;
  }
  return result;
}

std::string RingElement::to_string() const { return poly_string(coords_); }

IntMatrix multiplication_matrix(const RingElement& a) {
  const std::size_t d = a.degree();
  IntMatrix m(d, std::vector<Int>(d));
  RingElement col = a;
  const RingElement theta = a.ring().theta();
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
    if (j + 1 < d) col = col * theta;
  }
  return m;
}

Int norm(const RingElement& a) { return determinant(multiplication_matrix(a)); }

ExactDivider::ExactDivider(const RingElement& divisor)
    : divisor_(divisor), adjugate_(adjugate(multiplication_matrix(divisor))), norm_(betadic::norm(divisor)) {
  if (norm_ == 0) throw Error(ErrorKind::ZeroElement, "division by zero");
}

std::optional<RingElement> ExactDivider::try_divide(const RingElement& a) const {
  require_same_ring(a, divisor_);
  const std::size_t d = a.degree();
  std::vector<Int> c(d);
  for (std::size_t i = 0; i < d; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < d; ++j) mpz_addmul(acc.get_mpz_t(), adjugate_[i][j].get_mpz_t(), a[j].get_mpz_t());
    if (mpz_divisible_p(acc.get_mpz_t(), norm_.get_mpz_t()) == 0) return std::nullopt;
    mpz_divexact(c[i].get_mpz_t(), acc.get_mpz_t(), norm_.get_mpz_t());
  }
  return a.ring().element(std::move(c));
}

RingElement ExactDivider::divide(const RingElement& a) const {
  auto q = try_divide(a);
  if (!q) throw Error(ErrorKind::NotDivisible, a.to_string() + " is not divisible by " + divisor_.to_string());
  return *std::move(q);
}

RingElement exact_divide(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return ExactDivider(b).divide(a);
}

}  // namespace betadic
