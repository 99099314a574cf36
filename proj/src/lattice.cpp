#include "betadic/lattice.hpp"

#include <optional>

#include "betadic/errors.hpp"

namespace betadic {

namespace {

using Column = std::vector<Int>;

// col = u*a + v*b restricted to rows [0, rows).
Column combine(const Column& a, const Int& u, const Column& b, const Int& v, std::size_t rows) {
  Column out(a.size());
  for (std::size_t r = 0; r < rows; ++r) {
    out[r] = u * a[r];
    mpz_addmul(out[r].get_mpz_t(), v.get_mpz_t(), b[r].get_mpz_t());
  }
  return out;
}

void reduce_rows(Column& c, std::size_t rows, const Int& modulus) {
  for (std::size_t r = 0; r < rows; ++r) mpz_fdiv_r(c[r].get_mpz_t(), c[r].get_mpz_t(), modulus.get_mpz_t());
}

bool zero_upto(const Column& c, std::size_t rows) {
  for (std::size_t r = 0; r < rows; ++r) {
    if (c[r] != 0) return false;
  }
  return true;
}

}  // namespace

IntegerLattice IntegerLattice::from_generators(const std::vector<std::vector<Int>>& generators,
                                               const Int& modulus, std::size_t dim) {
  if (modulus <= 0) throw Error(ErrorKind::InvalidArgument, "lattice modulus must be positive");
  // The vectors modulus * e_r are implicit members; while rows >= r are
  // being eliminated they are untouched, so rows < r may be reduced freely.
  std::vector<Column> active;
  for (const auto& g : generators) {
    if (g.size() != dim) throw Error(ErrorKind::InvalidArgument, "generator dimension mismatch");
    Column c = g;
    reduce_rows(c, dim, modulus);
    if (!zero_upto(c, dim)) active.push_back(std::move(c));
  }

  IntegerLattice lat;
  lat.columns_.assign(dim, Column(dim));
  for (std::size_t row = dim; row-- > 0;) {
    const std::size_t rows = row + 1;
    std::optional<Column> pivot;
    std::vector<Column> rest;
    for (auto& c : active) {
      if (c[row] == 0) {
        rest.push_back(std::move(c));
        continue;
      }
      if (!pivot) {
        pivot = std::move(c);
        continue;
      }
      Int g, u, v;
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), (*pivot)[row].get_mpz_t(), c[row].get_mpz_t());
      const Int x = (*pivot)[row] / g;
      const Int y = c[row] / g;
      Column merged = combine(*pivot, u, c, v, rows);
      Column leftover = combine(*pivot, y, c, Int(-x), rows);
      reduce_rows(merged, row, modulus);
      reduce_rows(leftover, row, modulus);
      leftover[row] = 0;
      if (!zero_upto(leftover, row)) rest.push_back(std::move(leftover));
      pivot = std::move(merged);
    }
    // Merge with the implicit modulus * e_row.
    Column unit(dim);
    unit[row] = modulus;
    if (!pivot) {
      pivot = unit;
    } else {
      Int g, u, v;
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), (*pivot)[row].get_mpz_t(), modulus.get_mpz_t());
      if (g < 0) {
        g = -g;
        u = -u;
        v = -v;
      }
      const Int x = (*pivot)[row] / g;
      const Int y = modulus / g;
      Column merged = combine(*pivot, u, unit, v, rows);
      Column leftover = combine(*pivot, y, unit, Int(-x), rows);
      reduce_rows(leftover, row, modulus);
      leftover[row] = 0;
      if (!zero_upto(leftover, row)) rest.push_back(std::move(leftover));
      pivot = std::move(merged);
    }
    reduce_rows(*pivot, row, modulus);
    lat.columns_[row] = std::move(*pivot);
    active = std::move(rest);
  }

  // Reduce entries above the diagonal.
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      Int q = floor_div(lat.columns_[j][i], lat.columns_[i][i]);
      if (q == 0) continue;
      for (std::size_t r = 0; r <= i; ++r) mpz_submul(lat.columns_[j][r].get_mpz_t(), q.get_mpz_t(), lat.columns_[i][r].get_mpz_t());
    }
  }
  lat.determinant_ = 1;
  for (std::size_t i = 0; i < dim; ++i) lat.determinant_ *= lat.columns_[i][i];
  return lat;
}

void IntegerLattice::reduce_in_place(std::vector<Int>& v) const {
  Int q;
  for (std::size_t i = dim(); i-- > 0;) {
    mpz_fdiv_q(q.get_mpz_t(), v[i].get_mpz_t(), columns_[i][i].get_mpz_t());
    if (q == 0) continue;
    for (std::size_t r = 0; r <= i; ++r) mpz_submul(v[r].get_mpz_t(), q.get_mpz_t(), columns_[i][r].get_mpz_t());
  }
}

std::vector<Int> IntegerLattice::reduce(std::vector<Int> v) const {
  reduce_in_place(v);
  return v;
}

bool IntegerLattice::contains(const std::vector<Int>& v) const {
  auto r = reduce(v);
  for (const auto& x : r) {
    if (x != 0) return false;
  }
  return true;
}

Int IntegerLattice::index_of(const std::vector<Int>& reduced) const {
  Int index = 0;
  for (std::size_t i = dim(); i-- > 0;) index = index * columns_[i][i] + reduced[i];
  return index;
}

std::vector<Int> IntegerLattice::from_index(Int index) const {
  std::vector<Int> v(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    mpz_fdiv_qr(index.get_mpz_t(), v[i].get_mpz_t(), index.get_mpz_t(), columns_[i][i].get_mpz_t());
  }
  return v;
}

IntegerLattice principal_lattice(const RingElement& b, std::uint64_t m) {
  const Int n = norm(b);
  if (n == 0) throw Error(ErrorKind::ZeroElement, "principal lattice of zero");
  const RingElement bm = b.pow(m);
  const RingElement theta = b.ring().theta();
  std::vector<std::vector<Int>> gens;
  RingElement g = bm;
  for (std::size_t j = 0; j < b.degree(); ++j) {
    gens.push_back(g.coords());
    if (j + 1 < b.degree()) g = g * theta;
  }
  return IntegerLattice::from_generators(gens, ipow(abs(n), m), b.degree());
}

IntegerLattice ideal_product(const NumberRing& ring, const IntegerLattice& a,
                             const std::vector<RingElement>& ideal_generators, const Int& modulus) {
  std::vector<std::vector<Int>> gens;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const RingElement col = ring.element(a.column(j));
    for (const auto& g : ideal_generators) gens.push_back((col * g).coords());
  }
  return IntegerLattice::from_generators(gens, modulus, ring.degree());
}

QuotientRing::QuotientRing(NumberRing ring, IntegerLattice modulus)
    : ring_(std::move(ring)), lattice_(std::move(modulus)) {
  if (lattice_.dim() != ring_.degree()) throw Error(ErrorKind::RingMismatch, "lattice dimension differs from ring degree");
}

RingElement QuotientRing::reduce(const RingElement& a) const {
  if (!(a.ring() == ring_)) throw Error(ErrorKind::RingMismatch, "element does not belong to the quotient's ring");
  std::vector<Int> c = a.coords();
  lattice_.reduce_in_place(c);
  return ring_.element(std::move(c));
}

RingElement QuotientRing::mul(const RingElement& a, const RingElement& b) const { return reduce(a * b); }

RingElement QuotientRing::pow(const RingElement& a, const Int& exp) const {
  if (exp < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  RingElement result = reduce(ring_.one());
  const RingElement base = reduce(a);
  const auto bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  if (exp == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(exp.get_mpz_t(), i) != 0) result = mul(result, base);
  }
  return result;
}

bool QuotientRing::is_zero(const RingElement& a) const { return lattice_.contains(a.coords()); }

bool QuotientRing::equal(const RingElement& a, const RingElement& b) const { return is_zero(a - b); }

}  // namespace betadic
