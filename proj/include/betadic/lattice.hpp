#pragma once

#include <cstdint>
#include <vector>

#include "betadic/integer.hpp"
#include "betadic/ring.hpp"

namespace betadic {

// Full-rank sublattice of Z^d in column Hermite normal form: column j has
// support in rows 0..j, the diagonal is positive, and every entry above a
// diagonal entry lies in [0, diagonal).
class IntegerLattice {
 public:
  // HNF of the span of `generators` (each of length dim) together with
  // modulus * Z^dim. The caller guarantees modulus * Z^dim lies in the span,
  // which lets every intermediate entry stay in [0, modulus).
  static IntegerLattice from_generators(const std::vector<std::vector<Int>>& generators, const Int& modulus,
                                        std::size_t dim);

  std::size_t dim() const { return columns_.size(); }
  const Int& entry(std::size_t row, std::size_t col) const { return columns_[col][row]; }
  const std::vector<Int>& column(std::size_t j) const { return columns_[j]; }
  const Int& diagonal(std::size_t i) const { return columns_[i][i]; }
  const Int& determinant() const { return determinant_; }

  // Canonical representative: coordinate i ends in [0, diagonal(i)).
  void reduce_in_place(std::vector<Int>& v) const;
  std::vector<Int> reduce(std::vector<Int> v) const;
  bool contains(const std::vector<Int>& v) const;

  // Mixed-radix index of an already reduced vector, in [0, determinant).
  Int index_of(const std::vector<Int>& reduced) const;
  // Inverse of index_of.
  std::vector<Int> from_index(Int index) const;

  friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;

 private:
  std::vector<std::vector<Int>> columns_;
  Int determinant_;
};

// Lattice of the principal ideal (b^m) = span{b^m theta^j}; determinant
// |N(b)|^m. Throws ZeroElement.
IntegerLattice principal_lattice(const RingElement& b, std::uint64_t m);

// Ideal-lattice product I*J, given that `modulus` lies in I*J.
IntegerLattice ideal_product(const NumberRing& ring, const IntegerLattice& a,
                             const std::vector<RingElement>& ideal_generators, const Int& modulus);

// O / (lattice) with canonical representatives.
class QuotientRing {
 public:
  QuotientRing(NumberRing ring, IntegerLattice modulus);

  const NumberRing& ring() const { return ring_; }
  const IntegerLattice& lattice() const { return lattice_; }
  const Int& size() const { return lattice_.determinant(); }

  RingElement reduce(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement pow(const RingElement& a, const Int& exp) const;
  bool is_zero(const RingElement& a) const;
  bool equal(const RingElement& a, const RingElement& b) const;

 private:
  NumberRing ring_;
  IntegerLattice lattice_;
};

}  // namespace betadic
