#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "betadic/integer.hpp"

namespace betadic {

// Row-major square integer matrix.
using IntMatrix = std::vector<std::vector<Int>>;

// Fraction-free (Bareiss) determinant.
Int determinant(IntMatrix m);
IntMatrix adjugate(const IntMatrix& m);

enum class Irreducibility { Irreducible, Reducible, Undecided };

struct IrreducibilityCheck {
  Irreducibility verdict;
  std::vector<Int> witness;  // a nontrivial monic factor when Reducible
};

// Decides irreducibility over Q of a monic integer polynomial: rational
// roots, factor-degree patterns modulo small primes, and an exact search
// for a quadratic factor when the degree is 4. Degrees 1..4 are always
// decided.
IrreducibilityCheck check_irreducible(const std::vector<Int>& monic_poly);

namespace detail {
struct RingData {
  std::vector<Int> min_poly;  // monic, constant term first
  std::size_t degree = 0;
  bool assume_maximal = true;
};
}  // namespace detail

class RingElement;

// The order Z[theta] for a monic irreducible polynomial, treated as the ring
// of integers of Q(theta). Immutable and cheap to copy.
class NumberRing {
 public:
  // Throws NotMonic, Reducible (payload: a nontrivial factor) or
  // IrreducibilityUndecided.
  explicit NumberRing(std::vector<Int> min_poly, bool assume_maximal = true);

  std::size_t degree() const { return data_->degree; }
  const std::vector<Int>& min_poly() const { return data_->min_poly; }
  // Z[theta] is taken to be the maximal order; no integral basis is computed.
  bool assume_maximal() const { return data_->assume_maximal; }

  RingElement element(std::vector<Int> coords) const;
  RingElement from_int(const Int& value) const;
  RingElement zero() const;
  RingElement one() const;
  RingElement theta() const;

  friend bool operator==(const NumberRing& a, const NumberRing& b) {
    return a.data_ == b.data_ || a.data_->min_poly == b.data_->min_poly;
  }

 private:
  explicit NumberRing(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::RingData> data_;
  friend class RingElement;
};

class RingElement {
 public:
  NumberRing ring() const { return NumberRing(ring_); }
  std::size_t degree() const { return coords_.size(); }
  const std::vector<Int>& coords() const { return coords_; }
  const Int& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;
  bool same_ring(const RingElement& other) const;

  RingElement pow(std::uint64_t exp) const;
  std::string to_string() const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const Int& k, const RingElement& a);
  friend RingElement operator-(const RingElement& a);
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RingElement(std::shared_ptr<const detail::RingData> ring, std::vector<Int> coords)
      : ring_(std::move(ring)), coords_(std::move(coords)) {}
  std::shared_ptr<const detail::RingData> ring_;
  std::vector<Int> coords_;
  friend class NumberRing;
};

// Throws RingMismatch.
void require_same_ring(const RingElement& a, const RingElement& b);

// Column j holds the coordinates of a * theta^j.
IntMatrix multiplication_matrix(const RingElement& a);

// Field norm N(a) = Res(min_poly, a) = det of the multiplication matrix.
Int norm(const RingElement& a);

// Exact quotient by a fixed nonzero divisor via the adjugate of its
// multiplication matrix. Reused across many divisions (digit stripping).
class ExactDivider {
 public:
  explicit ExactDivider(const RingElement& divisor);  // ZeroElement
  const RingElement& divisor() const { return divisor_; }
  const Int& norm() const { return norm_; }
  // Returns c with c * divisor == a; NotDivisible if a is not in (divisor).
  RingElement divide(const RingElement& a) const;
  // Same, without the exception: nullopt if not divisible.
  std::optional<RingElement> try_divide(const RingElement& a) const;

 private:
  RingElement divisor_;
  IntMatrix adjugate_;
  Int norm_;
};

RingElement exact_divide(const RingElement& a, const RingElement& b);

}  // namespace betadic
