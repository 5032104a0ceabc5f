#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ecdlp/curve.hpp"
#include "ecdlp/field.hpp"

namespace ecdlp {

/// Exponent triple of the monomial x^x y^y z^z.
struct Monomial {
  unsigned x = 0;
  unsigned y = 0;
  unsigned z = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// All degree-n monomials in (x, y, z), graded-lexicographic with x > y > z,
/// descending: for n = 2 the order is x^2, xy, xz, y^2, yz, z^2.
///
/// This ordering fixes the column layout of every matrix built from points
/// and the coordinate order of every dumped curve coefficient vector.
class MonomialBasis {
 public:
  explicit MonomialBasis(unsigned degree);

  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  std::span<const Monomial> exponents() const noexcept { return exponents_; }
  const Monomial& operator[](std::size_t i) const { return exponents_[i]; }

  // (n + 1)(n + 2) / 2
  static std::size_t dimension(unsigned degree) noexcept {
    return static_cast<std::size_t>(degree + 1) * (degree + 2) / 2;
  }

 private:
  unsigned degree_;
  std::vector<Monomial> exponents_;
};

inline MonomialBasis basis(unsigned n_prime) { return MonomialBasis(n_prime); }

using MonomialRow = std::vector<FieldElement>;

// Monomials evaluated at an arbitrary projective representative.
MonomialRow evaluate_monomials(const MonomialBasis& basis, const FieldElement& x,
                               const FieldElement& y, const FieldElement& z);

// Monomials evaluated at the normalized coordinates of p.
MonomialRow evaluate_row(const MonomialBasis& basis, const Point& p);

// Same as evaluate_row, written straight into a residue buffer of length basis.size().
void evaluate_row_into(const MonomialBasis& basis, const Point& p, std::span<u64> out);

}  // namespace ecdlp
