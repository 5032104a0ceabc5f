#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>

namespace ecdlp {

using u64 = std::uint64_t;

// Raw residue arithmetic. All inputs are assumed already reduced mod m.
u64 add_mod(u64 a, u64 b, u64 m) noexcept;
u64 sub_mod(u64 a, u64 b, u64 m) noexcept;
u64 mul_mod(u64 a, u64 b, u64 m) noexcept;
u64 pow_mod(u64 base, u64 exp, u64 m) noexcept;
// Extended Euclid; empty when gcd(a, m) != 1.
std::optional<u64> inv_mod(u64 a, u64 m) noexcept;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n) noexcept;

/// A prime modulus, checked at construction. Used both for the coordinate
/// field size q and for the group order p.
class PrimeModulus {
 public:
  explicit PrimeModulus(u64 value);

  u64 value() const noexcept { return value_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;
  friend auto operator<=>(PrimeModulus, PrimeModulus) = default;

 private:
  u64 value_;
};

/// Element of F_q held in canonical form 0 <= residue < q.
///
/// Binary operations between elements of different moduli throw
/// ModulusMismatch. Values are immutable apart from assignment.
class FieldElement {
 public:
  FieldElement(PrimeModulus modulus, u64 value) noexcept
      : residue_(value % modulus.value()), modulus_(modulus) {}

  static FieldElement from_signed(PrimeModulus modulus, std::int64_t value) noexcept;
  static FieldElement zero(PrimeModulus modulus) noexcept { return {modulus, 0}; }
  static FieldElement one(PrimeModulus modulus) noexcept { return {modulus, 1}; }

  u64 residue() const noexcept { return residue_; }
  PrimeModulus modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return residue_ == 0; }

  FieldElement operator-() const noexcept;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  // Throws ZeroInversion for the zero element.
  FieldElement inverse() const;
  FieldElement pow(u64 exponent) const noexcept;
  // A square root when one exists (Tonelli-Shanks); the smaller residue of the pair.
  std::optional<FieldElement> sqrt() const;
  bool is_square() const noexcept;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  void check_same_modulus(const FieldElement& rhs) const;

  u64 residue_;
  PrimeModulus modulus_;
};

inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement inv(const FieldElement& a) { return a.inverse(); }

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace ecdlp
