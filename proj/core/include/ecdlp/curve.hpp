#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ecdlp/field.hpp"

namespace ecdlp {

class Curve;

/// A projective point in one of two normal forms: (x : y : 1) or the
/// identity (0 : 1 : 0). Only Curve can create points, so every Point in
/// circulation lies on some curve and is normalized.
class Point {
 public:
  const FieldElement& x() const noexcept { return x_; }
  const FieldElement& y() const noexcept { return y_; }
  const FieldElement& z() const noexcept { return z_; }
  bool is_identity() const noexcept { return z_.is_zero(); }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  friend class Curve;
  Point(FieldElement x, FieldElement y, FieldElement z) : x_(x), y_(y), z_(z) {}

  FieldElement x_;
  FieldElement y_;
  FieldElement z_;
};

/// Short Weierstrass curve y^2 z = x^3 + a x z^2 + b z^3 over a prime field.
class Curve {
 public:
  // Throws ValidationError when 4a^3 + 27b^2 = 0.
  Curve(PrimeModulus q, u64 a, u64 b);

  PrimeModulus field() const noexcept { return q_; }
  const FieldElement& a() const noexcept { return a_; }
  const FieldElement& b() const noexcept { return b_; }

  FieldElement rhs(const FieldElement& x) const;  // x^3 + a x + b
  bool contains(u64 x, u64 y) const;
  bool contains(const Point& p) const;

  Point identity() const;
  // Affine point; throws ValidationError if (x, y) is not on the curve.
  Point point(u64 x, u64 y) const;
  // Any projective representative; normalized on the way out.
  Point from_projective(const FieldElement& x, const FieldElement& y, const FieldElement& z) const;

  Point add(const Point& lhs, const Point& rhs) const;
  Point negate(const Point& p) const;
  Point multiply(const Point& p, u64 k) const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  PrimeModulus q_;
  FieldElement a_;
  FieldElement b_;
};

inline Point point_add(const Curve& c, const Point& lhs, const Point& rhs) { return c.add(lhs, rhs); }

/// A cyclic subgroup of prime order generated by a non-identity point.
class GroupSpec {
 public:
  // Validates that order is prime, generator != O, and order * generator = O.
  GroupSpec(Curve curve, Point generator, u64 order);

  const Curve& curve() const noexcept { return curve_; }
  const Point& generator() const noexcept { return generator_; }
  PrimeModulus order() const noexcept { return order_; }

 private:
  Curve curve_;
  Point generator_;
  PrimeModulus order_;
};

// r * generator, with r reduced modulo the group order first.
Point scalar_mul(const GroupSpec& g, u64 r);

inline constexpr u64 kDefaultMaxEnumeratedField = u64{1} << 20;

// Number of rational points including the identity, by sweeping every x.
u64 group_order(const Curve& c, u64 max_field = kDefaultMaxEnumeratedField);

// First nonsingular curve in (a, b) lexicographic order whose point count is
// a prime in [order_min, order_max]. The generator is the point with the
// smallest x, and the smaller y for that x.
GroupSpec find_prime_order_curve(PrimeModulus q, u64 order_min, u64 order_max,
                                 u64 max_field = kDefaultMaxEnumeratedField);

// Text forms. A curve is "q a b"; a point is "x y", or "O" for the identity.
inline constexpr std::string_view kIdentityToken = "O";
Curve parse_curve(std::string_view text);
Point parse_point(const Curve& c, std::string_view text);
std::string format_curve(const Curve& c);
std::string format_point(const Point& p);

}  // namespace ecdlp
