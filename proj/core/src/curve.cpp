#include "ecdlp/curve.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "ecdlp/error.hpp"

namespace ecdlp {

Curve::Curve(PrimeModulus q, u64 a, u64 b) : q_(q), a_(q, a), b_(q, b) {
  if (q.value() <= 3) {
    throw ValidationError("short Weierstrass form needs characteristic > 3");
  }
  FieldElement disc = FieldElement(q, 4) * a_.pow(3) + FieldElement(q, 27) * b_ * b_;
  if (disc.is_zero()) {
    throw ValidationError("singular curve: 4a^3 + 27b^2 = 0 mod " + std::to_string(q.value()));
  }
}

FieldElement Curve::rhs(const FieldElement& x) const { return x * x * x + a_ * x + b_; }

bool Curve::contains(u64 x, u64 y) const {
  if (x >= q_.value() || y >= q_.value()) return false;
  FieldElement fy(q_, y);
  return fy * fy == rhs(FieldElement(q_, x));
}

bool Curve::contains(const Point& p) const {
  if (p.x().modulus() != q_) return false;
  if (p.is_identity()) return p.x().is_zero() && p.y().residue() == 1;
  return p.z().residue() == 1 && p.y() * p.y() == rhs(p.x());
}

Point Curve::identity() const {
  return {FieldElement::zero(q_), FieldElement::one(q_), FieldElement::zero(q_)};
}

Point Curve::point(u64 x, u64 y) const {
  if (!contains(x, y)) {
    throw ValidationError("point (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") is not on the curve " + format_curve(*this));
  }
  return {FieldElement(q_, x), FieldElement(q_, y), FieldElement::one(q_)};
}

Point Curve::from_projective(const FieldElement& x, const FieldElement& y,
                             const FieldElement& z) const {
  if (z.is_zero()) {
    // On a Weierstrass cubic the only point with z = 0 is (0 : 1 : 0).
    if (!x.is_zero() || y.is_zero()) throw ValidationError("projective triple is not on the curve");
    return identity();
  }
  FieldElement zi = z.inverse();
  return point((x * zi).residue(), (y * zi).residue());
}

Point Curve::negate(const Point& p) const {
  if (p.is_identity()) return p;
  return {p.x(), -p.y(), p.z()};
}

Point Curve::add(const Point& lhs, const Point& rhs) const {
  if (lhs.is_identity()) return rhs;
  if (rhs.is_identity()) return lhs;
  FieldElement lambda = FieldElement::zero(q_);
  if (lhs.x() == rhs.x()) {
    if ((lhs.y() + rhs.y()).is_zero()) return identity();
    // Tangent: (3x^2 + a) / 2y
    lambda = (FieldElement(q_, 3) * lhs.x() * lhs.x() + a_) / (lhs.y() + lhs.y());
  } else {
    lambda = (rhs.y() - lhs.y()) / (rhs.x() - lhs.x());
  }
  FieldElement x3 = lambda * lambda - lhs.x() - rhs.x();
  FieldElement y3 = lambda * (lhs.x() - x3) - lhs.y();
  return {x3, y3, FieldElement::one(q_)};
}

Point Curve::multiply(const Point& p, u64 k) const {
  Point acc = identity();
  Point base = p;
  while (k != 0) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

GroupSpec::GroupSpec(Curve curve, Point generator, u64 order)
    : curve_(std::move(curve)), generator_(std::move(generator)), order_(order) {
  if (!curve_.contains(generator_)) throw ValidationError("generator is not on the curve");
  if (generator_.is_identity()) throw ValidationError("generator must not be the identity");
  if (!curve_.multiply(generator_, order).is_identity()) {
    throw ValidationError("generator does not have order " + std::to_string(order));
  }
}

Point scalar_mul(const GroupSpec& g, u64 r) {
  return g.curve().multiply(g.generator(), r % g.order().value());
}

u64 group_order(const Curve& c, u64 max_field) {
  const u64 q = c.field().value();
  if (q > max_field) {
    throw BudgetExceeded("point counting by enumeration limited to q <= " + std::to_string(max_field));
  }
  u64 count = 1;
  for (u64 x = 0; x < q; ++x) {
    FieldElement r = c.rhs(FieldElement(c.field(), x));
    if (r.is_zero()) {
      count += 1;
    } else if (r.is_square()) {
      count += 2;
    }
  }
  return count;
}

namespace {

Point first_point(const Curve& c) {
  const PrimeModulus q = c.field();
  for (u64 x = 0; x < q.value(); ++x) {
    if (auto y = c.rhs(FieldElement(q, x)).sqrt()) return c.point(x, y->residue());
  }
  throw InvariantViolation("curve has no affine points");
}

}  // namespace

GroupSpec find_prime_order_curve(PrimeModulus q, u64 order_min, u64 order_max, u64 max_field) {
  const u64 qv = q.value();
  if (qv > max_field) {
    throw BudgetExceeded("curve search limited to q <= " + std::to_string(max_field));
  }
  // Hasse: |#E - (q + 1)| <= 2 sqrt(q).
  const double half_width = 2.0 * std::sqrt(static_cast<double>(qv));
  const double centre = static_cast<double>(qv) + 1.0;
  const u64 lo = std::max<u64>(order_min, static_cast<u64>(std::max(0.0, std::floor(centre - half_width))));
  const u64 hi = std::min<u64>(order_max, static_cast<u64>(std::ceil(centre + half_width)));
  bool any_prime = false;
  for (u64 n = lo; n <= hi && !any_prime; ++n) any_prime = is_prime(n);
  if (!any_prime) {
    throw ValidationError("no prime in [" + std::to_string(order_min) + ", " +
                          std::to_string(order_max) + "] is a possible order over F_" +
                          std::to_string(qv));
  }
  for (u64 a = 0; a < qv; ++a) {
    for (u64 b = 0; b < qv; ++b) {
      FieldElement fa(q, a), fb(q, b);
      if ((FieldElement(q, 4) * fa.pow(3) + FieldElement(q, 27) * fb * fb).is_zero()) continue;
      Curve c(q, a, b);
      u64 n = group_order(c, max_field);
      if (n < order_min || n > order_max || !is_prime(n)) continue;
      return GroupSpec(c, first_point(c), n);
    }
  }
  throw ValidationError("search space exhausted: no prime-order curve over F_" + std::to_string(qv) +
                        " in the requested range");
}

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

u64 parse_u64(std::string_view token) {
  u64 value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ValidationError("expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Curve parse_curve(std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.size() != 3) throw ValidationError("curve must be written as 'q a b'");
  return Curve(PrimeModulus(parse_u64(tokens[0])), parse_u64(tokens[1]), parse_u64(tokens[2]));
}

Point parse_point(const Curve& c, std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.size() == 1 && tokens[0] == kIdentityToken) return c.identity();
  if (tokens.size() != 2) throw ValidationError("point must be written as 'x y' or 'O'");
  return c.point(parse_u64(tokens[0]), parse_u64(tokens[1]));
}

std::string format_curve(const Curve& c) {
  return std::to_string(c.field().value()) + " " + std::to_string(c.a().residue()) + " " +
         std::to_string(c.b().residue());
}

std::string format_point(const Point& p) {
  if (p.is_identity()) return std::string(kIdentityToken);
  return std::to_string(p.x().residue()) + " " + std::to_string(p.y().residue());
}

}  // namespace ecdlp
