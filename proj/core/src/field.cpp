#include "ecdlp/field.hpp"

#include <array>
#include <string>

#include "ecdlp/error.hpp"

namespace ecdlp {

namespace {
using u128 = unsigned __int128;
constexpr u64 kSmall = u64{1} << 32;
}  // namespace

u64 add_mod(u64 a, u64 b, u64 m) noexcept {
  u64 s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

u64 sub_mod(u64 a, u64 b, u64 m) noexcept { return a >= b ? a - b : a + (m - b); }

u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
  if (a < kSmall && b < kSmall) return (a * b) % m;
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<u64> inv_mod(u64 a, u64 m) noexcept {
  // Signed 128-bit Bezout coefficients keep every 64-bit modulus in range.
  using i128 = __int128;
  i128 t = 0, new_t = 1;
  i128 r = m, new_r = a % m;
  while (new_r != 0) {
    i128 quotient = r / new_r;
    i128 tmp = t - quotient * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quotient * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 w : kWitnesses) {
    u64 x = pow_mod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(u64 value) : value_(value) {
  if (!is_prime(value)) {
    throw ValidationError("modulus " + std::to_string(value) + " is not prime");
  }
}

FieldElement FieldElement::from_signed(PrimeModulus modulus, std::int64_t value) noexcept {
  const u64 q = modulus.value();
  if (value >= 0) return {modulus, static_cast<u64>(value)};
  // Magnitude of a negative int64 always fits in u64.
  u64 magnitude = static_cast<u64>(-(value + 1)) + 1;
  return {modulus, sub_mod(0, magnitude % q, q)};
}

void FieldElement::check_same_modulus(const FieldElement& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw ModulusMismatch("field elements from F_" + std::to_string(modulus_.value()) +
                          " and F_" + std::to_string(rhs.modulus_.value()));
  }
}

FieldElement FieldElement::operator-() const noexcept {
  return {modulus_, sub_mod(0, residue_, modulus_.value())};
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same_modulus(rhs);
  residue_ = add_mod(residue_, rhs.residue_, modulus_.value());
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same_modulus(rhs);
  residue_ = sub_mod(residue_, rhs.residue_, modulus_.value());
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same_modulus(rhs);
  residue_ = mul_mod(residue_, rhs.residue_, modulus_.value());
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same_modulus(rhs);
  return *this *= rhs.inverse();
}

FieldElement FieldElement::inverse() const {
  auto r = inv_mod(residue_, modulus_.value());
  if (!r) throw ZeroInversion("zero has no inverse in F_" + std::to_string(modulus_.value()));
  return {modulus_, *r};
}

FieldElement FieldElement::pow(u64 exponent) const noexcept {
  return {modulus_, pow_mod(residue_, exponent, modulus_.value())};
}

bool FieldElement::is_square() const noexcept {
  const u64 q = modulus_.value();
  if (residue_ == 0 || q == 2) return true;
  return pow_mod(residue_, (q - 1) / 2, q) == 1;
}

std::optional<FieldElement> FieldElement::sqrt() const {
  const u64 q = modulus_.value();
  if (residue_ == 0 || q == 2) return *this;
  if (!is_square()) return std::nullopt;

  u64 root;
  if (q % 4 == 3) {
    root = pow_mod(residue_, (q + 1) / 4, q);
  } else {
    // Tonelli-Shanks: q - 1 = odd * 2^s.
    u64 odd = q - 1;
    unsigned s = 0;
    while ((odd & 1) == 0) {
      odd >>= 1;
      ++s;
    }
    u64 z = 2;
    while (pow_mod(z, (q - 1) / 2, q) != q - 1) ++z;
    u64 c = pow_mod(z, odd, q);
    u64 t = pow_mod(residue_, odd, q);
    root = pow_mod(residue_, (odd + 1) / 2, q);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      u64 t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, q);
        ++i;
      }
      u64 b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, q);
      root = mul_mod(root, b, q);
      c = mul_mod(b, b, q);
      t = mul_mod(t, c, q);
      m = i;
    }
  }
  u64 other = q - root;
  return FieldElement{modulus_, root < other ? root : other};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.residue(); }

}  // namespace ecdlp
