#include "ecdlp/veronese.hpp"

#include "ecdlp/error.hpp"

namespace ecdlp {

MonomialBasis::MonomialBasis(unsigned degree) : degree_(degree) {
  if (degree == 0) throw ValidationError("monomial degree must be at least 1");
  exponents_.reserve(dimension(degree));
  for (unsigned i = degree + 1; i-- > 0;) {
    for (unsigned j = degree - i + 1; j-- > 0;) {
      exponents_.push_back({i, j, degree - i - j});
    }
  }
}

namespace {

std::vector<u64> powers(u64 base, unsigned n, u64 q) {
  std::vector<u64> out(n + 1);
  out[0] = 1 % q;
  for (unsigned i = 1; i <= n; ++i) out[i] = mul_mod(out[i - 1], base, q);
  return out;
}

void fill(const MonomialBasis& basis, u64 x, u64 y, u64 z, u64 q, std::span<u64> out) {
  const unsigned n = basis.degree();
  auto px = powers(x, n, q), py = powers(y, n, q), pz = powers(z, n, q);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    const Monomial& m = basis[t];
    out[t] = mul_mod(mul_mod(px[m.x], py[m.y], q), pz[m.z], q);
  }
}

}  // namespace

MonomialRow evaluate_monomials(const MonomialBasis& basis, const FieldElement& x,
                               const FieldElement& y, const FieldElement& z) {
  const PrimeModulus q = x.modulus();
  if (y.modulus() != q || z.modulus() != q) throw ModulusMismatch("coordinates over different fields");
  std::vector<u64> raw(basis.size());
  fill(basis, x.residue(), y.residue(), z.residue(), q.value(), raw);
  MonomialRow row;
  row.reserve(raw.size());
  for (u64 v : raw) row.emplace_back(q, v);
  return row;
}

MonomialRow evaluate_row(const MonomialBasis& basis, const Point& p) {
  return evaluate_monomials(basis, p.x(), p.y(), p.z());
}

void evaluate_row_into(const MonomialBasis& basis, const Point& p, std::span<u64> out) {
  if (out.size() != basis.size()) throw ValidationError("row buffer has the wrong length");
  fill(basis, p.x().residue(), p.y().residue(), p.z().residue(), p.x().modulus().value(), out);
}

}  // namespace ecdlp
