#include "ecdlp/dlp_oracles.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "ecdlp/error.hpp"

namespace ecdlp {

namespace {

// Injective on normalized points: identity maps past every affine code.
unsigned __int128 encode(const Point& p) {
  const unsigned __int128 q = p.x().modulus().value();
  if (p.is_identity()) return q * q;
  return static_cast<unsigned __int128>(p.x().residue()) * q + p.y().residue();
}

struct Hash128 {
  std::size_t operator()(unsigned __int128 v) const noexcept {
    const auto lo = static_cast<std::uint64_t>(v);
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

void check_target(const GroupSpec& group, const Point& target) {
  if (!group.curve().contains(target)) throw ValidationError("target point is not on the curve");
}

}  // namespace

u64 solve_bsgs(const GroupSpec& group, const Point& target, u64 max_order) {
  check_target(group, target);
  const u64 p = group.order().value();
  if (p > max_order) throw BudgetExceeded("BSGS limited to group order <= " + std::to_string(max_order));
  const Curve& c = group.curve();

  u64 steps = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(p))));
  while (steps * steps < p) ++steps;

  std::unordered_map<unsigned __int128, u64, Hash128> baby;
  baby.reserve(steps);
  Point cur = c.identity();
  for (u64 j = 0; j < steps; ++j) {
    baby.emplace(encode(cur), j);
    cur = c.add(cur, group.generator());
  }
  const Point giant = c.negate(c.multiply(group.generator(), steps));
  Point gamma = target;
  for (u64 i = 0; i <= steps; ++i) {
    if (auto it = baby.find(encode(gamma)); it != baby.end()) {
      return (i * steps + it->second) % p;
    }
    gamma = c.add(gamma, giant);
  }
  throw ValidationError("target is not in the subgroup generated by the generator");
}

u64 solve_exhaustive_dlp(const GroupSpec& group, const Point& target, u64 max_order) {
  check_target(group, target);
  const u64 p = group.order().value();
  if (p > max_order) throw BudgetExceeded("exhaustive DLP limited to group order <= " + std::to_string(max_order));
  Point cur = group.curve().identity();
  for (u64 r = 0; r < p; ++r) {
    if (cur == target) return r;
    cur = group.curve().add(cur, group.generator());
  }
  throw ValidationError("target is not in the subgroup generated by the generator");
}

}  // namespace ecdlp
