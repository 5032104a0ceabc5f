#pragma once

#include "ecdlp/curve.hpp"

namespace ecdlp {

inline constexpr u64 kBsgsMaxOrder = u64{1} << 32;
inline constexpr u64 kExhaustiveDlpMaxOrder = 100'000;

// The unique m in [0, p) with m * generator = target, by baby-step giant-step.
// Throws BudgetExceeded above max_order, ValidationError if target is outside <generator>.
u64 solve_bsgs(const GroupSpec& group, const Point& target, u64 max_order = kBsgsMaxOrder);

// Same answer by a linear scan over r * generator.
u64 solve_exhaustive_dlp(const GroupSpec& group, const Point& target,
                         u64 max_order = kExhaustiveDlpMaxOrder);

}  // namespace ecdlp
