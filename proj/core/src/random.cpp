#include "ecdlp/random.hpp"

#include "ecdlp/error.hpp"

namespace ecdlp {

namespace {

std::seed_seq make_seq(std::initializer_list<std::uint64_t> words) {
  std::vector<std::uint32_t> parts;
  for (std::uint64_t w : words) {
    parts.push_back(static_cast<std::uint32_t>(w));
    parts.push_back(static_cast<std::uint32_t>(w >> 32));
  }
  return std::seed_seq(parts.begin(), parts.end());
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  auto seq = make_seq({seed});
  engine_.seed(seq);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
  // Tag word keeps substreams apart from Rng(seed).
  auto seq = make_seq({seed, index, 0x9e3779b97f4a7c15ULL});
  return Rng(seq);
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo >= hi) throw ValidationError("empty sampling range");
  const std::uint64_t span = hi - lo;
  // Largest multiple of span that fits; draws above it are rejected.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return lo + x % span;
}

}  // namespace ecdlp
