#pragma once

#include <cstdint>
#include <random>

namespace ecdlp {

/// Seedable 64-bit generator (mt19937_64) with reproducible substreams.
///
/// substream(seed, index) depends only on its two arguments, so work split
/// across threads by index reproduces a serial run exactly. Bounded draws
/// use rejection sampling rather than std::uniform_int_distribution, whose
/// output differs between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  static Rng substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  // Uniform in [lo, hi); requires lo < hi.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  explicit Rng(std::seed_seq& seq) : engine_(seq) {}

  std::mt19937_64 engine_;
};

}  // namespace ecdlp
