#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace oblivsort {

/// Seed used when the caller does not supply one. Fixed so that "no seed
/// given" still produces reproducible runs.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED5EED5EED5EEDULL;

/// Deterministic, seedable source of uniform integers.
///
/// The raw stream is splitmix64: the sequence of 64-bit outputs is a pure
/// function of the seed and the call count, so traces derived from it are
/// bit-identical across runs and platforms. Bounded draws use rejection
/// sampling (never a bare modulo), so they are exactly uniform.
///
/// A RandomSource is single-owner, stateful and cheap to copy for forking a
/// deterministic replay; it must not be shared between concurrent tasks.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = kDefaultSeed) noexcept
      : state_(seed), seed_(seed) {}

  /// Seed this source was created with, retained for reporting.
  std::uint64_t seed() const noexcept { return seed_; }

  /// Next raw word. Advances state by the splitmix64 recurrence; all
  /// arithmetic is modulo 2^64.
  std::uint64_t next_u64() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound).
  ///
  /// Draws a raw word and redraws while it falls beyond the largest multiple
  /// of bound, i.e. while draw >= 2^64 - (2^64 mod bound); the survivor is
  /// reduced mod bound. Consumes a variable but (per seed) deterministic
  /// number of raw words, at least one -- also for bound 1.
  std::uint64_t next_int(std::uint64_t bound) {
    if (bound == 0) {
      throw std::invalid_argument("RandomSource::next_int: bound must be positive");
    }
    const std::uint64_t rem = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t draw = next_u64();
    while (draw > ~rem) {  // draw >= 2^64 - rem; never true when rem == 0
      draw = next_u64();
    }
    return draw % bound;
  }

 private:
  std::uint64_t state_;
  std::uint64_t seed_;
};

/// Parses a 64-bit seed given as decimal or 0x-prefixed hexadecimal.
/// Returns nullopt on malformed or out-of-range input.
std::optional<std::uint64_t> parse_seed(std::string_view text);

}  // namespace oblivsort
