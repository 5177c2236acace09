#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oblivsort/errors.hpp"
#include "oblivsort/prng.hpp"

namespace oblivsort {

/// Key type of the reference path. Any totally ordered key would do; the
/// algorithm only ever compares and swaps.
using Key = std::int64_t;

/// Tunables for one sort run.
struct SortConfig {
  /// Number of region compare-exchange repetitions per region pair.
  int c_repetitions = 4;
  /// With the shuffle disabled the mate matching stays the identity and the
  /// run degenerates to a deterministic Shellsort that consumes no randomness.
  bool shuffle_enabled = true;
  std::uint64_t seed = kDefaultSeed;

  friend bool operator==(const SortConfig&, const SortConfig&) = default;
};

inline void validate_config(const SortConfig& cfg) {
  if (cfg.c_repetitions < 1) {
    throw std::invalid_argument("SortConfig: c_repetitions must be >= 1");
  }
}

/// Supported array lengths: 0, 1, or a power of two.
inline bool is_supported_length(std::size_t n) noexcept {
  return n <= 1 || (n & (n - 1)) == 0;
}

inline void require_supported_length(std::size_t n) {
  if (!is_supported_length(n)) throw UnsupportedLengthError(n);
}

/// A sink observes every compare-exchange the sort issues, in call order,
/// invoked after the conditional swap has been applied. The (i, j) pair is
/// exactly what compare_exchange was called with; it never depends on the
/// array contents, which is what makes the sort data-oblivious.
template <class S>
concept ComparatorSinkType = requires(S s, std::span<const Key> a, std::size_t i, std::size_t j) {
  s.on_compare_exchange(a, i, j);
};

/// Default sink: the compare-exchange is applied to the array and nothing
/// else happens.
struct ApplySink {
  void on_compare_exchange(std::span<const Key>, std::size_t, std::size_t) const noexcept {}
};

/// Counts issuances without touching anything else.
struct CountingSink {
  std::uint64_t count = 0;
  void on_compare_exchange(std::span<const Key>, std::size_t, std::size_t) noexcept { ++count; }
};

/// Swaps a[i] and a[j].
inline void exchange(std::span<Key> a, std::size_t i, std::size_t j) {
  if (i >= a.size() || j >= a.size()) {
    throw std::out_of_range("exchange: index out of range");
  }
  std::swap(a[i], a[j]);
}

/// Conditional swap leaving the smaller key at the smaller index: swaps when
/// i < j and a[i] > a[j], or when i > j and a[i] < a[j]. Equal keys and
/// i == j never swap. Reports (i, j) to the sink afterwards.
template <ComparatorSinkType S>
void compare_exchange(std::span<Key> a, std::size_t i, std::size_t j, S& sink) {
  if (i >= a.size() || j >= a.size()) {
    throw std::out_of_range("compare_exchange: index out of range");
  }
  if ((i < j && a[i] > a[j]) || (i > j && a[i] < a[j])) {
    std::swap(a[i], a[j]);
  }
  sink.on_compare_exchange(a, i, j);
}

inline void compare_exchange(std::span<Key> a, std::size_t i, std::size_t j) {
  ApplySink sink;
  compare_exchange(a, i, j, sink);
}

/// Knuth shuffle: for i = 0..n-1 in order, swap position i with a uniform
/// position in [i, n). Draws exactly one bounded value per position,
/// including the final next_int(1).
template <class T>
void permute_random(std::span<T> a, RandomSource& src) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(src.next_int(n - i));
    std::swap(a[i], a[j]);
  }
}

namespace detail {

/// Region compare-exchange with caller-validated arguments and an external
/// mate scratch buffer of exactly `offset` entries.
template <ComparatorSinkType S>
void compare_regions_prevalidated(std::span<Key> a, std::size_t s, std::size_t t,
                                  std::size_t offset, RandomSource& src,
                                  const SortConfig& cfg, S& sink,
                                  std::span<std::size_t> mate) {
  for (int rep = 0; rep < cfg.c_repetitions; ++rep) {
    std::iota(mate.begin(), mate.end(), std::size_t{0});
    if (cfg.shuffle_enabled) {
      permute_random(mate, src);
    }
    for (std::size_t i = 0; i < offset; ++i) {
      compare_exchange(a, s + i, t + mate[i], sink);
    }
  }
}

}  // namespace detail

/// Compare-exchanges two disjoint regions [s, s+offset) and [t, t+offset),
/// cfg.c_repetitions times. Each repetition resets the mate matching to the
/// identity, shuffles it when enabled, and issues one compare-exchange per
/// matched pair: exactly c_repetitions * offset issuances in total.
template <ComparatorSinkType S>
void compare_regions(std::span<Key> a, std::size_t s, std::size_t t, std::size_t offset,
                     RandomSource& src, const SortConfig& cfg, S& sink) {
  validate_config(cfg);
  if (offset == 0) {
    throw std::invalid_argument("compare_regions: offset must be positive");
  }
  const std::size_t n = a.size();
  if (offset > n || s > n - offset || t > n - offset) {
    throw std::out_of_range("compare_regions: region out of range");
  }
  if (s < t ? t - s < offset : s - t < offset) {
    throw std::invalid_argument("compare_regions: regions overlap");
  }
  std::vector<std::size_t> mate(offset);
  detail::compare_regions_prevalidated(a, s, t, offset, src, cfg, sink, std::span(mate));
}

inline void compare_regions(std::span<Key> a, std::size_t s, std::size_t t, std::size_t offset,
                            RandomSource& src, const SortConfig& cfg) {
  ApplySink sink;
  compare_regions(a, s, t, offset, src, cfg, sink);
}

/// Randomized Shellsort over a power-of-two length, drawing mate permutations
/// from the given source (cfg.seed is ignored by this overload). For each
/// offset n/2, n/4, ..., 1 it runs the six region passes; the sequence of
/// issued index pairs depends only on (n, cfg, source stream), never on the
/// keys. The output holds the input multiset and is sorted with high
/// probability; callers needing certainty check sortedness afterwards.
template <ComparatorSinkType S>
void randomized_shellsort(std::span<Key> a, const SortConfig& cfg, RandomSource& src, S& sink) {
  validate_config(cfg);
  require_supported_length(a.size());
  const auto n = static_cast<std::int64_t>(a.size());
  std::vector<std::size_t> mate(static_cast<std::size_t>(n / 2));
  const auto region = [&](std::int64_t s, std::int64_t t, std::int64_t offset) {
    detail::compare_regions_prevalidated(
        a, static_cast<std::size_t>(s), static_cast<std::size_t>(t),
        static_cast<std::size_t>(offset), src, cfg, sink,
        std::span(mate).first(static_cast<std::size_t>(offset)));
  };
  for (std::int64_t offset = n / 2; offset > 0; offset /= 2) {
    for (std::int64_t i = 0; i < n - offset; i += offset) {  // compare-exchange up
      region(i, i + offset, offset);
    }
    for (std::int64_t i = n - offset; i >= offset; i -= offset) {  // compare-exchange down
      region(i - offset, i, offset);
    }
    for (std::int64_t i = 0; i < n - 3 * offset; i += offset) {  // compare 3 hops up
      region(i, i + 3 * offset, offset);
    }
    for (std::int64_t i = 0; i < n - 2 * offset; i += offset) {  // compare 2 hops up
      region(i, i + 2 * offset, offset);
    }
    for (std::int64_t i = 0; i < n; i += 2 * offset) {  // compare odd-even regions
      region(i, i + offset, offset);
    }
    for (std::int64_t i = offset; i < n - offset; i += 2 * offset) {  // compare even-odd regions
      region(i, i + offset, offset);
    }
  }
}

template <ComparatorSinkType S>
void randomized_shellsort(std::span<Key> a, const SortConfig& cfg, S& sink) {
  RandomSource src(cfg.seed);
  randomized_shellsort(a, cfg, src, sink);
}

inline void randomized_shellsort(std::span<Key> a, const SortConfig& cfg) {
  ApplySink sink;
  randomized_shellsort(a, cfg, sink);
}

}  // namespace oblivsort
