#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oblivsort/sort.hpp"

namespace oblivsort {

/// One wire of a comparator network: place the smaller key at lo, the larger
/// at hi. Invariant: lo < hi.
struct Comparator {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  friend bool operator==(const Comparator&, const Comparator&) = default;
};

/// The exact sequence of comparators one sort run issues. For a fixed
/// (n, config) the pair list is a pure function of the configuration -- never
/// of the array contents -- which is what record_trace certifies.
struct Trace {
  std::size_t n = 0;
  SortConfig config;
  std::vector<Comparator> pairs;

  std::uint64_t seed() const noexcept { return config.seed; }
  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Records issued pairs. Every call site of the sort presents the smaller
/// base index first and mate offsets stay inside their region, so recorded
/// pairs must already satisfy i < j; the recorder fails loudly instead of
/// normalizing if that ever breaks.
struct RecordingSink {
  std::vector<Comparator> pairs;

  void on_compare_exchange(std::span<const Key>, std::size_t i, std::size_t j) {
    if (i >= j) {
      throw std::logic_error("RecordingSink: issued pair violates lo < hi");
    }
    pairs.push_back(Comparator{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  }
};

/// Runs the sort over a scratch array and returns the issued pair sequence.
Trace record_trace(std::size_t n, const SortConfig& cfg);

/// True iff the pair sequence is identical across `trials` runs on distinct
/// random input arrays under the same (n, cfg).
bool assert_oblivious(std::size_t n, const SortConfig& cfg, std::size_t trials);

/// The comparator network induced by a fixed-seed run; replaying it on any
/// length-n input reproduces the sort's output for that configuration.
std::vector<Comparator> extract_network(std::size_t n, const SortConfig& cfg);

/// Applies each comparator in order: swap iff a[lo] > a[hi].
void apply_network(std::span<const Comparator> net, std::span<Key> a);

/// Largest n verified exhaustively (2^n binary inputs); beyond it callers
/// fall back to sampling.
inline constexpr std::size_t kZeroOneExhaustiveBound = 20;

/// Exhaustive 0-1 check: empty result iff the network sorts all 2^n binary
/// vectors, otherwise the lexicographically least failing vector.
std::optional<std::vector<Key>> verify_zero_one(
    std::span<const Comparator> net, std::size_t n,
    std::size_t exhaustive_bound = kZeroOneExhaustiveBound);

/// Randomized 0-1 check over `trials` uniform binary vectors, for n beyond
/// the exhaustive bound.
struct SampleReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<std::vector<Key>> first_counterexample;
};

SampleReport sample_zero_one(std::span<const Comparator> net, std::size_t n,
                             std::size_t trials, std::uint64_t seed);

/// Network file: first line "n <length>", then one "lo hi" pair per line in
/// application order. Trace files carry an extra second line
/// "seed <hex> c <int> shuffle <0|1>".
struct NetworkFile {
  std::size_t n = 0;
  std::vector<Comparator> comparators;
};

void write_network(std::ostream& os, std::span<const Comparator> net, std::size_t n);
void write_network_file(const std::filesystem::path& path, std::span<const Comparator> net,
                        std::size_t n);
NetworkFile read_network(std::istream& is, const std::string& source);
NetworkFile read_network_file(const std::filesystem::path& path);

void write_trace(std::ostream& os, const Trace& trace);
void write_trace_file(const std::filesystem::path& path, const Trace& trace);
Trace read_trace(std::istream& is, const std::string& source);
Trace read_trace_file(const std::filesystem::path& path);

}  // namespace oblivsort
