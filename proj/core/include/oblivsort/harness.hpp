#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "oblivsort/sort.hpp"

namespace oblivsort {

/// Aggregate statistics from a Monte-Carlo run. failures counts trials whose
/// output was unsorted; total_comparisons always equals trials times the
/// comparator budget for (n, c), since the budget is seed-independent.
struct TrialReport {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  int c_repetitions = 4;
  bool shuffle_enabled = true;
  std::uint64_t base_seed = 0;
  std::uint64_t total_comparisons = 0;
  double wall_time_s = 0.0;
  /// Seeds of failing trials (capped), so any failure replays in isolation.
  std::vector<std::uint64_t> failing_seeds;
};

/// Cap on TrialReport::failing_seeds.
inline constexpr std::size_t kMaxRecordedFailures = 16;

/// Runs `trials` independent sorts. Trial t seeds one RandomSource with
/// base_seed + t, shuffles 0..n-1 into a fresh input with it, then sorts with
/// the same source, so the whole trial replays from (base_seed, t).
/// cfg_template supplies c_repetitions and shuffle_enabled; its seed is
/// unused. threads = 0 picks the hardware concurrency.
TrialReport monte_carlo(std::size_t n, std::size_t trials, const SortConfig& cfg_template,
                        std::uint64_t base_seed, unsigned threads = 0);

/// Exact number of compare-exchange issuances of one run, via a counting
/// sink. Independent of seed and shuffle flag.
std::uint64_t count_comparisons(std::size_t n, const SortConfig& cfg);

/// CSV schema: n,trials,c,shuffle,seed,failures,comparisons_per_trial,wall_time_s.
std::string csv_header();
std::string csv_row(const TrialReport& report);

/// Newline-delimited decimal 64-bit signed keys. Readers report the 1-based
/// line number on parse failure.
std::vector<Key> read_keys(std::istream& is, const std::string& source);
std::vector<Key> read_keys_file(const std::filesystem::path& path);
void write_keys(std::ostream& os, std::span<const Key> keys);
void write_keys_file(const std::filesystem::path& path, std::span<const Key> keys);

/// Pads to the next power of two with maximal sentinel keys; sorting then
/// truncating to the original length yields the sorted original multiset,
/// also when the input itself contains maximal keys.
std::size_t pad_to_power_of_two(std::vector<Key>& keys);

/// Sorts a key file. Attempts the sort up to 1 + retries times (attempt k
/// reseeds with cfg.seed + k), verifies sortedness before writing, and never
/// writes unsorted data: returns true with the output written, or false with
/// no output file. pad enables the sentinel wrapper for non-power-of-two
/// lengths; without it such lengths raise UnsupportedLengthError. Parse and
/// I/O problems throw.
bool sort_file(const std::filesystem::path& input, const std::filesystem::path& output,
               const SortConfig& cfg, bool pad, unsigned retries = 0);

}  // namespace oblivsort
