#include "oblivsort/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <thread>

#include "oblivsort/errors.hpp"

namespace oblivsort {

namespace {

struct Partial {
  std::uint64_t comparisons = 0;
  std::size_t failures = 0;
  std::vector<std::uint64_t> failing_seeds;
};

void run_trials(std::size_t n, std::size_t trials, const SortConfig& cfg,
                std::uint64_t base_seed, std::size_t first, std::size_t stride, Partial& out) {
  std::vector<Key> a(n);
  for (std::size_t t = first; t < trials; t += stride) {
    const std::uint64_t trial_seed = base_seed + t;
    RandomSource src(trial_seed);
    std::iota(a.begin(), a.end(), Key{0});
    permute_random(std::span(a), src);
    CountingSink sink;
    randomized_shellsort(std::span(a), cfg, src, sink);
    out.comparisons += sink.count;
    if (!std::is_sorted(a.begin(), a.end())) {
      ++out.failures;
      if (out.failing_seeds.size() < kMaxRecordedFailures) {
        out.failing_seeds.push_back(trial_seed);
      }
    }
  }
}

}  // namespace

TrialReport monte_carlo(std::size_t n, std::size_t trials, const SortConfig& cfg_template,
                        std::uint64_t base_seed, unsigned threads) {
  require_supported_length(n);
  validate_config(cfg_template);
  if (trials == 0) {
    throw std::invalid_argument("monte_carlo: trials must be >= 1");
  }

  std::size_t workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, trials);

  const auto start = std::chrono::steady_clock::now();
  std::vector<Partial> partials(workers);
  if (workers == 1) {
    run_trials(n, trials, cfg_template, base_seed, 0, 1, partials[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(run_trials, n, trials, std::cref(cfg_template), base_seed, w, workers,
                        std::ref(partials[w]));
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  TrialReport report;
  report.n = n;
  report.trials = trials;
  report.c_repetitions = cfg_template.c_repetitions;
  report.shuffle_enabled = cfg_template.shuffle_enabled;
  report.base_seed = base_seed;
  report.wall_time_s = elapsed.count();
  for (auto& p : partials) {
    report.failures += p.failures;
    report.total_comparisons += p.comparisons;
    report.failing_seeds.insert(report.failing_seeds.end(), p.failing_seeds.begin(),
                                p.failing_seeds.end());
  }
  std::sort(report.failing_seeds.begin(), report.failing_seeds.end());
  if (report.failing_seeds.size() > kMaxRecordedFailures) {
    report.failing_seeds.resize(kMaxRecordedFailures);
  }
  return report;
}

std::uint64_t count_comparisons(std::size_t n, const SortConfig& cfg) {
  std::vector<Key> scratch(n);
  std::iota(scratch.begin(), scratch.end(), Key{0});
  CountingSink sink;
  randomized_shellsort(std::span(scratch), cfg, sink);
  return sink.count;
}

std::string csv_header() {
  return "n,trials,c,shuffle,seed,failures,comparisons_per_trial,wall_time_s";
}

std::string csv_row(const TrialReport& report) {
  const std::uint64_t per_trial = report.trials ? report.total_comparisons / report.trials : 0;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%zu,%zu,%d,%d,0x%016llx,%zu,%llu,%.6f", report.n, report.trials,
                report.c_repetitions, report.shuffle_enabled ? 1 : 0,
                static_cast<unsigned long long>(report.base_seed), report.failures,
                static_cast<unsigned long long>(per_trial), report.wall_time_s);
  return buf;
}

std::vector<Key> read_keys(std::istream& is, const std::string& source) {
  std::vector<Key> keys;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string_view view(line);
    while (!view.empty() && (view.back() == '\r' || view.back() == ' ' || view.back() == '\t')) {
      view.remove_suffix(1);
    }
    while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) {
      view.remove_prefix(1);
    }
    Key value = 0;
    const char* first = view.data();
    const char* last = first + view.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (view.empty() || ec != std::errc{} || ptr != last) {
      throw ParseError(source, lineno, "expected a 64-bit integer, got \"" + line + "\"");
    }
    keys.push_back(value);
  }
  return keys;
}

std::vector<Key> read_keys_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) {
    throw std::runtime_error("cannot open " + path.string() + " for reading");
  }
  return read_keys(is, path.string());
}

void write_keys(std::ostream& os, std::span<const Key> keys) {
  for (const Key k : keys) {
    os << k << '\n';
  }
}

void write_keys_file(const std::filesystem::path& path, std::span<const Key> keys) {
  std::ofstream os(path);
  if (!os) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  write_keys(os, keys);
  os.flush();
  if (!os) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

std::size_t pad_to_power_of_two(std::vector<Key>& keys) {
  const std::size_t n = keys.size();
  std::size_t padded = 1;
  while (padded < n) {
    padded <<= 1;
  }
  keys.resize(padded, std::numeric_limits<Key>::max());
  return n;
}

bool sort_file(const std::filesystem::path& input, const std::filesystem::path& output,
               const SortConfig& cfg, bool pad, unsigned retries) {
  validate_config(cfg);
  std::vector<Key> original = read_keys_file(input);
  std::size_t keep = original.size();
  if (!is_supported_length(original.size())) {
    if (!pad) {
      throw UnsupportedLengthError(original.size());
    }
    keep = pad_to_power_of_two(original);
  }
  for (unsigned attempt = 0; attempt <= retries; ++attempt) {
    std::vector<Key> work = original;
    SortConfig attempt_cfg = cfg;
    attempt_cfg.seed = cfg.seed + attempt;
    randomized_shellsort(std::span(work), attempt_cfg);
    if (std::is_sorted(work.begin(), work.end())) {
      work.resize(keep);
      write_keys_file(output, work);
      return true;
    }
  }
  return false;
}

}  // namespace oblivsort
