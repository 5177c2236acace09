// Command-line front end: sorting, trace/network extraction, 0-1
// verification, and Monte-Carlo failure-rate experiments.
//
// Exit codes: 0 success, 1 contract or parse error, 2 sorting failure
// detected, 3 verification found a counterexample.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oblivsort/errors.hpp"
#include "oblivsort/harness.hpp"
#include "oblivsort/network.hpp"
#include "oblivsort/prng.hpp"
#include "oblivsort/sort.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitContractError = 1;
constexpr int kExitSortFailure = 2;
constexpr int kExitCounterexample = 3;

std::uint64_t seed_from_text(const std::string& text) {
  const auto seed = oblivsort::parse_seed(text);
  if (!seed) {
    throw std::invalid_argument("invalid seed \"" + text +
                                "\": expected decimal or 0x-prefixed hex");
  }
  return *seed;
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void print_vector_line(const char* label, const std::vector<oblivsort::Key>& v) {
  std::cout << label;
  for (const auto k : v) {
    std::cout << ' ' << k;
  }
  std::cout << '\n';
}

struct SortArgs {
  std::string input;
  std::string output;
  std::string seed_text;
  int c = 4;
  bool deterministic = false;
  bool pad = false;
  bool random_seed = false;
  unsigned retries = 0;
};

struct TraceArgs {
  std::size_t n = 0;
  std::string seed_text;
  int c = 4;
  bool deterministic = false;
  std::string output;
};

struct VerifyArgs {
  std::string network;
  std::size_t samples = 100000;
  std::string seed_text;
};

struct RateArgs {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::string seed_text;
  int c = 4;
  bool deterministic = false;
  unsigned threads = 0;
};

struct BenchArgs {
  std::vector<std::size_t> sizes;
  std::size_t trials = 1000;
  std::string seed_text;
  std::vector<int> cs = {4};
  bool deterministic = false;
  unsigned threads = 0;
};

oblivsort::SortConfig make_config(const std::string& seed_text, int c, bool deterministic) {
  oblivsort::SortConfig cfg;
  cfg.c_repetitions = c;
  cfg.shuffle_enabled = !deterministic;
  cfg.seed = seed_text.empty() ? oblivsort::kDefaultSeed : seed_from_text(seed_text);
  return cfg;
}

int run_sort(const SortArgs& args) {
  oblivsort::SortConfig cfg = make_config(args.seed_text, args.c, args.deterministic);
  if (args.random_seed) {
    cfg.seed = entropy_seed();
    std::fprintf(stderr, "seed 0x%016llx\n", static_cast<unsigned long long>(cfg.seed));
  }
  if (oblivsort::sort_file(args.input, args.output, cfg, args.pad, args.retries)) {
    return kExitOk;
  }
  std::fprintf(stderr,
               "sort failed to produce sorted output after %u attempt(s); nothing written\n",
               args.retries + 1);
  return kExitSortFailure;
}

int run_trace(const TraceArgs& args) {
  const auto cfg = make_config(args.seed_text, args.c, args.deterministic);
  const auto trace = oblivsort::record_trace(args.n, cfg);
  if (args.output.empty()) {
    oblivsort::write_trace(std::cout, trace);
  } else {
    oblivsort::write_trace_file(args.output, trace);
  }
  return kExitOk;
}

int run_network(const TraceArgs& args) {
  const auto cfg = make_config(args.seed_text, args.c, args.deterministic);
  const auto net = oblivsort::extract_network(args.n, cfg);
  oblivsort::write_network_file(args.output, net, args.n);
  return kExitOk;
}

int run_verify(const VerifyArgs& args) {
  const auto file = oblivsort::read_network_file(args.network);
  if (file.n <= oblivsort::kZeroOneExhaustiveBound) {
    const auto counterexample = oblivsort::verify_zero_one(file.comparators, file.n);
    if (!counterexample) {
      std::printf("ok: sorts all %llu binary inputs (n=%zu, %zu comparators)\n",
                  static_cast<unsigned long long>(1ULL << file.n), file.n,
                  file.comparators.size());
      return kExitOk;
    }
    print_vector_line("counterexample:", *counterexample);
    return kExitCounterexample;
  }
  const std::uint64_t seed =
      args.seed_text.empty() ? oblivsort::kDefaultSeed : seed_from_text(args.seed_text);
  const auto report =
      oblivsort::sample_zero_one(file.comparators, file.n, args.samples, seed);
  if (report.failures == 0) {
    // Rule of three: zero failures in N samples bounds the per-input failure
    // rate by 3/N at 95% confidence.
    std::printf("ok: no counterexample in %zu sampled binary inputs (n=%zu; "
                "failure rate < %.2e at 95%% confidence)\n",
                report.trials, file.n, 3.0 / static_cast<double>(report.trials));
    return kExitOk;
  }
  std::printf("failures: %zu of %zu samples\n", report.failures, report.trials);
  print_vector_line("counterexample:", *report.first_counterexample);
  return kExitCounterexample;
}

int run_failure_rate(const RateArgs& args) {
  const auto cfg = make_config(args.seed_text, args.c, args.deterministic);
  const auto report = oblivsort::monte_carlo(args.n, args.trials, cfg, cfg.seed, args.threads);
  std::cout << oblivsort::csv_header() << '\n' << oblivsort::csv_row(report) << '\n';
  for (const auto seed : report.failing_seeds) {
    std::fprintf(stderr, "failing trial seed 0x%016llx\n",
                 static_cast<unsigned long long>(seed));
  }
  return kExitOk;
}

int run_bench(const BenchArgs& args) {
  const std::uint64_t base =
      args.seed_text.empty() ? oblivsort::kDefaultSeed : seed_from_text(args.seed_text);
  std::cout << oblivsort::csv_header() << '\n';
  for (const auto n : args.sizes) {
    for (const auto c : args.cs) {
      oblivsort::SortConfig cfg;
      cfg.c_repetitions = c;
      cfg.shuffle_enabled = !args.deterministic;
      cfg.seed = base;
      const auto report = oblivsort::monte_carlo(n, args.trials, cfg, base, args.threads);
      std::cout << oblivsort::csv_row(report) << '\n';
    }
  }
  return kExitOk;
}

int run_count(std::size_t n, int c, bool deterministic) {
  oblivsort::SortConfig cfg;
  cfg.c_repetitions = c;
  cfg.shuffle_enabled = !deterministic;
  std::cout << oblivsort::count_comparisons(n, cfg) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randomized Shellsort: data-oblivious sorting, comparator networks, and "
               "failure-rate experiments"};
  app.require_subcommand(1);

  SortArgs sort_args;
  auto* sort_cmd = app.add_subcommand("sort", "Sort a file of newline-delimited integers");
  sort_cmd->add_option("input", sort_args.input, "input file")->required();
  sort_cmd->add_option("output", sort_args.output, "output file")->required();
  sort_cmd->add_option("--seed", sort_args.seed_text, "seed (decimal or 0x hex)");
  sort_cmd->add_option("--c", sort_args.c, "region compare-exchange repetitions")
      ->check(CLI::PositiveNumber);
  sort_cmd->add_flag("--deterministic", sort_args.deterministic,
                     "disable the mate shuffle (deterministic Shellsort)");
  sort_cmd->add_flag("--pad", sort_args.pad,
                     "pad non-power-of-two lengths with sentinels, sort, truncate");
  sort_cmd->add_flag("--random-seed", sort_args.random_seed,
                     "draw the seed from system entropy (printed to stderr)");
  sort_cmd->add_option("--retries", sort_args.retries,
                       "extra reseeded attempts if the output comes out unsorted");

  TraceArgs trace_args;
  auto* trace_cmd =
      app.add_subcommand("trace", "Record the comparator trace of one sort run");
  trace_cmd->add_option("--n", trace_args.n, "array length (power of two)")->required();
  trace_cmd->add_option("--seed", trace_args.seed_text, "seed (decimal or 0x hex)");
  trace_cmd->add_option("--c", trace_args.c, "region compare-exchange repetitions")
      ->check(CLI::PositiveNumber);
  trace_cmd->add_flag("--deterministic", trace_args.deterministic, "disable the mate shuffle");
  trace_cmd->add_option("-o,--output", trace_args.output, "write to file instead of stdout");

  TraceArgs network_args;
  auto* network_cmd =
      app.add_subcommand("network", "Extract the induced comparator network");
  network_cmd->add_option("--n", network_args.n, "array length (power of two)")->required();
  network_cmd->add_option("--seed", network_args.seed_text, "seed (decimal or 0x hex)");
  network_cmd->add_option("--c", network_args.c, "region compare-exchange repetitions")
      ->check(CLI::PositiveNumber);
  network_cmd->add_flag("--deterministic", network_args.deterministic,
                        "disable the mate shuffle");
  network_cmd->add_option("-o,--output", network_args.output, "output network file")->required();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "0-1 verification of a network file (exhaustive up to n=20, sampled beyond)");
  verify_cmd->add_option("--network", verify_args.network, "network file")->required();
  verify_cmd->add_option("--samples", verify_args.samples,
                         "sample count when n exceeds the exhaustive bound");
  verify_cmd->add_option("--seed", verify_args.seed_text, "sampling seed");

  RateArgs rate_args;
  auto* rate_cmd = app.add_subcommand(
      "failure-rate", "Monte-Carlo failure rate over random permutations (CSV to stdout)");
  rate_cmd->add_option("--n", rate_args.n, "array length (power of two)")->required();
  rate_cmd->add_option("--trials", rate_args.trials, "number of trials")
      ->required()
      ->check(CLI::PositiveNumber);
  rate_cmd->add_option("--seed", rate_args.seed_text, "base seed; trial t uses base + t");
  rate_cmd->add_option("--c", rate_args.c, "region compare-exchange repetitions")
      ->check(CLI::PositiveNumber);
  rate_cmd->add_flag("--deterministic", rate_args.deterministic, "disable the mate shuffle");
  rate_cmd->add_option("--threads", rate_args.threads, "worker threads (0 = hardware)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand(
      "bench", "failure-rate sweep over sizes and repetition counts (CSV to stdout)");
  bench_cmd->add_option("--n", bench_args.sizes, "array lengths (repeatable)")->required();
  bench_cmd->add_option("--trials", bench_args.trials, "trials per row")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_args.seed_text, "base seed");
  bench_cmd->add_option("--c", bench_args.cs, "repetition counts (repeatable)");
  bench_cmd->add_flag("--deterministic", bench_args.deterministic, "disable the mate shuffle");
  bench_cmd->add_option("--threads", bench_args.threads, "worker threads (0 = hardware)");

  std::size_t count_n = 0;
  int count_c = 4;
  bool count_det = false;
  auto* count_cmd =
      app.add_subcommand("count", "Print the exact compare-exchange count of one run");
  count_cmd->add_option("--n", count_n, "array length (power of two)")->required();
  count_cmd->add_option("--c", count_c, "region compare-exchange repetitions")
      ->check(CLI::PositiveNumber);
  count_cmd->add_flag("--deterministic", count_det, "disable the mate shuffle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitContractError;
  }

  try {
    if (*sort_cmd) return run_sort(sort_args);
    if (*trace_cmd) return run_trace(trace_args);
    if (*network_cmd) return run_network(network_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*rate_cmd) return run_failure_rate(rate_args);
    if (*bench_cmd) return run_bench(bench_args);
    if (*count_cmd) return run_count(count_n, count_c, count_det);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitContractError;
  }
  return kExitContractError;
}
