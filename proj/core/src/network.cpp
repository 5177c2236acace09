#include "oblivsort/network.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "oblivsort/errors.hpp"

namespace oblivsort {

namespace {

// Salt for generating trial inputs inside assert_oblivious; any fixed value
// works, it only has to decouple the input stream from the sort stream.
constexpr std::uint64_t kInputSalt = 0xA24BAED4963EE407ULL;

void validate_network(std::span<const Comparator> net, std::size_t n) {
  for (const auto& c : net) {
    if (c.lo >= c.hi) {
      throw std::invalid_argument("comparator violates lo < hi");
    }
    if (c.hi >= n) {
      throw std::out_of_range("comparator index out of range for length " + std::to_string(n));
    }
  }
}

void apply_unchecked(std::span<const Comparator> net, std::span<Key> a) {
  for (const auto& c : net) {
    if (a[c.lo] > a[c.hi]) {
      std::swap(a[c.lo], a[c.hi]);
    }
  }
}

void fill_from_bits(std::uint64_t k, std::span<Key> a) {
  const std::size_t n = a.size();
  for (std::size_t j = 0; j < n; ++j) {
    a[j] = static_cast<Key>((k >> (n - 1 - j)) & 1u);
  }
}

}  // namespace

Trace record_trace(std::size_t n, const SortConfig& cfg) {
  std::vector<Key> scratch(n);
  std::iota(scratch.begin(), scratch.end(), Key{0});
  RecordingSink sink;
  randomized_shellsort(std::span(scratch), cfg, sink);
  return Trace{n, cfg, std::move(sink.pairs)};
}

bool assert_oblivious(std::size_t n, const SortConfig& cfg, std::size_t trials) {
  RandomSource input_src(cfg.seed ^ kInputSalt);
  std::vector<Key> a(n);
  std::vector<Comparator> reference;
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& key : a) {
      key = static_cast<Key>(input_src.next_u64());
    }
    RecordingSink sink;
    randomized_shellsort(std::span(a), cfg, sink);
    if (t == 0) {
      reference = std::move(sink.pairs);
    } else if (sink.pairs != reference) {
      return false;
    }
  }
  return true;
}

std::vector<Comparator> extract_network(std::size_t n, const SortConfig& cfg) {
  return std::move(record_trace(n, cfg).pairs);
}

void apply_network(std::span<const Comparator> net, std::span<Key> a) {
  validate_network(net, a.size());
  apply_unchecked(net, a);
}

std::optional<std::vector<Key>> verify_zero_one(std::span<const Comparator> net, std::size_t n,
                                                std::size_t exhaustive_bound) {
  if (n > exhaustive_bound) {
    throw std::invalid_argument("verify_zero_one: length " + std::to_string(n) +
                                " exceeds exhaustive bound " + std::to_string(exhaustive_bound) +
                                "; use sampling");
  }
  validate_network(net, n);
  std::vector<Key> a(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < total; ++k) {  // ascending k is lexicographic vector order
    fill_from_bits(k, a);
    apply_unchecked(net, a);
    if (!std::is_sorted(a.begin(), a.end())) {
      fill_from_bits(k, a);
      return a;
    }
  }
  return std::nullopt;
}

SampleReport sample_zero_one(std::span<const Comparator> net, std::size_t n,
                             std::size_t trials, std::uint64_t seed) {
  validate_network(net, n);
  RandomSource src(seed);
  SampleReport report;
  report.trials = trials;
  std::vector<Key> input(n);
  std::vector<Key> work(n);
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& key : input) {
      key = static_cast<Key>(src.next_u64() & 1u);
    }
    work = input;
    apply_unchecked(net, std::span(work));
    if (!std::is_sorted(work.begin(), work.end())) {
      ++report.failures;
      if (!report.first_counterexample) {
        report.first_counterexample = input;
      }
    }
  }
  return report;
}

void write_network(std::ostream& os, std::span<const Comparator> net, std::size_t n) {
  os << "n " << n << '\n';
  for (const auto& c : net) {
    os << c.lo << ' ' << c.hi << '\n';
  }
}

void write_trace(std::ostream& os, const Trace& trace) {
  os << "n " << trace.n << '\n';
  char header[64];
  std::snprintf(header, sizeof(header), "seed 0x%016llx c %d shuffle %d",
                static_cast<unsigned long long>(trace.config.seed), trace.config.c_repetitions,
                trace.config.shuffle_enabled ? 1 : 0);
  os << header << '\n';
  for (const auto& c : trace.pairs) {
    os << c.lo << ' ' << c.hi << '\n';
  }
}

namespace {

std::size_t parse_length_header(const std::string& line, const std::string& source) {
  std::istringstream ss(line);
  std::string tag;
  std::size_t n = 0;
  std::string extra;
  if (!(ss >> tag >> n) || tag != "n" || (ss >> extra)) {
    throw ParseError(source, 1, "expected header \"n <length>\", got \"" + line + "\"");
  }
  return n;
}

Comparator parse_pair_line(const std::string& line, std::size_t n, const std::string& source,
                           std::size_t lineno) {
  std::istringstream ss(line);
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  std::string extra;
  if (!(ss >> lo >> hi) || (ss >> extra)) {
    throw ParseError(source, lineno, "expected \"lo hi\", got \"" + line + "\"");
  }
  if (lo >= hi) {
    throw ParseError(source, lineno, "comparator must satisfy lo < hi");
  }
  if (hi >= n) {
    throw ParseError(source, lineno, "comparator index " + std::to_string(hi) +
                                         " out of range for length " + std::to_string(n));
  }
  return Comparator{lo, hi};
}

}  // namespace

NetworkFile read_network(std::istream& is, const std::string& source) {
  std::string line;
  if (!std::getline(is, line)) {
    throw ParseError(source, 1, "missing header \"n <length>\"");
  }
  NetworkFile file;
  file.n = parse_length_header(line, source);
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    file.comparators.push_back(parse_pair_line(line, file.n, source, lineno));
  }
  return file;
}

Trace read_trace(std::istream& is, const std::string& source) {
  std::string line;
  if (!std::getline(is, line)) {
    throw ParseError(source, 1, "missing header \"n <length>\"");
  }
  Trace trace;
  trace.n = parse_length_header(line, source);

  if (!std::getline(is, line)) {
    throw ParseError(source, 2, "missing header \"seed <seed> c <int> shuffle <0|1>\"");
  }
  std::istringstream ss(line);
  std::string seed_tag, seed_text, c_tag, shuffle_tag, extra;
  int c = 0;
  int shuffle = 0;
  if (!(ss >> seed_tag >> seed_text >> c_tag >> c >> shuffle_tag >> shuffle) || (ss >> extra) ||
      seed_tag != "seed" || c_tag != "c" || shuffle_tag != "shuffle") {
    throw ParseError(source, 2, "expected \"seed <seed> c <int> shuffle <0|1>\", got \"" + line + "\"");
  }
  const auto seed = parse_seed(seed_text);
  if (!seed) {
    throw ParseError(source, 2, "invalid seed \"" + seed_text + "\"");
  }
  if (c < 1) {
    throw ParseError(source, 2, "c must be >= 1");
  }
  if (shuffle != 0 && shuffle != 1) {
    throw ParseError(source, 2, "shuffle must be 0 or 1");
  }
  trace.config = SortConfig{c, shuffle == 1, *seed};

  std::size_t lineno = 2;
  while (std::getline(is, line)) {
    ++lineno;
    trace.pairs.push_back(parse_pair_line(line, trace.n, source, lineno));
  }
  return trace;
}

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) {
    throw std::runtime_error("cannot open " + path.string() + " for reading");
  }
  return is;
}

void flush_output(std::ofstream& os, const std::filesystem::path& path) {
  os.flush();
  if (!os) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

}  // namespace

void write_network_file(const std::filesystem::path& path, std::span<const Comparator> net,
                        std::size_t n) {
  std::ofstream os(path);
  if (!os) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  write_network(os, net, n);
  flush_output(os, path);
}

NetworkFile read_network_file(const std::filesystem::path& path) {
  auto is = open_input(path);
  return read_network(is, path.string());
}

void write_trace_file(const std::filesystem::path& path, const Trace& trace) {
  std::ofstream os(path);
  if (!os) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  write_trace(os, trace);
  flush_output(os, path);
}

Trace read_trace_file(const std::filesystem::path& path) {
  auto is = open_input(path);
  return read_trace(is, path.string());
}

}  // namespace oblivsort
