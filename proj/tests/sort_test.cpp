#include "oblivsort/sort.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "golden_values.hpp"
#include "plain_shellsort.hpp"

using oblivsort::Key;
using oblivsort::RandomSource;
using oblivsort::SortConfig;

namespace {

std::vector<Key> random_keys(std::size_t n, RandomSource& src, std::uint64_t value_range = 0) {
  std::vector<Key> keys(n);
  for (auto& k : keys) {
    k = value_range == 0 ? static_cast<Key>(src.next_u64())
                         : static_cast<Key>(src.next_int(value_range));
  }
  return keys;
}

// Checks the conditional-swap postcondition at every issued pair, plus the
// empirical fact that the algorithm only ever presents i < j.
struct AssertingSink {
  std::size_t issued = 0;
  void on_compare_exchange(std::span<const Key> a, std::size_t i, std::size_t j) {
    ASSERT_LT(i, j);
    ASSERT_LE(a[i], a[j]);
    ++issued;
  }
};

}  // namespace

TEST(Exchange, SwapsInPlace) {
  std::vector<Key> a = {1, 2};
  oblivsort::exchange(a, 0, 1);
  EXPECT_EQ(a, (std::vector<Key>{2, 1}));

  std::vector<Key> b = {5};
  oblivsort::exchange(b, 0, 0);
  EXPECT_EQ(b, (std::vector<Key>{5}));

  std::vector<Key> c = {3, 9, 7};
  oblivsort::exchange(c, 0, 2);
  EXPECT_EQ(c, (std::vector<Key>{7, 9, 3}));
}

TEST(Exchange, RejectsOutOfRange) {
  std::vector<Key> a = {1, 2};
  EXPECT_THROW(oblivsort::exchange(a, 0, 2), std::out_of_range);
  EXPECT_THROW(oblivsort::exchange(a, 5, 0), std::out_of_range);
}

TEST(CompareExchange, BothOrientations) {
  std::vector<Key> a = {5, 3};
  oblivsort::compare_exchange(a, 0, 1);  // i<j and a[i]>a[j]: swap
  EXPECT_EQ(a, (std::vector<Key>{3, 5}));

  std::vector<Key> b = {9, 4};
  oblivsort::compare_exchange(b, 1, 0);  // i>j and a[i]<a[j]: swap
  EXPECT_EQ(b, (std::vector<Key>{4, 9}));

  std::vector<Key> c = {3, 5};
  oblivsort::compare_exchange(c, 1, 0);  // i>j but a[i]>a[j]: no-op
  EXPECT_EQ(c, (std::vector<Key>{3, 5}));

  std::vector<Key> d = {7, 7};
  oblivsort::compare_exchange(d, 0, 1);  // equal keys never swap
  EXPECT_EQ(d, (std::vector<Key>{7, 7}));
  oblivsort::compare_exchange(d, 1, 0);
  EXPECT_EQ(d, (std::vector<Key>{7, 7}));
}

TEST(CompareExchange, ReportsExactPairToSink) {
  std::vector<Key> a = {2, 1, 0};
  oblivsort::CountingSink counter;
  oblivsort::compare_exchange(a, 0, 2, counter);
  oblivsort::compare_exchange(a, 0, 1, counter);
  EXPECT_EQ(counter.count, 2u);
  EXPECT_THROW(oblivsort::compare_exchange(a, 0, 3, counter), std::out_of_range);
  EXPECT_EQ(counter.count, 2u);  // rejected call reports nothing
}

TEST(PermuteRandom, SingletonAndEmpty) {
  std::vector<Key> single = {42};
  RandomSource src(123);
  oblivsort::permute_random(std::span(single), src);
  EXPECT_EQ(single, (std::vector<Key>{42}));

  std::vector<Key> empty;
  oblivsort::permute_random(std::span(empty), src);
  EXPECT_TRUE(empty.empty());
}

TEST(PermuteRandom, GoldenPermutations) {
  std::vector<Key> a = {0, 1, 2, 3};
  RandomSource s1(1);
  oblivsort::permute_random(std::span(a), s1);
  EXPECT_TRUE(std::equal(a.begin(), a.end(), golden::kPerm4Seed1.begin()));

  std::vector<Key> b = {0, 1, 2, 3};
  RandomSource s2(2);
  oblivsort::permute_random(std::span(b), s2);
  EXPECT_TRUE(std::equal(b.begin(), b.end(), golden::kPerm4Seed2.begin()));

  std::vector<Key> c(8);
  std::iota(c.begin(), c.end(), Key{0});
  RandomSource s3(1);
  oblivsort::permute_random(std::span(c), s3);
  EXPECT_TRUE(std::equal(c.begin(), c.end(), golden::kPerm8Seed1.begin()));
}

TEST(PermuteRandom, Length4FrequenciesWithinFiveSigma) {
  constexpr std::size_t kTrials = 240000;
  RandomSource src(42);
  std::array<std::size_t, 256> counts{};
  std::vector<Key> a(4);
  for (std::size_t t = 0; t < kTrials; ++t) {
    std::iota(a.begin(), a.end(), Key{0});
    oblivsort::permute_random(std::span(a), src);
    ++counts[static_cast<std::size_t>(((a[0] * 4 + a[1]) * 4 + a[2]) * 4 + a[3])];
  }
  const double p = 1.0 / 24.0;
  const double sigma = std::sqrt(p * (1.0 - p) / kTrials);  // ~4.1e-4
  int seen = 0;
  for (const auto c : counts) {
    if (c == 0) {
      continue;
    }
    ++seen;
    EXPECT_NEAR(static_cast<double>(c) / kTrials, p, 5 * sigma);
  }
  EXPECT_EQ(seen, 24);
}

TEST(PermuteRandom, ProducesAPermutation) {
  RandomSource seeds(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + seeds.next_int(64);
    std::vector<Key> a(n);
    std::iota(a.begin(), a.end(), Key{0});
    RandomSource src(seeds.next_u64());
    oblivsort::permute_random(std::span(a), src);
    std::sort(a.begin(), a.end());
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(a[i], static_cast<Key>(i));
    }
  }
}

TEST(CompareRegions, IdentityMatchingDominatedRegionsUnchanged) {
  std::vector<Key> a = {1, 2, 9, 8};
  RandomSource src(1);
  SortConfig cfg{1, false, 0};
  oblivsort::compare_regions(a, 0, 2, 2, src, cfg);
  EXPECT_EQ(a, (std::vector<Key>{1, 2, 9, 8}));
}

TEST(CompareRegions, IdentityMatchingSwapsBothPairs) {
  std::vector<Key> a = {9, 8, 1, 2};
  RandomSource src(1);
  SortConfig cfg{1, false, 0};
  oblivsort::compare_regions(a, 0, 2, 2, src, cfg);
  EXPECT_EQ(a, (std::vector<Key>{1, 2, 9, 8}));
}

namespace {

struct PairListSink {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  void on_compare_exchange(std::span<const Key>, std::size_t i, std::size_t j) {
    pairs.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  }
};

}  // namespace

TEST(CompareRegions, GoldenShuffledRun) {
  std::vector<Key> a = {9, 8, 1, 2};
  RandomSource src(1);
  SortConfig cfg{4, true, 1};
  PairListSink sink;
  oblivsort::compare_regions(a, 0, 2, 2, src, cfg, sink);
  EXPECT_TRUE(std::equal(a.begin(), a.end(), golden::kRegions4Seed1Out.begin()));
  ASSERT_EQ(sink.pairs.size(), golden::kRegions4Seed1Pairs.size());
  EXPECT_TRUE(std::equal(sink.pairs.begin(), sink.pairs.end(),
                         golden::kRegions4Seed1Pairs.begin()));
}

TEST(CompareRegions, IssuesExactlyCTimesOffsetPairs) {
  std::vector<Key> a(16, 0);
  RandomSource src(5);
  SortConfig cfg{3, true, 5};
  oblivsort::CountingSink counter;
  oblivsort::compare_regions(a, 0, 8, 4, src, cfg, counter);
  EXPECT_EQ(counter.count, 12u);  // c_repetitions * offset
}

TEST(CompareRegions, RejectsBadRegions) {
  std::vector<Key> a(8, 0);
  RandomSource src(1);
  SortConfig cfg;
  EXPECT_THROW(oblivsort::compare_regions(a, 0, 2, 4, src, cfg), std::invalid_argument);  // overlap
  EXPECT_THROW(oblivsort::compare_regions(a, 0, 0, 2, src, cfg), std::invalid_argument);  // s == t
  EXPECT_THROW(oblivsort::compare_regions(a, 0, 6, 4, src, cfg), std::out_of_range);
  EXPECT_THROW(oblivsort::compare_regions(a, 0, 4, 0, src, cfg), std::invalid_argument);  // offset 0
  EXPECT_THROW(oblivsort::compare_regions(a, 6, 0, 4, src, cfg), std::out_of_range);
}

TEST(RandomizedShellsort, SortedInputStaysIdentical) {
  for (const std::size_t n : {2u, 8u, 64u}) {
    for (const bool shuffle : {true, false}) {
      std::vector<Key> a(n);
      std::iota(a.begin(), a.end(), Key{-3});
      const auto before = a;
      SortConfig cfg{4, shuffle, 99};
      oblivsort::randomized_shellsort(std::span(a), cfg);
      EXPECT_EQ(a, before);
    }
  }
}

TEST(RandomizedShellsort, DeterministicVariantSortsReverseOfEight) {
  std::vector<Key> a = {7, 6, 5, 4, 3, 2, 1, 0};
  SortConfig cfg{4, false, 0};
  oblivsort::randomized_shellsort(std::span(a), cfg);
  EXPECT_EQ(a, (std::vector<Key>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(RandomizedShellsort, GoldenSmallRun) {
  std::vector<Key> a = {3, 2, 1, 0};
  SortConfig cfg{1, true, 1};
  oblivsort::CountingSink counter;
  oblivsort::randomized_shellsort(std::span(a), cfg, counter);
  EXPECT_EQ(a, (std::vector<Key>{0, 1, 2, 3}));
  EXPECT_EQ(counter.count, 18u);
}

TEST(RandomizedShellsort, MatchesPlainRewriteOnGrid) {
  RandomSource input_gen(2718);
  for (const std::size_t n : {2u, 4u, 8u, 16u, 32u}) {
    for (const std::uint64_t seed : {1u, 7u, 42u}) {
      for (const int c : {1, 4}) {
        for (const bool shuffle : {true, false}) {
          const auto input = random_keys(n, input_gen, 2 * n);
          auto expected = input;
          oracle::Pairs expected_pairs;
          oracle::randomized_shellsort(expected, seed, c, shuffle, &expected_pairs);

          auto actual = input;
          SortConfig cfg{c, shuffle, seed};
          PairListSink sink;
          oblivsort::randomized_shellsort(std::span(actual), cfg, sink);
          ASSERT_EQ(actual, expected) << "n=" << n << " seed=" << seed << " c=" << c
                                      << " shuffle=" << shuffle;
          ASSERT_EQ(sink.pairs, expected_pairs)
              << "n=" << n << " seed=" << seed << " c=" << c << " shuffle=" << shuffle;
        }
      }
    }
  }
}

TEST(RandomizedShellsort, PreservesMultiset) {
  // The multiset invariant holds for every n, seed, and config -- including
  // deterministic runs, which is more than the sortedness guarantee covers.
  RandomSource gen(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::size_t{1} << gen.next_int(9);  // 1..256
    // Small value range forces duplicates.
    auto input = random_keys(n, gen, 8);
    auto work = input;
    SortConfig cfg{static_cast<int>(1 + gen.next_int(4)), (trial % 4) != 0, gen.next_u64()};
    oblivsort::randomized_shellsort(std::span(work), cfg);
    std::sort(input.begin(), input.end());
    std::sort(work.begin(), work.end());
    ASSERT_EQ(work, input);
  }
}

TEST(RandomizedShellsort, AllEqualKeysUntouched) {
  std::vector<Key> a(32, 5);
  SortConfig cfg{4, true, 11};
  oblivsort::CountingSink counter;
  oblivsort::randomized_shellsort(std::span(a), cfg, counter);
  EXPECT_EQ(a, std::vector<Key>(32, 5));
  EXPECT_EQ(counter.count, golden::kBudgets[4].c4);
}

TEST(RandomizedShellsort, RejectsUnsupportedLengths) {
  for (const std::size_t n : {3u, 6u, 12u, 100u, 1000u}) {
    std::vector<Key> a(n, 0);
    SortConfig cfg;
    EXPECT_THROW(oblivsort::randomized_shellsort(std::span(a), cfg),
                 oblivsort::UnsupportedLengthError)
        << n;
  }
  EXPECT_TRUE(oblivsort::is_supported_length(0));
  EXPECT_TRUE(oblivsort::is_supported_length(1));
  EXPECT_TRUE(oblivsort::is_supported_length(1024));
  EXPECT_FALSE(oblivsort::is_supported_length(24));
}

TEST(RandomizedShellsort, TrivialLengthsAreNoOps) {
  std::vector<Key> empty;
  SortConfig cfg;
  oblivsort::CountingSink counter;
  oblivsort::randomized_shellsort(std::span(empty), cfg, counter);
  EXPECT_EQ(counter.count, 0u);

  std::vector<Key> one = {-9};
  oblivsort::randomized_shellsort(std::span(one), cfg, counter);
  EXPECT_EQ(one, (std::vector<Key>{-9}));
  EXPECT_EQ(counter.count, 0u);
}

TEST(RandomizedShellsort, RejectsNonPositiveRepetitions) {
  std::vector<Key> a(4, 0);
  SortConfig cfg{0, true, 1};
  EXPECT_THROW(oblivsort::randomized_shellsort(std::span(a), cfg), std::invalid_argument);
}

TEST(RandomizedShellsort, DeterministicGivenSeedAndConfig) {
  RandomSource gen(555);
  const auto input = random_keys(128, gen);
  SortConfig cfg{4, true, 0xABCDEF};

  auto first = input;
  oblivsort::CountingSink c1;
  oblivsort::randomized_shellsort(std::span(first), cfg, c1);
  auto second = input;
  oblivsort::CountingSink c2;
  oblivsort::randomized_shellsort(std::span(second), cfg, c2);
  EXPECT_EQ(first, second);
  EXPECT_EQ(c1.count, c2.count);
}

TEST(RandomizedShellsort, PairPostconditionHoldsAtEveryIssue) {
  RandomSource gen(909);
  for (const std::size_t n : {4u, 16u, 64u}) {
    auto a = random_keys(n, gen, 10);
    SortConfig cfg{4, true, gen.next_u64()};
    AssertingSink sink;
    oblivsort::randomized_shellsort(std::span(a), cfg, sink);
    EXPECT_EQ(sink.issued, oracle::comparator_budget(static_cast<long long>(n), 4));
  }
}
