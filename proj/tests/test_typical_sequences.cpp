#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sepkit/typical_sequences.hpp"

using namespace sepkit;

namespace {

IntSequence random_sequence(std::mt19937_64& rng, int max_len, int max_value) {
  IntSequence a(1 + rng() % static_cast<unsigned>(max_len));
  for (int& x : a) x = static_cast<int>(rng() % static_cast<unsigned>(max_value + 1));
  return a;
}

// Distinct values of typical() over every sequence on {0..k} of length at
// most max_len.
std::set<IntSequence> reduced_images(int k, int max_len) {
  std::set<IntSequence> out;
  for (int len = 1; len <= max_len; ++len) {
    IntSequence a(static_cast<std::size_t>(len), 0);
    for (;;) {
      out.insert(typical(a));
      int i = 0;
      while (i < len && ++a[i] > k) a[i++] = 0;
      if (i == len) break;
    }
  }
  return out;
}

}  // namespace

TEST(Typical, Examples) {
  EXPECT_EQ(typical({5}), (IntSequence{5}));
  EXPECT_EQ(typical({1, 1, 2, 1, 3}), (IntSequence{1, 3}));
  EXPECT_EQ(typical({3, 1, 2}), (IntSequence{3, 1, 2}));
  EXPECT_EQ(typical({0, 2, 1, 3}), (IntSequence{0, 3}));
  EXPECT_EQ(typical({2, 2, 2}), (IntSequence{2}));
  EXPECT_THROW(typical({}), InputError);
  EXPECT_THROW(typical({1, -1}), InputError);
}

TEST(Typical, IdempotentAndConfluent) {
  std::mt19937_64 rng(151);
  for (int trial = 0; trial < 300; ++trial) {
    const IntSequence a = random_sequence(rng, 10, 5);
    const IntSequence t = typical(a);
    EXPECT_TRUE(is_typical(t));
    EXPECT_EQ(typical(t), t);
    for (int order = 0; order < 100; ++order) ASSERT_EQ(typical_random_order(a, rng), t);
  }
}

TEST(Majorizes, Examples) {
  EXPECT_TRUE(majorizes({1, 3}, {2, 3}));
  EXPECT_FALSE(majorizes({2, 1}, {1, 2}));
  EXPECT_TRUE(majorizes({4, 0, 4}, {4, 0, 4}));
  // extensions (1,1,3) and (2,5,3)
  EXPECT_TRUE(majorizes({1, 3}, {2, 5, 3}));
  EXPECT_FALSE(majorizes({3}, {2, 5}));
}

TEST(Majorizes, EquivalentUnderReduction) {
  std::mt19937_64 rng(157);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntSequence a = random_sequence(rng, 8, 5), b = random_sequence(rng, 8, 5);
    EXPECT_EQ(majorizes(a, b), majorizes(typical(a), typical(b)));
  }
}

TEST(Majorizes, Transitive) {
  std::mt19937_64 rng(163);
  int checked = 0;
  for (int trial = 0; trial < 20000 && checked < 300; ++trial) {
    const IntSequence a = random_sequence(rng, 5, 3), b = random_sequence(rng, 5, 3), c = random_sequence(rng, 5, 3);
    if (!majorizes(a, b) || !majorizes(b, c)) continue;
    ++checked;
    EXPECT_TRUE(majorizes(a, c));
  }
  EXPECT_GE(checked, 100);
}

TEST(EnumerateTypical, CountsMatchReductionOracle) {
  // Oracle: reduce every sequence up to length 2k+3 and collect the images.
  const int expected[] = {1, 6, 27, 112};
  for (int k = 0; k <= 3; ++k) {
    const auto list = enumerate_typical(k);
    EXPECT_EQ(static_cast<int>(list.size()), expected[k]) << "k=" << k;
    const auto images = reduced_images(k, 2 * k + 3);
    EXPECT_EQ(std::set<IntSequence>(list.begin(), list.end()), images) << "k=" << k;
  }
}

TEST(EnumerateTypical, SmallListsAndLengthBound) {
  EXPECT_EQ(enumerate_typical(0), (std::vector<IntSequence>{{0}}));
  EXPECT_EQ(enumerate_typical(1), (std::vector<IntSequence>{{0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}, {1, 0, 1}}));
  for (int k = 0; k <= 4; ++k) {
    for (const IntSequence& s : enumerate_typical(k)) {
      EXPECT_LE(static_cast<int>(s.size()), 2 * k + 1);
      EXPECT_EQ(typical(s), s);
    }
  }
  EXPECT_EQ(enumerate_typical(4).size(), 453u);
  EXPECT_THROW(enumerate_typical(7), LimitError);
  EXPECT_THROW(enumerate_typical(-1), InputError);
}
