#include <gtest/gtest.h>

#include <random>

#include "shapeavoid/greene.hpp"
#include "shapeavoid/verify.hpp"

using namespace shapeavoid;

namespace {

const Permutation kExample{6, 5, 1, 2, 7, 8, 4, 3};

void expect_greene_agreement(const Permutation& pi) {
  for (Direction dir : {Direction::increasing, Direction::decreasing}) {
    const auto oracle = brute_force_union_table(pi, dir);
    const Partition lambda = dir == Direction::increasing ? shape_of(pi) : conjugate(shape_of(pi));
    for (int k = 1; k <= pi.size(); ++k) {
      const ChainUnion cu = extract_chain_union(pi, k, dir);
      ASSERT_TRUE(is_valid_chain_union(pi, cu)) << pi << " k=" << k;
      ASSERT_LE(static_cast<int>(cu.chains.size()), k);
      ASSERT_EQ(cu.total_size, greene_prefix(pi, k, dir)) << pi << " k=" << k << ' ' << to_string(dir);
      ASSERT_EQ(cu.total_size, oracle[static_cast<std::size_t>(k)]) << pi << " k=" << k;
      // Chain lengths are dominated by the shape (or its conjugate).
      ASSERT_TRUE(dominates(lambda, cu.length_profile())) << pi << " k=" << k;
    }
  }
}

}  // namespace

TEST(GreenePrefix, Examples) {
  EXPECT_EQ(greene_prefix(kExample, 2, Direction::increasing), 6);
  EXPECT_EQ(greene_prefix(kExample, 1, Direction::decreasing), 4);
  EXPECT_EQ(greene_prefix(kExample, 8, Direction::increasing), 8);
  EXPECT_EQ(greene_prefix(kExample, 20, Direction::decreasing), 8);
  EXPECT_THROW(greene_prefix(kExample, 0, Direction::increasing), validation_error);
}

TEST(ExtractChainUnion, Examples) {
  const ChainUnion a = extract_chain_union(Permutation{3, 1, 4, 2}, 2, Direction::increasing);
  EXPECT_EQ(a.total_size, 4);
  EXPECT_TRUE(is_valid_chain_union(Permutation{3, 1, 4, 2}, a));
  EXPECT_EQ(extract_chain_union(Permutation{2, 5, 3, 1, 4}, 1, Direction::increasing).total_size, 3);
  const ChainUnion id = extract_chain_union(Permutation::identity(6), 1, Direction::increasing);
  EXPECT_EQ(id.total_size, 6);
  ASSERT_EQ(id.chains.size(), 1u);
  EXPECT_EQ(id.chains[0], (std::vector<int>{0, 1, 2, 3, 4, 5}));
}

// Removing the unique longest run 1,2,7,8 leaves 6,5,4,3, so repeated
// removal reaches only 5; {6,7,8} and {1,2,4} give 6.
TEST(ExtractChainUnion, BeatsRepeatedLongestRemoval) {
  const ChainUnion cu = extract_chain_union(kExample, 2, Direction::increasing);
  EXPECT_EQ(cu.total_size, 6);
  EXPECT_TRUE(is_valid_chain_union(kExample, cu));
}

TEST(ExtractChainUnion, IsDeterministic) {
  const Permutation pi{5, 9, 1, 7, 3, 8, 2, 6, 4};
  for (Direction d : {Direction::increasing, Direction::decreasing}) {
    const ChainUnion first = extract_chain_union(pi, 2, d);
    for (int rep = 0; rep < 3; ++rep) EXPECT_EQ(extract_chain_union(pi, 2, d).chains, first.chains);
  }
}

TEST(GreedyDecompose, Examples) {
  const Permutation pi{3, 1, 4, 2};
  const ChainUnion inc = greedy_decompose(pi, Direction::increasing);
  EXPECT_EQ(inc.chains.size(), 2u);
  EXPECT_EQ(inc.total_size, 4);
  EXPECT_TRUE(is_valid_chain_union(pi, inc));
  const ChainUnion dec = greedy_decompose(pi, Direction::decreasing);
  ASSERT_EQ(dec.chains.size(), 2u);
  EXPECT_EQ(dec.chains[0].size(), 2u);
  EXPECT_EQ(dec.chains[1].size(), 2u);
  EXPECT_TRUE(is_valid_chain_union(pi, dec));
  EXPECT_EQ(greedy_decompose(Permutation::identity(5), Direction::increasing).chains.size(), 1u);
}

TEST(GreedyDecompose, ChainCountIsTheOppositeRun) {
  for (int n = 1; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation& pi) {
      const Partition lambda = shape_of(pi);
      const ChainUnion inc = greedy_decompose(pi, Direction::increasing);
      const ChainUnion dec = greedy_decompose(pi, Direction::decreasing);
      ASSERT_TRUE(is_valid_chain_union(pi, inc));
      ASSERT_TRUE(is_valid_chain_union(pi, dec));
      ASSERT_EQ(inc.total_size, n);
      ASSERT_EQ(dec.total_size, n);
      ASSERT_EQ(static_cast<int>(inc.chains.size()), lambda.length()) << pi;
      ASSERT_EQ(static_cast<int>(dec.chains.size()), lambda.first()) << pi;
      ASSERT_TRUE(dominates(lambda, inc.length_profile()));
      ASSERT_TRUE(dominates(conjugate(lambda), dec.length_profile()));
    });
}

TEST(BruteForceMaxUnion, Examples) {
  EXPECT_EQ(brute_force_max_union(kExample, 2, Direction::increasing), 6);
  EXPECT_EQ(brute_force_max_union(Permutation{2, 5, 3, 1, 4}, 2, Direction::decreasing), 4);
  EXPECT_EQ(brute_force_max_union(kExample, 9, Direction::decreasing), 8);
}

TEST(BruteForceMaxUnion, RefusesLargeInputs) {
  EXPECT_THROW(brute_force_max_union(Permutation::identity(17), 1, Direction::increasing), budget_exceeded);
}

TEST(Greene, ExhaustiveUpToSeven) {
  for (int n = 1; n <= 7; ++n) for_each_permutation(n, [](const Permutation& pi) { expect_greene_agreement(pi); });
}

TEST(Greene, RandomTwelve) {
  std::mt19937_64 rng(20240611);
  for (int s = 0; s < 500; ++s) expect_greene_agreement(random_permutation(12, rng));
}
