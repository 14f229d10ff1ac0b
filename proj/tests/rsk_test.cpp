#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "shapeavoid/permutation.hpp"
#include "shapeavoid/rsk.hpp"

using namespace shapeavoid;

namespace {

template <class F>
void each_perm(int n, F f) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do f(Permutation(w));
  while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace

TEST(Permutation, ValidatesOnConstruction) {
  EXPECT_NO_THROW(Permutation({2, 1, 3}));
  EXPECT_THROW(Permutation({1, 1, 2}), validation_error);
  EXPECT_THROW(Permutation({0, 1}), validation_error);
  EXPECT_THROW(Permutation({1, 4}), validation_error);
}

TEST(Permutation, Parse) {
  EXPECT_EQ(parse_permutation("65127843"), (Permutation{6, 5, 1, 2, 7, 8, 4, 3}));
  EXPECT_EQ(parse_permutation("6,5,1,2,7,8,4,3"), (Permutation{6, 5, 1, 2, 7, 8, 4, 3}));
  EXPECT_EQ(parse_permutation("1"), (Permutation{1}));
  EXPECT_EQ(parse_permutation("10,1,2,3,4,5,6,7,8,9").size(), 10);
  EXPECT_THROW(parse_permutation("1234567890"), validation_error);
  EXPECT_THROW(parse_permutation("1,a"), validation_error);
  EXPECT_THROW(parse_permutation("113"), validation_error);
}

TEST(PatternOf, FlattensSubsequences) {
  const Permutation pi{2, 5, 3, 1, 4};
  // Values 2,5,1,4 sit at positions 0,1,3,4.
  EXPECT_EQ(pattern_of(pi, std::vector<int>{0, 1, 3, 4}), (Permutation{2, 4, 1, 3}));
  EXPECT_EQ(pattern_of(pi, std::vector<int>{0, 1, 2, 3, 4}), pi);
  EXPECT_EQ(pattern_of(pi, std::vector<int>{2}), (Permutation{1}));
  EXPECT_THROW(pattern_of(pi, std::vector<int>{1, 0}), validation_error);
  EXPECT_THROW(pattern_of(pi, std::vector<int>{0, 5}), validation_error);
  EXPECT_THROW(pattern_of(pi, std::vector<int>{2, 2}), validation_error);
}

TEST(Rsk, PublishedShapes) {
  EXPECT_EQ(rsk(Permutation{6, 5, 1, 2, 7, 8, 4, 3}).shape(), (Partition{4, 2, 1, 1}));
  EXPECT_EQ(rsk(Permutation{2, 5, 3, 1, 4}).shape(), (Partition{3, 1, 1}));
  EXPECT_EQ(shape_of(Permutation{3, 1, 4, 2}), (Partition{2, 2}));
}

TEST(Rsk, IdentityIsASingleRow) {
  const RskPair pair = rsk(Permutation::identity(5));
  const StandardTableau row(std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});
  EXPECT_EQ(pair.p, row);
  EXPECT_EQ(pair.q, row);
}

TEST(Rsk, KnownTableaux) {
  // Row insertion of 2,5,3,1,4: P = [1 3 4 / 2 / 5], Q = [1 2 5 / 3 / 4].
  const RskPair pair = rsk(Permutation{2, 5, 3, 1, 4});
  EXPECT_EQ(pair.p.rows(), (std::vector<std::vector<int>>{{1, 3, 4}, {2}, {5}}));
  EXPECT_EQ(pair.q.rows(), (std::vector<std::vector<int>>{{1, 2, 5}, {3}, {4}}));
}

TEST(RskInverse, RoundTripAndSpecialShapes) {
  const Permutation pi{6, 5, 1, 2, 7, 8, 4, 3};
  EXPECT_EQ(rsk_inverse(rsk(pi)), pi);
  const StandardTableau row(std::vector<std::vector<int>>{{1, 2, 3, 4}});
  EXPECT_EQ(rsk_inverse({row, row}), Permutation::identity(4));
  const StandardTableau column(std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
  EXPECT_EQ(rsk_inverse({column, column}), (Permutation{4, 3, 2, 1}));
}

TEST(RskInverse, RejectsMalformedPairs) {
  const StandardTableau a(std::vector<std::vector<int>>{{1, 2}, {3}});
  const StandardTableau b(std::vector<std::vector<int>>{{1, 2, 3}});
  EXPECT_THROW(rsk_inverse({a, b}), validation_error);
  EXPECT_THROW(StandardTableau(std::vector<std::vector<int>>{{2, 1}}), validation_error);
  EXPECT_THROW(StandardTableau(std::vector<std::vector<int>>{{1, 2}, {4, 5}, {3, 6}}), validation_error);
  EXPECT_THROW(StandardTableau(std::vector<std::vector<int>>{{1}, {2, 3}}), validation_error);
  EXPECT_THROW(StandardTableau(std::vector<std::vector<int>>{{1, 2}, {4}}), validation_error);
  EXPECT_THROW(StandardTableau(std::vector<std::vector<int>>{{1, 3}, {2, 2}}), validation_error);
}

TEST(Rsk, BijectiveOnSmallSymmetricGroups) {
  for (int n = 0; n <= 7; ++n) {
    std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> images;
    std::size_t count = 0;
    each_perm(n, [&](const Permutation& pi) {
      const RskPair pair = rsk(pi);
      ASSERT_EQ(pair.p.shape(), pair.q.shape());
      ASSERT_EQ(pair.p.size(), n);
      ASSERT_EQ(rsk_inverse(pair), pi);
      images.insert({pair.p.rows(), pair.q.rows()});
      ++count;
    });
    EXPECT_EQ(images.size(), count) << "n=" << n;
  }
}

// First row = longest increasing, first column = longest decreasing,
// compared against a quadratic dynamic program.
TEST(Rsk, SchenstedAgainstDynamicProgram) {
  for (int n = 1; n <= 7; ++n)
    each_perm(n, [&](const Permutation& pi) {
      const Partition lambda = shape_of(pi);
      ASSERT_EQ(lambda.first(), oracle::lis(pi.word())) << pi;
      ASSERT_EQ(conjugate(lambda).first(), oracle::lds(pi.word())) << pi;
      ASSERT_EQ(rsk(pi).shape(), lambda);
    });
}

TEST(Rsk, ReversalConjugatesTheShape) {
  for (int n = 1; n <= 7; ++n)
    each_perm(n, [&](const Permutation& pi) { ASSERT_EQ(shape_of(reverse(pi)), conjugate(shape_of(pi))) << pi; });
}

TEST(Rsk, ShapeDependsOnlyOnRelativeOrder) {
  const std::vector<int> raw{20, 50, 30, 10, 40};
  EXPECT_EQ(shape_of(raw), shape_of(Permutation{2, 5, 3, 1, 4}));
  const Permutation pi{6, 5, 1, 2, 7, 8, 4, 3};
  const std::vector<int> pos{0, 2, 5, 7};
  EXPECT_EQ(shape_at(pi, pos), shape_of(pattern_of(pi, pos)));
}
