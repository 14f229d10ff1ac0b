#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "shapeavoid/enumeration.hpp"
#include "shapeavoid/verify.hpp"
#include "shapeavoid/witness.hpp"

using namespace shapeavoid;

namespace {

std::vector<int> values_at(const Permutation& pi, const std::vector<int>& positions) {
  std::vector<int> out;
  for (int p : positions) out.push_back(pi[static_cast<std::size_t>(p)]);
  return out;
}

// A subsequence of m*k elements with LIS m and LDS k has shape (m^k); one of
// m+k-1 elements with LIS m and LDS k is the hook. Checked without RSK.
bool is_rectangle_by_dp(const std::vector<int>& w, int m, int k) {
  return static_cast<int>(w.size()) == m * k && oracle::lis(w) == m && oracle::lds(w) == k;
}
bool is_hook_by_dp(const std::vector<int>& w, int m, int k) {
  return static_cast<int>(w.size()) == m + k - 1 && oracle::lis(w) == m && oracle::lds(w) == k;
}

bool monotone(const std::vector<int>& w, bool increasing) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (increasing ? w[i - 1] > w[i] : w[i - 1] < w[i]) return false;
  return true;
}

void expect_hook_decomposition(const Permutation& pi, const HookWitness& h, int m, int k) {
  ASSERT_EQ(static_cast<int>(h.increasing.size()), m);
  ASSERT_EQ(static_cast<int>(h.decreasing.size()), k);
  EXPECT_TRUE(monotone(values_at(pi, h.increasing), true));
  EXPECT_TRUE(monotone(values_at(pi, h.decreasing), false));
  std::vector<int> shared;
  std::set_intersection(h.increasing.begin(), h.increasing.end(), h.decreasing.begin(),
                        h.decreasing.end(), std::back_inserter(shared));
  EXPECT_EQ(shared.size(), 1u);
  std::set<int> all(h.increasing.begin(), h.increasing.end());
  all.insert(h.decreasing.begin(), h.decreasing.end());
  EXPECT_EQ(std::vector<int>(all.begin(), all.end()), h.witness.positions);
  EXPECT_TRUE(is_hook_by_dp(values_at(pi, h.witness.positions), m, k));
}

}  // namespace

TEST(Grid, SquareExample) {
  const Permutation pi{3, 1, 4, 2};
  const RectangularGrid g = rectangular_grid(pi);
  EXPECT_EQ(g.width(), 2);
  EXPECT_EQ(g.height(), 2);
  EXPECT_EQ(values_at(pi, g.row(0)), (std::vector<int>{3, 4}));
  EXPECT_EQ(values_at(pi, g.row(1)), (std::vector<int>{1, 2}));
  EXPECT_EQ(values_at(pi, g.column(0)), (std::vector<int>{3, 1}));
  EXPECT_EQ(values_at(pi, g.column(1)), (std::vector<int>{4, 2}));
}

TEST(Grid, DegenerateShapes) {
  const RectangularGrid col = rectangular_grid(Permutation{2, 1});
  EXPECT_EQ(col.width(), 1);
  EXPECT_EQ(col.height(), 2);
  const RectangularGrid row = rectangular_grid(Permutation::identity(6));
  EXPECT_EQ(row.width(), 6);
  EXPECT_EQ(row.height(), 1);
  EXPECT_EQ(row.row(0), (std::vector<int>{0, 1, 2, 3, 4, 5}));
}

TEST(Grid, RejectsNonRectangularShape) {
  try {
    rectangular_grid(Permutation{2, 5, 3, 1, 4});
    FAIL() << "expected precondition_error";
  } catch (const precondition_error& e) {
    EXPECT_NE(std::string(e.what()).find("3,1,1"), std::string::npos) << e.what();
  }
}

TEST(Grid, RowsIncreaseColumnsDecreaseOnEveryRectangle) {
  for (auto [m, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    for (const Permutation& pi : knuth_cell(Partition::rectangle(m, k))) {
      const RectangularGrid g = rectangular_grid(pi);
      ASSERT_EQ(g.width(), m);
      ASSERT_EQ(g.height(), k);
      std::set<int> seen;
      for (int i = 0; i < k; ++i) {
        ASSERT_TRUE(monotone(values_at(pi, g.row(i)), true)) << pi;
        for (int j = 0; j < m; ++j) seen.insert(g.cell(i, j));
      }
      for (int j = 0; j < m; ++j) ASSERT_TRUE(monotone(values_at(pi, g.column(j)), false)) << pi;
      ASSERT_EQ(static_cast<int>(seen.size()), m * k);
    }
  }
}

TEST(SubshapeRectangular, Examples) {
  const Permutation pi{3, 1, 4, 2};
  EXPECT_EQ(extract_subshape_rectangular(pi, Partition{2, 2}).positions, (std::vector<int>{0, 1, 2, 3}));
  const auto w21 = extract_subshape_rectangular(pi, Partition{2, 1});
  EXPECT_EQ(w21.positions.size(), 3u);
  EXPECT_TRUE(is_valid_witness(pi, w21));
  EXPECT_EQ(w21.shape, (Partition{2, 1}));
  EXPECT_EQ(extract_subshape_rectangular(pi, Partition{1}).positions.size(), 1u);
  EXPECT_THROW(extract_subshape_rectangular(pi, Partition{3}), precondition_error);
}

TEST(SubshapeRectangular, BothDirectionsOnSmallRectangles) {
  for (auto [m, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const Partition rect = Partition::rectangle(m, k);
    std::vector<Partition> shapes;
    for (int s = 0; s <= m * k; ++s)
      for (auto& mu : partitions_of(s)) shapes.push_back(mu);
    for (const Permutation& pi : knuth_cell(rect)) {
      for (const Partition& mu : shapes) {
        const bool inside = contains(mu, rect);
        ASSERT_EQ(brute_force_find_shape(pi, mu).has_value(), inside) << pi << ' ' << mu;
        if (!inside) continue;
        const auto w = extract_subshape_rectangular(pi, mu);
        ASSERT_TRUE(is_valid_witness(pi, w));
        ASSERT_EQ(w.shape, mu);
      }
    }
  }
}

TEST(ExtractRectangle, Examples) {
  const Permutation a{2, 4, 1, 5, 3};
  const auto w = extract_rectangle(a, 2, 2);
  EXPECT_TRUE(is_rectangle_by_dp(values_at(a, w.positions), 2, 2));
  const Permutation sq{3, 1, 4, 2};
  EXPECT_EQ(extract_rectangle(sq, 2, 2).positions, (std::vector<int>{0, 1, 2, 3}));
  const Permutation b{2, 5, 3, 1, 4};
  const auto col = extract_rectangle(b, 1, 3);
  EXPECT_TRUE(is_rectangle_by_dp(values_at(b, col.positions), 1, 3));
  EXPECT_THROW(extract_rectangle(b, 2, 2), precondition_error);
}

TEST(ExtractRectangle, EveryContainedRectangleUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& pi) {
      const Partition lambda = shape_of(pi);
      for (int k = 1; k <= lambda.length(); ++k)
        for (int m = 1; m <= lambda.part(k - 1); ++m) {
          const auto w = extract_rectangle(pi, m, k);
          ASSERT_TRUE(is_rectangle_by_dp(values_at(pi, w.positions), m, k)) << pi << ' ' << m << 'x' << k;
        }
    });
  }
}

TEST(ExtractShape, Examples) {
  const Permutation a{2, 4, 1, 5, 3};
  const auto w = extract_shape(a, Partition{2, 1});
  EXPECT_EQ(w.positions.size(), 3u);
  EXPECT_TRUE(is_valid_witness(a, w));
  const Permutation sq{3, 1, 4, 2};
  EXPECT_EQ(extract_shape(sq, Partition{2, 2}).positions.size(), 4u);
  const Permutation ex{6, 5, 1, 2, 7, 8, 4, 3};
  const auto w22 = extract_shape(ex, Partition{2, 2});
  EXPECT_TRUE(is_rectangle_by_dp(values_at(ex, w22.positions), 2, 2));
  EXPECT_TRUE(extract_shape(ex, Partition{}).positions.empty());
  try {
    extract_shape(Permutation{2, 5, 3, 1, 4}, Partition{2, 2});
    FAIL() << "expected precondition_error";
  } catch (const precondition_error& e) {
    EXPECT_NE(std::string(e.what()).find("2,2"), std::string::npos) << e.what();
  }
}

TEST(ExtractShape, EveryShapeUnderItsRectangleUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    std::vector<Partition> shapes;
    for (int s = 1; s <= n; ++s)
      for (auto& mu : partitions_of(s)) shapes.push_back(mu);
    for_each_permutation(n, [&](const Permutation& pi) {
      const Partition lambda = shape_of(pi);
      for (const Partition& mu : shapes) {
        if (!contains(Partition::rectangle(mu.first(), mu.length()), lambda)) continue;
        const auto w = extract_shape(pi, mu);
        ASSERT_TRUE(is_valid_witness(pi, w)) << pi << ' ' << mu;
        ASSERT_EQ(w.shape, mu);
      }
    });
  }
}

TEST(ExtractHook, Examples) {
  const Permutation ex{6, 5, 1, 2, 7, 8, 4, 3};
  const auto h = extract_hook_decomposed(ex, 2, 4);
  EXPECT_EQ(h.witness.shape, (Partition{2, 1, 1, 1}));
  expect_hook_decomposition(ex, h, 2, 4);

  const Permutation id = Permutation::identity(7);
  EXPECT_EQ(extract_hook(id, 7, 1).positions.size(), 7u);
  EXPECT_THROW(extract_hook(id, 2, 2), precondition_error);
  EXPECT_THROW(extract_hook(ex, 4, 4), precondition_error);
}

TEST(ExtractHook, LongArmBranchOnConstructedInstance) {
  // LIS 5 (1,5,6,7,8) and LDS 4 (4,3,2,1): shape (5,1,1,1).
  const Permutation pi{4, 3, 2, 1, 5, 6, 7, 8};
  ASSERT_EQ(shape_of(pi), (Partition{5, 1, 1, 1}));
  const auto h = extract_hook_decomposed(pi, 4, 4);
  expect_hook_decomposition(pi, h, 4, 4);
  // The mirror image exercises the long-leg branch.
  const Permutation mirrored{5, 6, 7, 8, 4, 3, 2, 1};
  const auto hm = extract_hook_decomposed(mirrored, 4, 4);
  expect_hook_decomposition(mirrored, hm, 4, 4);
}

TEST(ExtractHook, DecomposesOnAllSmallPermutations) {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& pi) {
      const Partition lambda = shape_of(pi);
      for (int m = 1; m <= lambda.first(); ++m)
        for (int k = 1; k <= lambda.length(); ++k) {
          if (m + k - 1 > n) continue;
          if (m >= 4 && k >= 4) continue;
          const auto h = extract_hook_decomposed(pi, m, k);
          ASSERT_NO_FATAL_FAILURE(expect_hook_decomposition(pi, h, m, k)) << pi << ' ' << m << ',' << k;
        }
    });
  }
}

TEST(ExtractHook, LargeHooksOnRandomPermutations) {
  std::mt19937_64 rng(7);
  int exercised = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = 12 + static_cast<int>(trial % 5);
    const Permutation pi = random_permutation(n, rng);
    const Partition lambda = shape_of(pi);
    for (int m = 4; m <= 6; ++m)
      for (int k = 4; k <= 6; ++k) {
        const bool long_arm = lambda.first() >= 2 * m - 3 && lambda.length() >= k;
        const bool long_leg = lambda.first() >= m && lambda.length() >= 2 * k - 3;
        if (!long_arm && !long_leg) {
          EXPECT_THROW(extract_hook(pi, m, k), precondition_error);
          continue;
        }
        const auto h = extract_hook_decomposed(pi, m, k);
        ASSERT_NO_FATAL_FAILURE(expect_hook_decomposition(pi, h, m, k)) << pi << ' ' << m << ',' << k;
        ++exercised;
      }
  }
  EXPECT_GT(exercised, 100);
}

TEST(HookCounterexample, KnownInstance) {
  EXPECT_EQ(hook_counterexample(4, 4), (Permutation{6, 5, 1, 2, 7, 8, 4, 3}));
  EXPECT_EQ(hook_counterexample(4, 4), fixtures::containment_without_subsequence());
  EXPECT_THROW(hook_counterexample(3, 4), precondition_error);
  EXPECT_THROW(hook_counterexample(4, 3), precondition_error);
}

TEST(HookCounterexample, SharpnessConfirmedByOracle) {
  for (auto [m, k] : std::vector<std::pair<int, int>>{{4, 4}, {4, 5}, {5, 4}, {5, 5}}) {
    const Permutation pi = hook_counterexample(m, k);
    EXPECT_EQ(pi.size(), 2 * m + 2 * k - 8);
    const Partition lambda = shape_of(pi);
    EXPECT_TRUE(contains(Partition::hook(2 * m - 4, 2 * k - 4), lambda)) << lambda;
    EXPECT_FALSE(brute_force_find_shape(pi, Partition::hook(m, k)).has_value()) << m << ',' << k;
    EXPECT_THROW(extract_hook(pi, m, k), precondition_error);
  }
}

TEST(HookCounterexample, NoHookSubsequenceByIndependentScan) {
  // Subset scan with LIS/LDS DP, sharing no code with the library search.
  const Permutation pi = hook_counterexample(4, 4);
  const auto w = pi.word();
  for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
    if (__builtin_popcount(mask) != 7) continue;
    std::vector<int> sub;
    for (int i = 0; i < 8; ++i)
      if (mask >> i & 1u) sub.push_back(w[static_cast<std::size_t>(i)]);
    EXPECT_FALSE(is_hook_by_dp(sub, 4, 4));
  }
}

TEST(BruteForceFindShape, Examples) {
  const Permutation b{2, 5, 3, 1, 4};
  const auto w = brute_force_find_shape(b, Partition{2, 2});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(values_at(b, w->positions), (std::vector<int>{2, 5, 1, 4}));
  EXPECT_FALSE(brute_force_find_shape(fixtures::containment_without_subsequence(), Partition{4, 1, 1, 1}));
  EXPECT_EQ(brute_force_find_shape(b, Partition{1})->positions, (std::vector<int>{0}));
  EXPECT_THROW(brute_force_find_shape(Permutation::identity(40), Partition{5, 5, 5, 5}, 1000), budget_exceeded);
}

TEST(BruteForceFindShape, FirstInLexOrderMatchesRankScan) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation pi = random_permutation(9, rng);
    for (const Partition& mu : {Partition{2, 2}, Partition{3, 1}, Partition{2, 1, 1}, Partition{3, 2}}) {
      const auto pruned = brute_force_find_shape(pi, mu);
      const auto full = find_shape_in_rank_range(pi, mu, 0, ~std::uint64_t{0});
      ASSERT_EQ(pruned.has_value(), full.has_value());
      if (pruned) {
        ASSERT_EQ(pruned->positions, full->positions) << pi << ' ' << mu;
      }
    }
  }
}

TEST(BruteForceFindShape, RankRangesSplitTheSearch) {
  const Permutation pi{6, 5, 1, 2, 7, 8, 4, 3};
  const Partition mu{2, 2};
  const auto whole = find_shape_in_rank_range(pi, mu, 0, 70);
  ASSERT_TRUE(whole);
  std::optional<SubsequenceWitness> first;
  for (std::uint64_t lo = 0; lo < 70 && !first; lo += 7) first = find_shape_in_rank_range(pi, mu, lo, lo + 7);
  ASSERT_TRUE(first);
  EXPECT_EQ(first->positions, whole->positions);
}

TEST(Fixtures, ContainmentWithoutSubsequence) {
  const Permutation pi = fixtures::containment_without_subsequence();
  EXPECT_EQ(shape_of(pi), (Partition{4, 2, 1, 1}));
  EXPECT_TRUE(contains(Partition{4, 1, 1, 1}, shape_of(pi)));
  EXPECT_FALSE(brute_force_find_shape(pi, Partition{4, 1, 1, 1}));
}

TEST(Fixtures, SubsequenceWithoutContainmentFamily) {
  EXPECT_EQ(fixtures::subsequence_without_containment(), (Permutation{2, 5, 3, 1, 4}));
  EXPECT_EQ(fixtures::subsequence_without_containment(5), fixtures::subsequence_without_containment());
  for (int n = 5; n <= 10; ++n) {
    const Permutation pi = fixtures::subsequence_without_containment(n);
    EXPECT_EQ(pi.size(), n);
    EXPECT_FALSE(contains(Partition{2, 2}, shape_of(pi)));
    EXPECT_TRUE(oracle::contains_pattern(pi.word(), {2, 4, 1, 3}) ||
                oracle::contains_pattern(pi.word(), {2, 1, 4, 3}) ||
                oracle::contains_pattern(pi.word(), {3, 1, 4, 2}) ||
                oracle::contains_pattern(pi.word(), {3, 4, 1, 2}));
  }
  EXPECT_THROW(fixtures::subsequence_without_containment(4), precondition_error);
}

TEST(Witness, SelfCertifies) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Permutation pi = random_permutation(10, rng);
    const Partition lambda = shape_of(pi);
    for (const Partition& mu : {Partition{2, 1}, Partition{2, 2}, Partition{3, 1, 1}, Partition{3, 2, 1}}) {
      if (!contains(Partition::rectangle(mu.first(), mu.length()), lambda)) continue;
      const auto w = extract_shape(pi, mu);
      ASSERT_EQ(shape_of(pattern_of(pi, w.positions)), w.shape);
    }
  }
}

TEST(Witness, CertifyRejectsBadPositions) {
  const Permutation pi{3, 1, 4, 2};
  EXPECT_THROW(certify(pi, {0, 4}), validation_error);
  EXPECT_FALSE(is_valid_witness(pi, SubsequenceWitness{{1, 0}, Partition{1, 1}}));
  EXPECT_FALSE(is_valid_witness(pi, SubsequenceWitness{{0, 2}, Partition{1, 1}}));
  EXPECT_TRUE(is_valid_witness(pi, certify(pi, {2, 0})));
}
