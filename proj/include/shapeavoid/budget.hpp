#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "shapeavoid/error.hpp"

namespace shapeavoid {

// Work units are "candidates examined": subsequences for the subsequence
// oracles, permutations for full scans of S_n.
inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

inline std::uint64_t saturating_binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    const auto num = static_cast<std::uint64_t>(n - r + i);
    if (result > kMax / num) return kMax;
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

inline std::uint64_t saturating_factorial(int n) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int i = 2; i <= n; ++i) {
    if (result > kMax / static_cast<std::uint64_t>(i)) return kMax;
    result *= static_cast<std::uint64_t>(i);
  }
  return result;
}

inline void require_budget(std::uint64_t work, std::uint64_t budget, const std::string& what) {
  if (work > budget)
    throw budget_exceeded(what + " needs " + std::to_string(work) + " work units, budget is " +
                          std::to_string(budget));
}

}  // namespace shapeavoid
