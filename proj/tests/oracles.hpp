#pragma once

// Independent reference computations used only by the tests. None of these
// go through the library's RSK, flow, or hook-length code paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

// O(n^2) longest strictly increasing / decreasing subsequence.
inline int lis(const std::vector<int>& w, bool increasing = true) {
  std::vector<int> best(w.size(), 1);
  int result = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i)
      if ((increasing ? w[i] < w[j] : w[i] > w[j]) && best[i] + 1 > best[j]) best[j] = best[i] + 1;
    result = std::max(result, best[j]);
  }
  return result;
}
inline int lds(const std::vector<int>& w) { return lis(w, false); }

// Relative order of a sequence of distinct values.
inline std::vector<int> flatten(const std::vector<int>& v) {
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int x : v) out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
  return out;
}

// Does some subsequence of `word` flatten to `pattern`? Plain subset scan.
inline bool contains_pattern(const std::vector<int>& word, const std::vector<int>& pattern) {
  const int n = static_cast<int>(word.size()), m = static_cast<int>(pattern.size());
  if (m > n) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) sub.push_back(word[static_cast<std::size_t>(i)]);
    if (flatten(sub) == pattern) return true;
  }
  return false;
}

// Number of partitions of n with parts <= k, by the standard recurrence.
inline long long partition_count(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partition_count(n - k, k) + partition_count(n, k - 1);
}
inline long long partition_count(int n) { return partition_count(n, n); }

// f^lambda by removing corners: f(lambda) = sum over corners f(lambda - corner).
inline boost::multiprecision::cpp_int syt_by_corners(std::vector<int> parts) {
  static std::map<std::vector<int>, boost::multiprecision::cpp_int> memo;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (parts.empty()) return 1;
  if (auto it = memo.find(parts); it != memo.end()) return it->second;
  boost::multiprecision::cpp_int total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
    auto smaller = parts;
    --smaller[i];
    total += syt_by_corners(smaller);
  }
  memo[parts] = total;
  return total;
}

}  // namespace oracle
