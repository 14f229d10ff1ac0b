#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shapeavoid/error.hpp"
#include "shapeavoid/min_cost_flow.hpp"
#include "shapeavoid/partition.hpp"
#include "shapeavoid/permutation.hpp"
#include "shapeavoid/rsk.hpp"

namespace shapeavoid {

enum class Direction { increasing, decreasing };

inline const char* to_string(Direction d) {
  return d == Direction::increasing ? "increasing" : "decreasing";
}

// Disjoint monotone subsequences of a host permutation, given as 0-based
// positions. Chains are listed by first position.
struct ChainUnion {
  std::vector<std::vector<int>> chains;
  Direction direction = Direction::increasing;
  int total_size = 0;

  // All positions of the union, ascending.
  std::vector<int> positions() const {
    std::vector<int> all;
    for (const auto& c : chains) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    return all;
  }

  // Chain lengths sorted in decreasing order.
  Partition length_profile() const {
    std::vector<int> lengths;
    for (const auto& c : chains)
      if (!c.empty()) lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
  }
};

// Sum of the first i rows of shape(pi) (columns for the decreasing direction).
inline int greene_prefix(const Permutation& pi, int i, Direction direction) {
  if (i < 1) throw validation_error("greene_prefix needs i >= 1");
  Partition lambda = shape_of(pi);
  if (direction == Direction::decreasing) lambda = conjugate(lambda);
  int sum = 0;
  for (int j = 0; j < i && j < lambda.length(); ++j) sum += lambda.part(static_cast<std::size_t>(j));
  return sum;
}

inline bool is_valid_chain_union(const Permutation& pi, const ChainUnion& cu) {
  std::vector<bool> used(static_cast<std::size_t>(pi.size()), false);
  int total = 0;
  for (const auto& chain : cu.chains) {
    for (std::size_t t = 0; t < chain.size(); ++t) {
      const int p = chain[t];
      if (p < 0 || p >= pi.size() || used[static_cast<std::size_t>(p)]) return false;
      used[static_cast<std::size_t>(p)] = true;
      if (t > 0) {
        const int prev = chain[t - 1];
        if (prev >= p) return false;
        const bool up = pi[static_cast<std::size_t>(prev)] < pi[static_cast<std::size_t>(p)];
        if (up != (cu.direction == Direction::increasing)) return false;
      }
    }
    total += static_cast<int>(chain.size());
  }
  return total == cu.total_size;
}

namespace detail {

// Maps a chain union found in reverse(pi) back onto pi.
inline ChainUnion mirror(ChainUnion cu, int n, Direction direction) {
  for (auto& chain : cu.chains) {
    for (int& p : chain) p = n - 1 - p;
    std::reverse(chain.begin(), chain.end());
  }
  std::sort(cu.chains.begin(), cu.chains.end());
  cu.direction = direction;
  return cu;
}

// Maximum coverage by at most k increasing chains. Each position is split
// into an in/out node pair joined by a unit arc of cost -1; a min-cost flow
// of value <= k from the source then covers as many positions as possible.
inline ChainUnion increasing_chain_union(std::span<const int> word, int k) {
  const int n = static_cast<int>(word.size());
  const int source = 0, sink = 1;
  auto in = [](int i) { return 2 + 2 * i; };
  auto out = [](int i) { return 3 + 2 * i; };
  MinCostFlow flow(2 + 2 * n);
  std::vector<std::pair<int, std::size_t>> start(static_cast<std::size_t>(n));
  std::vector<std::vector<std::pair<int, std::pair<int, std::size_t>>>> next(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    start[static_cast<std::size_t>(i)] = flow.add_arc(source, in(i), 1, 0);
    flow.add_arc(in(i), out(i), 1, -1);
    flow.add_arc(out(i), sink, 1, 0);
    for (int j = i + 1; j < n; ++j)
      if (word[static_cast<std::size_t>(i)] < word[static_cast<std::size_t>(j)])
        next[static_cast<std::size_t>(i)].push_back({j, flow.add_arc(out(i), in(j), 1, 0)});
  }
  flow.solve(source, sink, std::min(k, n), /*only_improving=*/true);

  ChainUnion cu;
  cu.direction = Direction::increasing;
  for (int i = 0; i < n; ++i) {
    if (flow.flow_on(start[static_cast<std::size_t>(i)]) == 0) continue;
    std::vector<int> chain{i};
    int cur = i;
    for (;;) {
      int succ = -1;
      for (const auto& [j, handle] : next[static_cast<std::size_t>(cur)])
        if (flow.flow_on(handle) > 0) {
          succ = j;
          break;
        }
      if (succ < 0) break;
      chain.push_back(succ);
      cur = succ;
    }
    cu.total_size += static_cast<int>(chain.size());
    cu.chains.push_back(std::move(chain));
  }
  return cu;
}

// Patience pass: each value joins the chain whose last value is the largest
// one below it, else opens a new chain.
inline ChainUnion greedy_increasing(std::span<const int> word) {
  ChainUnion cu;
  std::vector<int> tops;  // last value per chain, strictly decreasing
  for (int p = 0; p < static_cast<int>(word.size()); ++p) {
    const int x = word[static_cast<std::size_t>(p)];
    auto it = std::lower_bound(tops.begin(), tops.end(), x, std::greater<int>());
    const auto idx = static_cast<std::size_t>(it - tops.begin());
    if (it == tops.end()) {
      tops.push_back(x);
      cu.chains.push_back({p});
    } else {
      *it = x;
      cu.chains[idx].push_back(p);
    }
  }
  cu.total_size = static_cast<int>(word.size());
  std::sort(cu.chains.begin(), cu.chains.end());
  return cu;
}

inline int longest_run(std::span<const int> values, bool increasing) {
  std::vector<int> tails;
  for (int v : values) {
    const int x = increasing ? v : -v;
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

}  // namespace detail

// A maximum-size union of at most k disjoint monotone subsequences.
inline ChainUnion extract_chain_union(const Permutation& pi, int k, Direction direction) {
  if (k < 1) throw validation_error("extract_chain_union needs k >= 1");
  if (direction == Direction::increasing) return detail::increasing_chain_union(pi.view(), k);
  const Permutation rev = reverse(pi);
  return detail::mirror(detail::increasing_chain_union(rev.view(), k), pi.size(), direction);
}

// Partitions all of pi into monotone chains; the chain count is the longest
// run of the opposite direction.
inline ChainUnion greedy_decompose(const Permutation& pi, Direction direction) {
  if (direction == Direction::increasing) return detail::greedy_increasing(pi.view());
  const Permutation rev = reverse(pi);
  return detail::mirror(detail::greedy_increasing(rev.view()), pi.size(), direction);
}

inline constexpr int kMaxUnionOracleSize = 16;

// table[k] = largest subset whose longest run against `direction` is <= k,
// i.e. (Dilworth) the largest union of k chains in `direction`.
inline std::vector<int> brute_force_union_table(const Permutation& pi, Direction direction) {
  const int n = pi.size();
  if (n > kMaxUnionOracleSize)
    throw budget_exceeded("brute-force union oracle is limited to n <= " +
                          std::to_string(kMaxUnionOracleSize) + " (got n=" + std::to_string(n) + ")");
  std::vector<int> table(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  const unsigned long limit = 1UL << n;
  for (unsigned long mask = 1; mask < limit; ++mask) {
    values.clear();
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1UL) values.push_back(pi[static_cast<std::size_t>(i)]);
    const int width = detail::longest_run(values, direction == Direction::decreasing);
    auto& best = table[static_cast<std::size_t>(width)];
    best = std::max(best, static_cast<int>(values.size()));
  }
  for (std::size_t k = 1; k < table.size(); ++k) table[k] = std::max(table[k], table[k - 1]);
  return table;
}

inline int brute_force_max_union(const Permutation& pi, int k, Direction direction) {
  if (k < 1) throw validation_error("brute_force_max_union needs k >= 1");
  const auto table = brute_force_union_table(pi, direction);
  return table[static_cast<std::size_t>(std::min(k, pi.size()))];
}

}  // namespace shapeavoid
