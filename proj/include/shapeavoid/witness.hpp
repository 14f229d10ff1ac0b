#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "shapeavoid/budget.hpp"
#include "shapeavoid/error.hpp"
#include "shapeavoid/greene.hpp"
#include "shapeavoid/partition.hpp"
#include "shapeavoid/permutation.hpp"
#include "shapeavoid/rsk.hpp"
#include "shapeavoid/subsequence.hpp"

namespace shapeavoid {

// Positions (0-based, ascending) of a subsequence of some host permutation,
// together with the shape of that subsequence.
struct SubsequenceWitness {
  std::vector<int> positions;
  Partition shape;

  friend bool operator==(const SubsequenceWitness&, const SubsequenceWitness&) = default;
};

inline SubsequenceWitness certify(const Permutation& pi, std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  check_positions(positions, pi.size());
  Partition shape = shape_at(pi, positions);
  return {std::move(positions), std::move(shape)};
}

inline bool is_valid_witness(const Permutation& pi, const SubsequenceWitness& w) {
  try {
    check_positions(w.positions, pi.size());
  } catch (const validation_error&) {
    return false;
  }
  return shape_at(pi, w.positions) == w.shape;
}

namespace detail {

inline SubsequenceWitness expect_shape(const Permutation& pi, std::vector<int> positions,
                                       const Partition& target, const char* what) {
  auto w = certify(pi, std::move(positions));
  if (w.shape != target)
    throw std::logic_error(std::string(what) + " produced shape " + w.shape.to_string() +
                           " instead of " + target.to_string());
  return w;
}

inline std::vector<int> compose(std::span<const int> outer, std::span<const int> inner) {
  std::vector<int> out;
  out.reserve(inner.size());
  for (int p : inner) out.push_back(outer[static_cast<std::size_t>(p)]);
  return out;
}

}  // namespace detail

// k increasing chains (rows) by m decreasing chains (columns) of a
// permutation of rectangular shape (m^k); every row meets every column in
// exactly one position.
class RectangularGrid {
 public:
  RectangularGrid(int m, int k, std::vector<int> cells) : m_(m), k_(k), cells_(std::move(cells)) {}

  int width() const noexcept { return m_; }
  int height() const noexcept { return k_; }

  // Position at row i (0-based, < height) and column j (0-based, < width).
  int cell(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(j)];
  }

  std::vector<int> row(int i) const {
    std::vector<int> r;
    for (int j = 0; j < m_; ++j) r.push_back(cell(i, j));
    std::sort(r.begin(), r.end());
    return r;
  }

  std::vector<int> column(int j) const {
    std::vector<int> c;
    for (int i = 0; i < k_; ++i) c.push_back(cell(i, j));
    std::sort(c.begin(), c.end());
    return c;
  }

 private:
  int m_;
  int k_;
  std::vector<int> cells_;
};

// Rows are the greedy increasing chains, columns the greedy decreasing
// chains, each ordered by first position.
inline RectangularGrid rectangular_grid(const Permutation& pi) {
  const Partition lambda = shape_of(pi);
  if (!lambda.is_rectangle())
    throw precondition_error("rectangular_grid needs a rectangular shape, got " +
                             lambda.to_string());
  const int m = lambda.first();
  const int k = lambda.length();
  const ChainUnion rows = greedy_decompose(pi, Direction::increasing);
  const ChainUnion cols = greedy_decompose(pi, Direction::decreasing);
  if (static_cast<int>(rows.chains.size()) != k || static_cast<int>(cols.chains.size()) != m)
    throw std::logic_error("greedy chain counts disagree with shape " + lambda.to_string());

  const auto n = static_cast<std::size_t>(pi.size());
  std::vector<int> row_of(n), col_of(n);
  for (std::size_t i = 0; i < rows.chains.size(); ++i)
    for (int p : rows.chains[i]) row_of[static_cast<std::size_t>(p)] = static_cast<int>(i);
  for (std::size_t j = 0; j < cols.chains.size(); ++j)
    for (int p : cols.chains[j]) col_of[static_cast<std::size_t>(p)] = static_cast<int>(j);

  std::vector<int> cells(n, -1);
  for (std::size_t p = 0; p < n; ++p) {
    auto& slot = cells[static_cast<std::size_t>(row_of[p]) * static_cast<std::size_t>(m) +
                       static_cast<std::size_t>(col_of[p])];
    if (slot != -1) throw std::logic_error("row and column chains meet twice");
    slot = static_cast<int>(p);
  }
  return RectangularGrid(m, k, std::move(cells));
}

// For pi of shape (m^k) and mu ⊆ (m^k): the cells (i, j) with j < mu_i.
inline SubsequenceWitness extract_subshape_rectangular(const Permutation& pi, const Partition& mu) {
  const RectangularGrid grid = rectangular_grid(pi);
  const Partition rect = Partition::rectangle(grid.width(), grid.height());
  if (!contains(mu, rect))
    throw precondition_error("shape " + mu.to_string() + " is not contained in the rectangle " +
                             rect.to_string());
  std::vector<int> positions;
  for (int i = 0; i < mu.length(); ++i)
    for (int j = 0; j < mu.part(static_cast<std::size_t>(i)); ++j) positions.push_back(grid.cell(i, j));
  return detail::expect_shape(pi, std::move(positions), mu, "extract_subshape_rectangular");
}

// Subsequence of shape (m^k) when (m^k) ⊆ shape(pi): a maximum union of k
// increasing chains, then inside it a maximum union of m decreasing chains.
inline SubsequenceWitness extract_rectangle(const Permutation& pi, int m, int k) {
  if (m < 1 || k < 1) throw validation_error("extract_rectangle needs m, k >= 1");
  const Partition rect = Partition::rectangle(m, k);
  const Partition lambda = shape_of(pi);
  if (!contains(rect, lambda))
    throw precondition_error("rectangle " + rect.to_string() + " is not contained in shape " +
                             lambda.to_string());
  const std::vector<int> bar = extract_chain_union(pi, k, Direction::increasing).positions();
  const Permutation bar_pattern = pattern_of(pi, bar);
  const std::vector<int> hat = extract_chain_union(bar_pattern, m, Direction::decreasing).positions();
  return detail::expect_shape(pi, detail::compose(bar, hat), rect, "extract_rectangle");
}

// Subsequence of shape mu whenever (mu_1^k) ⊆ shape(pi), k = number of parts.
inline SubsequenceWitness extract_shape(const Permutation& pi, const Partition& mu) {
  if (mu.empty()) return {};
  const int width = mu.first();
  const int height = mu.length();
  const Partition rect = Partition::rectangle(width, height);
  const Partition lambda = shape_of(pi);
  if (!contains(rect, lambda))
    throw precondition_error("extracting " + mu.to_string() + " needs the rectangle " +
                             rect.to_string() + " inside shape " + lambda.to_string());
  const SubsequenceWitness outer = extract_rectangle(pi, width, height);
  const SubsequenceWitness inner = extract_subshape_rectangular(pattern_of(pi, outer.positions), mu);
  return detail::expect_shape(pi, detail::compose(outer.positions, inner.positions), mu,
                              "extract_shape");
}

// A hook witness split into its increasing arm and decreasing leg, which
// share exactly one position.
struct HookWitness {
  SubsequenceWitness witness;
  std::vector<int> increasing;
  std::vector<int> decreasing;
};

namespace detail {

// Positions of a longest monotone subsequence (patience with back links).
inline std::vector<int> longest_monotone_positions(std::span<const int> word, bool increasing) {
  std::vector<int> tail_pos;
  std::vector<int> prev(word.size(), -1);
  auto key = [&](int p) { return increasing ? word[static_cast<std::size_t>(p)] : -word[static_cast<std::size_t>(p)]; };
  for (int p = 0; p < static_cast<int>(word.size()); ++p) {
    auto it = std::lower_bound(tail_pos.begin(), tail_pos.end(), key(p),
                               [&](int q, int v) { return key(q) < v; });
    if (it != tail_pos.begin()) prev[static_cast<std::size_t>(p)] = *(it - 1);
    if (it == tail_pos.end())
      tail_pos.push_back(p);
    else
      *it = p;
  }
  std::vector<int> out;
  for (int p = tail_pos.empty() ? -1 : tail_pos.back(); p != -1; p = prev[static_cast<std::size_t>(p)])
    out.push_back(p);
  std::reverse(out.begin(), out.end());
  return out;
}

// Given an increasing alpha with |alpha| >= max(m, 2m-3) and a decreasing
// beta with |beta| >= k, builds an increasing m-chain and a decreasing
// k-chain inside alpha ∪ beta (plus at most the pivot alpha[m-2]) that meet
// in exactly one position. When alpha and beta are disjoint the pivot
// alpha[m-2] is placed against beta by position, then by value.
inline HookWitness merge_hook(std::span<const int> word, std::vector<int> alpha,
                              std::vector<int> beta, int m, int k) {
  beta.resize(static_cast<std::size_t>(k));
  auto val = [&](int p) { return word[static_cast<std::size_t>(p)]; };
  auto slice = [&](int from, int count) {
    return std::vector<int>(alpha.begin() + from, alpha.begin() + from + count);
  };
  HookWitness h;
  h.decreasing = beta;

  auto shared = std::find_first_of(alpha.begin(), alpha.end(), beta.begin(), beta.end());
  if (m == 1) {
    h.increasing = {beta.front()};
  } else if (shared != alpha.end()) {
    const int i = static_cast<int>(shared - alpha.begin());
    const int start = std::min(i, static_cast<int>(alpha.size()) - m);
    h.increasing = slice(start, m);
  } else {
    const int a = alpha[static_cast<std::size_t>(m - 2)];
    const auto after = std::upper_bound(beta.begin(), beta.end(), a);
    const auto j = after - beta.begin();  // beta[0..j) lie before the pivot
    if (j > 0 && j < k) {
      const int before = beta[static_cast<std::size_t>(j - 1)];
      const int next = beta[static_cast<std::size_t>(j)];
      if (val(a) < val(before) && val(a) > val(next)) {
        // The pivot slots into beta.
        h.decreasing.insert(h.decreasing.begin() + j, a);
        h.decreasing.pop_back();
        h.increasing = slice(0, m);
      } else if (val(a) < val(next)) {
        h.increasing = slice(0, m - 1);
        h.increasing.push_back(next);
      } else {
        h.increasing = {before};
        const auto tail = slice(m - 2, m - 1);
        h.increasing.insert(h.increasing.end(), tail.begin(), tail.end());
      }
    } else if (j == 0) {
      if (val(a) < val(beta.front())) {
        h.increasing = slice(0, m - 1);
        h.increasing.push_back(beta.front());
      } else {
        h.decreasing.insert(h.decreasing.begin(), a);
        h.decreasing.pop_back();
        h.increasing = slice(0, m);
      }
    } else {
      if (val(a) < val(beta.back())) {
        h.decreasing.push_back(a);
        h.decreasing.erase(h.decreasing.begin());
        h.increasing = slice(0, m);
      } else {
        h.increasing = {beta.back()};
        const auto tail = slice(m - 2, m - 1);
        h.increasing.insert(h.increasing.end(), tail.begin(), tail.end());
      }
    }
  }
  std::vector<int> all = h.increasing;
  all.insert(all.end(), h.decreasing.begin(), h.decreasing.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  h.witness.positions = std::move(all);
  return h;
}

inline HookWitness hook_from_runs(std::span<const int> word, int m, int k, int alpha_len) {
  auto alpha = longest_monotone_positions(word, true);
  auto beta = longest_monotone_positions(word, false);
  alpha.resize(static_cast<std::size_t>(alpha_len));
  return merge_hook(word, std::move(alpha), std::move(beta), m, k);
}

inline HookWitness mirror_hook(HookWitness h, int n) {
  auto flip = [n](std::vector<int>& v) {
    for (int& p : v) p = n - 1 - p;
    std::sort(v.begin(), v.end());
  };
  flip(h.increasing);
  flip(h.decreasing);
  flip(h.witness.positions);
  std::swap(h.increasing, h.decreasing);
  return h;
}

inline HookWitness extract_hook_unchecked(const Permutation& pi, int m, int k) {
  const Partition lambda = shape_of(pi);
  const int lis = lambda.first();
  const int lds = lambda.length();
  const Partition target = Partition::hook(m, k);
  auto reversed = [&](int arm, int leg, int alpha_len) {
    const Permutation rev = reverse(pi);
    return mirror_hook(hook_from_runs(rev.view(), arm, leg, alpha_len), pi.size());
  };

  if (m <= 3 || k <= 3) {
    if (!contains(target, lambda))
      throw precondition_error("hook " + target.to_string() + " is not contained in shape " +
                               lambda.to_string());
    if (m <= 3) return hook_from_runs(pi.view(), m, k, m);
    return reversed(k, m, k);
  }
  if (lis >= 2 * m - 3 && lds >= k) return hook_from_runs(pi.view(), m, k, 2 * m - 3);
  if (lis >= m && lds >= 2 * k - 3) return reversed(k, m, 2 * k - 3);
  throw precondition_error("for m, k >= 4 the shape must contain " +
                           Partition::hook(2 * m - 3, k).to_string() + " or " +
                           Partition::hook(m, 2 * k - 3).to_string() + "; got " +
                           lambda.to_string());
}

}  // namespace detail

// Subsequence of hook shape (m, 1^(k-1)). For m <= 3 or k <= 3 it suffices
// that the shape contains the hook; for m, k >= 4 the shape must contain
// (2m-3, 1^(k-1)) or (m, 1^(2k-4)).
inline HookWitness extract_hook_decomposed(const Permutation& pi, int m, int k) {
  if (m < 1 || k < 1) throw validation_error("extract_hook needs m, k >= 1");
  HookWitness h = detail::extract_hook_unchecked(pi, m, k);
  h.witness = detail::expect_shape(pi, h.witness.positions, Partition::hook(m, k), "extract_hook");
  return h;
}

inline SubsequenceWitness extract_hook(const Permutation& pi, int m, int k) {
  return extract_hook_decomposed(pi, m, k).witness;
}

// (gamma, alpha, delta, beta) with alpha, delta increasing of length m-2 and
// beta, gamma decreasing of length k-2. Its shape contains
// (2m-4, 1^(2k-5)) but it has no subsequence of shape (m, 1^(k-1)).
inline Permutation hook_counterexample(int m, int k) {
  if (m < 4 || k < 4)
    throw precondition_error("hook_counterexample needs m, k >= 4 (got m=" + std::to_string(m) +
                             ", k=" + std::to_string(k) + ")");
  std::vector<int> word;
  for (int v = m + 2 * k - 6; v >= m + k - 3; --v) word.push_back(v);  // gamma
  for (int v = 1; v <= m - 2; ++v) word.push_back(v);                  // alpha
  for (int v = m + 2 * k - 5; v <= 2 * m + 2 * k - 8; ++v) word.push_back(v);  // delta
  for (int v = m + k - 4; v >= m - 1; --v) word.push_back(v);          // beta
  return Permutation(std::move(word));
}

// Lexicographically first subsequence of shape mu, by exhaustive search
// over |mu|-subsets (with prefix-shape pruning).
inline std::optional<SubsequenceWitness> brute_force_find_shape(const Permutation& pi,
                                                                const Partition& mu,
                                                                std::uint64_t budget = kDefaultBudget) {
  require_budget(saturating_binomial(pi.size(), mu.size()), budget,
                 "subsequence search for shape " + mu.to_string());
  auto found = find_shape_subsequence(pi.view(), mu);
  if (!found) return std::nullopt;
  return SubsequenceWitness{std::move(*found), mu};
}

// Scans the |mu|-subsets with lexicographic rank in [first, last) without
// pruning; lets independent workers split one search.
inline std::optional<SubsequenceWitness> find_shape_in_rank_range(const Permutation& pi,
                                                                  const Partition& mu,
                                                                  std::uint64_t first,
                                                                  std::uint64_t last) {
  const int n = pi.size();
  const int r = mu.size();
  last = std::min(last, saturating_binomial(n, r));
  if (first >= last) return std::nullopt;
  std::vector<int> combo = unrank_combination(n, r, first);
  std::vector<int> values(static_cast<std::size_t>(r));
  for (std::uint64_t rank = first; rank < last; ++rank) {
    for (int i = 0; i < r; ++i)
      values[static_cast<std::size_t>(i)] = pi[static_cast<std::size_t>(combo[static_cast<std::size_t>(i)])];
    if (shape_of(values) == mu) return SubsequenceWitness{combo, mu};
    if (!next_combination(combo, n)) break;
  }
  return std::nullopt;
}

namespace fixtures {

// Shape (4,2,1,1) contains (4,1,1,1), yet no subsequence has shape (4,1,1,1).
inline Permutation containment_without_subsequence() { return Permutation{6, 5, 1, 2, 7, 8, 4, 3}; }

// Shape (3,1,1) does not contain (2,2), yet (2,5,1,4) has shape (2,2).
inline Permutation subsequence_without_containment() { return Permutation{2, 5, 3, 1, 4}; }

// The previous fixture with n-5 new maxima prepended as a leading descent:
// (n, n-1, ..., 6, 2, 5, 3, 1, 4). Its shape is the hook (3, 1^(n-3)), so it
// avoids containing (2,2), while (2,5,1,4) is still a (2,2) subsequence.
// Both facts are re-checked before returning.
inline Permutation subsequence_without_containment(int n) {
  if (n < 5) throw precondition_error("the family starts at n = 5");
  std::vector<int> word;
  for (int v = n; v >= 6; --v) word.push_back(v);
  for (int v : {2, 5, 3, 1, 4}) word.push_back(v);
  Permutation pi(std::move(word));
  const Partition square{2, 2};
  if (contains(square, shape_of(pi)) || !has_shape_subsequence(pi.view(), square))
    throw std::logic_error("fixture generator broke at n=" + std::to_string(n));
  return pi;
}

}  // namespace fixtures

}  // namespace shapeavoid
