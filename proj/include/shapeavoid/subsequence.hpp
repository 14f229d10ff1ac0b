#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shapeavoid/budget.hpp"
#include "shapeavoid/partition.hpp"

namespace shapeavoid {

// RSK insertion tableau that supports undoing the most recent insertion.
// The shape grows by exactly one cell per insertion, and the shape of any
// prefix of a word is contained in the shape of the whole word, which is
// what makes prefix pruning against a target shape sound.
class IncrementalTableau {
 public:
  // Inserts x and returns the row that grew.
  std::size_t push(int x) {
    const std::size_t mark = log_.size();
    std::size_t row = 0;
    for (;; ++row) {
      if (row == rows_.size()) rows_.emplace_back();
      auto& r = rows_[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        log_.push_back({row, kAppended, 0});
        break;
      }
      log_.push_back({row, static_cast<std::size_t>(it - r.begin()), *it});
      std::swap(x, *it);
    }
    marks_.push_back(mark);
    return row;
  }

  void pop() {
    const std::size_t mark = marks_.back();
    marks_.pop_back();
    while (log_.size() > mark) {
      const Step s = log_.back();
      log_.pop_back();
      auto& r = rows_[s.row];
      if (s.index == kAppended) {
        r.pop_back();
        if (r.empty()) rows_.pop_back();
      } else {
        r[s.index] = s.old_value;
      }
    }
  }

  std::size_t row_length(std::size_t row) const {
    return row < rows_.size() ? rows_[row].size() : 0;
  }

 private:
  static constexpr std::size_t kAppended = static_cast<std::size_t>(-1);
  struct Step {
    std::size_t row;
    std::size_t index;
    int old_value;
  };
  std::vector<std::vector<int>> rows_;
  std::vector<Step> log_;
  std::vector<std::size_t> marks_;
};

namespace detail {

class ShapeSearch {
 public:
  ShapeSearch(std::span<const int> word, const Partition& target)
      : word_(word), target_(target), size_(target.size()) {}

  // Lexicographically first set of positions whose subsequence has the
  // target shape.
  std::optional<std::vector<int>> first() {
    chosen_.clear();
    if (size_ > static_cast<int>(word_.size())) return std::nullopt;
    if (dfs(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool dfs(int from) {
    if (static_cast<int>(chosen_.size()) == size_) return true;
    const int need = size_ - static_cast<int>(chosen_.size());
    const int n = static_cast<int>(word_.size());
    for (int p = from; p <= n - need; ++p) {
      const std::size_t row = tableau_.push(word_[static_cast<std::size_t>(p)]);
      if (static_cast<int>(tableau_.row_length(row)) <= target_.part(row)) {
        chosen_.push_back(p);
        if (dfs(p + 1)) {
          tableau_.pop();
          return true;
        }
        chosen_.pop_back();
      }
      tableau_.pop();
    }
    return false;
  }

  std::span<const int> word_;
  const Partition& target_;
  int size_;
  IncrementalTableau tableau_;
  std::vector<int> chosen_;
};

}  // namespace detail

// Positions of the lexicographically first subsequence of `word` with the
// given shape, if any. No budget check; callers bound the work.
inline std::optional<std::vector<int>> find_shape_subsequence(std::span<const int> word,
                                                               const Partition& target) {
  return detail::ShapeSearch(word, target).first();
}

inline bool has_shape_subsequence(std::span<const int> word, const Partition& target) {
  return find_shape_subsequence(word, target).has_value();
}

// The r-subset of {0..n-1} with the given rank in lexicographic order.
inline std::vector<int> unrank_combination(int n, int r, std::uint64_t rank) {
  std::vector<int> combo;
  combo.reserve(static_cast<std::size_t>(r));
  int c = 0;
  for (int slot = 0; slot < r; ++slot) {
    for (;; ++c) {
      const std::uint64_t block = saturating_binomial(n - c - 1, r - slot - 1);
      if (rank < block) break;
      rank -= block;
    }
    combo.push_back(c++);
  }
  return combo;
}

// Advances to the lexicographic successor; false after the last subset.
inline bool next_combination(std::vector<int>& combo, int n) {
  const int r = static_cast<int>(combo.size());
  int i = r - 1;
  while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - r + i) --i;
  if (i < 0) return false;
  ++combo[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < r; ++j)
    combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

}  // namespace shapeavoid
