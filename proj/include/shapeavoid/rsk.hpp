#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "shapeavoid/error.hpp"
#include "shapeavoid/partition.hpp"
#include "shapeavoid/permutation.hpp"

namespace shapeavoid {

// A standard Young tableau, stored row by row.
class StandardTableau {
 public:
  StandardTableau() = default;

  explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    validate();
  }

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int size() const noexcept {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
  }

  Partition shape() const {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
  }

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  void validate() const {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].empty()) throw validation_error("tableau rows must be nonempty");
      if (r > 0 && rows_[r].size() > rows_[r - 1].size())
        throw validation_error("tableau row lengths must be weakly decreasing");
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        const int v = rows_[r][c];
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
          throw validation_error("tableau entries must be exactly 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v)] = true;
        if (c > 0 && rows_[r][c - 1] >= v)
          throw validation_error("tableau rows must strictly increase");
        if (r > 0 && rows_[r - 1][c] >= v)
          throw validation_error("tableau columns must strictly increase");
      }
    }
  }

  std::vector<std::vector<int>> rows_;
};

// Insertion tableau P and recording tableau Q of the RSK correspondence.
struct RskPair {
  StandardTableau p;
  StandardTableau q;

  Partition shape() const { return p.shape(); }

  friend bool operator==(const RskPair&, const RskPair&) = default;
};

// Row insertion: each value bumps the smallest entry of the row strictly
// greater than it into the next row.
inline RskPair rsk(const Permutation& pi) {
  std::vector<std::vector<int>> p, q;
  for (int i = 0; i < pi.size(); ++i) {
    int x = pi[static_cast<std::size_t>(i)];
    std::size_t row = 0;
    for (;; ++row) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({i + 1});
        break;
      }
      auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
      if (it == p[row].end()) {
        p[row].push_back(x);
        q[row].push_back(i + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

inline Permutation rsk_inverse(const RskPair& pair) {
  if (pair.p.shape() != pair.q.shape())
    throw validation_error("RSK pair shapes differ: " + pair.p.shape().to_string() + " vs " +
                           pair.q.shape().to_string());
  auto p = pair.p.rows();
  auto q = pair.q.rows();
  const int n = pair.p.size();
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    // Entry i of Q sits at the end of some row, and that cell is a corner.
    std::size_t row = 0;
    while (q[row].back() != i) ++row;
    q[row].pop_back();
    int x = p[row].back();
    p[row].pop_back();
    if (p[row].empty()) {
      p.pop_back();
      q.pop_back();
    }
    while (row-- > 0) {
      // Largest entry of the row above that is smaller than x.
      auto it = std::lower_bound(p[row].begin(), p[row].end(), x);
      --it;
      std::swap(x, *it);
    }
    word[static_cast<std::size_t>(i - 1)] = x;
  }
  return Permutation(std::move(word));
}

// Shape of any sequence of distinct integers; only the relative order matters.
inline Partition shape_of(std::span<const int> values) {
  std::vector<std::vector<int>> rows;
  for (int v : values) {
    int x = v;
    for (std::size_t row = 0;; ++row) {
      if (row == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto it = std::upper_bound(rows[row].begin(), rows[row].end(), x);
      if (it == rows[row].end()) {
        rows[row].push_back(x);
        break;
      }
      std::swap(x, *it);
    }
  }
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

inline Partition shape_of(const Permutation& pi) { return shape_of(pi.view()); }

// Shape of pi restricted to the given positions.
inline Partition shape_at(const Permutation& pi, std::span<const int> positions) {
  std::vector<int> values;
  values.reserve(positions.size());
  for (int p : positions) values.push_back(pi[static_cast<std::size_t>(p)]);
  return shape_of(values);
}

}  // namespace shapeavoid
