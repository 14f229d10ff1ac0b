#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "shapeavoid/error.hpp"

namespace shapeavoid {

// One-line word of a permutation of {1..n}. Validated on construction.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
      if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)])
        throw validation_error("not a permutation of 1.." + std::to_string(word_.size()) +
                               ": " + to_string());
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  const std::vector<int>& word() const noexcept { return word_; }
  std::span<const int> view() const noexcept { return word_; }
  int size() const noexcept { return static_cast<int>(word_.size()); }
  int operator[](std::size_t i) const noexcept { return word_[i]; }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < word_.size(); ++i) os << (i ? "," : "") << word_[i];
    return os.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << '(' << p.to_string() << ')';
  }

 private:
  std::vector<int> word_;
};

// Relabels distinct values to 1..n preserving relative order.
inline std::vector<int> standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)]; });
  std::vector<int> out(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  return out;
}

// Checks that positions are strictly increasing and inside [0, n).
inline void check_positions(std::span<const int> positions, int n) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 0 || positions[i] >= n)
      throw validation_error("position " + std::to_string(positions[i]) + " out of range for n=" +
                             std::to_string(n));
    if (i > 0 && positions[i] <= positions[i - 1])
      throw validation_error("positions must be strictly increasing");
  }
}

// The permutation order-isomorphic to pi restricted to the given positions
// (0-based, strictly increasing).
inline Permutation pattern_of(const Permutation& pi, std::span<const int> positions) {
  check_positions(positions, pi.size());
  std::vector<int> values;
  values.reserve(positions.size());
  for (int p : positions) values.push_back(pi[static_cast<std::size_t>(p)]);
  return Permutation(standardize(values));
}

inline Permutation reverse(const Permutation& pi) {
  std::vector<int> w(pi.word().rbegin(), pi.word().rend());
  return Permutation(std::move(w));
}

// "6,5,1,2,7,8,4,3", or the digit shorthand "65127843" when n <= 9.
inline Permutation parse_permutation(const std::string& text) {
  std::vector<int> word;
  if (text.find(',') == std::string::npos && text.size() > 1) {
    if (text.size() > 9)
      throw validation_error("digit-string permutations are limited to n <= 9; use commas: " + text);
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw validation_error("not a permutation: '" + text + "'");
      word.push_back(c - '0');
    }
    return Permutation(std::move(word));
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw validation_error("not a permutation entry: '" + item + "'");
    }
    if (used != item.size()) throw validation_error("not a permutation entry: '" + item + "'");
    word.push_back(v);
  }
  return Permutation(std::move(word));
}

}  // namespace shapeavoid
