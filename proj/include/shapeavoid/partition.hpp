#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "shapeavoid/error.hpp"

namespace shapeavoid {

// An integer partition: weakly decreasing positive parts. Trailing zeros are
// stripped on construction, and part(i) past the end reads as 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw validation_error("partition parts must be positive: " + to_string());
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw validation_error("partition parts must be weakly decreasing: " + to_string());
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // (width^height), e.g. rectangle(3, 2) == (3,3).
  static Partition rectangle(int width, int height) {
    if (width <= 0 || height <= 0) return {};
    return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
  }

  // (arm, 1^(leg-1)).
  static Partition hook(int arm, int leg) {
    if (arm <= 0 || leg <= 0) return {};
    std::vector<int> p(static_cast<std::size_t>(leg), 1);
    p[0] = arm;
    return Partition(std::move(p));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  int first() const noexcept { return part(0); }

  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  bool is_rectangle() const noexcept {
    return !parts_.empty() && parts_.front() == parts_.back();
  }
  bool is_hook() const noexcept { return parts_.size() <= 1 || parts_[1] == 1; }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '(' << p.to_string() << ')';
  }

 private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> result(static_cast<std::size_t>(lambda.first()), 0);
  for (int row : lambda.parts())
    for (int c = 0; c < row; ++c) ++result[static_cast<std::size_t>(c)];
  return Partition(std::move(result));
}

// mu ⊆ lambda: every part of mu fits under the matching part of lambda.
inline bool contains(const Partition& mu, const Partition& lambda) {
  if (mu.length() > lambda.length()) return false;
  for (std::size_t i = 0; i < mu.parts().size(); ++i)
    if (mu.parts()[i] > lambda.parts()[i]) return false;
  return true;
}

// lambda dominates mu: every prefix sum of mu is at most that of lambda.
inline bool dominates(const Partition& lambda, const Partition& mu) {
  const std::size_t len = std::max(lambda.parts().size(), mu.parts().size());
  long long lsum = 0, msum = 0;
  for (std::size_t i = 0; i < len; ++i) {
    lsum += lambda.part(i);
    msum += mu.part(i);
    if (msum > lsum) return false;
  }
  return true;
}

// Comma-separated parts, e.g. "4,2,1,1". The empty string is the empty partition.
inline Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return {};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw validation_error("not a partition part: '" + item + "'");
    }
    if (used != item.size()) throw validation_error("not a partition part: '" + item + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

}  // namespace shapeavoid
