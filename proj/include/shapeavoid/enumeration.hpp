#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "shapeavoid/bigint.hpp"
#include "shapeavoid/budget.hpp"
#include "shapeavoid/error.hpp"
#include "shapeavoid/parallel.hpp"
#include "shapeavoid/partition.hpp"
#include "shapeavoid/permutation.hpp"
#include "shapeavoid/rsk.hpp"
#include "shapeavoid/subsequence.hpp"

namespace shapeavoid {

// ---------------------------------------------------------------------------
// Partitions and standard tableaux

inline constexpr int kUncapped = std::numeric_limits<int>::max();

namespace detail {

template <class Cap, class F>
void partitions_rec(int remaining, int max_part, std::vector<int>& parts, const Cap& cap, F& f) {
  if (remaining == 0) {
    f(Partition(parts));
    return;
  }
  const int row = static_cast<int>(parts.size());
  const int top = std::min({remaining, max_part, cap(row)});
  for (int p = top; p >= 1; --p) {
    parts.push_back(p);
    partitions_rec(remaining - p, p, parts, cap, f);
    parts.pop_back();
  }
}

}  // namespace detail

// Visits the partitions of n whose i-th part (0-based) is at most cap(i),
// in reverse lexicographic order.
template <class Cap, class F>
void for_each_partition(int n, const Cap& cap, F&& f) {
  if (n < 0) return;
  std::vector<int> parts;
  detail::partitions_rec(n, n, parts, cap, f);
}

template <class F>
void for_each_partition(int n, F&& f) {
  for_each_partition(n, [](int) { return kUncapped; }, std::forward<F>(f));
}

// Every partition of n, in reverse lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

// f^lambda by the hook-length formula, exactly.
inline BigInt syt_count(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    const int row = lambda.part(static_cast<std::size_t>(i));
    for (int j = 0; j < row; ++j) hooks *= (row - j) + (conj.part(static_cast<std::size_t>(j)) - i) - 1;
  }
  return factorial(lambda.size()) / hooks;
}

namespace detail {

template <class F>
void tableaux_rec(const Partition& shape, int next, int n, std::vector<std::vector<int>>& rows, F& f) {
  if (next > n) {
    f(StandardTableau(rows));
    return;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto len = rows[r].size();
    if (static_cast<int>(len) >= shape.part(r)) continue;
    if (r > 0 && rows[r - 1].size() <= len) continue;
    rows[r].push_back(next);
    tableaux_rec(shape, next + 1, n, rows, f);
    rows[r].pop_back();
  }
}

}  // namespace detail

template <class F>
void for_each_standard_tableau(const Partition& shape, F&& f) {
  std::vector<std::vector<int>> rows(shape.parts().size());
  const int n = shape.size();
  if (n == 0) {
    f(StandardTableau{});
    return;
  }
  // Rows start empty; StandardTableau is only built once every row is full.
  detail::tableaux_rec(shape, 1, n, rows, f);
}

inline std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  std::vector<StandardTableau> out;
  for_each_standard_tableau(shape, [&](StandardTableau t) { out.push_back(std::move(t)); });
  return out;
}

// All permutations of shape mu, built from pairs of tableaux through inverse
// RSK and returned in lexicographic order.
inline std::vector<Permutation> knuth_cell(const Partition& mu, std::uint64_t budget = kDefaultBudget) {
  const BigInt f = syt_count(mu);
  const BigInt work = f * f;
  if (work > budget)
    throw budget_exceeded("Knuth cell of " + mu.to_string() + " has " + to_decimal(work) +
                          " members, budget is " + std::to_string(budget));
  const auto tableaux = standard_tableaux(mu);
  std::vector<Permutation> cell;
  cell.reserve(tableaux.size() * tableaux.size());
  for (const auto& p : tableaux)
    for (const auto& q : tableaux) cell.push_back(rsk_inverse(RskPair{p, q}));
  std::sort(cell.begin(), cell.end());
  return cell;
}

// ---------------------------------------------------------------------------
// Pattern containment

namespace detail {

// Backtracking embedding of a pattern. For every pattern slot t, only the
// nearest earlier slots in value (just below and just above) need checking.
class PatternMatcher {
 public:
  explicit PatternMatcher(std::span<const int> pattern)
      : pattern_(pattern.begin(), pattern.end()),
        below_(pattern.size(), -1),
        above_(pattern.size(), -1),
        chosen_(pattern.size()) {
    for (std::size_t t = 0; t < pattern_.size(); ++t) {
      for (std::size_t s = 0; s < t; ++s) {
        if (pattern_[s] < pattern_[t] &&
            (below_[t] < 0 || pattern_[s] > pattern_[static_cast<std::size_t>(below_[t])]))
          below_[t] = static_cast<int>(s);
        if (pattern_[s] > pattern_[t] &&
            (above_[t] < 0 || pattern_[s] < pattern_[static_cast<std::size_t>(above_[t])]))
          above_[t] = static_cast<int>(s);
      }
    }
  }

  bool occurs_in(std::span<const int> word) {
    word_ = word;
    return place(0, 0);
  }

 private:
  bool place(std::size_t slot, int from) {
    if (slot == pattern_.size()) return true;
    const int n = static_cast<int>(word_.size());
    const int last = n - static_cast<int>(pattern_.size() - slot);
    for (int p = from; p <= last; ++p) {
      const int v = word_[static_cast<std::size_t>(p)];
      if (below_[slot] >= 0 && v < chosen_[static_cast<std::size_t>(below_[slot])]) continue;
      if (above_[slot] >= 0 && v > chosen_[static_cast<std::size_t>(above_[slot])]) continue;
      chosen_[slot] = v;
      if (place(slot + 1, p + 1)) return true;
    }
    return false;
  }

  std::vector<int> pattern_;
  std::vector<int> below_;
  std::vector<int> above_;
  std::vector<int> chosen_;
  std::span<const int> word_;
};

}  // namespace detail

inline bool contains_pattern(const Permutation& pi, const Permutation& sigma,
                             std::uint64_t budget = kDefaultBudget) {
  if (sigma.size() > pi.size()) return false;
  require_budget(saturating_binomial(pi.size(), sigma.size()), budget,
                 "pattern search for " + sigma.to_string());
  return detail::PatternMatcher(sigma.view()).occurs_in(pi.view());
}

// True iff no subsequence of pi has shape mu, i.e. pi avoids every member of
// the Knuth cell of mu. Decided by a pruned search over |mu|-subsets.
inline bool avoids_shape(const Permutation& pi, const Partition& mu,
                         std::uint64_t budget = kDefaultBudget) {
  require_budget(saturating_binomial(pi.size(), mu.size()), budget,
                 "subsequence search for shape " + mu.to_string());
  return !has_shape_subsequence(pi.view(), mu);
}

// ---------------------------------------------------------------------------
// Counts

enum class CountMethod { brute, hook_formula, two_two_formula, cell_sum_bound };

inline const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::hook_formula: return "hook-formula";
    case CountMethod::two_two_formula: return "two-two-formula";
    case CountMethod::cell_sum_bound: return "cell-sum-bound";
  }
  return "?";
}

inline CountMethod parse_count_method(const std::string& s) {
  if (s == "brute") return CountMethod::brute;
  if (s == "hook-formula" || s == "hook") return CountMethod::hook_formula;
  if (s == "two-two-formula" || s == "two-two") return CountMethod::two_two_formula;
  if (s == "cell-sum-bound" || s == "bound") return CountMethod::cell_sum_bound;
  throw validation_error("unknown count method '" + s + "'");
}

// A shape or a single pattern.
using CountTarget = std::variant<Partition, Permutation>;

inline std::string target_kind(const CountTarget& t) {
  return std::holds_alternative<Partition>(t) ? "shape" : "pattern";
}

inline std::string target_text(const CountTarget& t) {
  return std::visit([](const auto& x) { return x.to_string(); }, t);
}

struct CountRecord {
  int n = 0;
  CountTarget target;
  BigInt count;
  CountMethod method = CountMethod::brute;

  // cell-sum-bound records bound the avoider count from above.
  bool is_upper_bound() const noexcept { return method == CountMethod::cell_sum_bound; }

  friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

struct ScanOptions {
  int jobs = default_jobs();
  std::uint64_t budget = kDefaultBudget;
};

namespace detail {

template <class Pred>
BigInt count_permutations(int n, const ScanOptions& opts, const std::string& what, Pred pred) {
  require_budget(saturating_factorial(n), opts.budget, what);
  const auto shards = sharded_scan<std::uint64_t>(n, opts.jobs, [&](std::span<const int> word, std::uint64_t& acc) {
    if (pred(word)) ++acc;
  });
  BigInt total = 0;
  for (auto c : shards) total += c;
  return total;
}

}  // namespace detail

// |Avoid_n^mu| by scanning S_n.
inline CountRecord avoid_count_brute(int n, const Partition& mu, const ScanOptions& opts = {}) {
  if (n < 0) throw validation_error("n must be >= 0");
  BigInt count = detail::count_permutations(n, opts, "brute-force count over S_" + std::to_string(n),
                                            [&](std::span<const int> w) { return !has_shape_subsequence(w, mu); });
  return {n, mu, std::move(count), CountMethod::brute};
}

inline CountRecord single_pattern_avoid_count(int n, const Permutation& sigma, const ScanOptions& opts = {}) {
  if (n < 0) throw validation_error("n must be >= 0");
  require_budget(saturating_factorial(n), opts.budget, "brute-force count over S_" + std::to_string(n));
  struct Tally {
    std::uint64_t count = 0;
    std::optional<detail::PatternMatcher> matcher;
  };
  const auto shards = sharded_scan<Tally>(n, opts.jobs, [&](std::span<const int> w, Tally& t) {
    if (!t.matcher) t.matcher.emplace(sigma.view());
    if (sigma.size() > static_cast<int>(w.size()) || !t.matcher->occurs_in(w)) ++t.count;
  });
  BigInt count = 0;
  for (const auto& t : shards) count += t.count;
  return {n, sigma, std::move(count), CountMethod::brute};
}

// Sum of (f^lambda)^2 over partitions of n with lambda_i <= cap(i).
template <class Cap>
BigInt squared_syt_sum(int n, const Cap& cap) {
  BigInt total = 0;
  for_each_partition(n, cap, [&](const Partition& lambda) {
    const BigInt f = syt_count(lambda);
    total += f * f;
  });
  return total;
}

// #{pi in S_n : lambda_1 < m} and #{pi in S_n : lambda'_1 < k}.
inline BigInt count_shorter_rows(int n, int m) {
  return squared_syt_sum(n, [m](int) { return m - 1; });
}
inline BigInt count_fewer_rows(int n, int k) {
  return squared_syt_sum(n, [k](int row) { return row < k - 1 ? kUncapped : 0; });
}

// Smallest n at which the two-cell-sum count for the hook (m, 1^(k-1)) is
// proven; below it the formula is refused.
inline int hook_formula_threshold(int m, int k) {
  const int disjoint = (m - 1) * (k - 1);
  if (m <= 3 || k <= 3) return disjoint + 1;
  return std::max(disjoint, (2 * m - 4) * (2 * k - 4)) + 1;
}

// |Avoid_n^(m,1^(k-1))| as (#lambda_1 < m) + (#lambda'_1 < k).
inline CountRecord avoid_count_hook(int n, int m, int k) {
  if (m < 1 || k < 1) throw validation_error("hook needs m, k >= 1");
  const int threshold = hook_formula_threshold(m, k);
  if (n < threshold) {
    std::string why = (m <= 3 || k <= 3)
                          ? "the two avoider sets are disjoint only for n > (m-1)(k-1) = " +
                                std::to_string((m - 1) * (k - 1))
                          : "for m, k >= 4 the cell identity is proven only for n > (2m-4)(2k-4) = " +
                                std::to_string((2 * m - 4) * (2 * k - 4));
    throw precondition_error("hook formula for " + Partition::hook(m, k).to_string() +
                             " needs n >= " + std::to_string(threshold) + " (" + why + "); got n=" +
                             std::to_string(n) + "; use the brute method instead");
  }
  BigInt count = count_shorter_rows(n, m) + count_fewer_rows(n, k);
  return {n, Partition::hook(m, k), std::move(count), CountMethod::hook_formula};
}

// |Avoid_n^(2,2)| from a_1 = 1, a_2 = 2, a_n = 4 a_(n-1) - 2 a_(n-2).
inline CountRecord avoid_count_22(int n) {
  if (n < 1) throw validation_error("avoid_count_22 needs n >= 1");
  BigInt prev = 1, cur = 2;
  if (n == 1) cur = 1;
  for (int i = 3; i <= n; ++i) {
    BigInt next = 4 * cur - 2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, Partition{2, 2}, std::move(cur), CountMethod::two_two_formula};
}

// log of (1/2)(2+√2)^(n-1) + (1/2)(2-√2)^(n-1), stable for large n.
inline double log_avoid_22_closed_form(int n) {
  const double big = 2.0 + std::sqrt(2.0);
  const double small = 2.0 - std::sqrt(2.0);
  const double ratio = std::pow(small / big, n - 1);
  return (n - 1) * std::log(big) - std::log(2.0) + std::log1p(ratio);
}

// Upper bound on |Avoid_n^mu|: the number of permutations whose shape does
// not contain the rectangle (mu_1^k), k = number of parts of mu.
inline CountRecord cell_sum_bound(int n, const Partition& mu) {
  if (n < 0) throw validation_error("n must be >= 0");
  const int k = mu.length();
  const int width = mu.first();
  BigInt sum = 0;
  if (k > 0)
    sum = squared_syt_sum(n, [k, width](int row) { return row < k - 1 ? kUncapped : width - 1; });
  return {n, mu, std::move(sum), CountMethod::cell_sum_bound};
}

// ---------------------------------------------------------------------------
// Avoider set vs. union of Knuth cells

enum class SetRelation { equal, avoid_strictly_inside, union_strictly_inside, neither };

inline const char* to_string(SetRelation r) {
  switch (r) {
    case SetRelation::equal: return "=";
    case SetRelation::avoid_strictly_inside: return "⊆ strictly";
    case SetRelation::union_strictly_inside: return "⊇ strictly";
    case SetRelation::neither: return "neither";
  }
  return "?";
}

// Compares Avoid_n^mu with the union of Knuth cells C^lambda, lambda ⊢ n,
// mu ⊄ lambda, by classifying every permutation of S_n.
struct CellIdentityReport {
  int n = 0;
  Partition mu;
  std::uint64_t both = 0;        // avoids mu and shape does not contain mu
  std::uint64_t avoid_only = 0;  // avoids mu although shape contains mu
  std::uint64_t union_only = 0;  // has a mu subsequence although shape does not contain mu
  std::uint64_t neither_set = 0;
  std::optional<Permutation> avoid_only_example;
  std::optional<Permutation> union_only_example;

  std::uint64_t avoid_count() const { return both + avoid_only; }
  std::uint64_t union_count() const { return both + union_only; }

  SetRelation relation() const {
    if (avoid_only == 0 && union_only == 0) return SetRelation::equal;
    if (avoid_only == 0) return SetRelation::avoid_strictly_inside;
    if (union_only == 0) return SetRelation::union_strictly_inside;
    return SetRelation::neither;
  }
};

inline CellIdentityReport verify_cell_identity(int n, const Partition& mu, const ScanOptions& opts = {}) {
  if (n < 0) throw validation_error("n must be >= 0");
  require_budget(saturating_factorial(n), opts.budget, "cell identity check over S_" + std::to_string(n));
  struct Tally {
    std::uint64_t both = 0, avoid_only = 0, union_only = 0, neither = 0;
    std::optional<std::vector<int>> avoid_only_example, union_only_example;
  };
  const auto shards = sharded_scan<Tally>(n, opts.jobs, [&](std::span<const int> w, Tally& t) {
    const bool avoids = !has_shape_subsequence(w, mu);
    const bool in_union = !contains(mu, shape_of(w));
    if (avoids && in_union) {
      ++t.both;
    } else if (avoids) {
      ++t.avoid_only;
      if (!t.avoid_only_example) t.avoid_only_example.emplace(w.begin(), w.end());
    } else if (in_union) {
      ++t.union_only;
      if (!t.union_only_example) t.union_only_example.emplace(w.begin(), w.end());
    } else {
      ++t.neither;
    }
  });
  CellIdentityReport r;
  r.n = n;
  r.mu = mu;
  for (const auto& t : shards) {
    r.both += t.both;
    r.avoid_only += t.avoid_only;
    r.union_only += t.union_only;
    r.neither_set += t.neither;
    if (!r.avoid_only_example && t.avoid_only_example) r.avoid_only_example = Permutation(*t.avoid_only_example);
    if (!r.union_only_example && t.union_only_example) r.union_only_example = Permutation(*t.union_only_example);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Growth

struct GrowthPoint {
  int n;
  double root;  // count^(1/2n)
};

struct GrowthSeries {
  Partition mu;
  std::vector<GrowthPoint> points;
  double lower_ref = 0;  // max(ht, wd)
  double upper_ref = 0;  // ht + wd
  std::optional<double> hook_limit;  // max(m-1, k-1) for hooks
};

inline double growth_root(const BigInt& count, int n) {
  if (n < 1) throw validation_error("growth roots need n >= 1");
  return std::exp(log_big(count) / (2.0 * n));
}

inline GrowthSeries growth_series(std::span<const CountRecord> counts, const Partition& mu) {
  if (counts.empty()) throw validation_error("growth_series needs at least one count");
  GrowthSeries g;
  g.mu = mu;
  const int ht = conjugate(mu).first() - 1;
  const int wd = mu.first() - 1;
  g.lower_ref = std::max(ht, wd);
  g.upper_ref = ht + wd;
  if (!mu.empty() && mu.is_hook()) g.hook_limit = std::max(mu.first() - 1, mu.length() - 1);
  for (const auto& rec : counts) {
    const auto* shape = std::get_if<Partition>(&rec.target);
    if (!shape || *shape != mu)
      throw validation_error("count record for " + target_text(rec.target) + " in a series for " +
                             mu.to_string());
    if (rec.count <= 0)
      throw precondition_error("growth roots need positive counts (n=" + std::to_string(rec.n) + ")");
    g.points.push_back({rec.n, growth_root(rec.count, rec.n)});
  }
  return g;
}

}  // namespace shapeavoid
