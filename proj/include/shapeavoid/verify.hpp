#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shapeavoid/enumeration.hpp"
#include "shapeavoid/greene.hpp"
#include "shapeavoid/partition.hpp"
#include "shapeavoid/permutation.hpp"
#include "shapeavoid/rsk.hpp"
#include "shapeavoid/witness.hpp"

namespace shapeavoid {

// Outcome of one named property suite: constructive results checked against
// brute-force oracles over exhaustive or seeded-random inputs.
struct SuiteReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

struct VerifyOptions {
  int max_n = 0;  // 0 = suite default
  std::uint64_t seed = 1;
  int samples = 500;
  ScanOptions scan;
};

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(std::move(w));
}

template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    f(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

// All partitions of size 0..max_size.
inline std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int s = 0; s <= max_size; ++s)
    for (auto& p : partitions_of(s)) out.push_back(std::move(p));
  return out;
}

namespace suites {

inline void check_greene_on(const Permutation& pi, SuiteReport& r) {
  for (Direction dir : {Direction::increasing, Direction::decreasing}) {
    const auto table = brute_force_union_table(pi, dir);
    const Partition lambda = dir == Direction::increasing ? shape_of(pi) : conjugate(shape_of(pi));
    for (int k = 1; k <= pi.size(); ++k) {
      const ChainUnion cu = extract_chain_union(pi, k, dir);
      const int prefix = greene_prefix(pi, k, dir);
      r.check(prefix == cu.total_size && prefix == table[static_cast<std::size_t>(k)] &&
                  is_valid_chain_union(pi, cu) && static_cast<int>(cu.chains.size()) <= k &&
                  dominates(lambda, cu.length_profile()),
              [&] {
                std::ostringstream os;
                os << "pi=" << pi << " k=" << k << ' ' << to_string(dir) << ": prefix=" << prefix
                   << " flow=" << cu.total_size << " oracle=" << table[static_cast<std::size_t>(k)];
                return os.str();
              });
    }
    const ChainUnion greedy = greedy_decompose(pi, dir);
    const int expected = dir == Direction::increasing ? conjugate(shape_of(pi)).first() : shape_of(pi).first();
    r.check(is_valid_chain_union(pi, greedy) && greedy.total_size == pi.size() &&
                static_cast<int>(greedy.chains.size()) == expected && dominates(lambda, greedy.length_profile()),
            [&] {
              std::ostringstream os;
              os << "greedy " << to_string(dir) << " decomposition of " << pi << " has " << greedy.chains.size()
                 << " chains, expected " << expected;
              return os.str();
            });
  }
}

// Flow extraction, shape prefix sums and the subset oracle agree.
inline SuiteReport chain_unions(const VerifyOptions& opt) {
  SuiteReport r{"greene", 0, 0, {}};
  const int max_n = opt.max_n > 0 ? opt.max_n : 6;
  for (int n = 1; n <= max_n; ++n) for_each_permutation(n, [&](const Permutation& pi) { check_greene_on(pi, r); });
  std::mt19937_64 rng(opt.seed);
  for (int s = 0; s < opt.samples; ++s) check_greene_on(random_permutation(12, rng), r);
  return r;
}

inline void check_cell_relation(int n, const Partition& mu, SetRelation expected, const VerifyOptions& opt,
                                SuiteReport& r) {
  const auto report = verify_cell_identity(n, mu, opt.scan);
  r.check(report.relation() == expected, [&] {
    std::ostringstream os;
    os << "n=" << n << " mu=" << mu << ": relation " << to_string(report.relation()) << ", expected "
       << to_string(expected);
    return os.str();
  });
}

// Avoiders of (m) and of (1^m) are exactly the cells whose shape lacks them.
inline SuiteReport monotone_cells(const VerifyOptions& opt) {
  SuiteReport r{"fact-3.1", 0, 0, {}};
  const int max_n = opt.max_n > 0 ? opt.max_n : 7;
  for (int n = 1; n <= max_n; ++n)
    for (int m = 1; m <= 4; ++m) {
      check_cell_relation(n, Partition{m}, SetRelation::equal, opt, r);
      check_cell_relation(n, Partition::hook(1, m), SetRelation::equal, opt, r);
    }
  return r;
}

// Every subshape of the rectangle is found by the grid construction, and
// the oracle finds nothing outside the rectangle.
inline SuiteReport rectangle_subshapes(const VerifyOptions& opt, std::vector<std::pair<int, int>> rects = {}) {
  SuiteReport r{"thm-4.1", 0, 0, {}};
  if (rects.empty()) rects = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  for (auto [m, k] : rects) {
    const Partition rect = Partition::rectangle(m, k);
    const auto mus = partitions_up_to(m * k);
    for (const Permutation& pi : knuth_cell(rect, opt.scan.budget)) {
      const RectangularGrid grid = rectangular_grid(pi);
      for (int i = 0; i < k; ++i)
        r.check(pattern_of(pi, grid.row(i)) == Permutation::identity(m), [&] {
          return "grid row " + std::to_string(i) + " of " + pi.to_string() + " is not increasing";
        });
      for (const Partition& mu : mus) {
        const auto found = brute_force_find_shape(pi, mu, opt.scan.budget);
        const bool inside = contains(mu, rect);
        r.check(found.has_value() == inside, [&] {
          return "pi=" + pi.to_string() + " mu=" + mu.to_string() + ": oracle " +
                 (found ? "found" : "did not find") + " a subsequence";
        });
        if (inside) {
          const auto w = extract_subshape_rectangular(pi, mu);
          r.check(is_valid_witness(pi, w) && w.shape == mu,
                  [&] { return "grid extraction failed for pi=" + pi.to_string() + " mu=" + mu.to_string(); });
        }
      }
    }
  }
  return r;
}

// (m^k) ⊆ shape(pi) always yields a subsequence of shape (m^k).
inline SuiteReport rectangle_extraction(const VerifyOptions& opt) {
  SuiteReport r{"thm-4.4", 0, 0, {}};
  const int max_n = opt.max_n > 0 ? opt.max_n : 7;
  for (int n = 1; n <= max_n; ++n)
    for_each_permutation(n, [&](const Permutation& pi) {
      const Partition lambda = shape_of(pi);
      for (int k = 1; k <= lambda.length(); ++k)
        for (int m = 1; m <= lambda.part(static_cast<std::size_t>(k - 1)); ++m) {
          const auto w = extract_rectangle(pi, m, k);
          r.check(is_valid_witness(pi, w) && w.shape == Partition::rectangle(m, k), [&] {
            return "rectangle " + std::to_string(m) + "x" + std::to_string(k) + " from " + pi.to_string();
          });
        }
    });
  return r;
}

// (mu_1^k) ⊆ shape(pi) yields a subsequence of shape mu.
inline SuiteReport general_extraction(const VerifyOptions& opt) {
  SuiteReport r{"thm-5.1", 0, 0, {}};
  const int max_n = opt.max_n > 0 ? opt.max_n : 7;
  const auto mus = partitions_up_to(max_n);
  for (int n = 1; n <= max_n; ++n)
    for_each_permutation(n, [&](const Permutation& pi) {
      const Partition lambda = shape_of(pi);
      for (const Partition& mu : mus) {
        if (mu.size() > n || !contains(Partition::rectangle(mu.first(), mu.length()), lambda)) continue;
        const auto w = extract_shape(pi, mu);
        r.check(is_valid_witness(pi, w) && w.shape == mu,
                [&] { return "shape " + mu.to_string() + " from " + pi.to_string(); });
      }
    });
  return r;
}

// Hook avoiders are a union of Knuth cells when m <= 3 or k <= 3, and the
// hook extractor succeeds whenever the shape contains the hook.
inline SuiteReport hook_cells(const VerifyOptions& opt) {
  SuiteReport r{"thm-6.1", 0, 0, {}};
  const int max_n = opt.max_n > 0 ? opt.max_n : 7;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 1; m <= n; ++m)
      for (int k = 1; m + k - 1 <= n; ++k)
        if (m <= 3 || k <= 3) check_cell_relation(n, Partition::hook(m, k), SetRelation::equal, opt, r);
    for_each_permutation(n, [&](const Permutation& pi) {
      const Partition lambda = shape_of(pi);
      for (int m = 1; m <= lambda.first(); ++m)
        for (int k = 1; k <= lambda.length(); ++k) {
          if (m > 3 && k > 3) continue;
          const HookWitness h = extract_hook_decomposed(pi, m, k);
          std::vector<int> shared;
          std::set_intersection(h.increasing.begin(), h.increasing.end(), h.decreasing.begin(),
                                h.decreasing.end(), std::back_inserter(shared));
          r.check(is_valid_witness(pi, h.witness) && h.witness.shape == Partition::hook(m, k) &&
                      shared.size() == 1 && static_cast<int>(h.increasing.size()) == m &&
                      static_cast<int>(h.decreasing.size()) == k,
                  [&] { return "hook " + Partition::hook(m, k).to_string() + " from " + pi.to_string(); });
        }
    });
  }
  return r;
}

// Two-cell-sum hook counts agree with brute force.
inline SuiteReport hook_counts(const VerifyOptions& opt) {
  SuiteReport r{"cor-6.4", 0, 0, {}};
  const int max_n = opt.max_n > 0 ? opt.max_n : 9;
  const std::vector<std::pair<int, int>> hooks{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}};
  for (auto [m, k] : hooks)
    for (int n = hook_formula_threshold(m, k); n <= max_n; ++n) {
      const auto formula = avoid_count_hook(n, m, k);
      const auto brute = avoid_count_brute(n, Partition::hook(m, k), opt.scan);
      r.check(formula.count == brute.count, [&] {
        return "hook " + Partition::hook(m, k).to_string() + " n=" + std::to_string(n) + ": formula " +
               to_decimal(formula.count) + " brute " + to_decimal(brute.count);
      });
    }
  return r;
}

// The (2,2) recursion agrees with brute force and with the closed form.
inline SuiteReport square_counts(const VerifyOptions& opt) {
  SuiteReport r{"cor-6.7", 0, 0, {}};
  const int max_n = opt.max_n > 0 ? opt.max_n : 9;
  for (int n = 1; n <= max_n; ++n) {
    const auto rec = avoid_count_22(n);
    const auto brute = avoid_count_brute(n, Partition{2, 2}, opt.scan);
    const double closed = std::exp(log_avoid_22_closed_form(n));
    const double exact = rec.count.convert_to<double>();
    r.check(rec.count == brute.count && std::abs(closed - exact) <= 1e-9 * exact, [&] {
      return "n=" + std::to_string(n) + ": recursion " + to_decimal(rec.count) + " brute " +
             to_decimal(brute.count);
    });
  }
  return r;
}

// Every subsequence shape is dominated by the shape of the whole.
inline SuiteReport dominance(const VerifyOptions& opt) {
  SuiteReport r{"dominance", 0, 0, {}};
  const int max_n = opt.max_n > 0 ? opt.max_n : 6;
  for (int n = 1; n <= max_n; ++n)
    for_each_permutation(n, [&](const Permutation& pi) {
      const Partition lambda = shape_of(pi);
      std::vector<int> positions;
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        positions.clear();
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1u) positions.push_back(i);
        const Partition sub = shape_at(pi, positions);
        r.check(dominates(lambda, sub),
                [&] { return "subsequence shape " + sub.to_string() + " of " + pi.to_string() + " not dominated"; });
      }
    });
  return r;
}

}  // namespace suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fact-3.1", "thm-4.1", "thm-4.4", "thm-5.1", "thm-6.1",
                                              "cor-6.4",  "cor-6.7", "greene",  "dominance"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "fact-3.1") return suites::monotone_cells(opt);
  if (name == "thm-4.1") return suites::rectangle_subshapes(opt);
  if (name == "thm-4.4") return suites::rectangle_extraction(opt);
  if (name == "thm-5.1") return suites::general_extraction(opt);
  if (name == "thm-6.1") return suites::hook_cells(opt);
  if (name == "cor-6.4") return suites::hook_counts(opt);
  if (name == "cor-6.7") return suites::square_counts(opt);
  if (name == "greene") return suites::chain_unions(opt);
  if (name == "dominance") return suites::dominance(opt);
  throw validation_error("unknown verify suite '" + name + "'");
}

}  // namespace shapeavoid
